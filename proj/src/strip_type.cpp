#include "umarg/strip_type.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "umarg/errors.hpp"
#include "umarg/lr.hpp"

namespace umarg {

StripDerivation rect_strip_type(const Partition& lam, const Partition& mu) {
    if (!lam.is_rectangular()) throw NotRectangular("lambda is not rectangular: " + lam.to_string());
    if (!mu.is_rectangular()) throw NotRectangular("mu is not rectangular: " + mu.to_string());
    if (lam.size() != mu.size())
        throw SizeMismatch("|lambda| = " + std::to_string(lam.size()) +
                           " but |mu| = " + std::to_string(mu.size()));

    StripDerivation d;
    d.lam_chain.push_back(lam);
    d.mu_chain.push_back(mu);

    std::vector<int> nu_parts;
    Partition cur_l = lam;
    Partition cur_m = mu;
    while (!cur_l.empty()) {
        Partition meet = intersect(cur_l, cur_m);
        nu_parts.push_back(static_cast<int>(meet.size()));
        auto next_l = skew_as_partition(cur_l, meet);
        auto next_m = skew_as_partition(cur_m, meet);
        if (!next_l || !next_m || !next_l->is_rectangular() || !next_m->is_rectangular())
            throw std::logic_error("strip step left a non-rectangular remainder");
        cur_l = *next_l;
        cur_m = *next_m;
        d.lam_chain.push_back(cur_l);
        d.mu_chain.push_back(cur_m);
    }
    d.nu = Partition(nu_parts);
    return d;
}

bool strip_chain_lr_valid(const StripDerivation& d) {
    const std::size_t steps = d.lam_chain.size();
    if (steps == 0 || d.mu_chain.size() != steps) return false;
    if (!d.lam_chain.back().empty() || !d.mu_chain.back().empty()) return false;
    for (std::size_t i = 0; i + 1 < steps; ++i) {
        Partition meet = intersect(d.lam_chain[i], d.mu_chain[i]);
        if (static_cast<std::int64_t>(d.nu.part(i)) != meet.size()) return false;
        if (!lr_positive(d.lam_chain[i], meet, d.lam_chain[i + 1])) return false;
        if (!lr_positive(d.mu_chain[i], meet, d.mu_chain[i + 1])) return false;
    }
    return true;
}

MaxLexResult max_lex_spectrum(int n, int m) {
    if (n < 1 || m < 1) throw DomainError("local dimensions must be positive");
    const std::int64_t k = std::lcm<std::int64_t>(n, m);
    const Partition lam(std::vector<int>(static_cast<std::size_t>(n), static_cast<int>(k / n)));
    const Partition mu(std::vector<int>(static_cast<std::size_t>(m), static_cast<int>(k / m)));
    StripDerivation d = rect_strip_type(lam, mu);
    return MaxLexResult{normalize_by(d.nu, k), d.nu, k, d.nu.length()};
}

namespace {

std::optional<std::uint64_t> try_kron(const Partition& lam, const Partition& mu,
                                      const Partition& nu, int budget) {
    try {
        return kronecker_coefficient(lam, mu, nu, budget);
    } catch (const BudgetExceeded&) {
        return std::nullopt;
    }
}

} // namespace

CounterexampleReport counterexample_two_by_m(int m, int budget) {
    if (m < 3 || m % 2 == 0) throw DomainError("family requires odd m >= 3");
    const int k = (m - 1) / 2;

    const Partition lam(std::vector<int>(2, m));
    const Partition mu(std::vector<int>(static_cast<std::size_t>(m), 2));
    StripDerivation d = rect_strip_type(lam, mu);

    std::vector<int> expect(static_cast<std::size_t>(k), 4);
    expect.push_back(1);
    expect.push_back(1);
    if (d.nu != Partition(expect)) throw std::logic_error("strip type disagrees with closed form");

    std::vector<int> gamma_parts(static_cast<std::size_t>(k - 1), 4);
    gamma_parts.push_back(3);
    gamma_parts.push_back(3);
    const Partition gamma(gamma_parts);

    CounterexampleReport rep;
    rep.family = "2xm";
    rep.n = 2;
    rep.m = m;
    rep.maxlex_nu = d.nu;
    rep.maxlex_rank = d.nu.length();
    rep.witness_gamma = gamma;
    rep.witness_g = try_kron(lam, mu, gamma, budget);
    rep.min_rank_bound = static_cast<std::size_t>(k) + 1;   // ceil(m/2)
    rep.refutes_conjecture = rep.witness_g.has_value() && *rep.witness_g > 0 &&
                             gamma.length() < rep.maxlex_rank;
    return rep;
}

CounterexampleReport counterexample_n_nplus1(int n, int budget) {
    if (n < 2) throw DomainError("family requires n >= 2");

    const Partition lam(std::vector<int>(static_cast<std::size_t>(n), n + 1));
    const Partition mu(std::vector<int>(static_cast<std::size_t>(n) + 1, n));
    StripDerivation d = rect_strip_type(lam, mu);

    std::vector<int> expect{n * n};
    expect.insert(expect.end(), static_cast<std::size_t>(n), 1);
    if (d.nu != Partition(expect)) throw std::logic_error("strip type disagrees with closed form");

    const int half = n * (n + 1) / 2;
    const Partition gamma(std::vector<int>{half, half});

    CounterexampleReport rep;
    rep.family = "adjacent";
    rep.n = n;
    rep.m = n + 1;
    rep.maxlex_nu = d.nu;
    rep.maxlex_rank = d.nu.length();
    rep.witness_gamma = gamma;
    rep.witness_g = try_kron(lam, mu, gamma, budget);
    rep.min_rank_bound = 2;   // ceil((n+1)/n)
    rep.refutes_conjecture = rep.witness_g.has_value() && *rep.witness_g > 0 &&
                             gamma.length() < rep.maxlex_rank;
    return rep;
}

namespace {

struct RowState {
    std::int64_t room;   // remaining row sum
    int slots;           // remaining entries
};

bool place(const std::vector<int>& parts, std::size_t idx, std::vector<RowState>& rows) {
    if (idx == parts.size()) {
        for (const RowState& r : rows)
            if (r.room != 0) return false;
        return true;
    }
    const int part = parts[idx];
    // Rows in an identical state are interchangeable; try each state once.
    std::vector<std::pair<std::int64_t, int>> tried;
    for (RowState& r : rows) {
        if (r.slots == 0 || r.room < part) continue;
        std::pair<std::int64_t, int> key{r.room, r.slots};
        if (std::find(tried.begin(), tried.end(), key) != tried.end()) continue;
        tried.push_back(key);
        r.room -= part;
        --r.slots;
        if (place(parts, idx + 1, rows)) {
            r.room += part;
            ++r.slots;
            return true;
        }
        r.room += part;
        ++r.slots;
    }
    return false;
}

} // namespace

bool corollary_weight_condition(int p, int n, int a, const Partition& nu) {
    if (p < 1 || n < 1 || a < 1) throw DomainError("p, n, a must be positive");
    const std::int64_t total = static_cast<std::int64_t>(p) * n * a;
    if (nu.size() != total)
        throw SizeMismatch("|nu| = " + std::to_string(nu.size()) + " but p*n*a = " +
                           std::to_string(total));
    if (nu.length() > static_cast<std::size_t>(p) * n) return false;
    const std::vector<int> parts(nu.parts().begin(), nu.parts().end());
    if (!parts.empty() && parts.front() > static_cast<std::int64_t>(n) * a) return false;
    std::vector<RowState> rows(static_cast<std::size_t>(p),
                               RowState{static_cast<std::int64_t>(n) * a, n});
    return place(parts, 0, rows);
}

} // namespace umarg
