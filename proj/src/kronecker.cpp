#include "umarg/kronecker.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "umarg/errors.hpp"

namespace umarg {

namespace {

using Int128 = __int128;

// Memo key: shape parts, -1 separator, remaining cycle-type parts.
struct KeyHash {
    std::size_t operator()(const std::vector<int>& key) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int v : key) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct CharacterMemo {
    std::unordered_map<std::vector<int>, std::int64_t, KeyHash> values;
    std::mutex mutex;
};

CharacterMemo& memo() {
    static CharacterMemo instance;
    return instance;
}

std::vector<int> make_key(const std::vector<int>& shape, const std::vector<int>& rho,
                          std::size_t rho_from) {
    std::vector<int> key;
    key.reserve(shape.size() + 1 + (rho.size() - rho_from));
    key.insert(key.end(), shape.begin(), shape.end());
    key.push_back(-1);
    key.insert(key.end(), rho.begin() + static_cast<std::ptrdiff_t>(rho_from), rho.end());
    return key;
}

// Border-strip recursion over beta-sets: removing a strip of length t from
// the shape corresponds to picking a beta number b with b-t >= 0 not yet in
// the set; the sign is (-1)^(number of beta numbers strictly between).
std::int64_t mn_char(const std::vector<int>& shape, const std::vector<int>& rho,
                     std::size_t rho_from) {
    if (shape.empty()) return rho_from == rho.size() ? 1 : 0;
    if (rho_from == rho.size()) return 0;

    auto key = make_key(shape, rho, rho_from);
    {
        std::lock_guard lock(memo().mutex);
        auto it = memo().values.find(key);
        if (it != memo().values.end()) return it->second;
    }

    const int t = rho[rho_from];
    const int len = static_cast<int>(shape.size());
    std::vector<int> beta(shape.size());
    for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = shape[static_cast<std::size_t>(i)] + len - 1 - i;

    std::int64_t total = 0;
    for (int bi = 0; bi < len; ++bi) {
        const int b = beta[static_cast<std::size_t>(bi)];
        const int nb = b - t;
        if (nb < 0) continue;
        bool occupied = false;
        int between = 0;
        for (int x : beta) {
            if (x == nb) { occupied = true; break; }
            if (nb < x && x < b) ++between;
        }
        if (occupied) continue;

        std::vector<int> nbeta = beta;
        nbeta[static_cast<std::size_t>(bi)] = nb;
        std::sort(nbeta.begin(), nbeta.end(), std::greater<int>());
        std::vector<int> nshape;
        nshape.reserve(nbeta.size());
        for (int i = 0; i < len; ++i) {
            int part = nbeta[static_cast<std::size_t>(i)] - (len - 1 - i);
            if (part > 0) nshape.push_back(part);
        }
        const std::int64_t sub = mn_char(nshape, rho, rho_from + 1);
        total += (between % 2 == 0) ? sub : -sub;
    }

    std::lock_guard lock(memo().mutex);
    memo().values.emplace(std::move(key), total);
    return total;
}

std::vector<int> to_parts(const Partition& p) {
    return {p.parts().begin(), p.parts().end()};
}

Int128 factorial128(int n) {
    Int128 f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Int128 centralizer_order(const Partition& cycle_type) {
    std::map<int, std::int64_t> mult;
    for (int part : cycle_type.parts()) ++mult[part];
    Int128 z = 1;
    for (auto [i, m] : mult) {
        for (std::int64_t r = 0; r < m; ++r) z *= i;
        for (std::int64_t r = 2; r <= m; ++r) z *= r;
    }
    return z;
}

void check_oracle_size(std::int64_t n, int budget) {
    if (n > kOracleHardCap)
        throw DomainError("oracle size " + std::to_string(n) + " exceeds the exact-arithmetic cap of " +
                          std::to_string(kOracleHardCap));
    if (n > budget)
        throw BudgetExceeded("oracle size " + std::to_string(n) + " exceeds budget " +
                             std::to_string(budget));
}

} // namespace

CharacterTable::CharacterTable(int n) : n_(n) {
    for (const Partition& rho : enumerate_partitions(n))
        classes_.push_back({rho, centralizer_order(rho)});
}

std::shared_ptr<const CharacterTable> CharacterTable::for_size(int n) {
    if (n < 0) throw DomainError("character table size must be nonnegative");
    static std::mutex registry_mutex;
    static std::map<int, std::shared_ptr<const CharacterTable>> registry;
    std::lock_guard lock(registry_mutex);
    auto it = registry.find(n);
    if (it != registry.end()) return it->second;
    auto table = std::shared_ptr<const CharacterTable>(new CharacterTable(n));
    registry.emplace(n, table);
    return table;
}

std::int64_t character_value(const Partition& lam, const Partition& rho) {
    if (lam.size() != rho.size())
        throw SizeMismatch("character_value needs |lam| == |rho|, got " +
                           lam.to_string() + " on class " + rho.to_string());
    return mn_char(to_parts(lam), to_parts(rho), 0);
}

std::uint64_t kronecker_coefficient(const Partition& lam, const Partition& mu,
                                    const Partition& nu, int budget) {
    const std::int64_t n = lam.size();
    if (mu.size() != n || nu.size() != n)
        throw SizeMismatch("Kronecker coefficient needs three partitions of equal size: " +
                           lam.to_string() + " " + mu.to_string() + " " + nu.to_string());
    check_oracle_size(n, budget);

    auto table = CharacterTable::for_size(static_cast<int>(n));
    const Int128 nfact = factorial128(static_cast<int>(n));
    const auto pl = to_parts(lam), pm = to_parts(mu), pn = to_parts(nu);

    // Accumulate sum over classes of (n!/z_rho) * chi_lam * chi_mu * chi_nu,
    // then divide by n!. Exact in __int128 for n <= kOracleHardCap.
    Int128 sum = 0;
    for (const ConjugacyClass& cls : table->classes()) {
        const auto pr = to_parts(cls.cycle_type);
        const Int128 cl = mn_char(pl, pr, 0);
        if (cl == 0) continue;
        const Int128 cm = mn_char(pm, pr, 0);
        if (cm == 0) continue;
        const Int128 cn = mn_char(pn, pr, 0);
        if (cn == 0) continue;
        sum += (nfact / cls.centralizer_order) * cl * cm * cn;
    }
    if (sum % nfact != 0 || sum < 0)
        throw std::logic_error("character oracle defect: class sum is not a nonnegative multiple of n!");
    return static_cast<std::uint64_t>(sum / nfact);
}

std::uint64_t transposed_kronecker(const Partition& lam, const Partition& mu,
                                   const Partition& nu, int budget) {
    return kronecker_coefficient(lam, transpose(mu), transpose(nu), budget);
}

PhiSet phi_set(const Partition& lam, const Partition& mu, int budget) {
    const std::int64_t n = lam.size();
    if (mu.size() != n)
        throw SizeMismatch("phi_set needs |lam| == |mu|, got " + lam.to_string() +
                           " and " + mu.to_string());
    check_oracle_size(n, budget);

    PhiSet out{lam, mu, {}};
    // enumerate_partitions already emits decreasing-lex order, so the first
    // surviving member is the lex-maximal element of Phi.
    for (const Partition& nu : enumerate_partitions(n)) {
        std::uint64_t g = kronecker_coefficient(lam, mu, nu, budget);
        if (g > 0) out.members.push_back({nu, g});
    }
    return out;
}

std::vector<RationalSpectrum> rational_spectra_slice(int n, int m, int ell, int budget) {
    if (n < 1 || m < n)
        throw DomainError("rational_spectra_slice needs 1 <= n <= m");
    if (ell < 1) throw DomainError("stretching factor ell must be >= 1");
    const std::int64_t k = std::lcm<std::int64_t>(n, m);
    const Partition lam = scale(Partition(std::vector<int>(static_cast<std::size_t>(n),
                                                           static_cast<int>(k) / n)), ell);
    const Partition mu = scale(Partition(std::vector<int>(static_cast<std::size_t>(m),
                                                          static_cast<int>(k) / m)), ell);
    PhiSet phi = phi_set(lam, mu, budget);

    std::vector<RationalSpectrum> out;
    out.reserve(phi.members.size());
    for (const PhiMember& member : phi.members) {
        RationalSpectrum spec = normalize_by(member.nu, ell * k);
        if (std::find(out.begin(), out.end(), spec) == out.end())
            out.push_back(std::move(spec));
    }
    return out;
}

std::size_t load_character_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) return 0;
    std::size_t loaded = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string lam_text, rho_text;
        std::int64_t value;
        if (!(fields >> lam_text >> rho_text >> value)) continue;
        Partition lam, rho;
        try {
            lam = Partition::parse(lam_text);
            rho = Partition::parse(rho_text);
        } catch (const Error&) {
            continue;   // skip malformed lines
        }
        auto key = make_key(to_parts(lam), to_parts(rho), 0);
        std::lock_guard lock(memo().mutex);
        memo().values.emplace(std::move(key), value);
        ++loaded;
    }
    return loaded;
}

std::size_t save_character_cache(const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out)
        throw DomainError("cannot open character cache for writing: " + path);
    std::lock_guard lock(memo().mutex);
    out << "# chi^lam(rho) memo: <lam> <rho> <value>\n";
    std::size_t written = 0;
    for (const auto& [key, value] : memo().values) {
        auto sep = std::find(key.begin(), key.end(), -1);
        Partition lam(std::vector<int>(key.begin(), sep));
        Partition rho(std::vector<int>(sep + 1, key.end()));
        out << lam.to_string() << ' ' << rho.to_string() << ' ' << value << '\n';
        ++written;
    }
    return written;
}

} // namespace umarg
