#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace testoracle {

using umarg::Partition;

namespace {

struct Grid {
    std::vector<int> inner;           // zero-padded to outer length
    std::vector<std::vector<int>> cells;
};

bool ballot_ok(const Grid& g, int max_value) {
    // Reverse reading word: rows top to bottom, each row right to left;
    // every prefix must contain at least as many v as v+1.
    std::vector<int> seen(static_cast<std::size_t>(max_value) + 2, 0);
    for (std::size_t r = 0; r < g.cells.size(); ++r)
        for (auto it = g.cells[r].rbegin(); it != g.cells[r].rend(); ++it) {
            const int v = *it;
            ++seen[static_cast<std::size_t>(v)];
            if (v > 1 && seen[static_cast<std::size_t>(v)] > seen[static_cast<std::size_t>(v) - 1])
                return false;
        }
    return true;
}

} // namespace

std::int64_t brute_lr(const Partition& outer, const Partition& inner, const Partition& mu) {
    if (!outer.contains(inner)) return 0;
    if (outer.size() != inner.size() + mu.size()) return 0;

    const std::size_t nrows = outer.length();
    Grid g;
    g.inner.resize(nrows);
    g.cells.resize(nrows);
    std::vector<std::pair<std::size_t, std::size_t>> order;   // (row, col) row-major
    for (std::size_t r = 0; r < nrows; ++r) {
        g.inner[r] = inner.part(r);
        g.cells[r].assign(static_cast<std::size_t>(outer.part(r)), 0);
        for (int c = g.inner[r]; c < outer.part(r); ++c)
            order.emplace_back(r, static_cast<std::size_t>(c));
    }
    const int max_value = static_cast<int>(mu.length());
    std::vector<int> remaining(static_cast<std::size_t>(max_value) + 1, 0);
    for (std::size_t i = 0; i < mu.length(); ++i) remaining[i + 1] = mu.part(i);

    std::int64_t count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == order.size()) {
            if (ballot_ok(g, max_value)) ++count;
            return;
        }
        const auto [r, c] = order[idx];
        for (int v = 1; v <= max_value; ++v) {
            if (remaining[static_cast<std::size_t>(v)] == 0) continue;
            if (c > 0 && static_cast<int>(c) > g.inner[r] && g.cells[r][c - 1] > v) continue;
            if (r > 0 && static_cast<int>(c) < outer.part(r - 1) &&
                static_cast<int>(c) >= g.inner[r - 1] && g.cells[r - 1][c] >= v)
                continue;
            g.cells[r][c] = v;
            --remaining[static_cast<std::size_t>(v)];
            rec(idx + 1);
            ++remaining[static_cast<std::size_t>(v)];
            g.cells[r][c] = 0;
        }
    };
    rec(0);
    return count;
}

std::int64_t hook_dimension(const Partition& lam) {
    const std::int64_t n = lam.size();
    if (n == 0) return 1;
    const Partition t = umarg::transpose(lam);
    // f = n! / prod(hooks); both products fit __int128 for the n <= 20
    // sizes the tests use, so divide once at the end.
    __int128 fact = 1;
    for (std::int64_t i = 2; i <= n; ++i) fact *= i;
    __int128 denom = 1;
    for (std::size_t r = 0; r < lam.length(); ++r)
        for (int c = 0; c < lam.part(r); ++c)
            denom *= (lam.part(r) - c) +
                     (t.part(static_cast<std::size_t>(c)) - static_cast<int>(r)) - 1;
    return static_cast<std::int64_t>(fact / denom);
}

std::int64_t syt_count(const Partition& lam) {
    static std::map<std::vector<int>, std::int64_t> memo;
    std::vector<int> key(lam.parts().begin(), lam.parts().end());
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    if (lam.empty()) return 1;
    std::int64_t total = 0;
    for (std::size_t r = 0; r < lam.length(); ++r) {
        // Corner: last cell of row r is removable when the next row is shorter.
        if (r + 1 < lam.length() && lam.part(r + 1) == lam.part(r)) continue;
        std::vector<int> next(lam.parts().begin(), lam.parts().end());
        next[r] -= 1;
        if (next[r] == 0) next.erase(next.begin() + static_cast<std::ptrdiff_t>(r));
        total += syt_count(Partition(next));
    }
    memo[key] = total;
    return total;
}

std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    // Build with parts appended smallest-last, each new part <= previous.
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(left, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    std::reverse(out.begin(), out.end());   // ascending lex
    return out;
}

} // namespace testoracle
