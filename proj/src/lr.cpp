#include "umarg/lr.hpp"

#include <limits>
#include <vector>

#include "umarg/errors.hpp"

namespace umarg {

namespace {

// Backtracking enumeration of LR skew tableaux. Cells are filled row by
// row, left to right; column-strictness and the lattice (ballot) condition
// are maintained incrementally. The ballot condition in cumulative form:
// for every row r and value v >= 1, the number of v's in rows <= r may not
// exceed the number of (v-1)'s in rows <= r-1.
class LrEnumerator {
public:
    LrEnumerator(const Partition& outer, const Partition& inner,
                 const Partition& content, bool stop_at_first)
        : stop_at_first_(stop_at_first) {
        rows_ = outer.length();
        outer_.assign(rows_, 0);
        inner_.assign(rows_, 0);
        for (std::size_t r = 0; r < rows_; ++r) {
            outer_[r] = outer.part(r);
            inner_[r] = inner.part(r);
        }
        nvals_ = static_cast<int>(content.length());
        remaining_.assign(static_cast<std::size_t>(nvals_), 0);
        for (std::size_t v = 0; v < content.length(); ++v)
            remaining_[v] = content.part(v);
        cum_.assign(static_cast<std::size_t>(nvals_), 0);
        rowcnt_.assign(static_cast<std::size_t>(nvals_), 0);
        grid_.assign(rows_, {});
        for (std::size_t r = 0; r < rows_; ++r)
            grid_[r].assign(static_cast<std::size_t>(outer_[r]), -1);
    }

    std::uint64_t run() {
        fill(0, rows_ ? inner_[0] : 0);
        return count_;
    }

private:
    void fill(std::size_t r, int c) {
        if (count_ > 0 && stop_at_first_) return;
        if (r == rows_) {
            if (count_ == std::numeric_limits<std::uint64_t>::max())
                throw OverflowError("LR coefficient exceeds uint64 range");
            ++count_;
            return;
        }
        if (c >= outer_[r]) {
            // Row complete: its counts move to the "rows above" totals.
            std::vector<int> saved = rowcnt_;
            for (int v = 0; v < nvals_; ++v) {
                cum_[v] += rowcnt_[v];
                rowcnt_[v] = 0;
            }
            fill(r + 1, r + 1 < rows_ ? inner_[r + 1] : 0);
            rowcnt_ = saved;
            for (int v = 0; v < nvals_; ++v) cum_[v] -= saved[v];
            return;
        }
        int lb = 0;
        if (c > inner_[r]) lb = grid_[r][c - 1];                              // weak rows
        if (r > 0 && c >= inner_[r - 1]) lb = std::max(lb, grid_[r - 1][c] + 1);  // strict cols
        for (int v = lb; v < nvals_; ++v) {
            if (remaining_[v] == 0) continue;
            if (v > 0 && cum_[v] + rowcnt_[v] + 1 > cum_[v - 1]) continue;
            grid_[r][c] = v;
            --remaining_[v];
            ++rowcnt_[v];
            fill(r, c + 1);
            --rowcnt_[v];
            ++remaining_[v];
            grid_[r][c] = -1;
            if (count_ > 0 && stop_at_first_) return;
        }
    }

    std::size_t rows_;
    int nvals_ = 0;
    bool stop_at_first_;
    std::vector<int> outer_, inner_, remaining_, cum_, rowcnt_;
    std::vector<std::vector<int>> grid_;
    std::uint64_t count_ = 0;
};

std::uint64_t enumerate(const LrQuery& q, bool stop_at_first) {
    if (q.outer.size() != q.inner_left.size() + q.inner_right.size()) return 0;
    if (!q.outer.contains(q.inner_left)) return 0;
    LrEnumerator e(q.outer, q.inner_left, q.inner_right, stop_at_first);
    return e.run();
}

} // namespace

std::uint64_t lr_coefficient(const LrQuery& q) { return enumerate(q, false); }

bool lr_positive(const LrQuery& q) { return enumerate(q, true) > 0; }

std::uint64_t lr_coefficient(const Partition& outer, const Partition& inner_left,
                             const Partition& inner_right) {
    return lr_coefficient(LrQuery{outer, inner_left, inner_right});
}

bool lr_positive(const Partition& outer, const Partition& inner_left,
                 const Partition& inner_right) {
    return lr_positive(LrQuery{outer, inner_left, inner_right});
}

} // namespace umarg
