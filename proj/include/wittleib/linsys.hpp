#pragma once

// Exact sparse linear algebra over Scalar: reduced row echelon form with
// deterministic pivoting (first nonzero column, then smallest row index) and
// nullspace extraction.  The RREF of a row space is unique, so ranks and the
// canonical nullspace basis are reproducible across runs and platforms.

#include "wittleib/scalar.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace wittleib {

// sorted by column, no zero entries
using SparseRow = std::vector<std::pair<int, Scalar>>;

inline SparseRow make_row(std::map<int, Scalar> entries) {
    SparseRow r;
    r.reserve(entries.size());
    for (auto& [c, v] : entries)
        if (!v.is_zero())
            r.emplace_back(c, std::move(v));
    return r;
}

namespace detail {

// r -= factor * p  (p has leading coefficient 1 at its first column)
inline SparseRow axpy(const SparseRow& r, const Scalar& factor, const SparseRow& p) {
    SparseRow out;
    out.reserve(r.size() + p.size());
    std::size_t a = 0, b = 0;
    while (a < r.size() || b < p.size()) {
        if (b == p.size() || (a < r.size() && r[a].first < p[b].first)) {
            out.push_back(r[a++]);
        } else if (a == r.size() || p[b].first < r[a].first) {
            out.emplace_back(p[b].first, -(factor * p[b].second));
            ++b;
        } else {
            Scalar v = r[a].second - factor * p[b].second;
            if (!v.is_zero())
                out.emplace_back(r[a].first, std::move(v));
            ++a;
            ++b;
        }
    }
    return out;
}

}  // namespace detail

struct SolutionSpace {
    int rank = 0;
    int nullity = 0;
    std::vector<SparseRow> basis;  // one vector per free column, ascending
};

class RrefSolver {
  public:
    // Rows must be inserted in a deterministic order; the resulting RREF is
    // the canonical one of the row space regardless of insertion order.
    void insert(SparseRow row) {
        while (!row.empty()) {
            int lead = row.front().first;
            auto it = pivots_.find(lead);
            if (it == pivots_.end()) {
                Scalar inv = Scalar(1) / row.front().second;
                for (auto& [c, v] : row)
                    v *= inv;
                pivots_.emplace(lead, std::move(row));
                return;
            }
            row = detail::axpy(row, row.front().second, it->second);
        }
    }

    int rank() const { return static_cast<int>(pivots_.size()); }

    // back-substitute to full reduced echelon form
    void normalize() {
        for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
            for (auto jt = pivots_.begin(); jt->first != it->first; ++jt) {
                SparseRow& row = jt->second;
                auto pos = std::lower_bound(row.begin(), row.end(), it->first,
                                            [](const auto& e, int c) { return e.first < c; });
                if (pos != row.end() && pos->first == it->first)
                    row = detail::axpy(row, pos->second, it->second);
            }
        }
    }

    // requires normalize(); ncols = total number of unknowns
    SolutionSpace nullspace(int ncols) const {
        SolutionSpace s;
        s.rank = rank();
        s.nullity = ncols - s.rank;
        for (int f = 0; f < ncols; ++f) {
            if (pivots_.count(f))
                continue;
            std::map<int, Scalar> vec;
            vec[f] = Scalar(1);
            for (const auto& [c, row] : pivots_) {
                auto pos = std::lower_bound(row.begin(), row.end(), f,
                                            [](const auto& e, int col) { return e.first < col; });
                if (pos != row.end() && pos->first == f)
                    vec[c] = -pos->second;
            }
            s.basis.push_back(make_row(std::move(vec)));
        }
        return s;
    }

    const std::map<int, SparseRow>& pivot_rows() const { return pivots_; }

  private:
    std::map<int, SparseRow> pivots_;
};

inline int rank_of(const std::vector<SparseRow>& rows) {
    RrefSolver s;
    for (const auto& r : rows)
        s.insert(r);
    return s.rank();
}

inline Scalar dot(const SparseRow& a, const SparseRow& b) {
    Scalar acc(0);
    std::size_t x = 0, y = 0;
    while (x < a.size() && y < b.size()) {
        if (a[x].first < b[y].first)
            ++x;
        else if (b[y].first < a[x].first)
            ++y;
        else
            acc += a[x++].second * b[y++].second;
    }
    return acc;
}

}  // namespace wittleib
