#pragma once

// Leibniz 1- and 2-cochains on W with adjoint coefficients: derivation and
// cocycle defects, coboundaries, antisymmetry checks, and weight-graded
// cohomology dimensions at window scale.  The adjoint complex of the graded
// algebra splits by weight, so each dimension count is a finite exact solve;
// the reported numbers are window certificates, not statements about the
// full algebra.

#include "wittleib/linsys.hpp"
#include "wittleib/verifier.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <utility>

namespace wittleib {

// finitely supported linear map W -> W, d_i -> value
class LinearCochain {
  public:
    LinearCochain() = default;

    void set(Index i, WittElement value) {
        if (value.is_zero())
            values_.erase(i);
        else
            values_[i] = std::move(value);
    }

    WittElement operator()(Index i) const {
        auto it = values_.find(i);
        return it == values_.end() ? WittElement{} : it->second;
    }

    WittElement operator()(const WittElement& x) const {
        WittElement r;
        for (const auto& [i, c] : x.terms())
            r += c * (*this)(i);
        return r;
    }

    const std::map<Index, WittElement>& values() const { return values_; }

  private:
    std::map<Index, WittElement> values_;
};

// finitely supported bilinear map W x W -> W
class BilinearCochain {
  public:
    void set(Index i, Index j, WittElement value) {
        if (value.is_zero())
            values_.erase({i, j});
        else
            values_[{i, j}] = std::move(value);
    }

    WittElement operator()(Index i, Index j) const {
        auto it = values_.find({i, j});
        return it == values_.end() ? WittElement{} : it->second;
    }

    const std::map<std::pair<Index, Index>, WittElement>& values() const { return values_; }

  private:
    std::map<std::pair<Index, Index>, WittElement> values_;
};

// D([d_i,d_j]) - [D(d_i),d_j] - [d_i,D(d_j)]; zero for all pairs iff D is a
// derivation (equivalently a Leibniz 1-cocycle)
inline WittElement derivation_defect(const LinearCochain& D, Index i, Index j) {
    return D(witt_bracket(d(i), d(j))) - witt_bracket(D(i), d(j)) - witt_bracket(d(i), D(j));
}

// f(x,y) = [g(x),y] + [x,g(y)] - g([x,y]), evaluated exactly for any pair.
// Kept as a view so the coboundary is total; materialize() stores a window.
class Coboundary2 {
  public:
    explicit Coboundary2(LinearCochain g) : g_(std::move(g)) {}

    WittElement operator()(Index i, Index j) const {
        return witt_bracket(g_(i), d(j)) + witt_bracket(d(i), g_(j)) - g_(witt_bracket(d(i), d(j)));
    }

    BilinearCochain materialize(const IndexWindow& w) const {
        BilinearCochain phi;
        for (Index i = w.lo; i <= w.hi; ++i)
            for (Index j = w.lo; j <= w.hi; ++j)
                phi.set(i, j, (*this)(i, j));
        return phi;
    }

  private:
    LinearCochain g_;
};

inline Coboundary2 coboundary2(LinearCochain g) { return Coboundary2(std::move(g)); }

// Phi(phi)(d_i,d_j,d_k): the Leibniz 2-cocycle defect
template <class Phi>
inline WittElement cocycle_defect2(const Phi& phi, Index i, Index j, Index k) {
    WittElement r = witt_bracket(d(i), phi(j, k));
    r -= witt_bracket(phi(i, j), d(k));
    r += witt_bracket(phi(i, k), d(j));
    Scalar jk(j - k), ij(i - j), ik(i - k);
    r += jk * phi(i, j + k);
    r -= ij * phi(i + j, k);
    r += ik * phi(i + k, j);
    return r;
}

// checks phi(d_i,d_i) = 0 and phi(d_i,d_j) = -phi(d_j,d_i) over the window
template <class Phi>
inline VerificationReport antisymmetry_report(const Phi& phi, const IndexWindow& w) {
    VerificationReport rep{"antisymmetry of a 2-cochain", w, {"diagonal", "skew"}, 0, {}};
    for (Index i = w.lo; i <= w.hi; ++i) {
        ++rep.triples_checked;
        WittElement diag = phi(i, i);
        if (!diag.is_zero())
            rep.failures.push_back({"diagonal", {i, i, 0}, embed(std::move(diag))});
    }
    for (Index i = w.lo; i <= w.hi; ++i)
        for (Index j = i + 1; j <= w.hi; ++j) {
            ++rep.triples_checked;
            WittElement sum = phi(i, j) + phi(j, i);
            if (!sum.is_zero())
                rep.failures.push_back({"skew", {i, j, 0}, embed(std::move(sum))});
        }
    return rep;
}

struct CohomologyReport {
    int degree;
    Index weight;
    IndexWindow window;
    int cocycle_dim;
    int coboundary_dim;
    int h_dim;
};

// Weight-s 1-cochains t_i (value t_i d_{i+s}).  Cocycle rows come from the
// derivation defect; the inner cochain in this weight is t_i = (i - s).
inline CohomologyReport graded_h1(Index weight, const IndexWindow& w) {
    const Index radius = std::min(-w.lo, w.hi);
    if (radius < std::abs(weight) + 2)
        throw contract_error("graded_h1: window radius must be >= |weight| + 2");
    const Index s = weight;
    const int n = static_cast<int>(w.size());
    auto col = [&](Index i) { return static_cast<int>(i - w.lo); };

    RrefSolver solver;
    for (Index i = w.lo; i <= w.hi; ++i)
        for (Index j = w.lo; j <= w.hi; ++j) {
            if (!w.contains(i + j))
                continue;
            std::map<int, Scalar> e;
            e[col(i + j)] += Scalar(i - j);
            e[col(i)] -= Scalar(i + s - j);
            e[col(j)] -= Scalar(i - j - s);
            SparseRow r = make_row(std::move(e));
            if (!r.empty())
                solver.insert(r);
        }
    solver.normalize();
    SolutionSpace sol = solver.nullspace(n);

    std::map<int, Scalar> inner;
    for (Index i = w.lo; i <= w.hi; ++i)
        inner[col(i)] = Scalar(i - s);
    SparseRow inner_row = make_row(std::move(inner));
    int inner_dim = inner_row.empty() ? 0 : 1;
    return {1, weight, w, sol.nullity, inner_dim, sol.nullity - inner_dim};
}

inline int graded_h1_dimension(Index weight, const IndexWindow& w) {
    return graded_h1(weight, w).h_dim;
}

namespace detail {

// pairs (i,j) with i, j, i+j in the window, indexed deterministically
struct GradedPairs {
    std::vector<std::pair<Index, Index>> labels;
    std::map<std::pair<Index, Index>, int> index;

    explicit GradedPairs(const IndexWindow& w) {
        for (Index i = w.lo; i <= w.hi; ++i)
            for (Index j = w.lo; j <= w.hi; ++j)
                if (w.contains(i + j)) {
                    index.emplace(std::make_pair(i, j), static_cast<int>(labels.size()));
                    labels.emplace_back(i, j);
                }
    }
};

}  // namespace detail

// Weight-s 2-cochains c_{i,j} (value c_{i,j} d_{i+j+s}); cocycle rows from
// Phi = 0 instances, coboundary generators from f-images of weight-s
// 1-cochains, both under the interiority rule.
inline CohomologyReport graded_h2(Index weight, const IndexWindow& w) {
    const Index radius = std::min(-w.lo, w.hi);
    if (radius < std::abs(weight) + 3)
        throw contract_error("graded_h2: window radius must be >= |weight| + 3");
    const Index s = weight;
    detail::GradedPairs pairs(w);
    auto in = [&](Index i, Index j) { return pairs.index.count({i, j}) != 0; };
    auto col = [&](Index i, Index j) { return pairs.index.at({i, j}); };

    RrefSolver solver;
    for (Index i = w.lo; i <= w.hi; ++i)
        for (Index j = w.lo; j <= w.hi; ++j)
            for (Index k = w.lo; k <= w.hi; ++k) {
                if (!in(j, k) || !in(i, j) || !in(i, k) || !in(i, j + k) || !in(i + j, k) ||
                    !in(i + k, j))
                    continue;
                std::map<int, Scalar> e;
                e[col(j, k)] += Scalar(i - j - k - s);
                e[col(i, j)] -= Scalar(i + j + s - k);
                e[col(i, k)] += Scalar(i + k + s - j);
                e[col(i, j + k)] += Scalar(j - k);
                e[col(i + j, k)] -= Scalar(i - j);
                e[col(i + k, j)] += Scalar(i - k);
                SparseRow r = make_row(std::move(e));
                if (!r.empty())
                    solver.insert(r);
            }
    solver.normalize();
    SolutionSpace sol = solver.nullspace(static_cast<int>(pairs.labels.size()));

    // coboundary image: c_{i,j} = (i+s-j) t_i + (i-j-s) t_j - (i-j) t_{i+j}
    std::vector<SparseRow> gens;
    for (Index m = w.lo; m <= w.hi; ++m) {
        std::map<int, Scalar> e;
        for (const auto& [i, j] : pairs.labels) {
            Scalar c(0);
            if (i == m)
                c += Scalar(i + s - j);
            if (j == m)
                c += Scalar(i - j - s);
            if (i + j == m)
                c -= Scalar(i - j);
            if (!c.is_zero())
                e[col(i, j)] += c;
        }
        SparseRow r = make_row(std::move(e));
        if (!r.empty())
            gens.push_back(std::move(r));
    }
    int bdim = rank_of(gens);
    return {2, weight, w, sol.nullity, bdim, sol.nullity - bdim};
}

inline int graded_h2_dimension(Index weight, const IndexWindow& w) {
    return graded_h2(weight, w).h_dim;
}

namespace detail {

// Solution space of the generating-triple equations
//   Phi(d_0,d_0,d_0) = Phi(d_i,d_0,d_0) = Phi(d_0,d_i,d_i)
//     = Phi(d_i,d_i,d_0) = Phi(d_i,d_i,d_j) = 0
// restricted to weight-s cochains on the window; every solution must be
// antisymmetric on the interior (tested, not assumed).
inline std::pair<GradedPairs, SolutionSpace> generating_triple_solutions(Index weight,
                                                                         const IndexWindow& w) {
    const Index s = weight;
    GradedPairs pairs(w);
    auto in = [&](Index i, Index j) { return pairs.index.count({i, j}) != 0; };
    auto col = [&](Index i, Index j) { return pairs.index.at({i, j}); };

    RrefSolver solver;
    auto add_instance = [&](Index i, Index j, Index k) {
        if (!in(j, k) || !in(i, j) || !in(i, k) || !in(i, j + k) || !in(i + j, k) ||
            !in(i + k, j))
            return;
        std::map<int, Scalar> e;
        e[col(j, k)] += Scalar(i - j - k - s);
        e[col(i, j)] -= Scalar(i + j + s - k);
        e[col(i, k)] += Scalar(i + k + s - j);
        e[col(i, j + k)] += Scalar(j - k);
        e[col(i + j, k)] -= Scalar(i - j);
        e[col(i + k, j)] += Scalar(i - k);
        SparseRow r = make_row(std::move(e));
        if (!r.empty())
            solver.insert(r);
    };
    add_instance(0, 0, 0);
    for (Index i = w.lo; i <= w.hi; ++i) {
        add_instance(i, 0, 0);
        add_instance(0, i, i);
        add_instance(i, i, 0);
        for (Index j = w.lo; j <= w.hi; ++j)
            add_instance(i, i, j);
    }
    solver.normalize();
    SolutionSpace sol = solver.nullspace(static_cast<int>(pairs.labels.size()));
    return {std::move(pairs), std::move(sol)};
}

}  // namespace detail

}  // namespace wittleib
