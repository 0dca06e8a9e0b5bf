#pragma once

// Independent re-derivation of the classification: the exact linear system
// satisfied by the unknown module corrections gamma, the linearized basis
// changes (gauge moves), and moduli dimensions on index windows.
//
// Reduced mode fixes the resonant module index k = i+j-alpha and works with
// unknowns gamma_{i,j}; full mode keeps gamma_{i,j,k} with a separate module
// window.  Truncation follows one interiority rule: an equation or unknown
// enters the system only if everything it references stays in scope.  In
// particular unknown pairs are restricted to i+j inside the Witt window and,
// in full mode, to fully covered weights i+j-k; coordinates outside that
// range are reachable by no equation and would only contribute spurious
// kernel directions.

#include "wittleib/families.hpp"
#include "wittleib/linsys.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wittleib {

enum class SolverMode { reduced, full };

struct GammaLabel {
    Index i, j, k;  // k unused in reduced mode
    friend bool operator<(const GammaLabel& a, const GammaLabel& b) {
        if (a.i != b.i) return a.i < b.i;
        if (a.j != b.j) return a.j < b.j;
        return a.k < b.k;
    }
    friend bool operator==(const GammaLabel& a, const GammaLabel& b) {
        return a.i == b.i && a.j == b.j && a.k == b.k;
    }
};

struct GammaSystem {
    SolverMode mode;
    Scalar alpha;  // meaningful in full mode only
    Scalar beta;
    IndexWindow window;
    IndexWindow module_window;  // == window in reduced mode
    std::vector<GammaLabel> unknowns;
    std::map<GammaLabel, int> unknown_index;
    std::vector<SparseRow> rows;

    int column(const GammaLabel& l) const { return unknown_index.at(l); }
};

namespace detail {

class RowBuilder {
  public:
    explicit RowBuilder(const GammaSystem& sys) : sys_(sys) {}

    // accumulate c * gamma_label; reports an out-of-scope reference
    bool add(const GammaLabel& l, const Scalar& c) {
        auto it = sys_.unknown_index.find(l);
        if (it == sys_.unknown_index.end()) {
            out_of_scope_ = true;
            return false;
        }
        entries_[it->second] += c;
        return true;
    }

    bool out_of_scope() const { return out_of_scope_; }

    std::optional<SparseRow> take() {
        if (out_of_scope_)
            return std::nullopt;
        SparseRow r = make_row(std::move(entries_));
        entries_.clear();
        if (r.empty())
            return std::nullopt;
        return r;
    }

  private:
    const GammaSystem& sys_;
    std::map<int, Scalar> entries_;
    bool out_of_scope_ = false;
};

}  // namespace detail

// Reduced-mode system in gamma_{i,j} for beta.  Gauge-fixing rows mirror the
// normalizations used in deriving the families: gamma with a zero index
// vanishes, gamma_{1,1} = 0 unless beta = -1, and gamma_{1,-1} = 0 at
// beta = 0 (the d_0 shift; at other beta that entry is already forced).
inline GammaSystem build_reduced_system(const Scalar& beta, const IndexWindow& w) {
    for (Index a = -2; a <= 2; ++a)
        if (!w.contains(a))
            throw contract_error("build_reduced_system: window must contain {-2..2}");

    GammaSystem sys{SolverMode::reduced, Scalar(0), beta, w, w, {}, {}, {}};
    for (Index i = w.lo; i <= w.hi; ++i)
        for (Index j = w.lo; j <= w.hi; ++j)
            if (w.contains(i + j)) {
                sys.unknown_index.emplace(GammaLabel{i, j, 0}, static_cast<int>(sys.unknowns.size()));
                sys.unknowns.push_back({i, j, 0});
            }

    auto label = [](Index i, Index j) { return GammaLabel{i, j, 0}; };
    auto in = [&](Index i, Index j) { return sys.unknown_index.count(label(i, j)) != 0; };

    // gauge rows
    auto single = [&](Index i, Index j) {
        if (in(i, j))
            sys.rows.push_back({{sys.column(label(i, j)), Scalar(1)}});
    };
    single(0, 0);
    for (Index j = w.lo; j <= w.hi; ++j)
        if (j != 0) {
            single(j, 0);
            single(0, j);
        }
    if (beta != Scalar(-1))
        single(1, 1);
    if (beta == Scalar(0))
        single(1, -1);

    // gamma_{j,-j} + gamma_{-j,j} + 2 gamma_{0,0} = 0
    for (Index j = w.lo; j <= w.hi; ++j) {
        if (j == 0 || !w.contains(-j))
            continue;
        detail::RowBuilder rb(sys);
        rb.add(label(j, -j), Scalar(1));
        rb.add(label(-j, j), Scalar(1));
        rb.add(label(0, 0), Scalar(2));
        if (auto r = rb.take())
            sys.rows.push_back(std::move(*r));
    }
    // i gamma_{i,j} - j gamma_{j,i} = 0
    for (Index i = w.lo; i <= w.hi; ++i)
        for (Index j = w.lo; j <= w.hi; ++j) {
            if (j == 0 || i == 0 || i == j || i == -j || !in(i, j))
                continue;
            detail::RowBuilder rb(sys);
            rb.add(label(i, j), Scalar(i));
            rb.add(label(j, i), Scalar(-j));
            if (auto r = rb.take())
                sys.rows.push_back(std::move(*r));
        }
    // beta gamma_{j,-j} + (beta-2) gamma_{j,j} - 2 beta gamma_{0,0} = 0
    for (Index j = w.lo; j <= w.hi; ++j) {
        if (j == 0 || !w.contains(-j))
            continue;
        detail::RowBuilder rb(sys);
        rb.add(label(j, -j), beta);
        rb.add(label(j, j), beta - Scalar(2));
        rb.add(label(0, 0), Scalar(-2) * beta);
        if (auto r = rb.take())
            sys.rows.push_back(std::move(*r));
    }
    // (j-k) g_{i,j+k} - (i-j) g_{i+j,k} - (i+j+beta k) g_{i,j}
    //   + (i-k) g_{i+k,j} + (i+k+beta j) g_{i,k} = 0
    for (Index i = w.lo; i <= w.hi; ++i)
        for (Index j = w.lo; j <= w.hi; ++j)
            for (Index k = w.lo; k <= w.hi; ++k) {
                if (!in(i, j + k) || !in(i + j, k) || !in(i, j) || !in(i + k, j) || !in(i, k))
                    continue;
                detail::RowBuilder rb(sys);
                rb.add(label(i, j + k), Scalar(j - k));
                rb.add(label(i + j, k), Scalar(-(i - j)));
                rb.add(label(i, j), -(Scalar(i + j) + beta * Scalar(k)));
                rb.add(label(i + k, j), Scalar(i - k));
                rb.add(label(i, k), Scalar(i + k) + beta * Scalar(j));
                if (auto r = rb.take())
                    sys.rows.push_back(std::move(*r));
            }
    return sys;
}

// Full-mode system in gamma_{i,j,k}.  No gauge fixing; the gauge subspace is
// handled separately and quotiented out.
inline GammaSystem build_full_system(const ModuleParams& p, const IndexWindow& w,
                                     const IndexWindow& kv) {
    GammaSystem sys{SolverMode::full, p.alpha, p.beta, w, kv, {}, {}, {}};
    // fully covered weights i+j-k: every pair sum reaches its module index
    const Index cov_lo = w.hi - kv.hi, cov_hi = w.lo - kv.lo;
    for (Index i = w.lo; i <= w.hi; ++i)
        for (Index j = w.lo; j <= w.hi; ++j) {
            if (!w.contains(i + j))
                continue;
            for (Index k = kv.lo; k <= kv.hi; ++k) {
                Index weight = i + j - k;
                if (weight < cov_lo || weight > cov_hi)
                    continue;
                sys.unknown_index.emplace(GammaLabel{i, j, k}, static_cast<int>(sys.unknowns.size()));
                sys.unknowns.push_back({i, j, k});
            }
        }
    for (Index i = w.lo; i <= w.hi; ++i)
        for (Index j = w.lo; j <= w.hi; ++j)
            for (Index k = w.lo; k <= w.hi; ++k) {
                if (!w.contains(i + j) || !w.contains(i + k) || !w.contains(j + k) ||
                    !w.contains(i + j + k))
                    continue;
                for (Index m = kv.lo; m <= kv.hi; ++m) {
                    if (!kv.contains(m - j) || !kv.contains(m - k))
                        continue;
                    detail::RowBuilder rb(sys);
                    rb.add({i, j + k, m}, Scalar(j - k));
                    rb.add({i + j, k, m}, Scalar(-(i - j)));
                    rb.add({i, j, m - k}, -(p.alpha + Scalar(m - k) + p.beta * Scalar(k)));
                    rb.add({i + k, j, m}, Scalar(i - k));
                    rb.add({i, k, m - j}, p.alpha + Scalar(m - j) + p.beta * Scalar(j));
                    if (rb.out_of_scope())
                        continue;
                    if (auto r = rb.take())
                        sys.rows.push_back(std::move(*r));
                }
            }
    return sys;
}

inline SolutionSpace solve(const GammaSystem& sys) {
    RrefSolver solver;
    for (const auto& r : sys.rows)
        solver.insert(r);
    solver.normalize();
    return solver.nullspace(static_cast<int>(sys.unknowns.size()));
}

// Linearized basis changes d_s -> d_s + t v(m):
//   delta gamma_{i,j,k} = t_{i,k-j} (alpha + (k-j) + beta j) - (i-j) t_{i+j,k}
struct GaugeSubspace {
    std::vector<std::pair<GammaLabel, SparseRow>> generators;  // keyed by (s, m)
};

inline GaugeSubspace gauge_subspace(const ModuleParams& p, const GammaSystem& sys) {
    if (sys.mode != SolverMode::full)
        throw contract_error("gauge_subspace expects a full-mode system");
    const IndexWindow& w = sys.window;
    const IndexWindow& kv = sys.module_window;
    GaugeSubspace gauge;
    for (Index s = w.lo; s <= w.hi; ++s)
        for (Index m = kv.lo; m <= kv.hi; ++m) {
            std::map<int, Scalar> entries;
            for (Index j = w.lo; j <= w.hi; ++j) {
                auto it = sys.unknown_index.find({s, j, j + m});
                if (it != sys.unknown_index.end())
                    entries[it->second] += p.alpha + Scalar(m) + p.beta * Scalar(j);
            }
            for (Index i = w.lo; i <= w.hi; ++i) {
                auto it = sys.unknown_index.find({i, s - i, m});
                if (it != sys.unknown_index.end())
                    entries[it->second] -= Scalar(2 * i - s);
            }
            SparseRow r = make_row(std::move(entries));
            if (!r.empty())
                gauge.generators.emplace_back(GammaLabel{s, m, 0}, std::move(r));
        }
    return gauge;
}

inline bool gauge_in_kernel(const GammaSystem& sys, const GaugeSubspace& gauge) {
    for (const auto& [sm, g] : gauge.generators)
        for (const auto& row : sys.rows)
            if (!dot(row, g).is_zero())
                return false;
    return true;
}

inline int gauge_dimension(const GaugeSubspace& gauge) {
    std::vector<SparseRow> rows;
    rows.reserve(gauge.generators.size());
    for (const auto& [sm, g] : gauge.generators)
        rows.push_back(g);
    return rank_of(rows);
}

inline int quotient_dimension(const SolutionSpace& sol, const GaugeSubspace& gauge) {
    return sol.nullity - gauge_dimension(gauge);
}

// Scales sol_vector so its gamma_{2,1} coordinate is 1 and compares it with
// the family table coordinatewise over the system's unknowns.  The zero
// vector matches exactly the correction-free families.
inline bool match_family(const GammaSystem& sys, const SparseRow& sol_vector,
                         const StructureTable& t, const IndexWindow& w) {
    std::map<GammaLabel, Scalar> coords;
    for (const auto& [col, val] : sol_vector)
        coords[sys.unknowns[static_cast<std::size_t>(col)]] = val;

    if (t.family() == FamilyId::thm1 || t.family() == FamilyId::i)
        return coords.empty();

    auto it = coords.find({2, 1, sys.mode == SolverMode::full ? 3 - t.alpha_index() : 0});
    if (it == coords.end() || it->second.is_zero())
        throw contract_error("match_family: solution has zero gamma_{2,1} coordinate");
    Scalar scale = Scalar(1) / it->second;

    for (const auto& l : sys.unknowns) {
        if (!w.contains(l.i) || !w.contains(l.j))
            continue;
        Scalar expect;
        if (sys.mode == SolverMode::full && l.k != l.i + l.j - t.alpha_index())
            expect = Scalar(0);
        else
            expect = gamma_of(t, l.i, l.j) / t.normalization();
        auto found = coords.find(l);
        Scalar got = found == coords.end() ? Scalar(0) : scale * found->second;
        if (got != expect)
            return false;
    }
    return true;
}

// gamma_{i,j} of a family table as a reduced-mode coordinate vector
inline SparseRow table_vector(const GammaSystem& sys, const StructureTable& t) {
    if (sys.mode != SolverMode::reduced)
        throw contract_error("table_vector expects a reduced-mode system");
    std::map<int, Scalar> entries;
    for (const auto& l : sys.unknowns) {
        Scalar g = gamma_of(t, l.i, l.j);
        if (!g.is_zero())
            entries[sys.column(l)] = g;
    }
    return make_row(std::move(entries));
}

}  // namespace wittleib
