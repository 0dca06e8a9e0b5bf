#pragma once

// Exhaustive, exact verification of the Leibniz identity over all basis
// triples in an index window.  Bilinearity of the defect in each argument
// makes basis triples sufficient; a randomized linear-combination spot check
// of that reduction lives in the test suite.

#include "wittleib/families.hpp"

#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <future>
#include <string>
#include <thread>
#include <vector>

namespace wittleib {

// each argument of the triple is a Witt ('d') or module ('v') basis element
using TripleKind = std::array<char, 3>;

inline const std::vector<TripleKind>& all_triple_kinds() {
    // lexicographic: ddd, ddv, dvd, dvv, vdd, vdv, vvd, vvv
    static const std::vector<TripleKind> kinds = {
        {'d', 'd', 'd'}, {'d', 'd', 'v'}, {'d', 'v', 'd'}, {'d', 'v', 'v'},
        {'v', 'd', 'd'}, {'v', 'd', 'v'}, {'v', 'v', 'd'}, {'v', 'v', 'v'}};
    return kinds;
}

inline std::string to_string(const TripleKind& k) { return std::string(k.begin(), k.end()); }

inline TripleKind triple_kind_from_string(const std::string& s) {
    if (s.size() != 3 || s.find_first_not_of("dv") != std::string::npos)
        throw parse_error("bad triple kind '" + s + "'");
    return {s[0], s[1], s[2]};
}

struct Failure {
    std::string kind;  // triple kind, or a check tag for other reports
    std::array<Index, 3> indices;
    LeibnizElement defect;
};

struct VerificationReport {
    std::string subject;  // short description of what was checked
    IndexWindow window;
    std::vector<std::string> kinds;
    std::uint64_t triples_checked = 0;
    std::vector<Failure> failures;

    bool clean() const { return failures.empty(); }
};

namespace detail {

inline LeibnizElement basis_element(char kind, Index i) {
    return kind == 'd' ? embed(d(i)) : embed(v(i));
}

// deterministic parallel map over the outer index
template <class Fn>
inline void parallel_over(Index lo, Index hi, Fn&& fn) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw <= 1 || hi - lo < 3) {
        for (Index a = lo; a <= hi; ++a)
            fn(a);
        return;
    }
    std::vector<std::future<void>> futs;
    std::atomic<Index> next{lo};
    for (unsigned t = 0; t < hw; ++t)
        futs.push_back(std::async(std::launch::async, [&] {
            for (Index a = next.fetch_add(1); a <= hi; a = next.fetch_add(1))
                fn(a);
        }));
    for (auto& f : futs)
        f.get();
}

}  // namespace detail

inline VerificationReport verify_window(const StructureTable& t, const IndexWindow& w,
                                        const std::vector<TripleKind>& kinds = all_triple_kinds()) {
    VerificationReport rep{"leibniz identity sweep, family " + to_string(t.family()), w, {}, 0, {}};
    for (const auto& k : kinds)
        rep.kinds.push_back(to_string(k));

    // fill the coefficient memo before the parallel phase; defects reach
    // indices up to twice the window radius
    t.prepopulate(IndexWindow(2 * w.lo, 2 * w.hi), IndexWindow(2 * w.lo, 2 * w.hi));

    const Index n = w.size();
    std::vector<std::vector<Failure>> partial(static_cast<std::size_t>(n));
    for (const auto& kind : kinds) {
        detail::parallel_over(w.lo, w.hi, [&](Index a) {
            auto& bucket = partial[static_cast<std::size_t>(a - w.lo)];
            LeibnizElement ea = detail::basis_element(kind[0], a);
            for (Index b = w.lo; b <= w.hi; ++b) {
                LeibnizElement eb = detail::basis_element(kind[1], b);
                for (Index c = w.lo; c <= w.hi; ++c) {
                    LeibnizElement ec = detail::basis_element(kind[2], c);
                    LeibnizElement def = leibniz_defect(t, ea, eb, ec);
                    if (!def.is_zero())
                        bucket.push_back({to_string(kind), {a, b, c}, std::move(def)});
                }
            }
        });
        rep.triples_checked += static_cast<std::uint64_t>(n) * n * n;
        for (auto& bucket : partial) {
            for (auto& f : bucket)
                rep.failures.push_back(std::move(f));
            bucket.clear();
        }
    }
    return rep;
}

namespace detail {

// module axiom sweep against an arbitrary action coefficient (n, m) -> Scalar
template <class ActionCoeff>
inline VerificationReport verify_module_axiom_with(ActionCoeff&& coeff, const IndexWindow& w,
                                                   std::string subject) {
    VerificationReport rep{std::move(subject), w, {"vdd"}, 0, {}};
    auto act = [&](const ModuleElement& m, const WittElement& x) {
        ModuleElement r;
        for (const auto& [n, cv] : m.terms())
            for (const auto& [mm, cx] : x.terms())
                r.add_term(n + mm, coeff(n, mm) * cv * cx);
        return r;
    };
    for (Index k = w.lo; k <= w.hi; ++k)
        for (Index i = w.lo; i <= w.hi; ++i)
            for (Index j = w.lo; j <= w.hi; ++j) {
                ++rep.triples_checked;
                ModuleElement lhs = act(v(k), witt_bracket(d(i), d(j)));
                ModuleElement rhs = act(act(v(k), d(i)), d(j)) - act(act(v(k), d(j)), d(i));
                ModuleElement def = lhs - rhs;
                if (!def.is_zero())
                    rep.failures.push_back({"vdd", {k, i, j}, embed(std::move(def))});
            }
    return rep;
}

}  // namespace detail

// v(k) * [d_i,d_j] = (v(k) * d_i) * d_j - (v(k) * d_j) * d_i over the window
inline VerificationReport verify_module_axiom(const ModuleParams& p, const IndexWindow& w) {
    return detail::verify_module_axiom_with(
        [&](Index n, Index m) { return action_coeff(p, n, m); }, w,
        "module axiom sweep, alpha=" + to_string(p.alpha) + " beta=" + to_string(p.beta));
}

}  // namespace wittleib
