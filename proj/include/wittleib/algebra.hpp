#pragma once

// The Witt bracket and the right action of W on V(alpha,beta), extended
// bilinearly from the basis rules
//     [d_m, d_n]   = (m - n) d_{m+n}
//     v(n) * d_m   = (alpha + n + beta m) v(n+m).

#include "wittleib/elements.hpp"

namespace wittleib {

inline WittElement witt_bracket(const WittElement& x, const WittElement& y) {
    WittElement r;
    for (const auto& [i, ci] : x.terms())
        for (const auto& [j, cj] : y.terms())
            r.add_term(i + j, Scalar(i - j) * ci * cj);
    return r;
}

// coefficient of the action of d_m on v(n)
inline Scalar action_coeff(const ModuleParams& p, Index n, Index m) {
    return p.alpha + Scalar(n) + p.beta * Scalar(m);
}

inline ModuleElement module_action(const ModuleElement& v, const WittElement& x,
                                   const ModuleParams& p) {
    ModuleElement r;
    for (const auto& [n, cv] : v.terms())
        for (const auto& [m, cx] : x.terms())
            r.add_term(n + m, action_coeff(p, n, m) * cv * cx);
    return r;
}

}  // namespace wittleib
