#pragma once

// Sparse elements of the Witt algebra W, the weight module V(alpha,beta),
// and the direct sum L = W (+) V.  Maps are sorted by basis index and never
// store zero coefficients, so printing and comparison are deterministic.

#include "wittleib/scalar.hpp"

#include <map>
#include <utility>

namespace wittleib {

template <class Tag>
class SparseElement {
  public:
    using Map = std::map<Index, Scalar>;

    SparseElement() = default;

    static SparseElement basis(Index i, Scalar coeff = Scalar(1)) {
        SparseElement e;
        e.add_term(i, std::move(coeff));
        return e;
    }

    void add_term(Index i, const Scalar& c) {
        if (c.is_zero())
            return;
        auto [it, inserted] = coeffs_.try_emplace(i, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                coeffs_.erase(it);
        }
    }

    Scalar coeff(Index i) const {
        auto it = coeffs_.find(i);
        return it == coeffs_.end() ? Scalar(0) : it->second;
    }

    bool is_zero() const { return coeffs_.empty(); }
    std::size_t support_size() const { return coeffs_.size(); }
    const Map& terms() const { return coeffs_; }

    SparseElement& operator+=(const SparseElement& o) {
        for (const auto& [i, c] : o.coeffs_)
            add_term(i, c);
        return *this;
    }
    SparseElement& operator-=(const SparseElement& o) {
        for (const auto& [i, c] : o.coeffs_)
            add_term(i, -c);
        return *this;
    }
    friend SparseElement operator+(SparseElement a, const SparseElement& b) { return a += b; }
    friend SparseElement operator-(SparseElement a, const SparseElement& b) { return a -= b; }
    friend SparseElement operator*(const Scalar& s, const SparseElement& e) {
        SparseElement r;
        for (const auto& [i, c] : e.coeffs_)
            r.add_term(i, s * c);
        return r;
    }
    friend bool operator==(const SparseElement& a, const SparseElement& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const SparseElement& a, const SparseElement& b) { return !(a == b); }

  private:
    Map coeffs_;
};

struct WittTag {};
struct ModuleTag {};

using WittElement = SparseElement<WittTag>;    // combinations of d_i
using ModuleElement = SparseElement<ModuleTag>;  // combinations of v(n)

inline WittElement d(Index i) { return WittElement::basis(i); }
inline ModuleElement v(Index n) { return ModuleElement::basis(n); }

struct LeibnizElement {
    WittElement witt;
    ModuleElement module;

    bool is_zero() const { return witt.is_zero() && module.is_zero(); }
    LeibnizElement& operator+=(const LeibnizElement& o) {
        witt += o.witt;
        module += o.module;
        return *this;
    }
    LeibnizElement& operator-=(const LeibnizElement& o) {
        witt -= o.witt;
        module -= o.module;
        return *this;
    }
    friend LeibnizElement operator+(LeibnizElement a, const LeibnizElement& b) { return a += b; }
    friend LeibnizElement operator-(LeibnizElement a, const LeibnizElement& b) { return a -= b; }
    friend bool operator==(const LeibnizElement& a, const LeibnizElement& b) {
        return a.witt == b.witt && a.module == b.module;
    }
    friend bool operator!=(const LeibnizElement& a, const LeibnizElement& b) { return !(a == b); }
};

inline LeibnizElement embed(WittElement x) { return {std::move(x), {}}; }
inline LeibnizElement embed(ModuleElement m) { return {{}, std::move(m)}; }

// Parameters (alpha, beta) of the module V(alpha,beta).
struct ModuleParams {
    Scalar alpha;
    Scalar beta;
    bool alpha_integer;

    ModuleParams(Scalar a, Scalar b)
        : alpha(std::move(a)), beta(std::move(b)), alpha_integer(alpha.is_integer()) {}
};

// V(alpha,beta) is reducible iff alpha is an integer and beta is 0 or 1.
inline bool is_reducible(const ModuleParams& p) {
    return p.alpha_integer && (p.beta == Scalar(0) || p.beta == Scalar(1));
}

struct IndexWindow {
    Index lo;
    Index hi;

    IndexWindow(Index l, Index h) : lo(l), hi(h) {
        if (l > h)
            throw contract_error("IndexWindow: lo > hi");
    }
    bool contains(Index i) const { return lo <= i && i <= hi; }
    Index size() const { return hi - lo + 1; }
};

}  // namespace wittleib
