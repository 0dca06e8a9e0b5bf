#pragma once

// Structure constants of the classified Leibniz algebras on W (+) V(alpha,beta).
//
// A StructureTable fixes the product of any two basis elements of L:
//     [d_i, d_j] = (i - j) d_{i+j} + gamma_{i,j} v(i+j-alpha)
//     [v(n), d_m] = (alpha + n + beta m) v(n+m),   [W,V] = [V,V] = 0.
// The module coefficients gamma_{i,j} come from closed forms and recursions;
// entries the recursions do not reach directly are completed through exact
// instances of the defining constraint system (see CoefficientTable).

#include "wittleib/algebra.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

namespace wittleib {

enum class FamilyId { thm1, i, ii, iii, iv };

inline std::string to_string(FamilyId f) {
    switch (f) {
        case FamilyId::thm1: return "thm1";
        case FamilyId::i: return "I";
        case FamilyId::ii: return "II";
        case FamilyId::iii: return "III";
        case FamilyId::iv: return "IV";
    }
    return "?";
}

inline FamilyId family_from_string(const std::string& s) {
    if (s == "thm1") return FamilyId::thm1;
    if (s == "I") return FamilyId::i;
    if (s == "II") return FamilyId::ii;
    if (s == "III") return FamilyId::iii;
    if (s == "IV") return FamilyId::iv;
    throw parse_error("unknown family '" + s + "' (expected thm1|I|II|III|IV)");
}

// Which sign the superdiagonal recursion of family II carries in front of the
// (4i+1) a_i term.  The minus version is the one under which the Leibniz
// identity holds; the plus version is kept for regression tests.
enum class SuperdiagSign { minus, plus };

// a_i of family II:  a_i = (i-1)(i+2)(i+3)/20,  a_{-i} = -(i+1)(i-2)(i-3)/20.
inline Rational a_coeff(Index i) {
    if (i >= -1 && i <= 1)
        throw domain_error("a_coeff: index " + std::to_string(i) + " excluded");
    if (i >= 2)
        return Rational(Int(i - 1) * Int(i + 2) * Int(i + 3), 20);
    Index m = -i;
    return Rational(-Int(m + 1) * Int(m - 2) * Int(m - 3), 20);
}

// Memoized gamma_{i,j} values, normalized so that gamma_{2,1} = 1 (families II
// and III) resp. b_{2,2} = 2 (family IV; this also gives gamma_{2,1} = 1).
class CoefficientTable {
  public:
    CoefficientTable(FamilyId family, Scalar beta, SuperdiagSign sd = SuperdiagSign::minus)
        : family_(family), beta_(std::move(beta)), superdiag_sign_(sd) {}

    FamilyId family() const { return family_; }

    // gamma_{i,j} / gamma_{2,1}; total over Z x Z.
    Rational gamma_hat(Index i, Index j) const {
        std::lock_guard<std::recursive_mutex> lock(mu_);
        auto it = memo_.find({i, j});
        if (it != memo_.end())
            return it->second;
        Rational val = compute(i, j);
        memo_.emplace(std::make_pair(i, j), val);
        return val;
    }

    // diagonal b_{i,i}; |i| >= 2 for family II, i != 0 for family IV
    Rational diagonal(Index i) const {
        std::lock_guard<std::recursive_mutex> lock(mu_);
        return diag(i);
    }

    void clear() {
        std::lock_guard<std::recursive_mutex> lock(mu_);
        memo_.clear();
        diag_memo_.clear();
    }

  private:
    using Key = std::pair<Index, Index>;

    // ratio gamma_{j,-j} / gamma_{j,j} forced by the constraint
    // beta gamma_{j,-j} + (beta - 2) gamma_{j,j} = 0
    Rational antidiag_ratio() const {
        Rational beta = beta_.re();
        return (Rational(2) - beta) / beta;
    }

    Rational diag(Index i) const {
        if (family_ == FamilyId::ii && i >= -1 && i <= 1)
            return Rational(0);
        if (family_ == FamilyId::iv && (i == 1 || i == -1))
            return Rational(i);  // frozen from the solved beta = -1 system
        if (i == 0)
            return Rational(0);
        auto it = diag_memo_.find(i);
        if (it != diag_memo_.end())
            return it->second;
        Rational val;
        if (family_ == FamilyId::ii) {
            if (i == 2)
                val = 9;
            else if (i == -2)
                val = -9;
            else if (i >= 3)
                // b_{i,i} = ((i+1)(2i+1) b_{i-1,i-1} - (i+1)(4i-3) a_{i-1}
                //            - (4i-1)(i-2) a_{-i}) / ((i-2)(2i-3))
                val = (Int(i + 1) * Int(2 * i + 1) * diag(i - 1)
                       - Int(i + 1) * Int(4 * i - 3) * a_coeff(i - 1)
                       - Int(4 * i - 1) * Int(i - 2) * a_coeff(-i))
                      / Rational(Int(i - 2) * Int(2 * i - 3));
            else
                // the same relation at index i+1, solved for b_{i,i}
                val = (Int(i - 1) * Int(2 * i - 1) * diag(i + 1)
                       + Int(i + 2) * Int(4 * i + 1) * a_coeff(i)
                       + Int(4 * i + 3) * Int(i - 1) * a_coeff(-i - 1))
                      / Rational(Int(i + 2) * Int(2 * i + 3));
        } else {  // family IV
            if (i == 2)
                val = 2;
            else if (i == -2)
                val = -2;
            else if (i >= 3)
                // (2i+1)(i-2) b_{i,i} = (i+1)(2i-3) b_{i-1,i-1} - 3; the
                // constant term is -3, not -(2i-1): only this version passes
                // the defect sweep and matches the solved constraint system.
                val = (Int(i + 1) * Int(2 * i - 3) * diag(i - 1) - 3)
                      / Rational(Int(2 * i + 1) * Int(i - 2));
            else
                val = (Int(2 * i + 3) * Int(i - 1) * diag(i + 1) + 3)
                      / Rational(Int(i + 2) * Int(2 * i - 1));
        }
        diag_memo_.emplace(i, val);
        return val;
    }

    Rational superdiag(Index i) const {
        if (family_ == FamilyId::ii) {
            Rational t = Int(2 * i + 3) * diag(i);
            Rational u = Int(4 * i + 1) * a_coeff(i);
            Rational num = superdiag_sign_ == SuperdiagSign::minus ? Rational(t - u)
                                                                   : Rational(t + u);
            return Int(i + 1) * num / Rational(Int(i - 1) * Int(2 * i + 1));
        }
        // IV: b_{i,i+1} = (i+1)((2i-1) b_{i,i} - 1) / ((2i+1)(i-1))
        return Int(i + 1) * (Int(2 * i - 1) * diag(i) - 1)
               / Rational(Int(2 * i + 1) * Int(i - 1));
    }

    // gamma_{1,x} and gamma_{-1,x}
    Rational g1(Index x) const {
        if (family_ == FamilyId::ii)
            return (x >= -1 && x <= 1) ? Rational(0) : Rational(x) * a_coeff(x);
        if (x == 0) return Rational(0);
        if (x == -1) return antidiag_ratio() * diag(1);
        return Rational(x);
    }
    Rational gm1(Index x) const {
        if (family_ == FamilyId::ii)
            return (x >= -1 && x <= 1) ? Rational(0) : Rational(x) * a_coeff(-x);
        if (x == 0) return Rational(0);
        if (x == 1) return antidiag_ratio() * diag(-1);
        return Rational(x);
    }

    Rational compute(Index i, Index j) const {
        Rational beta = beta_.re();
        if (i == 0 || j == 0)
            return Rational(0);
        if (i == -j)
            return antidiag_ratio() * diag(i);
        if (i == j)
            return diag(i);
        if (family_ == FamilyId::ii) {
            if (j == 1) return a_coeff(i);
            if (j == -1) return -a_coeff(-i);
            if (i == 1) return g1(j);
            if (i == -1) return gm1(j);
        } else {
            if (i == 1) return g1(j);
            if (i == -1) return gm1(j);
            if (j == 1) return Rational(1);   // frozen: gamma_{i,1} = gamma_{2,1}
            if (j == -1) return Rational(-1);  // frozen: gamma_{i,-1} = -gamma_{2,1}
        }
        if ((i > 0) == (j > 0)) {
            if (i > j)  // i gamma_{i,j} = j gamma_{j,i}
                return Rational(j) * gamma_hat(j, i) / Rational(i);
            if (j == i + 1)
                return superdiag(i);
            if (family_ == FamilyId::ii)
                // b_{i,j} = j((i-1) b_{i+1,j-1} + (3i+j)(j-1) a_{j-1}
                //     - (j-i-1)(j+i-1) a_{j+i-1} - i(i+3j-2) a_i) / (i(j-2))
                return Rational(j)
                       * (Int(i - 1) * gamma_hat(i + 1, j - 1)
                          + Int(3 * i + j) * Int(j - 1) * a_coeff(j - 1)
                          - Int(j - i - 1) * Int(j + i - 1) * a_coeff(j + i - 1)
                          - Int(i) * Int(i + 3 * j - 2) * a_coeff(i))
                       / Rational(Int(i) * Int(j - 2));
            // IV: b_{i,j} = j((i-1) b_{i+1,j-1} + (j-i-1)) / (i(j-2))
            return Rational(j)
                   * (Int(i - 1) * gamma_hat(i + 1, j - 1) + Int(j - i - 1))
                   / Rational(Int(i) * Int(j - 2));
        }
        // mixed sign
        if (i < 0)
            return Rational(j) * gamma_hat(j, i) / Rational(i);
        // i >= 2, j <= -2, i + j != 0: complete along the anti-diagonal chain
        // using exact constraint instances anchored at the known rows.
        Index s = i + j;
        Index ci, cj;
        Rational gtop;  // gamma_{cj, ci}
        Rational cur;
        if (s >= 1) {
            ci = s + 1;
            cj = -1;
            cur = family_ == FamilyId::ii ? -a_coeff(-ci) : Rational(-1);
            gtop = gm1(ci);
        } else {
            // anchor gamma_{2, s-2} from the identity instance L(d_{-1}, d_2, d_{s-1})
            Rational anchor = (Rational(3 - s) * gm1(s + 1) + Rational(3) * g1(s - 1)
                               - (Rational(1) + beta * Rational(s - 1)) * gm1(2)
                               + (Rational(s - 2) + 2 * beta) * gm1(s - 1))
                              / Rational(s);
            cur = Rational(s - 2) * anchor / Rational(2);
            ci = 2;
            cj = s - 2;
            if (ci == i)
                return cur;
            gtop = Rational(ci) * cur / Rational(cj);
        }
        while (ci != i) {
            // L(d_1, d_ci, d_{cj-1}) solved for gamma_{ci+1, cj-1}
            Rational nxt = (Rational(cj - ci - 1) * g1(ci + cj - 1)
                            + (Rational(ci) + beta * Rational(cj) + 1 - beta) * g1(ci)
                            - Rational(2 - cj) * gtop
                            - (Rational(cj) + beta * Rational(ci)) * g1(cj - 1))
                           / Rational(ci - 1);
            ++ci;
            --cj;
            cur = nxt;
            memo_.emplace(std::make_pair(ci, cj), cur);
            gtop = Rational(ci) * cur / Rational(cj);
        }
        return cur;
    }

    FamilyId family_;
    Scalar beta_;
    SuperdiagSign superdiag_sign_;
    mutable std::recursive_mutex mu_;
    mutable std::map<Key, Rational> memo_;
    mutable std::map<Index, Rational> diag_memo_;
};

// b_{i,j} of family II (normalization gamma_{2,1} = 1).  Defined where the
// closed forms and recursions reach: i, j outside {-1,0,1} and i != -j.
inline Rational b_coeff_ii(const CoefficientTable& t, Index i, Index j) {
    if (t.family() != FamilyId::ii)
        throw domain_error("b_coeff_ii: table is not family II");
    if ((i >= -1 && i <= 1) || (j >= -1 && j <= 1))
        throw domain_error("b_coeff: index in {-1,0,1}; these entries are boundary "
                           "completions, not b-coefficients");
    if (i == -j)
        throw domain_error("b_coeff: anti-diagonal entries are expressed through b_{j,j}");
    return t.gamma_hat(i, j);
}

inline Rational b_coeff_iv(const CoefficientTable& t, Index i, Index j) {
    if (t.family() != FamilyId::iv)
        throw domain_error("b_coeff_iv: table is not family IV");
    if ((i >= -1 && i <= 1) || (j >= -1 && j <= 1))
        throw domain_error("b_coeff: index in {-1,0,1}; these entries are boundary "
                           "completions, not b-coefficients");
    if (i == -j)
        throw domain_error("b_coeff: anti-diagonal entries are expressed through b_{j,j}");
    return t.gamma_hat(i, j);
}

class StructureTable {
  public:
    StructureTable(FamilyId family, ModuleParams params, Scalar normalization = Scalar(1),
                   SuperdiagSign sd = SuperdiagSign::minus)
        : family_(family), params_(std::move(params)), normalization_(std::move(normalization)) {
        validate();
        if (family_ == FamilyId::ii || family_ == FamilyId::iv)
            coeffs_ = std::make_shared<CoefficientTable>(family_, params_.beta, sd);
    }

    FamilyId family() const { return family_; }
    const ModuleParams& params() const { return params_; }
    const Scalar& normalization() const { return normalization_; }
    const CoefficientTable* coefficients() const { return coeffs_.get(); }

    bool has_module_corrections() const {
        return family_ != FamilyId::thm1 && family_ != FamilyId::i && !normalization_.is_zero();
    }

    // integer alpha; valid for the families that store corrections
    Index alpha_index() const {
        return static_cast<Index>(params_.alpha.integer_value().convert_to<long long>());
    }

    // module coefficient of [d_i, d_j] (stored at index i + j - alpha)
    Scalar gamma(Index i, Index j) const {
        switch (family_) {
            case FamilyId::thm1:
            case FamilyId::i:
                return Scalar(0);
            case FamilyId::iii: {
                if (i == 0 || j == 0)
                    return Scalar(0);
                Rational g = i == -j ? Rational(Int(i) * Int(i) * Int(i) - i)
                                     : Rational(Int(j) * (Int(i) * Int(j) - 1));
                return normalization_ * Scalar(g);
            }
            default:
                return normalization_ * Scalar(coeffs_->gamma_hat(i, j));
        }
    }

    // precompute gamma over a rectangle so later lookups are read-mostly
    void prepopulate(const IndexWindow& rows, const IndexWindow& cols) const {
        if (!coeffs_)
            return;
        for (Index i = rows.lo; i <= rows.hi; ++i)
            for (Index j = cols.lo; j <= cols.hi; ++j)
                coeffs_->gamma_hat(i, j);
    }

  private:
    void validate() const {
        const bool alpha_int = params_.alpha_integer;
        switch (family_) {
            case FamilyId::thm1:
                if (alpha_int)
                    throw contract_error("family thm1 requires a non-integer alpha");
                break;
            case FamilyId::i:
                if (!alpha_int)
                    throw contract_error("family I requires an integer alpha");
                break;
            case FamilyId::ii:
                if (!alpha_int || params_.beta != Scalar(3))
                    throw contract_error("family II requires integer alpha and beta = 3");
                break;
            case FamilyId::iii:
                if (!alpha_int || params_.beta != Scalar(1))
                    throw contract_error("family III requires integer alpha and beta = 1");
                break;
            case FamilyId::iv:
                if (!alpha_int || params_.beta != Scalar(-1))
                    throw contract_error("family IV requires integer alpha and beta = -1");
                break;
        }
    }

    FamilyId family_;
    ModuleParams params_;
    Scalar normalization_;
    std::shared_ptr<CoefficientTable> coeffs_;
};

inline StructureTable build_table(FamilyId family, const ModuleParams& p,
                                  Scalar normalization = Scalar(1)) {
    return StructureTable(family, p, std::move(normalization));
}

inline Scalar gamma_of(const StructureTable& t, Index i, Index j) { return t.gamma(i, j); }

// Product on L = W (+) V.  Module corrections of [d_i,d_j] land at index
// i + j - alpha, which stays integral because correction-carrying tables
// require an integer alpha.
inline LeibnizElement leibniz_product(const StructureTable& t, const LeibnizElement& a,
                                      const LeibnizElement& b) {
    LeibnizElement r;
    r.witt = witt_bracket(a.witt, b.witt);
    r.module = module_action(a.module, b.witt, t.params());
    if (t.has_module_corrections()) {
        const Index shift = t.alpha_index();
        for (const auto& [i, ci] : a.witt.terms())
            for (const auto& [j, cj] : b.witt.terms()) {
                Scalar g = t.gamma(i, j);
                if (!g.is_zero())
                    r.module.add_term(i + j - shift, g * ci * cj);
            }
    }
    return r;
}

// L(a,b,c) = [a,[b,c]] - [[a,b],c] + [[a,c],b]; identically zero iff the
// table defines a Leibniz algebra on the tested span.
inline LeibnizElement leibniz_defect(const StructureTable& t, const LeibnizElement& a,
                                     const LeibnizElement& b, const LeibnizElement& c) {
    return leibniz_product(t, a, leibniz_product(t, b, c))
           - leibniz_product(t, leibniz_product(t, a, b), c)
           + leibniz_product(t, leibniz_product(t, a, c), b);
}

}  // namespace wittleib
