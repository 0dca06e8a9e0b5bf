#pragma once

// Exact coefficient arithmetic: arbitrary-precision rationals and Gaussian
// rationals a + bi.  Every computation in this library runs over Scalar;
// there is no floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wittleib {

using Int = boost::multiprecision::cpp_int;
// cpp_rational keeps gcd-reduced form with positive denominator; zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

using Index = std::int64_t;

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct contract_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1)
        s += "/" + denominator(r).str();
    return s;
}

// Gaussian rational, component-wise canonical.  Equality is structural.
class Scalar {
  public:
    Scalar() = default;
    Scalar(Index v) : re_(v) {}      // NOLINT(google-explicit-constructor)
    Scalar(int v) : re_(v) {}        // NOLINT(google-explicit-constructor)
    Scalar(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_rational() const { return im_ == 0; }
    // true iff the value lies in Z
    bool is_integer() const { return im_ == 0 && wittleib::is_integer(re_); }

    Int integer_value() const {
        if (!is_integer())
            throw domain_error("Scalar::integer_value: " + wittleib::to_string(re_) +
                               (im_ == 0 ? "" : "+...i") + " is not an integer");
        return numerator(re_);
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend Scalar operator-(const Scalar& a) { return {-a.re_, -a.im_}; }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        Rational n = b.re_ * b.re_ + b.im_ * b.im_;
        if (n == 0)
            throw domain_error("Scalar division by zero");
        return {(a.re_ * b.re_ + a.im_ * b.im_) / n, (a.im_ * b.re_ - a.re_ * b.im_) / n};
    }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    // lexicographic; used only for deterministic container ordering
    friend bool operator<(const Scalar& a, const Scalar& b) {
        if (a.re_ != b.re_)
            return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

  private:
    Rational re_{0};
    Rational im_{0};
};

inline Scalar rational(long num, long den) { return Scalar(Rational(num, den)); }

// Canonical text form.  Grammar: R | R sign R "i" | R "i", R = [-]?digits[/digits].
inline std::string to_string(const Scalar& s) {
    if (s.im() == 0)
        return to_string(s.re());
    std::string im = to_string(s.im());
    if (s.re() == 0)
        return im + "i";
    if (s.im() > 0)
        return to_string(s.re()) + "+" + im + "i";
    return to_string(s.re()) + "-" + to_string(Rational(-s.im())) + "i";
}

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << to_string(s); }

namespace detail {

// Parses R = [-]?digits[/digits] starting at pos; advances pos.
inline Rational parse_rational_at(std::string_view text, std::size_t& pos) {
    std::size_t start = pos;
    if (pos < text.size() && text[pos] == '-')
        ++pos;
    std::size_t digits0 = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
    if (pos == digits0)
        throw parse_error("expected digits in scalar at offset " + std::to_string(start));
    Int num(std::string(text.substr(start, pos - start)));
    Int den(1);
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        std::size_t d = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == d)
            throw parse_error("expected denominator digits in scalar");
        den = Int(std::string(text.substr(d, pos - d)));
        if (den == 0)
            throw parse_error("zero denominator in scalar");
    }
    return Rational(num, den);
}

}  // namespace detail

inline Scalar parse_scalar(std::string_view text) {
    std::size_t pos = 0;
    Rational first = detail::parse_rational_at(text, pos);
    if (pos == text.size())
        return Scalar(first);
    if (text[pos] == 'i') {
        if (pos + 1 != text.size())
            throw parse_error("trailing characters after imaginary unit");
        return Scalar(Rational(0), first);
    }
    bool negative;
    if (text[pos] == '+')
        negative = false;
    else if (text[pos] == '-')
        negative = true;
    else
        throw parse_error("expected '+', '-' or 'i' in scalar");
    ++pos;
    Rational second = detail::parse_rational_at(text, pos);
    if (second < 0)
        throw parse_error("sign must precede the imaginary part");
    if (pos == text.size() || text[pos] != 'i' || pos + 1 != text.size())
        throw parse_error("expected terminal 'i' in scalar");
    return Scalar(first, negative ? Rational(-second) : second);
}

}  // namespace wittleib
