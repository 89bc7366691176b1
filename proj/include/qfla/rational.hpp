#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace qfla {

/// Arbitrary-precision integer.  Expression templates are disabled so the
/// type behaves as a plain value scalar inside dense containers.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;

/// Exact rational scalar.  Invariants: denominator > 0, numerator and
/// denominator coprime, zero is canonically 0/1.  All arithmetic is exact;
/// there is no floating-point construction or conversion.
class Rational {
public:
    Rational() : num_(0), den_(1) {}

    template <std::integral T>
    Rational(T n) : num_(n), den_(1) {}

    Rational(Int n) : num_(std::move(n)), den_(1) {}

    Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    template <std::integral T, std::integral U>
    Rational(T n, U d) : num_(n), den_(d) { normalize(); }

    const Int& numerator() const { return num_; }
    const Int& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    int sign() const { return num_.sign(); }

    Rational operator-() const {
        Rational r(*this);
        r.num_ = -r.num_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    Int num_;
    Int den_;

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = gcd(num_ < 0 ? Int(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_.is_zero()) den_ = 1;
    }
};

inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

/// Canonical text form: "p/q" with "/q" omitted when q == 1.
inline std::string to_string(const Rational& r) {
    std::string s = r.numerator().str();
    if (r.denominator() != 1) s += "/" + r.denominator().str();
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << to_string(r);
}

/// Parses "p" or "p/q" with optional leading '-'; anything else (including
/// decimals) yields nullopt.
inline std::optional<Rational> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::size_t pos = 0;
    if (text[0] == '-') pos = 1;
    std::size_t digits_start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == digits_start) return std::nullopt;
    Int num(std::string(text.substr(0, pos)));
    if (pos == text.size()) return Rational(std::move(num));
    if (text[pos] != '/') return std::nullopt;
    ++pos;
    std::size_t den_start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == den_start || pos != text.size()) return std::nullopt;
    Int den(std::string(text.substr(den_start)));
    if (den.is_zero()) return std::nullopt;
    return Rational(std::move(num), std::move(den));
}

} // namespace qfla
