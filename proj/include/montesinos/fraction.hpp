#pragma once

// Exact rationals over arbitrary-precision integers, with infinity as 1/0.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace montesinos {

using Integer = boost::multiprecision::cpp_int;

inline Integer gcd(Integer a, Integer b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Integer r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return 0;
    Integer g = gcd(a, b);
    Integer r = a / g * b;
    return r < 0 ? Integer(-r) : r;
}

/// Irreducible fraction p/q with q > 0, or infinity stored as 1/0.
///
/// The numerator carries the sign; zero is 0/1. Arithmetic is only defined
/// on finite values and throws std::domain_error when infinity is involved.
class Fraction {
public:
    Fraction() : num_(0), den_(1) {}
    Fraction(long long n) : num_(n), den_(1) {}  // NOLINT(implicit)
    Fraction(const Integer& n) : num_(n), den_(1) {}  // NOLINT(implicit)

    Fraction(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) {
        if (num_ == 0 && den_ == 0)
            throw std::invalid_argument("fraction 0/0 is undefined");
        if (den_ == 0) {
            num_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Integer g = gcd(num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    static Fraction infinity() { return Fraction(Integer(1), Integer(0)); }

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    bool is_infinite() const { return den_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

    Fraction operator-() const {
        if (is_infinite()) return *this;
        Fraction r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Fraction operator+(const Fraction& a, const Fraction& b) {
        a.require_finite();
        b.require_finite();
        return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Fraction operator-(const Fraction& a, const Fraction& b) { return a + (-b); }
    friend Fraction operator*(const Fraction& a, const Fraction& b) {
        a.require_finite();
        b.require_finite();
        return Fraction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Fraction operator/(const Fraction& a, const Fraction& b) {
        a.require_finite();
        b.require_finite();
        if (b.num_ == 0) throw std::domain_error("division by zero");
        return Fraction(a.num_ * b.den_, a.den_ * b.num_);
    }

    Fraction& operator+=(const Fraction& o) { return *this = *this + o; }
    Fraction& operator-=(const Fraction& o) { return *this = *this - o; }
    Fraction& operator*=(const Fraction& o) { return *this = *this * o; }
    Fraction& operator/=(const Fraction& o) { return *this = *this / o; }

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // Infinity orders above every finite value.
    friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
        if (a.is_infinite() || b.is_infinite()) {
            if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
            return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        Integer lhs = a.num_ * b.den_;
        Integer rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Fraction abs() const { return sign() < 0 ? -*this : *this; }

    /// "p/q", "p" when q = 1, "inf" for infinity.
    std::string str() const {
        if (is_infinite()) return "inf";
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

    /// Accepts "p/q", "p", "-p/q", "+p", and "inf". Non-reduced input is reduced.
    static Fraction parse(std::string_view text) {
        auto bad = [&] { return std::invalid_argument("malformed fraction '" + std::string(text) + "'"); };
        if (text == "inf" || text == "1/0") return infinity();
        auto slash = text.find('/');
        std::string_view n = text.substr(0, slash);
        std::string_view d = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
        if (!valid_integer(n, true) || !valid_integer(d, true)) throw bad();
        Integer ni(std::string(n[0] == '+' ? n.substr(1) : n));
        Integer di(std::string(d[0] == '+' ? d.substr(1) : d));
        if (ni == 0 && di == 0) throw bad();
        return Fraction(ni, di);
    }

    friend std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.str(); }

private:
    Integer num_;
    Integer den_;

    void require_finite() const {
        if (is_infinite()) throw std::domain_error("arithmetic on infinity");
    }

    static bool valid_integer(std::string_view s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    }
};

inline Fraction make_fraction(const Integer& num, const Integer& den) { return Fraction(num, den); }

/// Fits an Integer into int64, throwing std::overflow_error otherwise.
inline std::int64_t to_int64(const Integer& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("integer " + v.str() + " exceeds 64 bits");
    return static_cast<std::int64_t>(v);
}

}  // namespace montesinos
