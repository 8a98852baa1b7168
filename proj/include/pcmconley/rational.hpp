#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace pcmconley {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number. Invariants: den > 0, gcd(|num|, den) == 1, and the
// zero value is stored as 0/1. Equality is therefore representational.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational abs() const { return num_ < 0 ? Rational(-num_, den_, canonical_tag{}) : *this; }

    Rational operator-() const { return Rational(-num_, den_, canonical_tag{}); }

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
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const BigInt l = a.num_ * b.den_;
        const BigInt r = b.num_ * a.den_;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // Canonical text form: "p" for integers, "p/q" otherwise (q > 0).
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

    // Accepts "p" or "p/q" with optional sign on either component and
    // surrounding whitespace. Throws std::invalid_argument on anything else.
    static Rational parse(const std::string& text);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    struct canonical_tag {};
    Rational(BigInt n, BigInt d, canonical_tag) : num_(std::move(n)), den_(std::move(d)) {}

    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

inline Rational Rational::parse(const std::string& text) {
    auto bad = [&]() -> Rational {
        throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    };
    std::size_t b = text.find_first_not_of(" \t");
    std::size_t e = text.find_last_not_of(" \t");
    if (b == std::string::npos) return bad();
    const std::string s = text.substr(b, e - b + 1);

    auto is_int_token = [](const std::string& t) {
        std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    // cpp_int's string constructor rejects a leading '+'.
    auto strip_plus = [](const std::string& t) { return t[0] == '+' ? t.substr(1) : t; };

    const std::size_t slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_int_token(s)) return bad();
        return Rational(BigInt(strip_plus(s)));
    }
    const std::string p = s.substr(0, slash);
    const std::string q = s.substr(slash + 1);
    if (p.empty() || q.empty() || !is_int_token(p) || !is_int_token(q)) return bad();
    BigInt d(strip_plus(q));
    if (d == 0) throw std::domain_error("Rational: zero denominator in '" + text + "'");
    return Rational(BigInt(strip_plus(p)), std::move(d));
}

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace pcmconley
