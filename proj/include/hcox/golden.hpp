#pragma once

// Exact arithmetic in Z[tau] (tau = golden mean) and in the cyclotomic
// module Z[xi] = Z[tau] + Z[tau] xi with xi = exp(i pi / 5).

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace hcox {

using Int = std::int64_t;

inline constexpr double kTau = 1.6180339887498948482;
inline constexpr double kTauConj = 1.0 - kTau;

/// Thrown whenever a 64-bit coordinate would wrap.
class OverflowError : public std::overflow_error {
  public:
    using std::overflow_error::overflow_error;
};

namespace checked {

inline Int add(Int x, Int y) {
    Int r;
    if (__builtin_add_overflow(x, y, &r)) throw OverflowError("hcox: integer overflow in add");
    return r;
}
inline Int sub(Int x, Int y) {
    Int r;
    if (__builtin_sub_overflow(x, y, &r)) throw OverflowError("hcox: integer overflow in sub");
    return r;
}
inline Int mul(Int x, Int y) {
    Int r;
    if (__builtin_mul_overflow(x, y, &r)) throw OverflowError("hcox: integer overflow in mul");
    return r;
}
inline Int neg(Int x) { return sub(0, x); }

}  // namespace checked

enum class Sign { negative = -1, zero = 0, positive = 1 };

enum class Embedding { identity, conjugate };

/// a + b*tau with tau^2 = tau + 1.
class GoldenInt {
  public:
    constexpr GoldenInt() = default;
    constexpr GoldenInt(Int a, Int b = 0) : a_(a), b_(b) {}  // NOLINT: integers embed implicitly

    static constexpr GoldenInt tau() { return {0, 1}; }
    /// tau' = 1 - tau
    static constexpr GoldenInt tau_conj() { return {1, -1}; }

    constexpr Int a() const { return a_; }
    constexpr Int b() const { return b_; }

    friend GoldenInt operator+(GoldenInt x, GoldenInt y) {
        return {checked::add(x.a_, y.a_), checked::add(x.b_, y.b_)};
    }
    friend GoldenInt operator-(GoldenInt x, GoldenInt y) {
        return {checked::sub(x.a_, y.a_), checked::sub(x.b_, y.b_)};
    }
    friend GoldenInt operator-(GoldenInt x) { return {checked::neg(x.a_), checked::neg(x.b_)}; }
    friend GoldenInt operator*(GoldenInt x, GoldenInt y) {
        // (a + b t)(c + d t) = ac + bd + (ad + bc + bd) t
        const Int bd = checked::mul(x.b_, y.b_);
        return {checked::add(checked::mul(x.a_, y.a_), bd),
                checked::add(checked::add(checked::mul(x.a_, y.b_), checked::mul(x.b_, y.a_)), bd)};
    }
    GoldenInt& operator+=(GoldenInt y) { return *this = *this + y; }
    GoldenInt& operator-=(GoldenInt y) { return *this = *this - y; }
    GoldenInt& operator*=(GoldenInt y) { return *this = *this * y; }

    friend constexpr bool operator==(GoldenInt, GoldenInt) = default;
    /// Lexicographic on (a, b); used for canonical ordering only, not the real order.
    friend constexpr auto operator<=>(GoldenInt, GoldenInt) = default;

    constexpr bool is_zero() const { return a_ == 0 && b_ == 0; }

    /// Galois conjugation tau -> tau'.
    GoldenInt conj() const { return {checked::add(a_, b_), checked::neg(b_)}; }

    /// Field norm x * x' = a^2 + ab - b^2.
    Int norm() const {
        return checked::sub(checked::add(checked::mul(a_, a_), checked::mul(a_, b_)), checked::mul(b_, b_));
    }

    /// Exact sign of the real number a + b*tau.
    /// 2(a + b tau) = (2a + b) + b sqrt5; compares (2a+b)^2 against 5 b^2.
    Sign sign() const {
        const Int u = checked::add(checked::mul(2, a_), b_);
        const Int v = b_;
        const int su = (u > 0) - (u < 0);
        const int sv = (v > 0) - (v < 0);
        if (su == sv) return static_cast<Sign>(su);
        if (su == 0) return static_cast<Sign>(sv);
        if (sv == 0) return static_cast<Sign>(su);
        const Int uu = checked::mul(u, u);
        const Int vv = checked::mul(5, checked::mul(v, v));
        if (uu == vv) return Sign::zero;  // unreachable: sqrt5 is irrational
        return static_cast<Sign>(uu > vv ? su : sv);
    }

    double embed(Embedding which = Embedding::identity) const {
        const double t = which == Embedding::identity ? kTau : kTauConj;
        return static_cast<double>(a_) + static_cast<double>(b_) * t;
    }
    double value() const { return embed(Embedding::identity); }

    std::string str() const {
        if (b_ == 0) return std::to_string(a_);
        std::string out;
        if (a_ != 0) out = std::to_string(a_);
        if (b_ == 1) {
            out += a_ != 0 ? "+tau" : "tau";
        } else if (b_ == -1) {
            out += "-tau";
        } else {
            if (b_ > 0 && a_ != 0) out += "+";
            out += std::to_string(b_) + "*tau";
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, GoldenInt x) { return os << x.str(); }

  private:
    Int a_ = 0;
    Int b_ = 0;
};

inline GoldenInt conj(GoldenInt x) { return x.conj(); }
inline Sign sign(GoldenInt x) { return x.sign(); }
inline double embed(GoldenInt x, Embedding which = Embedding::identity) { return x.embed(which); }

/// Exact real-order comparisons.
inline bool real_less(GoldenInt x, GoldenInt y) { return (x - y).sign() == Sign::negative; }
inline bool real_leq(GoldenInt x, GoldenInt y) { return (x - y).sign() != Sign::positive; }
struct RealLess {
    bool operator()(GoldenInt x, GoldenInt y) const { return real_less(x, y); }
};

inline GoldenInt abs_real(GoldenInt x) { return x.sign() == Sign::negative ? -x : x; }

/// num / den with den > 0 and gcd(den, num.a, num.b) = 1.
class GoldenRational {
  public:
    GoldenRational() = default;
    GoldenRational(GoldenInt num, Int den = 1) : num_(num), den_(den) {  // NOLINT
        if (den_ == 0) throw std::domain_error("hcox: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = checked::neg(den_);
        }
        const Int g = std::gcd(std::gcd(num_.a(), num_.b()), den_);
        if (g > 1) {
            num_ = {num_.a() / g, num_.b() / g};
            den_ /= g;
        }
    }
    GoldenRational(Int x) : GoldenRational(GoldenInt{x}) {}  // NOLINT

    const GoldenInt& num() const { return num_; }
    Int den() const { return den_; }
    bool is_integral() const { return den_ == 1; }
    bool is_zero() const { return num_.is_zero(); }

    friend GoldenRational operator+(const GoldenRational& x, const GoldenRational& y) {
        const Int l = std::lcm(x.den_, y.den_);
        return {x.num_ * GoldenInt{l / x.den_} + y.num_ * GoldenInt{l / y.den_}, l};
    }
    friend GoldenRational operator-(const GoldenRational& x) { return {-x.num_, x.den_}; }
    friend GoldenRational operator-(const GoldenRational& x, const GoldenRational& y) { return x + (-y); }
    friend GoldenRational operator*(const GoldenRational& x, const GoldenRational& y) {
        return {x.num_ * y.num_, checked::mul(x.den_, y.den_)};
    }
    /// Division rationalises with the conjugate: 1/y = y' / N(y).
    friend GoldenRational operator/(const GoldenRational& x, const GoldenRational& y) {
        if (y.is_zero()) throw std::domain_error("hcox: division by zero");
        const Int n = y.num_.norm();
        return {x.num_ * y.num_.conj() * GoldenInt{y.den_}, checked::mul(x.den_, n)};
    }
    GoldenRational& operator+=(const GoldenRational& y) { return *this = *this + y; }
    GoldenRational& operator-=(const GoldenRational& y) { return *this = *this - y; }
    GoldenRational& operator*=(const GoldenRational& y) { return *this = *this * y; }

    friend bool operator==(const GoldenRational&, const GoldenRational&) = default;

    Sign sign() const { return num_.sign(); }
    double value() const { return num_.value() / static_cast<double>(den_); }

    std::string str() const {
        if (den_ == 1) return num_.str();
        return "(" + num_.str() + ")/" + std::to_string(den_);
    }
    friend std::ostream& operator<<(std::ostream& os, const GoldenRational& x) { return os << x.str(); }

  private:
    GoldenInt num_;
    Int den_ = 1;
};

inline bool real_less(const GoldenRational& x, const GoldenRational& y) {
    return (x - y).sign() == Sign::negative;
}

/// p + q*xi, xi = exp(i pi/5), reduced with xi^2 = -1 + tau*xi.
class CycloInt {
  public:
    constexpr CycloInt() = default;
    constexpr CycloInt(GoldenInt p, GoldenInt q = {}) : p_(p), q_(q) {}  // NOLINT

    static constexpr CycloInt xi() { return {GoldenInt{0}, GoldenInt{1}}; }

    /// xi^j for any integer j (reduced mod 10).
    static CycloInt xi_pow(int j) {
        j = ((j % 10) + 10) % 10;
        CycloInt r{GoldenInt{1}};
        for (int k = 0; k < j; ++k) r = r * xi();
        return r;
    }

    constexpr const GoldenInt& p() const { return p_; }
    constexpr const GoldenInt& q() const { return q_; }

    friend CycloInt operator+(const CycloInt& x, const CycloInt& y) { return {x.p_ + y.p_, x.q_ + y.q_}; }
    friend CycloInt operator-(const CycloInt& x, const CycloInt& y) { return {x.p_ - y.p_, x.q_ - y.q_}; }
    friend CycloInt operator-(const CycloInt& x) { return {-x.p_, -x.q_}; }
    friend CycloInt operator*(const CycloInt& x, const CycloInt& y) {
        // (p1 + q1 xi)(p2 + q2 xi) = p1p2 - q1q2 + (p1q2 + q1p2 + tau q1q2) xi
        const GoldenInt qq = x.q_ * y.q_;
        return {x.p_ * y.p_ - qq, x.p_ * y.q_ + x.q_ * y.p_ + GoldenInt::tau() * qq};
    }
    friend CycloInt operator*(GoldenInt a, const CycloInt& x) { return {a * x.p_, a * x.q_}; }
    CycloInt& operator+=(const CycloInt& y) { return *this = *this + y; }
    CycloInt& operator-=(const CycloInt& y) { return *this = *this - y; }
    CycloInt& operator*=(const CycloInt& y) { return *this = *this * y; }

    friend constexpr bool operator==(const CycloInt&, const CycloInt&) = default;
    friend constexpr auto operator<=>(const CycloInt&, const CycloInt&) = default;

    constexpr bool is_zero() const { return p_.is_zero() && q_.is_zero(); }

    /// Complex conjugation: xi -> xi^9 = tau - xi.
    CycloInt complex_conj() const { return {p_ + q_ * GoldenInt::tau(), -q_}; }

    /// Exact test for lying on the real axis.
    bool is_real() const { return *this == complex_conj(); }

    /// Star map: ring automorphism xi^j -> xi^(7j mod 10), tau -> tau'.
    /// Agrees with xi^j -> xi^(2j) on even powers, so the roots stay roots.
    CycloInt star() const {
        static const CycloInt xi7 = xi_pow(7);
        return CycloInt{p_.conj()} + q_.conj() * xi7;
    }

    std::complex<double> embed() const {
        static const std::complex<double> z{std::cos(M_PI / 5.0), std::sin(M_PI / 5.0)};
        return p_.value() + q_.value() * z;
    }

    std::string str() const { return "(" + p_.str() + ")+(" + q_.str() + ")*xi"; }
    friend std::ostream& operator<<(std::ostream& os, const CycloInt& x) { return os << x.str(); }

  private:
    GoldenInt p_;
    GoldenInt q_;
};

inline CycloInt star(const CycloInt& x) { return x.star(); }
inline std::complex<double> embed(const CycloInt& x) { return x.embed(); }

/// Imaginary part of x divided by sin(36 deg); exact.
inline GoldenInt im_scaled(const CycloInt& x) { return x.q(); }

}  // namespace hcox

template <>
struct std::hash<hcox::GoldenInt> {
    std::size_t operator()(const hcox::GoldenInt& x) const noexcept {
        const auto h1 = std::hash<hcox::Int>{}(x.a());
        const auto h2 = std::hash<hcox::Int>{}(x.b());
        return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
    }
};

template <>
struct std::hash<hcox::CycloInt> {
    std::size_t operator()(const hcox::CycloInt& x) const noexcept {
        const auto h1 = std::hash<hcox::GoldenInt>{}(x.p());
        const auto h2 = std::hash<hcox::GoldenInt>{}(x.q());
        return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
    }
};
