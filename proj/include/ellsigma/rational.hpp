#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ellsigma {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.  Thin value wrapper around GMP's mpq.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long n) : q_(static_cast<signed long>(n)) {}
    Rational(long n, long d) {
        if (d == 0) throw std::invalid_argument("Rational: zero denominator");
        q_ = mpq_class(n, d);
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "p" or "p/q" (optional sign, arbitrary precision).
    static Rational parse(std::string_view s);

    const mpq_class& raw() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(mpq_class(1 / q_));
    }

    /// Canonical text form "p" or "p/q".
    std::string str() const { return q_.get_str(); }

    /// True when the denominator is a power of the given prime.
    bool denominator_power_of(unsigned long p) const;

    size_t hash() const {
        return std::hash<std::string>()(str());
    }

  private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational rat(long n) { return Rational(n); }
inline Rational rat(long n, long d) { return Rational(n, d); }

/// n! as a Rational (n small).
Rational factorial(unsigned n);

}  // namespace ellsigma
