#pragma once

#include <ellsigma/rational.hpp>

#include <iosfwd>
#include <string>

namespace ellsigma {

/// Element a + b*zeta of Q(zeta), zeta a primitive cube root of unity with
/// minimal polynomial zeta^2 + zeta + 1 = 0.  zeta is never evaluated as a
/// complex number; all arithmetic reduces by zeta^2 = -1 - zeta.
class CycNum {
  public:
    CycNum() = default;
    CycNum(Rational re) : re_(std::move(re)) {}
    CycNum(long n) : re_(Rational(n)) {}
    CycNum(Rational re, Rational ze) : re_(std::move(re)), ze_(std::move(ze)) {}

    static CycNum zeta() { return CycNum(Rational(0), Rational(1)); }
    /// zeta^k for any integer k (period 3).
    static CycNum zeta_pow(long k);

    /// Parses "p/q" or "p/q + r/s*z" (also "r/s*z", "z", "-z").
    static CycNum parse(std::string_view s);

    const Rational& re() const { return re_; }
    const Rational& ze() const { return ze_; }

    bool is_zero() const { return re_.is_zero() && ze_.is_zero(); }
    bool is_rational() const { return ze_.is_zero(); }

    /// Rational part, throwing if a zeta component survives.
    const Rational& as_rational() const {
        if (!ze_.is_zero()) throw std::domain_error("CycNum: nonzero zeta component");
        return re_;
    }

    /// Galois conjugate: zeta -> zeta^2 = -1-zeta, so a+b*zeta -> (a-b) - b*zeta.
    CycNum conj() const { return CycNum(re_ - ze_, -ze_); }

    /// Norm (a+b*zeta)(a+b*zeta^2) = a^2 - ab + b^2.
    Rational norm() const { return re_ * re_ - re_ * ze_ + ze_ * ze_; }

    CycNum operator-() const { return CycNum(-re_, -ze_); }
    CycNum& operator+=(const CycNum& o) { re_ += o.re_; ze_ += o.ze_; return *this; }
    CycNum& operator-=(const CycNum& o) { re_ -= o.re_; ze_ -= o.ze_; return *this; }
    CycNum& operator*=(const CycNum& o) {
        // (a+bz)(c+dz) = ac + (ad+bc)z + bd z^2,  z^2 = -1-z
        Rational bd = ze_ * o.ze_;
        Rational a = re_ * o.re_ - bd;
        Rational b = re_ * o.ze_ + ze_ * o.re_ - bd;
        re_ = std::move(a);
        ze_ = std::move(b);
        return *this;
    }
    CycNum& operator/=(const CycNum& o) { return *this *= o.inverse(); }

    CycNum inverse() const {
        Rational n = norm();
        if (n.is_zero()) throw std::domain_error("CycNum: inverse of zero");
        CycNum c = conj();
        return CycNum(c.re() / n, c.ze() / n);
    }

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
    friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
    friend bool operator==(const CycNum& a, const CycNum& b) {
        return a.re_ == b.re_ && a.ze_ == b.ze_;
    }
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    /// Canonical text: "p/q", "r/s*z", or "p/q + r/s*z" (minus folded into r).
    std::string str() const;

  private:
    Rational re_, ze_;
};

std::ostream& operator<<(std::ostream& os, const CycNum& c);

}  // namespace ellsigma
