#pragma once

#include <ellsigma/graded_poly.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ellsigma {

/// Exponent vector for up to four expansion variables.
struct VarExp {
    std::array<uint8_t, 4> e{};

    int total() const { return e[0] + e[1] + e[2] + e[3]; }

    friend bool operator==(const VarExp& a, const VarExp& b) { return a.e == b.e; }
    friend bool operator<(const VarExp& a, const VarExp& b) {
        int ta = a.total(), tb = b.total();
        if (ta != tb) return ta < tb;
        return a.e < b.e;
    }
    VarExp operator+(const VarExp& o) const {
        VarExp r;
        for (int i = 0; i < 4; ++i) r.e[i] = static_cast<uint8_t>(e[i] + o.e[i]);
        return r;
    }
};

/// Truncation bound used for exact polynomials (effectively no truncation).
inline constexpr int kExactBound = 1 << 20;

/// Formal power series in one or several expansion variables, with
/// GradedPoly coefficients, exact through a stated total-degree bound.
/// Binary operations track the resulting guaranteed bound pessimistically;
/// degrees above the bound are never stored.
template <class K>
class TruncSeries {
  public:
    using Poly = GradedPoly<K>;

    TruncSeries() : bound_(0) {}
    TruncSeries(std::vector<std::string> vars, int bound)
        : vars_(std::move(vars)), bound_(bound) {
        if (vars_.empty() || vars_.size() > 4)
            throw std::invalid_argument("TruncSeries: need 1..4 variables");
    }

    static TruncSeries zero(std::vector<std::string> vars, int bound) {
        return TruncSeries(std::move(vars), bound);
    }
    static TruncSeries constant(std::vector<std::string> vars, int bound, Poly c) {
        TruncSeries s(std::move(vars), bound);
        s.set(VarExp{}, std::move(c));
        return s;
    }
    /// The bare variable as an exact polynomial (bound kExactBound).
    static TruncSeries variable(const std::string& v, std::vector<std::string> vars) {
        TruncSeries s(std::move(vars), kExactBound);
        VarExp x;
        x.e[s.var_index(v)] = 1;
        s.set(x, Poly(K(Rational(1))));
        return s;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    int bound() const { return bound_; }
    const std::map<VarExp, Poly>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    int var_index(const std::string& v) const {
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == v) return static_cast<int>(i);
        throw std::invalid_argument("TruncSeries: unknown variable " + v);
    }

    /// Minimum total degree of a stored term (bound+1 when identically zero
    /// through the bound).
    int valuation() const {
        return coeffs_.empty() ? bound_ + 1 : coeffs_.begin()->first.total();
    }

    Poly coeff(const VarExp& x) const {
        auto it = coeffs_.find(x);
        return it == coeffs_.end() ? Poly{} : it->second;
    }
    /// Univariate convenience accessor.
    Poly coeff(int k) const {
        VarExp x;
        x.e[0] = static_cast<uint8_t>(k);
        return coeff(x);
    }

    void set(VarExp x, Poly c) {
        if (x.total() > bound_) return;
        if (c.is_zero())
            coeffs_.erase(x);
        else
            coeffs_[x] = std::move(c);
    }
    void add_to(const VarExp& x, const Poly& c) {
        if (x.total() > bound_ || c.is_zero()) return;
        auto it = coeffs_.find(x);
        if (it == coeffs_.end()) {
            coeffs_.emplace(x, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    TruncSeries truncated(int T) const {
        TruncSeries r(vars_, std::min(bound_, T));
        for (const auto& [x, c] : coeffs_)
            if (x.total() <= T) r.coeffs_.emplace(x, c);
        return r;
    }

    TruncSeries operator-() const {
        TruncSeries r(vars_, bound_);
        for (const auto& [x, c] : coeffs_) r.coeffs_.emplace(x, -c);
        return r;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        a.check_compatible(b);
        TruncSeries r = a.truncated(std::min(a.bound_, b.bound_));
        for (const auto& [x, c] : b.coeffs_) r.add_to(x, c);
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        a.check_compatible(b);
        TruncSeries r = a.truncated(std::min(a.bound_, b.bound_));
        for (const auto& [x, c] : b.coeffs_) r.add_to(x, -c);
        return r;
    }

    /// Exact product through min(bound(a)+val(b), bound(b)+val(a)): the
    /// degree-d coefficient of a*b only consumes a through d-val(b) and b
    /// through d-val(a).
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        a.check_compatible(b);
        int rb = std::min({a.bound_ + b.valuation(), b.bound_ + a.valuation(),
                           kExactBound});
        TruncSeries r(a.vars_, rb);
        for (const auto& [xa, ca] : a.coeffs_) {
            int da = xa.total();
            for (const auto& [xb, cb] : b.coeffs_) {
                if (da + xb.total() > rb) continue;
                r.add_to(xa + xb, ca * cb);
            }
        }
        return r;
    }

    TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }
    TruncSeries& operator-=(const TruncSeries& o) { return *this = *this - o; }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

    TruncSeries scaled(const Poly& c) const {
        TruncSeries r(vars_, bound_);
        if (c.is_zero()) return r;
        for (const auto& [x, cc] : coeffs_) r.set(x, cc * c);
        return r;
    }
    TruncSeries scaled(const K& c) const { return scaled(Poly(c)); }

    /// Multiplies by var^k (k may be negative; requires valuation in that
    /// variable >= -k).
    TruncSeries shifted(const std::string& var, int k) const {
        int vi = var_index(var);
        TruncSeries r(vars_, std::min(bound_ + k, kExactBound));
        for (const auto& [x, c] : coeffs_) {
            if (static_cast<int>(x.e[vi]) + k < 0)
                throw std::domain_error("shifted: negative exponent");
            VarExp y = x;
            y.e[vi] = static_cast<uint8_t>(x.e[vi] + k);
            r.set(y, c);
        }
        return r;
    }

    /// Series with every variable negated (u -> -u for all vars).
    TruncSeries at_negated() const {
        TruncSeries r(vars_, bound_);
        for (const auto& [x, c] : coeffs_)
            r.coeffs_.emplace(x, (x.total() % 2) ? -c : c);
        return r;
    }

    /// Reinterprets this series into a larger variable list; existing
    /// variables keep their names.
    TruncSeries embedded(const std::vector<std::string>& vars) const {
        TruncSeries r(vars, bound_);
        std::array<int, 4> perm{};
        for (int i = 0; i < nvars(); ++i) perm[i] = r.var_index(vars_[i]);
        for (const auto& [x, c] : coeffs_) {
            VarExp y;
            for (int i = 0; i < nvars(); ++i) y.e[perm[i]] = x.e[i];
            r.coeffs_.emplace(y, c);
        }
        return r;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.vars_ == b.vars_ && a.coeffs_ == b.coeffs_;
    }

    void check_compatible(const TruncSeries& o) const {
        if (vars_ != o.vars_)
            throw std::invalid_argument("TruncSeries: incompatible variable lists");
    }

    /// Homogeneous part of total degree d as a list of (exponent, coeff).
    std::vector<std::pair<VarExp, Poly>> homogeneous_part(int d) const {
        std::vector<std::pair<VarExp, Poly>> out;
        for (const auto& [x, c] : coeffs_) {
            int t = x.total();
            if (t == d) out.emplace_back(x, c);
            if (t > d) break;
        }
        return out;
    }

  private:
    std::vector<std::string> vars_;
    int bound_;
    std::map<VarExp, Poly> coeffs_;
};

using RatSeries = TruncSeries<Rational>;
using CycSeries = TruncSeries<CycNum>;

inline CycSeries lift(const RatSeries& s) {
    CycSeries r(s.vars(), s.bound());
    for (const auto& [x, c] : s.coeffs()) r.set(x, lift(c));
    return r;
}

template <class K>
bool is_zeta_free(const TruncSeries<K>& s) {
    if constexpr (std::is_same_v<K, CycNum>) {
        for (const auto& [x, c] : s.coeffs())
            if (!is_zeta_free(c)) return false;
    }
    return true;
}

inline RatSeries as_rational(const CycSeries& s) {
    RatSeries r(s.vars(), s.bound());
    for (const auto& [x, c] : s.coeffs()) r.set(x, as_rational(c));
    return r;
}

// -- formal calculus ---------------------------------------------------------

/// Substitutes `inner` (zero constant term) into the univariate series
/// `outer`; exact through min(bound(inner), (bound(outer)+1)*val(inner)-1).
template <class K>
TruncSeries<K> compose(const TruncSeries<K>& outer, const TruncSeries<K>& inner) {
    if (outer.nvars() != 1)
        throw std::invalid_argument("compose: outer must be univariate");
    if (!inner.coeff(VarExp{}).is_zero())
        throw std::invalid_argument("compose: inner must have zero constant term");
    int m = std::max(1, inner.valuation());
    long rb = std::min<long>(inner.bound(),
                             static_cast<long>(outer.bound() + 1) * m - 1);
    rb = std::min<long>(rb, kExactBound);
    int N = static_cast<int>(std::min<long>(outer.bound(), rb));
    if (!outer.coeffs().empty())  // stored support caps the Horner depth
        N = std::min(N, outer.coeffs().rbegin()->first.total());
    TruncSeries<K> acc = TruncSeries<K>::zero(inner.vars(), static_cast<int>(rb));
    for (int k = N; k >= 0; --k) {
        if (k < N) acc = (acc * inner).truncated(static_cast<int>(rb));
        auto c = outer.coeff(k);
        if (!c.is_zero()) acc.add_to(VarExp{}, c);
    }
    return acc;
}

/// Multiplicative inverse of a unit series (constant term must be a nonzero
/// scalar); exact through bound(s).
template <class K>
TruncSeries<K> inverse(const TruncSeries<K>& s) {
    auto c0 = s.coeff(VarExp{});
    if (!c0.is_constant() || c0.is_zero())
        throw std::domain_error("inverse: constant term must be a nonzero scalar");
    K inv0 = c0.constant_term().inverse();
    int T = s.bound();
    if (T >= kExactBound)
        throw std::invalid_argument("inverse: series must carry a finite bound");
    TruncSeries<K> r = TruncSeries<K>::zero(s.vars(), T);
    r.set(VarExp{}, GradedPoly<K>(inv0));
    // r_D = -inv0 * sum_{1<=d<=D} s_d * r_{D-d}, degree by degree
    for (int D = 1; D <= T; ++D) {
        std::map<VarExp, GradedPoly<K>> acc;
        for (const auto& [xs, cs] : s.coeffs()) {
            int d = xs.total();
            if (d < 1 || d > D) continue;
            for (const auto& [xr, cr] : r.homogeneous_part(D - d))
                acc[xs + xr] += cs * cr;
        }
        for (auto& [x, c] : acc) {
            c = c.scaled(-inv0);
            r.add_to(x, c);
        }
    }
    return r;
}

/// d/dvar, exact through bound(s)-1.
template <class K>
TruncSeries<K> differentiate(const TruncSeries<K>& s, const std::string& var) {
    int vi = s.var_index(var);
    TruncSeries<K> r = TruncSeries<K>::zero(
        s.vars(), s.bound() >= kExactBound ? kExactBound : s.bound() - 1);
    for (const auto& [x, c] : s.coeffs()) {
        if (x.e[vi] == 0) continue;
        VarExp y = x;
        y.e[vi] = static_cast<uint8_t>(x.e[vi] - 1);
        r.add_to(y, c.scaled(K(Rational(x.e[vi]))));
    }
    return r;
}

/// Integral from 0 in var, exact through bound(s)+1.
template <class K>
TruncSeries<K> integrate(const TruncSeries<K>& s, const std::string& var) {
    int vi = s.var_index(var);
    TruncSeries<K> r = TruncSeries<K>::zero(
        s.vars(), s.bound() >= kExactBound ? kExactBound : s.bound() + 1);
    for (const auto& [x, c] : s.coeffs()) {
        VarExp y = x;
        y.e[vi] = static_cast<uint8_t>(x.e[vi] + 1);
        r.add_to(y, c.scaled(K(Rational(1, y.e[vi]))));
    }
    return r;
}

/// exp of a univariate series with zero constant term, via E' = s'E.
template <class K>
TruncSeries<K> exp_series(const TruncSeries<K>& s) {
    if (s.nvars() != 1) throw std::invalid_argument("exp_series: univariate only");
    if (!s.coeff(0).is_zero())
        throw std::invalid_argument("exp_series: needs zero constant term");
    int T = s.bound();
    TruncSeries<K> r = TruncSeries<K>::zero(s.vars(), T);
    std::vector<GradedPoly<K>> e(T + 1);
    e[0] = GradedPoly<K>(K(Rational(1)));
    for (int d = 1; d <= T; ++d) {
        GradedPoly<K> acc;
        for (int j = 1; j <= d; ++j) {
            auto sj = s.coeff(j);
            if (sj.is_zero()) continue;
            acc += sj.scaled(K(Rational(j))) * e[d - j];
        }
        e[d] = acc.scaled(K(Rational(1, d)));
    }
    for (int d = 0; d <= T; ++d) {
        VarExp x;
        x.e[0] = static_cast<uint8_t>(d);
        r.set(x, std::move(e[d]));
    }
    return r;
}

/// log of a univariate unit series with constant term 1.
template <class K>
TruncSeries<K> log_unit(const TruncSeries<K>& s) {
    if (s.nvars() != 1) throw std::invalid_argument("log_unit: univariate only");
    auto c0 = s.coeff(0);
    if (c0.is_constant() == false || !(c0.constant_term() == K(Rational(1))))
        throw std::invalid_argument("log_unit: constant term must be 1");
    auto integrand = differentiate(s, s.vars()[0]) * inverse(s);
    return integrate(integrand, s.vars()[0]);
}

/// Formal reversion of a univariate series s = c1*t + ... (c1 invertible):
/// returns r in the variable `outvar` with s(r(x)) = x, exact through
/// bound(s).  Lagrange inversion: r_d = (1/d) [t^{d-1}] (t/s)^d.
template <class K>
TruncSeries<K> revert(const TruncSeries<K>& s, const std::string& outvar) {
    if (s.nvars() != 1) throw std::invalid_argument("revert: univariate only");
    if (!s.coeff(0).is_zero())
        throw std::invalid_argument("revert: needs zero constant term");
    auto c1 = s.coeff(1);
    if (!c1.is_constant() || c1.is_zero())
        throw std::domain_error("revert: linear coefficient must be an invertible scalar");
    int T = s.bound();
    // q = t/s as a unit series
    auto q = inverse(s.shifted(s.vars()[0], -1).truncated(T - 1));
    TruncSeries<K> r = TruncSeries<K>::zero({outvar}, T);
    TruncSeries<K> qpow = q;
    for (int d = 1; d <= T; ++d) {
        if (d > 1) qpow = (qpow * q).truncated(T - 1);
        VarExp x;
        x.e[0] = static_cast<uint8_t>(d);
        r.set(x, qpow.coeff(d - 1).scaled(K(Rational(1, d))));
    }
    return r;
}

// -- Laurent series -----------------------------------------------------------

/// var^(-pole) * unit, univariate; pole minimal (unit has nonzero constant
/// term) unless the value is zero.
template <class K>
class LaurentSeries {
  public:
    LaurentSeries() : pole_(0) {}
    /// Normalizing constructor: extracts the minimal pole.
    LaurentSeries(int pole, TruncSeries<K> unit) : pole_(pole), unit_(std::move(unit)) {
        if (unit_.nvars() != 1)
            throw std::invalid_argument("LaurentSeries: univariate only");
        normalize();
    }

    static LaurentSeries from_series(const TruncSeries<K>& s) { return LaurentSeries(0, s); }

    bool is_zero() const { return unit_.is_zero(); }
    int pole() const { return pole_; }
    const TruncSeries<K>& unit() const { return unit_; }
    const std::string& var() const { return unit_.vars()[0]; }

    /// Coefficient of var^k (k may be negative down to -pole).
    GradedPoly<K> coeff(int k) const {
        if (k + pole_ < 0) return {};
        return unit_.coeff(k + pole_);
    }
    /// Largest k with the coefficient of var^k guaranteed exact.
    int exact_through() const { return unit_.bound() - pole_; }

    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        return LaurentSeries(a.pole_ + b.pole_, a.unit_ * b.unit_);
    }
    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
        int p = std::max(a.pole_, b.pole_);
        auto au = a.unit_.shifted(a.var(), p - a.pole_);
        auto bu = b.unit_.shifted(b.var(), p - b.pole_);
        return LaurentSeries(p, au + bu);
    }
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
        return a + (-b);
    }
    LaurentSeries operator-() const { return LaurentSeries(pole_, -unit_); }

    LaurentSeries scaled(const GradedPoly<K>& c) const {
        return LaurentSeries(pole_, unit_.scaled(c));
    }

    LaurentSeries pow(unsigned n) const {
        LaurentSeries r(0, TruncSeries<K>::constant(unit_.vars(), unit_.bound(), GradedPoly<K>(K(Rational(1)))));
        for (unsigned i = 0; i < n; ++i) r = r * *this;
        return r;
    }

    LaurentSeries differentiated() const {
        // d/du [u^-p * f(u)] = u^-(p+1) * (u f'(u) - p f(u))
        const auto& v = var();
        auto t1 = differentiate(unit_, v).shifted(v, 1);
        auto t2 = unit_.scaled(K(Rational(pole_)));
        return LaurentSeries(pole_ + 1, t1 - t2);
    }

    /// Value at the negated argument.
    LaurentSeries at_negated() const {
        auto u = unit_.at_negated();
        if (pole_ % 2) u = -u;
        return LaurentSeries(pole_, u);
    }

    /// This Laurent series as a power series; requires the pole cleared.
    TruncSeries<K> to_series() const {
        if (pole_ > 0 && !unit_.is_zero())
            throw std::domain_error("LaurentSeries: pole not cleared");
        return unit_.shifted(var(), -pole_);
    }

    /// Product with a plain power series.
    LaurentSeries times(const TruncSeries<K>& s) const {
        return LaurentSeries(pole_, unit_ * s);
    }

    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
        return a.pole_ == b.pole_ && a.unit_ == b.unit_;
    }

  private:
    void normalize() {
        if (unit_.is_zero()) {
            pole_ = 0;
            return;
        }
        // minimal pole: negative pole encodes positive valuation
        int v = unit_.valuation();
        if (v > 0) {
            unit_ = unit_.shifted(var(), -v);
            pole_ -= v;
        }
    }

    int pole_;
    TruncSeries<K> unit_;
};

using RatLaurent = LaurentSeries<Rational>;
using CycLaurent = LaurentSeries<CycNum>;

}  // namespace ellsigma
