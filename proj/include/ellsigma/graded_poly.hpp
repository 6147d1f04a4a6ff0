#pragma once

#include <ellsigma/cyclotomic.hpp>
#include <ellsigma/rational.hpp>
#include <ellsigma/symbols.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ellsigma {

namespace detail {
struct MonomialHash {
    size_t operator()(const Monomial& m) const { return m.hash(); }
};
}  // namespace detail

/// Sparse multivariate polynomial over an exact scalar ring K (Rational or
/// CycNum) in the fixed symbol table, stored as terms in canonical order
/// with no zero coefficients.
template <class K>
class GradedPoly {
  public:
    using Term = std::pair<Monomial, K>;

    GradedPoly() = default;
    GradedPoly(K c) {
        if (!c.is_zero()) terms_.emplace_back(Monomial{}, std::move(c));
    }
    GradedPoly(long n) : GradedPoly(K(Rational(n))) {}
    GradedPoly(const Monomial& m, K c = K(Rational(1))) {
        if (!c.is_zero()) terms_.emplace_back(m, std::move(c));
    }

    static GradedPoly sym(Sym s) { return GradedPoly(monomial(s)); }

    static GradedPoly from_terms(std::vector<Term> ts) {
        GradedPoly p;
        p.terms_ = std::move(ts);
        p.normalize();
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
    }
    /// Constant term (zero if absent).
    K constant_term() const {
        for (const auto& [m, c] : terms_)
            if (m.is_one()) return c;
        return K{};
    }

    K coeff(const Monomial& m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const Monomial& mm) { return t.first < mm; });
        if (it != terms_.end() && it->first == m) return it->second;
        return K{};
    }

    /// Common weight of all terms; nullopt when inhomogeneous; throws on the
    /// zero polynomial (weight undefined).
    std::optional<int> weight_of() const {
        if (terms_.empty()) throw std::domain_error("weight_of: zero polynomial");
        int w = terms_[0].first.weight();
        for (const auto& [m, c] : terms_)
            if (m.weight() != w) return std::nullopt;
        return w;
    }

    GradedPoly operator-() const {
        GradedPoly r;
        r.terms_.reserve(terms_.size());
        for (const auto& [m, c] : terms_) r.terms_.emplace_back(m, -c);
        return r;
    }

    GradedPoly& operator+=(const GradedPoly& o) {
        *this = merged(*this, o, false);
        return *this;
    }
    GradedPoly& operator-=(const GradedPoly& o) {
        *this = merged(*this, o, true);
        return *this;
    }

    friend GradedPoly operator+(const GradedPoly& a, const GradedPoly& b) {
        return merged(a, b, false);
    }
    friend GradedPoly operator-(const GradedPoly& a, const GradedPoly& b) {
        return merged(a, b, true);
    }

    friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (b.is_constant()) return a.scaled(b.terms_[0].second);
        if (a.is_constant()) return b.scaled(a.terms_[0].second);
        std::unordered_map<Monomial, K, detail::MonomialHash> acc;
        acc.reserve(a.terms_.size() * 2);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) acc[ma * mb] += ca * cb;
        GradedPoly r;
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!c.is_zero()) r.terms_.emplace_back(m, std::move(c));
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& x, const Term& y) { return x.first < y.first; });
        return r;
    }
    GradedPoly& operator*=(const GradedPoly& o) { return *this = *this * o; }

    GradedPoly scaled(const K& c) const {
        if (c.is_zero()) return {};
        GradedPoly r;
        r.terms_.reserve(terms_.size());
        for (const auto& [m, cc] : terms_) r.terms_.emplace_back(m, cc * c);
        return r;
    }

    GradedPoly pow(unsigned n) const {
        GradedPoly r(K(Rational(1)));
        GradedPoly base = *this;
        while (n) {
            if (n & 1) r = r * base;
            base = (n >>= 1) ? base * base : base;
        }
        return r;
    }

    /// Exact substitution of symbols by polynomials; unbound symbols remain.
    GradedPoly specialize(const std::map<Sym, GradedPoly>& binding) const {
        GradedPoly out;
        for (const auto& [m, c] : terms_) {
            Monomial rest;
            GradedPoly factor(c);
            for (int i = 0; i < kSymCount; ++i) {
                Sym s = static_cast<Sym>(i);
                uint8_t e = m[s];
                if (e == 0) continue;
                auto it = binding.find(s);
                if (it == binding.end())
                    rest.set(s, e);
                else if (e == 1)
                    factor *= it->second;
                else
                    factor *= it->second.pow(e);
            }
            out += factor * GradedPoly(rest);
        }
        return out;
    }

    friend bool operator==(const GradedPoly& a, const GradedPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const GradedPoly& a, const GradedPoly& b) { return !(a == b); }

    /// Paper-style text, e.g. "-1/12*mu1^2 - 1/3*mu2".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::string cs = c.str();
            bool neg = !cs.empty() && cs[0] == '-';
            if (first) {
                if (neg) os << "-";
            } else {
                os << (neg ? " - " : " + ");
            }
            if (neg) cs = cs.substr(1);
            bool needs_paren = cs.find(' ') != std::string::npos;  // CycNum "a + b*z"
            if (m.is_one()) {
                os << (needs_paren ? "(" + cs + ")" : cs);
            } else {
                if (cs != "1") os << (needs_paren ? "(" + cs + ")" : cs) << "*";
                os << m.str();
            }
            first = false;
        }
        return os.str();
    }

  private:
    static GradedPoly merged(const GradedPoly& a, const GradedPoly& b, bool subtract) {
        GradedPoly r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        while (ia != a.terms_.end() || ib != b.terms_.end()) {
            if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
                r.terms_.push_back(*ia++);
            } else if (ia == a.terms_.end() || ib->first < ia->first) {
                r.terms_.emplace_back(ib->first, subtract ? -ib->second : ib->second);
                ++ib;
            } else {
                K c = subtract ? ia->second - ib->second : ia->second + ib->second;
                if (!c.is_zero()) r.terms_.emplace_back(ia->first, std::move(c));
                ++ia, ++ib;
            }
        }
        return r;
    }

    void normalize() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& x, const Term& y) { return x.first < y.first; });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().first == t.first)
                out.back().second += t.second;
            else
                out.push_back(std::move(t));
        }
        std::erase_if(out, [](const Term& t) { return t.second.is_zero(); });
        terms_ = std::move(out);
    }

    std::vector<Term> terms_;
};

using RatPoly = GradedPoly<Rational>;
using CycPoly = GradedPoly<CycNum>;

inline CycPoly lift(const RatPoly& p) {
    std::vector<CycPoly::Term> ts;
    ts.reserve(p.terms().size());
    for (const auto& [m, c] : p.terms()) ts.emplace_back(m, CycNum(c));
    return CycPoly::from_terms(std::move(ts));
}

inline bool is_zeta_free(const CycPoly& p) {
    for (const auto& [m, c] : p.terms())
        if (!c.is_rational()) return false;
    return true;
}

/// Checked restriction to rational coefficients; throws when a zeta
/// component survives.
inline RatPoly as_rational(const CycPoly& p) {
    std::vector<RatPoly::Term> ts;
    ts.reserve(p.terms().size());
    for (const auto& [m, c] : p.terms()) ts.emplace_back(m, c.as_rational());
    return RatPoly::from_terms(std::move(ts));
}

/// All monomials mu1^a mu2^b mu3^c mu4^d mu6^e with a+2b+3c+4d+6e = w,
/// in canonical order.
std::vector<Monomial> enumerate_mu_monomials(int w);

/// Parses paper-style polynomial text over the rational scalars, e.g.
/// "-mu1*mu3*mu4 + (mu6 + mu3^2)*mu2 - mu4^2".  Supports + - * ^, integer
/// and p/q literals, parentheses, and all table symbols.
RatPoly parse_poly(std::string_view text);

}  // namespace ellsigma
