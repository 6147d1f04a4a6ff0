#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ellsigma {

/// Fixed symbol table for the whole engine.  Weights follow the grading
/// wt(mu_j) = -j, wt(x_.) = -2, wt(y_.) = -3, wt(g2) = -4, wt(g3) = -6
/// under which the curve equation and every identity are homogeneous
/// (wt(u) = +1 for expansion variables).
enum class Sym : int {
    mu1 = 0, mu2, mu3, mu4, mu6,
    x_u, y_u, x_v, y_v, x_w, y_w,
    g2, g3,
};

inline constexpr int kSymCount = 13;

constexpr int weight(Sym s) {
    constexpr int w[kSymCount] = {-1, -2, -3, -4, -6, -2, -3, -2, -3, -2, -3, -4, -6};
    return w[static_cast<int>(s)];
}

std::string_view symbol_name(Sym s);
std::optional<Sym> symbol_from_name(std::string_view name);

/// Exponent vector over the full symbol table.
class Monomial {
  public:
    Monomial() : e_{} {}

    uint8_t operator[](Sym s) const { return e_[static_cast<int>(s)]; }
    void set(Sym s, uint8_t n) { e_[static_cast<int>(s)] = n; }

    int total_degree() const {
        int d = 0;
        for (auto x : e_) d += x;
        return d;
    }

    int weight() const {
        int w = 0;
        for (int i = 0; i < kSymCount; ++i) w += e_[i] * ellsigma::weight(static_cast<Sym>(i));
        return w;
    }

    bool is_one() const { return total_degree() == 0; }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kSymCount; ++i) r.e_[i] = static_cast<uint8_t>(e_[i] + o.e_[i]);
        return r;
    }

    /// Whether o divides this monomial.
    bool divisible_by(const Monomial& o) const {
        for (int i = 0; i < kSymCount; ++i)
            if (e_[i] < o.e_[i]) return false;
        return true;
    }

    Monomial operator/(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kSymCount; ++i) r.e_[i] = static_cast<uint8_t>(e_[i] - o.e_[i]);
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

    /// Canonical term order: total degree, then exponent vector
    /// lexicographically in table order (mu1 < mu2 < ... < y_w < g2 < g3).
    friend bool operator<(const Monomial& a, const Monomial& b) {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        return a.e_ < b.e_;
    }

    /// Text form like "mu1^2*mu2" ("1" for the empty monomial).
    std::string str() const;

    size_t hash() const {
        // FNV-1a over the exponent bytes
        size_t h = 1469598103934665603ull;
        for (auto x : e_) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }

  private:
    std::array<uint8_t, kSymCount> e_;
};

inline Monomial monomial(Sym s, uint8_t n = 1) {
    Monomial m;
    m.set(s, n);
    return m;
}

}  // namespace ellsigma
