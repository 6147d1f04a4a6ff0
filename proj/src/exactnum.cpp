#include <ellsigma/cyclotomic.hpp>
#include <ellsigma/rational.hpp>

#include <cctype>
#include <ostream>

namespace ellsigma {

Rational Rational::parse(std::string_view s) {
    // trim
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    std::string str(s);
    for (size_t i = 0; i < str.size(); ++i) {
        char c = str[i];
        bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
                  ((c == '-' || c == '+') && (i == 0 || str[i - 1] == '/'));
        if (!ok) throw std::invalid_argument("Rational::parse: bad literal '" + str + "'");
    }
    mpq_class q;
    if (q.set_str(str, 10) != 0)
        throw std::invalid_argument("Rational::parse: bad literal '" + str + "'");
    if (q.get_den() == 0) throw std::invalid_argument("Rational::parse: zero denominator");
    q.canonicalize();
    return Rational(q);
}

bool Rational::denominator_power_of(unsigned long p) const {
    mpz_class d = denominator();
    while (d != 1) {
        if (!mpz_divisible_ui_p(d.get_mpz_t(), p)) return false;
        mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), p);
    }
    return true;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

CycNum CycNum::zeta_pow(long k) {
    k %= 3;
    if (k < 0) k += 3;
    switch (k) {
        case 0: return CycNum(Rational(1));
        case 1: return zeta();
        default: return CycNum(Rational(-1), Rational(-1));  // zeta^2 = -1 - zeta
    }
}

std::string CycNum::str() const {
    if (ze_.is_zero()) return re_.str();
    std::string zpart = ze_.str() + "*z";
    if (ze_ == Rational(1)) zpart = "z";
    if (ze_ == Rational(-1)) zpart = "-z";
    if (re_.is_zero()) return zpart;
    if (!zpart.empty() && zpart[0] == '-') return re_.str() + " - " + zpart.substr(1);
    return re_.str() + " + " + zpart;
}

CycNum CycNum::parse(std::string_view s) {
    // forms: "p/q", "p/q + r/s*z", "p/q - r/s*z", "r/s*z", "z", "-z"
    std::string str(s);
    // split at the last top-level " + " or " - "
    size_t pos = std::string::npos;
    int sign = 1;
    for (size_t i = 1; i + 1 < str.size(); ++i) {
        if (str[i - 1] == ' ' && (str[i] == '+' || str[i] == '-') && str[i + 1] == ' ') {
            pos = i;
            sign = str[i] == '-' ? -1 : 1;
        }
    }
    auto parse_zterm = [](std::string_view t) -> Rational {
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
        if (t == "z") return Rational(1);
        if (t == "-z") return Rational(-1);
        auto star = t.find("*z");
        if (star == std::string_view::npos || star + 2 != t.size())
            throw std::invalid_argument("CycNum::parse: bad zeta term");
        return Rational::parse(t.substr(0, star));
    };
    if (pos == std::string::npos) {
        if (str.find('z') != std::string::npos) return CycNum(Rational(0), parse_zterm(str));
        return CycNum(Rational::parse(str));
    }
    Rational re = Rational::parse(str.substr(0, pos - 1));
    Rational ze = parse_zterm(std::string_view(str).substr(pos + 2));
    if (sign < 0) ze = -ze;
    return CycNum(std::move(re), std::move(ze));
}

std::ostream& operator<<(std::ostream& os, const CycNum& c) { return os << c.str(); }

}  // namespace ellsigma
