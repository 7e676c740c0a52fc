#include "encap/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace encap {

Rational::Rational(const Integer& num, const Integer& den) : q_(num, den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    q_ /= o.q_;
    return *this;
}

namespace {

bool valid_integer(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

Integer to_integer(std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view token) {
    const auto slash = token.find('/');
    if (slash == std::string_view::npos) {
        if (!valid_integer(token))
            throw std::invalid_argument("bad rational token '" + std::string(token) + "'");
        return Rational(to_integer(token));
    }
    const auto n = token.substr(0, slash);
    const auto d = token.substr(slash + 1);
    if (!valid_integer(n) || !valid_integer(d) || d[0] == '-' || d[0] == '+')
        throw std::invalid_argument("bad rational token '" + std::string(token) + "'");
    const Integer den = to_integer(d);
    if (den == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(token) + "'");
    return Rational(to_integer(n), den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

}  // namespace encap
