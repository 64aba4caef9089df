#include "rf/rational.hpp"

#include "rf/error.hpp"

#include <numeric>

namespace rf {

std::string to_string(const Rational& q)
{
    if (denom(q) == 1) return numer(q).str();
    return numer(q).str() + "/" + denom(q).str();
}

Rational parse_rational(const std::string& text)
{
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer p(text.substr(0, slash));
        Integer q(text.substr(slash + 1));
        if (q == 0) throw DomainError("zero denominator in rational '" + text + "'");
        return Rational(p) / Rational(q);
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const DomainError*>(&e)) throw;
        throw DomainError("malformed rational '" + text + "'");
    }
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

}  // namespace rf
