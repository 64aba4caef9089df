#include "rf/schwarzenberger.hpp"

#include "rf/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace rf {

namespace {

std::string rational_text(const Rational& q) { return q.str(); }

// Terms c u^i v^j with j of any sign, collected into poly / v^k.
LaurentPoly2 from_laurent_terms(const std::map<std::pair<int, int>, Rational>& terms)
{
    int low = 0;
    for (const auto& [e, c] : terms) low = std::min(low, e.second);
    LaurentPoly2::Poly2 p(2);
    for (const auto& [e, c] : terms) p.add_term({e.first, e.second - low}, c);
    return {p, -low};
}

}  // namespace

LaurentPoly2::LaurentPoly2(Poly2 poly, int k) : p_(std::move(poly)), k_(k)
{
    if (p_.nvars() != 2) throw DomainError("Laurent polynomial needs two variables");
    if (k_ < 0) throw DomainError("negative v-denominator exponent");
    reduce();
}

LaurentPoly2 LaurentPoly2::v_power(int e)
{
    if (e >= 0) return {Poly2::var(2, 1).pow(e), 0};
    return {Poly2::constant(2, Rational(1)), -e};
}

void LaurentPoly2::reduce()
{
    if (p_.is_zero()) {
        k_ = 0;
        return;
    }
    int low = k_;
    for (const auto& [e, c] : p_.terms()) low = std::min(low, e[1]);
    if (low == 0) return;
    Poly2 q(2);
    for (const auto& [e, c] : p_.terms()) q.add_term({e[0], e[1] - low}, c);
    p_ = std::move(q);
    k_ -= low;
}

LaurentPoly2 LaurentPoly2::gluing_substitution() const
{
    // u^i v^(j-k) -> (-1)^i u^i v^(-i-j+k)
    std::map<std::pair<int, int>, Rational> terms;
    for (const auto& [e, c] : p_.terms()) {
        const Rational s = (e[0] % 2 == 0) ? c : Rational(-c);
        terms[{e[0], -e[0] - e[1] + k_}] += s;
    }
    return from_laurent_terms(terms);
}

LaurentPoly2 operator+(const LaurentPoly2& a, const LaurentPoly2& b)
{
    const int k = std::max(a.k_, b.k_);
    const auto lift = [k](const LaurentPoly2& x) { return LaurentPoly2::Poly2::var(2, 1).pow(k - x.k_) * x.p_; };
    return {lift(a) + lift(b), k};
}

LaurentPoly2 operator-(const LaurentPoly2& a, const LaurentPoly2& b) { return a + LaurentPoly2(-b.p_, b.k_); }

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) { return {a.p_ * b.p_, a.k_ + b.k_}; }

std::string LaurentPoly2::to_string() const
{
    const std::string num = p_.to_string({"u", "v"}, rational_text);
    if (k_ == 0) return num;
    return "(" + num + ")/v^" + std::to_string(k_);
}

Mat2Laurent operator*(const Mat2Laurent& a, const Mat2Laurent& b)
{
    Mat2Laurent c;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return c;
}

LaurentPoly2 determinant(const Mat2Laurent& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

Mat2Laurent scalar_identity(const Rational& c)
{
    Mat2Laurent m;
    m[0][0] = LaurentPoly2::constant(c);
    m[1][1] = LaurentPoly2::constant(c);
    return m;
}

std::string to_string(const Mat2Laurent& m)
{
    std::ostringstream os;
    os << "[[" << m[0][0].to_string() << ", " << m[0][1].to_string() << "], [" << m[1][0].to_string() << ", "
       << m[1][1].to_string() << "]]";
    return os.str();
}

LaurentPoly2 hom_sym(int k)
{
    if (k < 0) throw DomainError("hom_sym needs k >= 0");
    LaurentPoly2 prev = LaurentPoly2::constant(0), cur = LaurentPoly2::constant(1);
    if (k == 0) return prev;
    for (int j = 2; j <= k; ++j) {
        LaurentPoly2 next = LaurentPoly2::u() * cur - LaurentPoly2::v() * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Mat2Laurent schwarzenberger_matrix(int b)
{
    if (b < 1) throw DomainError("the Schwarzenberger matrix needs b >= 1");
    const LaurentPoly2 v = LaurentPoly2::v();
    Mat2Laurent a;
    a[0][0] = hom_sym(b);
    a[0][1] = v * hom_sym(b - 1);
    a[1][0] = hom_sym(b + 1);
    a[1][1] = v * hom_sym(b);
    if (determinant(a) != LaurentPoly2::v_power(b))
        throw VerificationError("determinant of the Schwarzenberger matrix is not v^" + std::to_string(b));
    return a;
}

GluingVerdict verify_gluing(int b)
{
    GluingVerdict out;
    out.b = b;
    const Mat2Laurent a = schwarzenberger_matrix(b);
    out.determinant_ok = true;
    Mat2Laurent glued;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) glued[i][j] = a[i][j].gluing_substitution();
    out.product = a * glued;
    out.expected_sign = (b % 2 == 1) ? 1 : -1;
    out.holds = out.product == scalar_identity(Rational(out.expected_sign));
    return out;
}

}  // namespace rf
