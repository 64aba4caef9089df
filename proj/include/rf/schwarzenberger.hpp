#pragma once

#include "rf/mpoly.hpp"
#include "rf/rational.hpp"

#include <array>
#include <string>

namespace rf {

// poly(u, v) / v^k over Q, kept reduced: when k > 0, v does not divide poly.
class LaurentPoly2 {
public:
    using Poly2 = MPoly<Rational>;

    LaurentPoly2() : p_(2) {}
    LaurentPoly2(Poly2 poly, int k);  // NOLINT(google-explicit-constructor)

    static LaurentPoly2 constant(const Rational& c) { return {Poly2::constant(2, c), 0}; }
    static LaurentPoly2 u() { return {Poly2::var(2, 0), 0}; }
    static LaurentPoly2 v() { return {Poly2::var(2, 1), 0}; }
    // v^e for any integer e.
    static LaurentPoly2 v_power(int e);

    const Poly2& poly() const { return p_; }
    int v_denominator() const { return k_; }
    bool is_zero() const { return p_.is_zero(); }

    // f(-u/v, 1/v)
    LaurentPoly2 gluing_substitution() const;

    friend LaurentPoly2 operator+(const LaurentPoly2& a, const LaurentPoly2& b);
    friend LaurentPoly2 operator-(const LaurentPoly2& a, const LaurentPoly2& b);
    friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
    friend bool operator==(const LaurentPoly2& a, const LaurentPoly2& b) { return a.k_ == b.k_ && a.p_ == b.p_; }
    friend bool operator!=(const LaurentPoly2& a, const LaurentPoly2& b) { return !(a == b); }

    std::string to_string() const;

private:
    void reduce();

    Poly2 p_;
    int k_ = 0;
};

using Mat2Laurent = std::array<std::array<LaurentPoly2, 2>, 2>;

Mat2Laurent operator*(const Mat2Laurent& a, const Mat2Laurent& b);
LaurentPoly2 determinant(const Mat2Laurent& m);
Mat2Laurent scalar_identity(const Rational& c);
std::string to_string(const Mat2Laurent& m);

// P_0 = 0, P_1 = 1, P_k = u P_{k-1} - v P_{k-2}; P_k(s+t, st) = (s^k - t^k)/(s - t).
LaurentPoly2 hom_sym(int k);

// [[P_b, v P_{b-1}], [P_{b+1}, v P_b]]; throws VerificationError unless det = v^b.
Mat2Laurent schwarzenberger_matrix(int b);

struct GluingVerdict {
    int b = 0;
    Mat2Laurent product;  // A(u,v) A(-u/v, 1/v)
    int expected_sign = 1;
    bool determinant_ok = false;
    bool holds = false;
};

// Checks A(u,v) A(-u/v, 1/v) = (-1)^(b-1) I_2.
GluingVerdict verify_gluing(int b);

}  // namespace rf
