#pragma once

#include "rf/rational.hpp"

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace rf {

// Element of Q(zeta_N) in the power basis 1, z, ..., z^(phi(N)-1) reduced
// modulo the N-th cyclotomic polynomial, with z = exp(2*pi*i/N).
class Cyclotomic {
public:
    Cyclotomic();
    Cyclotomic(long v);  // NOLINT(google-explicit-constructor)
    Cyclotomic(const Rational& q);  // NOLINT(google-explicit-constructor)
    Cyclotomic(int conductor, std::vector<Rational> coeffs);

    static Cyclotomic zeta(int n, long k = 1);
    static Cyclotomic i() { return zeta(4); }

    int conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const;  // throws unless is_rational()

    // Same number, re-expressed in Q(zeta_m); requires conductor() | m.
    Cyclotomic embed(int m) const;

    Cyclotomic conjugate() const;
    Cyclotomic inverse() const;
    Cyclotomic pow(long e) const;
    bool is_real() const { return *this == conjugate(); }

    // If this is a root of unity, returns (m, k) with value = zeta_m^k, m = lcm(2, N).
    std::optional<std::pair<int, int>> root_of_unity_index() const;

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
    friend Cyclotomic operator-(const Cyclotomic& a);

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // Lexicographic comparison of coefficient vectors inside Q(zeta_m), m a common multiple.
    static int compare_in(const Cyclotomic& a, const Cyclotomic& b, int m);

    // Renders as a sum of rational multiples of zeta(N)^k, parseable by parse_poly.
    std::string to_string() const;

private:
    void compact();
    static Cyclotomic lift(const Cyclotomic& x, int m) { return x.embed(m); }

    int n_ = 1;
    std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x);

// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long long>& cyclotomic_polynomial(int n);
int euler_phi(int n);

// sqrt of a nonzero rational as a cyclotomic number (Gauss sums), sign chosen
// so that the result is a positive real or i times a positive real.
Cyclotomic cyclotomic_sqrt(const Rational& q);

}  // namespace rf
