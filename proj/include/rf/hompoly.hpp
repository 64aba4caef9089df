#pragma once

#include "rf/cyclotomic.hpp"
#include "rf/eigen.hpp"
#include "rf/upoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rf {

// Point [p:q] of the projective line.
struct P1Point {
    Cyclotomic p;
    Cyclotomic q;
};

// Homogeneous polynomial of degree d in u0, u1; the key of each term is the
// exponent of u0 and the exponent of u1 is d minus the key.
class HomPoly {
public:
    explicit HomPoly(int degree = 0);
    HomPoly(int degree, std::map<int, Cyclotomic> terms);

    static HomPoly monomial(const Cyclotomic& c, int e0, int e1);
    static HomPoly constant(const Cyclotomic& c) { return monomial(c, 0, 0); }
    // a*u0 + b*u1
    static HomPoly linear(const Cyclotomic& a, const Cyclotomic& b);

    int degree() const { return d_; }
    const std::map<int, Cyclotomic>& terms() const { return t_; }
    Cyclotomic coeff(int e0) const;
    bool is_zero() const { return t_.empty(); }
    bool is_real() const;

    HomPoly conjugate() const;
    HomPoly derivative_u0() const;
    HomPoly pow(int e) const;

    // Dehomogenization G(t) = g(t, 1).
    UPoly<Cyclotomic> dehomogenize() const;
    static HomPoly homogenize(const UPoly<Cyclotomic>& p, int degree);

    // Exact quotient g / h when h divides g.
    std::optional<HomPoly> divide(const HomPoly& h) const;

    friend HomPoly operator+(const HomPoly& a, const HomPoly& b);
    friend HomPoly operator-(const HomPoly& a, const HomPoly& b);
    friend HomPoly operator-(const HomPoly& a);
    friend HomPoly operator*(const HomPoly& a, const HomPoly& b);
    friend HomPoly operator*(const Cyclotomic& s, const HomPoly& a);
    friend bool operator==(const HomPoly& a, const HomPoly& b);
    friend bool operator!=(const HomPoly& a, const HomPoly& b) { return !(a == b); }

    std::string to_string() const;

private:
    int d_;
    std::map<int, Cyclotomic> t_;
};

// g(a*u0 + b*u1, c*u0 + d*u1) for m = [[a, b], [c, d]].
HomPoly compose(const HomPoly& g, const Mat2& m);

// scalar * prod l_i^{m_i} with l_i = u0 - (p_i/q_i)*u1, or u1 when q_i = 0;
// each l_i is a nonzero multiple of q_i*u0 - p_i*u1.
HomPoly from_factors(const std::vector<std::pair<P1Point, int>>& factors, const Cyclotomic& scalar);

// Multiplicities of the distinct roots of g on P^1, over the algebraic closure.
struct RootStructure {
    std::vector<UPoly<Cyclotomic>> squarefree;  // index i holds the monic product of roots of multiplicity i+1
    int multiplicity_at_infinity = 0;

    int distinct_roots() const;
    std::vector<int> multiplicities() const;  // sorted ascending, one entry per distinct root
};

RootStructure root_structure(const HomPoly& g);

struct SquareVerdict {
    bool is_square = false;
    std::optional<HomPoly> root;
    Cyclotomic scale = Cyclotomic(1);  // g = scale * root^2; scale is 1 unless the leading square root left Q(zeta)
};

SquareVerdict square_test(const HomPoly& g);

}  // namespace rf
