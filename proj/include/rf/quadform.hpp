#pragma once

#include "rf/eigen.hpp"
#include "rf/mpoly.hpp"

#include <string>
#include <vector>

namespace rf {

// Symmetric Gram matrix of a quadratic form over Q: q(x) = x^T G x.
struct QuadForm {
    MatQ gram;

    // Throws DomainError unless the matrix is square and symmetric.
    static QuadForm from_gram(const MatQ& g);
    // Gram matrix of a homogeneous quadratic polynomial with rational coefficients.
    static QuadForm from_polynomial(const MPoly<Cyclotomic>& q);
    static QuadForm diagonal(const std::vector<Rational>& entries);

    int dimension() const { return static_cast<int>(gram.rows()); }
    QuadForm congruent(const MatQ& p) const;  // P^T G P
};

struct Signature {
    int positives = 0;
    int negatives = 0;
    int radical = 0;

    friend bool operator==(const Signature&, const Signature&) = default;
    std::string to_string() const;  // "(1,3,1)"
};

// Congruence diagonalization over Q by completing squares, pivoting on a
// nonzero diagonal entry when one exists and otherwise folding a hyperbolic
// pair x_i x_j into a square.
struct Diagonalization {
    MatQ transform;  // P with P^T G P diagonal
    std::vector<Rational> diagonal;
};
Diagonalization diagonalize(const QuadForm& q);
Signature signature(const QuadForm& q);

}  // namespace rf
