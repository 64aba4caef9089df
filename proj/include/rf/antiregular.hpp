#pragma once

#include "rf/cyclotomic.hpp"
#include "rf/mpoly.hpp"

#include <string>
#include <vector>

namespace rf {

using Poly = MPoly<Cyclotomic>;

// Coordinates of a toric ambient space (products of weighted projective
// spaces, projective bundles). Each variable has an integer weight vector;
// two coordinate tuples describe the same point when they differ by the
// torus action v_i -> t^{w_i} v_i.
struct GradedAmbient {
    std::vector<std::string> names;
    std::vector<std::vector<int>> weights;

    int nvars() const { return static_cast<int>(names.size()); }
    int rank() const { return weights.empty() ? 0 : static_cast<int>(weights.front().size()); }
    int index(const std::string& name) const;
    Poly var(const std::string& name) const;
};

// Antiregular map v_i -> coeffs[i] * conj(v_{perm[i]}).
struct MonomialAntiregularMap {
    std::vector<int> perm;
    std::vector<Cyclotomic> coeffs;

    static MonomialAntiregularMap conjugation(int nvars);
    // Sets the image of variable i to c * conj(v_j).
    MonomialAntiregularMap& send(int i, int j, const Cyclotomic& c);
};

struct InvolutionVerdict {
    bool grading_ok = false;
    bool involutive = false;
    bool preserves_equations = false;
    std::vector<Cyclotomic> equation_scalars;  // pullback of equation k equals scalar k times itself
    std::string detail;

    bool valid() const { return grading_ok && involutive && preserves_equations; }
};

// Checks that the map is well defined on the ambient (it sends torus orbits to
// torus orbits), that it squares to the identity up to the torus action, and
// that each equation pulls back, with conjugated coefficients, to a nonzero
// multiple of itself.
InvolutionVerdict verify_antiregular(const GradedAmbient& ambient, const MonomialAntiregularMap& map,
                                     const std::vector<Poly>& equations);

// The polynomial F-bar(conj(c_i) v_{perm(i)}), whose zero set is the image of
// the zero set of F under the map.
Poly pullback(const Poly& f, const MonomialAntiregularMap& map);

}  // namespace rf
