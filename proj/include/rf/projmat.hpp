#pragma once

#include "rf/cyclotomic.hpp"
#include "rf/eigen.hpp"
#include "rf/hompoly.hpp"

#include <string>

namespace rf {

Mat2 mat2(const Cyclotomic& a, const Cyclotomic& b, const Cyclotomic& c, const Cyclotomic& d);
Cyclotomic det(const Mat2& m);
Mat2 adjugate(const Mat2& m);
Mat2 conjugate(const Mat2& m);
bool equal(const Mat2& a, const Mat2& b);

// Invertible 2x2 matrix modulo scalars, scaled so that the first nonzero
// entry in row-major order equals 1.
class ProjMat2 {
public:
    ProjMat2();
    explicit ProjMat2(const Mat2& m);

    static ProjMat2 identity() { return ProjMat2(); }

    const Mat2& matrix() const { return m_; }
    ProjMat2 inverse() const { return ProjMat2(adjugate(m_)); }
    ProjMat2 conjugate() const { return ProjMat2(rf::conjugate(m_)); }
    bool is_identity() const;

    // Least common conductor of the entries.
    int conductor() const;

    friend ProjMat2 operator*(const ProjMat2& a, const ProjMat2& b) { return ProjMat2((a.m_ * b.m_).eval()); }
    friend bool operator==(const ProjMat2& a, const ProjMat2& b) { return equal(a.m_, b.m_); }
    friend bool operator!=(const ProjMat2& a, const ProjMat2& b) { return !(a == b); }

    // Lexicographic comparison of normalized entries inside Q(zeta_m).
    static int compare_in(const ProjMat2& a, const ProjMat2& b, int m);

    std::string to_string() const;

private:
    Mat2 m_;
};

// 2x2 matrix with determinant exactly 1.
class SL2Mat {
public:
    SL2Mat();
    explicit SL2Mat(const Mat2& m);

    const Mat2& matrix() const { return m_; }
    friend SL2Mat operator*(const SL2Mat& a, const SL2Mat& b) { return SL2Mat((a.m_ * b.m_).eval()); }
    friend bool operator==(const SL2Mat& a, const SL2Mat& b) { return equal(a.m_, b.m_); }

    std::string to_string() const;

private:
    Mat2 m_;
};

inline HomPoly compose(const HomPoly& g, const ProjMat2& m) { return compose(g, m.matrix()); }
inline HomPoly compose(const HomPoly& g, const SL2Mat& m) { return compose(g, m.matrix()); }

std::string to_string(const Mat2& m);

}  // namespace rf
