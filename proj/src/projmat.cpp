#include "rf/projmat.hpp"

#include "rf/error.hpp"

#include <numeric>
#include <sstream>

namespace rf {

Mat2 mat2(const Cyclotomic& a, const Cyclotomic& b, const Cyclotomic& c, const Cyclotomic& d)
{
    Mat2 m;
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

Cyclotomic det(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

Mat2 adjugate(const Mat2& m) { return mat2(m(1, 1), -m(0, 1), -m(1, 0), m(0, 0)); }

Mat2 conjugate(const Mat2& m)
{
    return mat2(m(0, 0).conjugate(), m(0, 1).conjugate(), m(1, 0).conjugate(), m(1, 1).conjugate());
}

bool equal(const Mat2& a, const Mat2& b)
{
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            if (a(r, c) != b(r, c)) return false;
    return true;
}

std::string to_string(const Mat2& m)
{
    std::ostringstream os;
    os << "[[" << m(0, 0) << ", " << m(0, 1) << "], [" << m(1, 0) << ", " << m(1, 1) << "]]";
    return os.str();
}

ProjMat2::ProjMat2() : m_(mat2(1, 0, 0, 1)) {}

ProjMat2::ProjMat2(const Mat2& m) : m_(m)
{
    if (det(m_).is_zero()) throw DomainError("projective matrix must be invertible");
    Cyclotomic lead;
    for (int k = 0; k < 4; ++k) {
        if (!m_(k / 2, k % 2).is_zero()) {
            lead = m_(k / 2, k % 2);
            break;
        }
    }
    if (lead != Cyclotomic(1)) {
        const Cyclotomic inv = lead.inverse();
        for (int k = 0; k < 4; ++k) m_(k / 2, k % 2) *= inv;
    }
}

bool ProjMat2::is_identity() const { return equal(m_, mat2(1, 0, 0, 1)); }

int ProjMat2::conductor() const
{
    int n = 1;
    for (int k = 0; k < 4; ++k) n = std::lcm(n, m_(k / 2, k % 2).conductor());
    return n;
}

int ProjMat2::compare_in(const ProjMat2& a, const ProjMat2& b, int m)
{
    for (int k = 0; k < 4; ++k) {
        const int c = Cyclotomic::compare_in(a.m_(k / 2, k % 2), b.m_(k / 2, k % 2), m);
        if (c != 0) return c;
    }
    return 0;
}

std::string ProjMat2::to_string() const { return rf::to_string(m_); }

SL2Mat::SL2Mat() : m_(mat2(1, 0, 0, 1)) {}

SL2Mat::SL2Mat(const Mat2& m) : m_(m)
{
    if (det(m_) != Cyclotomic(1)) throw DomainError("SL2 matrix must have determinant 1");
}

std::string SL2Mat::to_string() const { return rf::to_string(m_); }

}  // namespace rf
