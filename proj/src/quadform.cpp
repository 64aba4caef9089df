#include "rf/quadform.hpp"

#include "rf/error.hpp"

#include <sstream>

namespace rf {

namespace {

// Simultaneous row and column operations keep A = P^T G P.
struct Congruence {
    MatQ a;
    MatQ p;

    void swap(Eigen::Index i, Eigen::Index j)
    {
        if (i == j) return;
        a.row(i).swap(a.row(j));
        a.col(i).swap(a.col(j));
        p.col(i).swap(p.col(j));
    }

    // e_i -> e_i + f * e_j
    void add(Eigen::Index i, Eigen::Index j, const Rational& f)
    {
        const Eigen::Index n = a.rows();
        for (Eigen::Index c = 0; c < n; ++c) a(i, c) += f * a(j, c);
        for (Eigen::Index r = 0; r < n; ++r) a(r, i) += f * a(r, j);
        for (Eigen::Index r = 0; r < n; ++r) p(r, i) += f * p(r, j);
    }
};

}  // namespace

QuadForm QuadForm::from_gram(const MatQ& g)
{
    if (g.rows() != g.cols()) throw DomainError("Gram matrix is not square");
    for (Eigen::Index i = 0; i < g.rows(); ++i)
        for (Eigen::Index j = i + 1; j < g.cols(); ++j)
            if (g(i, j) != g(j, i)) throw DomainError("Gram matrix is not symmetric");
    return QuadForm{g};
}

QuadForm QuadForm::from_polynomial(const MPoly<Cyclotomic>& q)
{
    const int n = q.nvars();
    MatQ g = MatQ::Zero(n, n);
    for (const auto& [e, c] : q.terms()) {
        if (!c.is_rational()) throw DomainError("quadratic form has a non-rational coefficient");
        std::vector<int> idx;
        for (int k = 0; k < n; ++k)
            for (int m = 0; m < e[static_cast<std::size_t>(k)]; ++m) idx.push_back(k);
        if (idx.size() != 2) throw DomainError("polynomial is not a quadratic form");
        const Rational v = c.rational_value();
        if (idx[0] == idx[1]) {
            g(idx[0], idx[0]) += v;
        } else {
            g(idx[0], idx[1]) += v / 2;
            g(idx[1], idx[0]) += v / 2;
        }
    }
    return QuadForm{g};
}

QuadForm QuadForm::diagonal(const std::vector<Rational>& entries)
{
    const auto n = static_cast<Eigen::Index>(entries.size());
    MatQ g = MatQ::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) g(i, i) = entries[static_cast<std::size_t>(i)];
    return QuadForm{g};
}

QuadForm QuadForm::congruent(const MatQ& p) const
{
    if (p.rows() != gram.rows()) throw DomainError("congruence matrix has the wrong size");
    return QuadForm{MatQ(p.transpose() * gram * p)};
}

std::string Signature::to_string() const
{
    std::ostringstream os;
    os << "(" << positives << "," << negatives << "," << radical << ")";
    return os.str();
}

Diagonalization diagonalize(const QuadForm& q)
{
    const Eigen::Index n = q.gram.rows();
    Congruence w{q.gram, MatQ::Identity(n, n)};
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = k; i < n && pivot < 0; ++i)
            if (w.a(i, i) != 0) pivot = i;
        if (pivot < 0) {
            for (Eigen::Index i = k; i < n && pivot < 0; ++i)
                for (Eigen::Index j = i + 1; j < n && pivot < 0; ++j)
                    if (w.a(i, j) != 0) {
                        w.add(i, j, Rational(1));
                        pivot = i;
                    }
        }
        if (pivot < 0) break;
        w.swap(k, pivot);
        for (Eigen::Index r = k + 1; r < n; ++r)
            if (w.a(r, k) != 0) w.add(r, k, -w.a(r, k) / w.a(k, k));
    }
    Diagonalization out;
    out.transform = w.p;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j)
            if (i != j && w.a(i, j) != 0) throw VerificationError("congruence diagonalization left an off-diagonal entry");
        out.diagonal.push_back(w.a(i, i));
    }
    return out;
}

Signature signature(const QuadForm& q)
{
    Signature s;
    for (const auto& d : diagonalize(q).diagonal) {
        if (d > 0)
            ++s.positives;
        else if (d < 0)
            ++s.negatives;
        else
            ++s.radical;
    }
    return s;
}

}  // namespace rf
