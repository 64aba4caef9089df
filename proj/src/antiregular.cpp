#include "rf/antiregular.hpp"

#include "rf/eigen.hpp"
#include "rf/error.hpp"
#include "rf/linalg.hpp"

#include <functional>
#include <sstream>

namespace rf {

namespace {

std::string join_names(const GradedAmbient& a, const std::vector<int>& idx)
{
    std::string out;
    for (int i : idx) out += (out.empty() ? "" : ", ") + a.names.at(static_cast<std::size_t>(i));
    return out;
}

// Integer weight rows of a subset, inverted when the subset is a lattice basis.
std::optional<MatQ> unimodular_inverse(const GradedAmbient& a, const std::vector<int>& subset)
{
    const int k = a.rank();
    MatQ w(k, k);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c)
            w(r, c) = Rational(a.weights[static_cast<std::size_t>(subset[static_cast<std::size_t>(r)])][static_cast<std::size_t>(c)]);
    const Rational d = determinant<Rational>(w);
    if (d != 1 && d != -1) return std::nullopt;
    MatQ aug(k, 2 * k);
    aug.leftCols(k) = w;
    aug.rightCols(k) = MatQ::Identity(k, k);
    return row_reduce<Rational>(aug).rref.rightCols(k);
}

std::optional<std::vector<int>> find_basis(const GradedAmbient& a, std::optional<MatQ>& inverse)
{
    const int n = a.nvars(), k = a.rank();
    std::vector<int> pick;
    std::function<bool(int)> rec = [&](int start) -> bool {
        if (static_cast<int>(pick.size()) == k) {
            inverse = unimodular_inverse(a, pick);
            return inverse.has_value();
        }
        for (int i = start; i < n; ++i) {
            pick.push_back(i);
            if (rec(i + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    return pick;
}

Cyclotomic torus_character(const std::vector<Cyclotomic>& t, const std::vector<int>& w)
{
    Cyclotomic out(1);
    for (std::size_t j = 0; j < w.size(); ++j) out *= t[j].pow(w[j]);
    return out;
}

bool check_grading(const GradedAmbient& a, const MonomialAntiregularMap& m, std::string& detail)
{
    const int n = a.nvars(), k = a.rank();
    MatQ w(n, k);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) w(i, j) = Rational(a.weights[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    for (int r = 0; r < k; ++r) {
        VecQ target(n);
        for (int i = 0; i < n; ++i)
            target(i) = Rational(a.weights[static_cast<std::size_t>(m.perm[static_cast<std::size_t>(i)])][static_cast<std::size_t>(r)]);
        auto row = solve<Rational>(w, target);
        if (!row) {
            detail = "weights are not related by a linear map of the grading lattice";
            return false;
        }
        for (int j = 0; j < k; ++j) {
            if (!is_integer((*row)(j))) {
                detail = "the induced map of the grading lattice is not integral";
                return false;
            }
        }
    }
    return true;
}

}  // namespace

int GradedAmbient::index(const std::string& name) const
{
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    throw DomainError("unknown ambient coordinate " + name);
}

Poly GradedAmbient::var(const std::string& name) const { return Poly::var(nvars(), index(name)); }

MonomialAntiregularMap MonomialAntiregularMap::conjugation(int nvars)
{
    MonomialAntiregularMap m;
    for (int i = 0; i < nvars; ++i) {
        m.perm.push_back(i);
        m.coeffs.emplace_back(1);
    }
    return m;
}

MonomialAntiregularMap& MonomialAntiregularMap::send(int i, int j, const Cyclotomic& c)
{
    perm.at(static_cast<std::size_t>(i)) = j;
    coeffs.at(static_cast<std::size_t>(i)) = c;
    return *this;
}

Poly pullback(const Poly& f, const MonomialAntiregularMap& map)
{
    const int n = f.nvars();
    std::vector<Poly> images;
    for (int i = 0; i < n; ++i)
        images.push_back(Poly::var(n, map.perm[static_cast<std::size_t>(i)], map.coeffs[static_cast<std::size_t>(i)].conjugate()));
    return f.map_coeffs([](const Cyclotomic& c) { return c.conjugate(); }).substitute(images);
}

InvolutionVerdict verify_antiregular(const GradedAmbient& ambient, const MonomialAntiregularMap& map,
                                     const std::vector<Poly>& equations)
{
    const int n = ambient.nvars();
    if (static_cast<int>(map.perm.size()) != n || static_cast<int>(map.coeffs.size()) != n)
        throw DomainError("antiregular map arity does not match the ambient");
    for (const auto& w : ambient.weights)
        if (static_cast<int>(w.size()) != ambient.rank()) throw DomainError("ragged weight vectors");
    for (int i = 0; i < n; ++i) {
        const int j = map.perm[static_cast<std::size_t>(i)];
        if (j < 0 || j >= n) throw DomainError("antiregular map permutation out of range");
        if (map.coeffs[static_cast<std::size_t>(i)].is_zero()) throw DomainError("antiregular map has a zero coefficient");
    }

    InvolutionVerdict v;
    std::ostringstream detail;
    std::string why;
    v.grading_ok = check_grading(ambient, map, why);
    if (!v.grading_ok) detail << why << "; ";

    std::vector<int> moved;
    for (int i = 0; i < n; ++i)
        if (map.perm[static_cast<std::size_t>(map.perm[static_cast<std::size_t>(i)])] != i) moved.push_back(i);
    if (!moved.empty()) {
        detail << "coordinate permutation is not an involution on " << join_names(ambient, moved) << "; ";
    } else {
        // mu(mu(v))_i = c_i * conj(c_{perm(i)}) * v_i must be a torus scaling.
        std::vector<Cyclotomic> d;
        for (int i = 0; i < n; ++i)
            d.push_back(map.coeffs[static_cast<std::size_t>(i)] *
                        map.coeffs[static_cast<std::size_t>(map.perm[static_cast<std::size_t>(i)])].conjugate());
        std::optional<MatQ> inv;
        auto basis = find_basis(ambient, inv);
        if (!basis) {
            detail << "weights admit no unimodular basis; ";
        } else {
            const int k = ambient.rank();
            std::vector<Cyclotomic> t(static_cast<std::size_t>(k), Cyclotomic(1));
            for (int j = 0; j < k; ++j)
                for (int s = 0; s < k; ++s) {
                    const Rational e = (*inv)(j, s);
                    t[static_cast<std::size_t>(j)] *=
                        d[static_cast<std::size_t>((*basis)[static_cast<std::size_t>(s)])].pow(numer(e).convert_to<long>());
                }
            std::vector<int> bad;
            for (int i = 0; i < n; ++i)
                if (torus_character(t, ambient.weights[static_cast<std::size_t>(i)]) != d[static_cast<std::size_t>(i)]) bad.push_back(i);
            v.involutive = bad.empty();
            if (!bad.empty()) detail << "square of the map is not a torus scaling on " << join_names(ambient, bad) << "; ";
        }
    }

    v.preserves_equations = true;
    for (std::size_t e = 0; e < equations.size(); ++e) {
        auto ratio = Poly::scalar_ratio(pullback(equations[e], map), equations[e]);
        if (!ratio) {
            v.preserves_equations = false;
            detail << "equation " << e << " is not preserved; ";
            v.equation_scalars.emplace_back(0);
        } else {
            v.equation_scalars.push_back(*ratio);
        }
    }
    v.detail = detail.str();
    if (v.detail.size() >= 2) v.detail.resize(v.detail.size() - 2);
    if (v.valid()) v.detail = "valid";
    return v;
}

}  // namespace rf
