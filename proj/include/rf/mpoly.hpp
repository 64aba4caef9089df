#pragma once

#include "rf/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace rf {

// Sparse multivariate polynomial in a fixed number of variables over a ring S.
template <class S>
class MPoly {
public:
    using Exponent = std::vector<int>;

    explicit MPoly(int nvars = 0) : n_(nvars) {}

    static MPoly constant(int nvars, const S& s)
    {
        MPoly p(nvars);
        p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), s);
        return p;
    }
    static MPoly var(int nvars, int index, const S& coeff = S(1))
    {
        Exponent e(static_cast<std::size_t>(nvars), 0);
        e.at(static_cast<std::size_t>(index)) = 1;
        MPoly p(nvars);
        p.add_term(e, coeff);
        return p;
    }
    static MPoly monomial(const Exponent& e, const S& s)
    {
        MPoly p(static_cast<int>(e.size()));
        p.add_term(e, s);
        return p;
    }

    int nvars() const { return n_; }
    const std::map<Exponent, S>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }

    S coeff(const Exponent& e) const
    {
        auto it = t_.find(e);
        return it == t_.end() ? S(0) : it->second;
    }

    void add_term(const Exponent& e, const S& s)
    {
        if (static_cast<int>(e.size()) != n_) throw DomainError("monomial arity mismatch");
        if (s == S(0)) return;
        auto [it, fresh] = t_.try_emplace(e, s);
        if (!fresh) {
            it->second = it->second + s;
            if (it->second == S(0)) t_.erase(it);
        }
    }

    int total_degree() const
    {
        int d = -1;
        for (const auto& [e, c] : t_) {
            int s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    // Set of total degrees of the terms.
    std::vector<int> term_degrees() const
    {
        std::vector<int> out;
        for (const auto& [e, c] : t_) {
            int s = 0;
            for (int x : e) s += x;
            if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    bool is_constant() const { return t_.empty() || (t_.size() == 1 && total_degree() == 0); }

    template <class F>
    MPoly map_coeffs(F f) const
    {
        MPoly p(n_);
        for (const auto& [e, c] : t_) p.add_term(e, f(c));
        return p;
    }

    MPoly pow(int k) const
    {
        if (k < 0) throw DomainError("negative power of a polynomial");
        MPoly r = constant(n_, S(1)), b = *this;
        while (k > 0) {
            if (k & 1) r = r * b;
            k >>= 1;
            if (k > 0) b = b * b;
        }
        return r;
    }

    // Replaces variable i by images[i]; all images share one arity.
    MPoly substitute(const std::vector<MPoly>& images) const
    {
        if (static_cast<int>(images.size()) != n_) throw DomainError("substitution arity mismatch");
        const int m = images.empty() ? 0 : images.front().nvars();
        std::vector<std::vector<MPoly>> powers(images.size());
        MPoly out(m);
        for (const auto& [e, c] : t_) {
            MPoly term = constant(m, c);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                auto& pw = powers[i];
                if (pw.empty()) pw.push_back(constant(m, S(1)));
                while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * images[i]);
                term = term * pw[static_cast<std::size_t>(e[i])];
            }
            out = out + term;
        }
        return out;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b)
    {
        check_arity(a, b);
        MPoly r = a;
        for (const auto& [e, c] : b.t_) r.add_term(e, c);
        return r;
    }
    friend MPoly operator-(const MPoly& a) { return a.map_coeffs([](const S& c) { return S(0) - c; }); }
    friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }
    friend MPoly operator*(const MPoly& a, const MPoly& b)
    {
        check_arity(a, b);
        MPoly r(a.n_);
        for (const auto& [ea, ca] : a.t_) {
            for (const auto& [eb, cb] : b.t_) {
                Exponent e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    friend MPoly operator*(const S& s, const MPoly& a)
    {
        return a.map_coeffs([&s](const S& c) { return s * c; });
    }
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.n_ == b.n_ && a.t_ == b.t_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    // Returns c with a = c * b when such a scalar exists and b is nonzero.
    static std::optional<S> scalar_ratio(const MPoly& a, const MPoly& b)
    {
        if (b.is_zero() || a.t_.size() != b.t_.size()) return std::nullopt;
        const auto& [e0, c0] = *b.t_.begin();
        auto it = a.t_.find(e0);
        if (it == a.t_.end()) return std::nullopt;
        const S ratio = it->second / c0;
        if (a != ratio * b) return std::nullopt;
        return ratio;
    }

    std::string to_string(const std::vector<std::string>& names,
                          const std::function<std::string(const S&)>& coeff_text) const
    {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            if (!first) os << " + ";
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < it->first.size(); ++i) {
                if (it->first[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += names.at(i);
                if (it->first[i] > 1) mono += "^" + std::to_string(it->first[i]);
            }
            os << "(" << coeff_text(it->second) << ")";
            if (!mono.empty()) os << "*" << mono;
        }
        return os.str();
    }

private:
    static void check_arity(const MPoly& a, const MPoly& b)
    {
        if (a.n_ != b.n_) throw DomainError("polynomial arity mismatch");
    }

    int n_;
    std::map<Exponent, S> t_;
};

}  // namespace rf
