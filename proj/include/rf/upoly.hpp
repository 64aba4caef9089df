#pragma once

#include "rf/error.hpp"

#include <algorithm>
#include <tuple>
#include <utility>
#include <vector>

namespace rf {

// Dense univariate polynomial over a field S, coefficient of x^k at index k.
// The zero polynomial has an empty coefficient vector.
template <class S>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UPoly constant(const S& s) { return UPoly(std::vector<S>{s}); }
    static UPoly monomial(const S& s, int k)
    {
        std::vector<S> v(static_cast<std::size_t>(k) + 1, S(0));
        v[static_cast<std::size_t>(k)] = s;
        return UPoly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<S>& coeffs() const { return c_; }
    S coeff(int k) const
    {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : S(0);
    }
    const S& lead() const { return c_.back(); }

    UPoly monic() const
    {
        if (is_zero()) return *this;
        S inv = S(1) / lead();
        std::vector<S> v = c_;
        for (auto& x : v) x = x * inv;
        return UPoly(std::move(v));
    }

    UPoly derivative() const
    {
        std::vector<S> v;
        for (std::size_t k = 1; k < c_.size(); ++k) v.push_back(c_[k] * S(static_cast<long>(k)));
        return UPoly(std::move(v));
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b)
    {
        std::vector<S> v(std::max(a.c_.size(), b.c_.size()), S(0));
        for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] = v[k] + a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] = v[k] + b.c_[k];
        return UPoly(std::move(v));
    }
    friend UPoly operator-(const UPoly& a) { return a * S(-1); }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
    friend UPoly operator*(const UPoly& a, const S& s)
    {
        std::vector<S> v = a.c_;
        for (auto& x : v) x = x * s;
        return UPoly(std::move(v));
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b)
    {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<S> v(a.c_.size() + b.c_.size() - 1, S(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
        return UPoly(std::move(v));
    }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    // Euclidean division a = q*b + r with deg r < deg b.
    static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b)
    {
        if (b.is_zero()) throw DomainError("polynomial division by zero");
        std::vector<S> r = a.c_;
        int db = b.degree();
        if (a.degree() < db) return {UPoly(), a};
        std::vector<S> q(static_cast<std::size_t>(a.degree() - db + 1), S(0));
        S inv = S(1) / b.lead();
        for (int k = a.degree(); k >= db; --k) {
            S c = r[static_cast<std::size_t>(k)];
            if (c == S(0)) continue;
            c = c * inv;
            q[static_cast<std::size_t>(k - db)] = c;
            for (int j = 0; j <= db; ++j) {
                auto idx = static_cast<std::size_t>(k - db + j);
                r[idx] = r[idx] - c * b.c_[static_cast<std::size_t>(j)];
            }
        }
        r.resize(static_cast<std::size_t>(db));
        return {UPoly(std::move(q)), UPoly(std::move(r))};
    }

    // Monic greatest common divisor; gcd(0, 0) = 0.
    static UPoly gcd(UPoly a, UPoly b)
    {
        while (!b.is_zero()) {
            UPoly r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    // Returns (g, s, t) with s*a + t*b = g and g monic.
    static std::tuple<UPoly, UPoly, UPoly> extended_gcd(const UPoly& a, const UPoly& b)
    {
        UPoly r0 = a, r1 = b;
        UPoly s0 = constant(S(1)), s1;
        UPoly t0, t1 = constant(S(1));
        while (!r1.is_zero()) {
            auto [q, r] = divmod(r0, r1);
            r0 = std::move(r1);
            r1 = std::move(r);
            UPoly s2 = s0 - q * s1;
            s0 = std::move(s1);
            s1 = std::move(s2);
            UPoly t2 = t0 - q * t1;
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        if (r0.is_zero()) return {r0, s0, t0};
        S inv = S(1) / r0.lead();
        return {r0 * inv, s0 * inv, t0 * inv};
    }

    // Yun's algorithm: returns squarefree factors a_1, a_2, ... with
    // p = lead * prod a_i^i, each a_i monic, trailing units omitted.
    static std::vector<UPoly> squarefree(const UPoly& p)
    {
        std::vector<UPoly> out;
        if (p.degree() <= 0) return out;
        UPoly f = p.monic();
        UPoly fp = f.derivative();
        UPoly a = gcd(f, fp);
        UPoly b = divmod(f, a).first;
        UPoly c = divmod(fp, a).first;
        UPoly d = c - b.derivative();
        while (b.degree() > 0) {
            UPoly ai = gcd(b, d);
            out.push_back(ai);
            b = divmod(b, ai).first;
            c = divmod(d, ai).first;
            d = c - b.derivative();
        }
        while (!out.empty() && out.back().degree() == 0) out.pop_back();
        return out;
    }

    S eval(const S& x) const
    {
        S acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == S(0)) c_.pop_back();
    }

    std::vector<S> c_;
};

}  // namespace rf
