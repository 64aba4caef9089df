#include "rf/cyclotomic.hpp"

#include "rf/error.hpp"
#include "rf/upoly.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace rf {

namespace {

std::mutex& phi_mutex()
{
    static std::mutex m;
    return m;
}

// Folds exponents modulo n and reduces modulo the n-th cyclotomic polynomial.
std::vector<Rational> reduce(std::vector<Rational> a, int n)
{
    const auto& phi = cyclotomic_polynomial(n);
    const int deg = static_cast<int>(phi.size()) - 1;
    if (static_cast<int>(a.size()) > n) {
        for (std::size_t k = static_cast<std::size_t>(n); k < a.size(); ++k) {
            if (a[k] != 0) a[k % static_cast<std::size_t>(n)] += a[k];
        }
        a.resize(static_cast<std::size_t>(n));
    }
    for (int k = static_cast<int>(a.size()) - 1; k >= deg; --k) {
        const Rational c = a[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        for (int j = 0; j < deg; ++j) {
            if (phi[static_cast<std::size_t>(j)] != 0)
                a[static_cast<std::size_t>(k - deg + j)] -= c * phi[static_cast<std::size_t>(j)];
        }
        a[static_cast<std::size_t>(k)] = 0;
    }
    a.resize(static_cast<std::size_t>(deg), Rational(0));
    return a;
}

int lcm_int(int a, int b) { return std::lcm(a, b); }

int legendre(long a, long p)
{
    long r = 1, base = ((a % p) + p) % p, e = (p - 1) / 2;
    while (e > 0) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r == 1 ? 1 : (r == 0 ? 0 : -1);
}

Cyclotomic sqrt_prime(long p)
{
    if (p == 2) return Cyclotomic::zeta(8, 1) + Cyclotomic::zeta(8, 7);
    Cyclotomic g(0);
    for (long a = 1; a < p; ++a) g += Cyclotomic(static_cast<long>(legendre(a, p))) * Cyclotomic::zeta(static_cast<int>(p), a);
    if (p % 4 == 1) return g;
    return Cyclotomic::zeta(4, 3) * g;
}

Cyclotomic sqrt_integer(const Integer& m)
{
    Integer rest = m;
    Integer outside = 1;
    Cyclotomic inside(1);
    for (long p = 2; rest > 1; ++p) {
        if (Integer(p) * p > rest) {
            if (rest > 2000) throw DomainError("square root requires too large a cyclotomic field");
            inside *= sqrt_prime(static_cast<long>(rest.convert_to<long>()));
            break;
        }
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        for (int k = 0; k < e / 2; ++k) outside *= p;
        if (e % 2 == 1) {
            if (p > 2000) throw DomainError("square root requires too large a cyclotomic field");
            inside *= sqrt_prime(p);
        }
    }
    return Cyclotomic(Rational(outside)) * inside;
}

}  // namespace

int euler_phi(int n)
{
    int result = n, m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

const std::vector<long long>& cyclotomic_polynomial(int n)
{
    if (n < 1) throw DomainError("cyclotomic polynomial index must be positive");
    static std::map<int, std::vector<long long>> cache;
    {
        std::lock_guard<std::mutex> lock(phi_mutex());
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    std::vector<long long> num(static_cast<std::size_t>(n) + 1, 0);
    num[0] = -1;
    num[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const auto& den = cyclotomic_polynomial(d);
        const int dd = static_cast<int>(den.size()) - 1;
        const int dn = static_cast<int>(num.size()) - 1;
        std::vector<long long> q(static_cast<std::size_t>(dn - dd) + 1, 0);
        for (int k = dn; k >= dd; --k) {
            long long c = num[static_cast<std::size_t>(k)];
            q[static_cast<std::size_t>(k - dd)] = c;
            for (int j = 0; j <= dd; ++j) num[static_cast<std::size_t>(k - dd + j)] -= c * den[static_cast<std::size_t>(j)];
        }
        num = std::move(q);
    }
    std::lock_guard<std::mutex> lock(phi_mutex());
    return cache.emplace(n, std::move(num)).first->second;
}

Cyclotomic::Cyclotomic() : n_(1), c_{Rational(0)} {}

Cyclotomic::Cyclotomic(long v) : n_(1), c_{Rational(v)} {}

Cyclotomic::Cyclotomic(const Rational& q) : n_(1), c_{q} {}

Cyclotomic::Cyclotomic(int conductor, std::vector<Rational> coeffs) : n_(conductor)
{
    if (conductor < 1) throw DomainError("conductor must be positive");
    c_ = reduce(std::move(coeffs), conductor);
    compact();
}

Cyclotomic Cyclotomic::zeta(int n, long k)
{
    if (n < 1) throw DomainError("zeta(N) requires N >= 1");
    long e = ((k % n) + n) % n;
    std::vector<Rational> v(static_cast<std::size_t>(e) + 1, Rational(0));
    v[static_cast<std::size_t>(e)] = 1;
    return Cyclotomic(n, std::move(v));
}

void Cyclotomic::compact()
{
    for (std::size_t k = 1; k < c_.size(); ++k)
        if (c_[k] != 0) return;
    Rational c0 = c_.empty() ? Rational(0) : c_[0];
    n_ = 1;
    c_.assign(1, c0);
}

bool Cyclotomic::is_zero() const
{
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const { return n_ == 1; }

Rational Cyclotomic::rational_value() const
{
    if (!is_rational()) throw DomainError("cyclotomic number is not rational");
    return c_[0];
}

Cyclotomic Cyclotomic::embed(int m) const
{
    if (m % n_ != 0) throw DomainError("cannot embed Q(zeta_" + std::to_string(n_) + ") into Q(zeta_" + std::to_string(m) + ")");
    Cyclotomic out;
    out.n_ = m;
    if (m == n_) {
        out.c_ = c_;
        return out;
    }
    const int step = m / n_;
    std::vector<Rational> v(static_cast<std::size_t>(m), Rational(0));
    for (std::size_t k = 0; k < c_.size(); ++k) v[(k * static_cast<std::size_t>(step)) % static_cast<std::size_t>(m)] += c_[k];
    out.c_ = reduce(std::move(v), m);
    return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o)
{
    const int m = lcm_int(n_, o.n_);
    Cyclotomic a = embed(m);
    Cyclotomic b = o.embed(m);
    for (std::size_t k = 0; k < a.c_.size(); ++k) a.c_[k] += b.c_[k];
    a.compact();
    return *this = std::move(a);
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic operator-(const Cyclotomic& a)
{
    Cyclotomic r = a;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o)
{
    if (o.n_ == 1) {
        for (auto& x : c_) x *= o.c_[0];
        compact();
        return *this;
    }
    if (n_ == 1) {
        Rational s = c_[0];
        *this = o;
        for (auto& x : c_) x *= s;
        compact();
        return *this;
    }
    const int m = lcm_int(n_, o.n_);
    Cyclotomic a = embed(m);
    Cyclotomic b = o.embed(m);
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] != 0) v[i + j] += a.c_[i] * b.c_[j];
        }
    }
    a.c_ = reduce(std::move(v), m);
    a.compact();
    return *this = std::move(a);
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

Cyclotomic Cyclotomic::inverse() const
{
    if (is_zero()) throw DomainError("division by zero in cyclotomic field");
    if (n_ == 1) return Cyclotomic(Rational(1) / c_[0]);
    const auto& phi = cyclotomic_polynomial(n_);
    std::vector<Rational> pc;
    for (auto x : phi) pc.emplace_back(x);
    UPoly<Rational> a(c_), f(pc);
    auto [g, s, t] = UPoly<Rational>::extended_gcd(a, f);
    (void)t;
    if (g.degree() != 0) throw VerificationError("cyclotomic inverse: non-unit gcd");
    return Cyclotomic(n_, s.coeffs());
}

Cyclotomic Cyclotomic::conjugate() const
{
    if (n_ == 1) return *this;
    std::vector<Rational> v(static_cast<std::size_t>(n_), Rational(0));
    for (std::size_t k = 0; k < c_.size(); ++k) v[(static_cast<std::size_t>(n_) - k) % static_cast<std::size_t>(n_)] += c_[k];
    return Cyclotomic(n_, std::move(v));
}

Cyclotomic Cyclotomic::pow(long e) const
{
    if (e < 0) return inverse().pow(-e);
    Cyclotomic result(1), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

std::optional<std::pair<int, int>> Cyclotomic::root_of_unity_index() const
{
    if (is_zero()) return std::nullopt;
    const int m = lcm_int(2, n_);
    if (pow(m) != Cyclotomic(1)) return std::nullopt;
    for (int k = 0; k < m; ++k)
        if (zeta(m, k) == *this) return std::make_pair(m, k);
    return std::nullopt;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b)
{
    if (a.n_ == b.n_) return a.c_ == b.c_;
    const int m = lcm_int(a.n_, b.n_);
    return a.embed(m).c_ == b.embed(m).c_;
}

int Cyclotomic::compare_in(const Cyclotomic& a, const Cyclotomic& b, int m)
{
    Cyclotomic x = a.embed(m), y = b.embed(m);
    for (std::size_t k = 0; k < x.c_.size(); ++k) {
        if (x.c_[k] < y.c_[k]) return -1;
        if (y.c_[k] < x.c_[k]) return 1;
    }
    return 0;
}

std::string Cyclotomic::to_string() const
{
    if (n_ == 1) return rf::to_string(c_[0]);
    std::ostringstream os;
    bool first = true;
    const std::string z = (n_ == 4) ? "i" : "zeta(" + std::to_string(n_) + ")";
    for (std::size_t k = 0; k < c_.size(); ++k) {
        Rational c = c_[k];
        if (c == 0) continue;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (k == 0) {
            os << rf::to_string(c);
            continue;
        }
        if (c != 1) os << rf::to_string(c) << "*";
        os << z;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) { return os << x.to_string(); }

Cyclotomic cyclotomic_sqrt(const Rational& q)
{
    if (q == 0) return Cyclotomic(0);
    Rational a = q < 0 ? -q : q;
    // sqrt(p/r) = sqrt(p*r)/r
    Cyclotomic root = sqrt_integer(numer(a) * denom(a)) * Cyclotomic(Rational(1) / Rational(denom(a)));
    if (q < 0) root *= Cyclotomic::i();
    return root;
}

}  // namespace rf
