#ifndef ANTIPODE_FAMILIES_HPP
#define ANTIPODE_FAMILIES_HPP

#include <complex>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "antipode/error.hpp"
#include "antipode/fusion.hpp"
#include "antipode/literal.hpp"
#include "antipode/module_action.hpp"
#include "antipode/spectrum.hpp"

namespace antipode {

using IntPoly = std::vector<long>; // coefficient of x^k at index k

inline IntPoly int_trim(IntPoly p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
    return p;
}

inline IntPoly int_mul(const IntPoly& a, const IntPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    IntPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return int_trim(r);
}

inline IntPoly int_sub(IntPoly a, const IntPoly& b)
{
    a.resize(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    return int_trim(a);
}

/// Remainder modulo a monic polynomial.
inline IntPoly int_mod_monic(IntPoly a, const IntPoly& m)
{
    a = int_trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const long c = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t j = 0; j <= dm; ++j)
            a[shift + j] -= c * m[j];
        a = int_trim(a);
    }
    return a;
}

/// Chebyshev polynomials of the second kind in x = 2cos(theta): P_1 = 1, P_2 = x, P_{j+1} = x P_j - P_{j-1}.
inline IntPoly chebyshev(int j)
{
    if (j < 1)
        throw Error(ErrorKind::BadParameters, "Chebyshev index must be at least 1");
    IntPoly prev{}, cur{1};
    for (int k = 1; k < j; ++k) {
        IntPoly next = int_sub(int_mul(IntPoly{0, 1}, cur), prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

inline CycNum evaluate(const IntPoly& p, const CycNum& x)
{
    CycNum acc = zero_like(x);
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = acc * x + scalar_from_int(*it, x);
    return acc;
}

inline double evaluate(const IntPoly& p, double x)
{
    double acc = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = acc * x + static_cast<double>(*it);
    return acc;
}

inline std::vector<std::string> numbered_labels(const std::string& prefix, int count, int first = 0)
{
    std::vector<std::string> out;
    for (int k = 0; k < count; ++k)
        out.push_back(prefix + std::to_string(first + k));
    return out;
}

/// (shift^w)_{(i+w) mod n, i} = 1
inline IntMatrix cyclic_shift(int n, long w)
{
    IntMatrix p(n, n, 0);
    for (int i = 0; i < n; ++i)
        p(positive_mod(i + w, n), i) = 1;
    return p;
}

template <class D>
struct Family {
    FusionData<D> fusion;
    ModuleActionData module;
};

// ---------------------------------------------------------------------------
// Taft algebras

struct TaftFamily : Family<CycNum> {
    int n = 0, s = 0;
    std::vector<CycNum> m;
    CycNum q;
};

inline TaftFamily taft_family(int n, int s)
{
    if (n < 2 || std::gcd(positive_mod(s, n), static_cast<long>(n)) != 1)
        throw Error(ErrorKind::BadParameters, "Taft family needs n >= 2 and gcd(s, n) = 1");
    TaftFamily t;
    t.n = n;
    t.s = static_cast<int>(positive_mod(s, n));
    auto field = cyclotomic_field(n);
    t.q = CycNum::zeta_power(field, t.s);
    auto& f = t.fusion;
    f.labels = numbered_labels("X", n);
    f.unit = 0;
    for (int a = 0; a < n; ++a) {
        f.dual.push_back(static_cast<int>(positive_mod(-a, n)));
        for (int b = 0; b < n; ++b)
            f.set_coefficient(a, b, static_cast<int>((a + b) % n), 1);
    }
    f.cartan = IntMatrix(n, n, 1);
    std::vector<CycNum> dims;
    for (int a = 0; a < n; ++a)
        dims.push_back(CycNum::zeta_power(field, static_cast<long>(t.s) * a));
    f.dims = dims;
    t.module.labels = numbered_labels("M", n);
    for (int a = 0; a < n; ++a)
        t.module.action.push_back(cyclic_shift(n, a));
    t.m = dims;
    return t;
}

// ---------------------------------------------------------------------------
// small quantum group u_q(sl2)

struct Uqsl2Family : Family<CycNum> {
    int ell = 0, s = 0;
    CycNum q;
    std::vector<TorusPolynomial> m_symbolic; // m_i = Lambda q^i - q^{-i}
    SpectrumFactorization<FactoredValue> expected;

    std::vector<FactoredValue> m_factored() const
    {
        std::vector<FactoredValue> out;
        for (const auto& p : m_symbolic)
            out.push_back(p.to_factored());
        return out;
    }

    std::vector<CycNum> m_at(const CycNum& lambda) const
    {
        std::vector<CycNum> out;
        for (std::size_t i = 0; i < m_symbolic.size(); ++i) {
            out.push_back(m_symbolic[i].evaluate(std::span<const CycNum>(&lambda, 1)));
            if (out.back().is_zero())
                throw Error(ErrorKind::ZeroEntry, "m_" + module.labels[i] + " = 0 (Lambda^ell = 1)");
        }
        return out;
    }

    std::vector<NumericScalar> m_numeric(std::complex<double> lambda, double tol = default_tolerance) const
    {
        std::vector<NumericScalar> out;
        for (std::size_t i = 0; i < m_symbolic.size(); ++i) {
            out.emplace_back(m_symbolic[i].evaluate(std::span<const std::complex<double>>(&lambda, 1)), tol);
            if (out.back().is_zero())
                throw Error(ErrorKind::ZeroEntry, "m_" + module.labels[i] + " vanishes within tolerance (Lambda^ell = 1)");
        }
        return out;
    }
};

/// Q = x P_ell - 2 P_{ell-1} - 2, the relation of Gr(u_q(sl2)) in Z[x].
inline IntPoly uqsl2_relation(int ell)
{
    IntPoly rel = int_mul(IntPoly{0, 1}, chebyshev(ell));
    IntPoly tail = chebyshev(ell - 1);
    for (auto& c : tail)
        c *= 2;
    tail[0] += 2;
    return int_sub(rel, tail);
}

/// Labels X_1..X_ell (stored at 0..ell-1): C_qq = 2, C_{q,ell-q} = 2 for q < ell, C_{ell,ell} = 1.
inline IntMatrix uqsl2_cartan(int ell)
{
    IntMatrix c(ell, ell, 0);
    for (int q = 1; q < ell; ++q) {
        c(q - 1, q - 1) += 2;
        c(q - 1, ell - q - 1) += 2;
    }
    c(ell - 1, ell - 1) = 1;
    return c;
}

inline Uqsl2Family uqsl2_family(int ell, int s)
{
    if (ell < 3 || ell % 2 == 0)
        throw Error(ErrorKind::BadParameters, "u_q(sl2) family needs odd ell >= 3");
    if (std::gcd(positive_mod(s, ell), static_cast<long>(ell)) != 1)
        throw Error(ErrorKind::BadParameters, "q = zeta_ell^s must be primitive");
    Uqsl2Family u;
    u.ell = ell;
    u.s = static_cast<int>(positive_mod(s, ell));
    auto field = cyclotomic_field(ell);
    u.q = CycNum::zeta_power(field, u.s);

    auto& f = u.fusion;
    f.labels = numbered_labels("X", ell, 1);
    f.unit = 0;
    for (int j = 0; j < ell; ++j)
        f.dual.push_back(j);
    std::vector<IntPoly> basis;
    for (int j = 1; j <= ell; ++j)
        basis.push_back(chebyshev(j));
    const IntPoly rel = uqsl2_relation(ell);
    for (int a = 0; a < ell; ++a)
        for (int b = 0; b < ell; ++b) {
            IntPoly prod = int_mod_monic(int_mul(basis[a], basis[b]), rel);
            // P_k has degree k-1 and leading coefficient 1: peel off from the top.
            for (int k = ell - 1; k >= 0; --k) {
                const long c = k < static_cast<int>(prod.size()) ? prod[k] : 0;
                if (c == 0)
                    continue;
                f.set_coefficient(a, b, k, static_cast<int>(c));
                IntPoly scaled = basis[k];
                for (auto& x : scaled)
                    x *= c;
                prod = int_sub(prod, scaled);
            }
        }
    f.cartan = uqsl2_cartan(ell);
    const CycNum x = u.q + u.q.inverse();
    std::vector<CycNum> dims;
    for (const auto& p : basis)
        dims.push_back(evaluate(p, x));
    f.dims = dims;

    u.module.labels = numbered_labels("M", ell);
    for (int j = 1; j <= ell; ++j) {
        IntMatrix n(ell, ell, 0);
        for (int w = j - 1; w >= -(j - 1); w -= 2) {
            const IntMatrix p = cyclic_shift(ell, w);
            for (int r = 0; r < ell; ++r)
                for (int c = 0; c < ell; ++c)
                    n(r, c) += p(r, c);
        }
        u.module.action.push_back(std::move(n));
    }

    for (int i = 0; i < ell; ++i) {
        TorusPolynomial m = TorusPolynomial::variable(field, 1, 0, 1);
        m = m * TorusPolynomial::constant(CycNum::zeta_power(field, static_cast<long>(u.s) * i), 1);
        m -= TorusPolynomial::constant(CycNum::zeta_power(field, -static_cast<long>(u.s) * i), 1);
        u.m_symbolic.push_back(std::move(m));
    }

    // y_j y_k / (y_i y_l), each with multiplicity ell
    std::vector<FactoredValue> y;
    for (int i = 0; i < ell; ++i)
        y.push_back(FactoredValue::atom(field, {1}, static_cast<long>(u.s) * i));
    std::vector<std::pair<FactoredValue, long>> pairs;
    for (int i = 0; i < ell; ++i)
        for (int j = 0; j < ell; ++j)
            for (int k = 0; k < ell; ++k)
                for (int l = 0; l < ell; ++l)
                    pairs.emplace_back(y[j] * y[k] / (y[i] * y[l]), ell);
    u.expected = SpectrumFactorization<FactoredValue>::from_pairs(std::move(pairs));
    return u;
}

// ---------------------------------------------------------------------------
// general simply-laced g

struct RootSystem {
    std::string name;
    int rank = 0;
    std::vector<std::vector<int>> cartan;
    std::vector<std::vector<int>> positive_roots; // simple-root coordinates
    int dim_g = 0;
};

inline RootSystem root_system_a(int n)
{
    if (n < 1)
        throw Error(ErrorKind::BadParameters, "type A needs rank >= 1");
    RootSystem rs;
    rs.name = "A" + std::to_string(n);
    rs.rank = n;
    rs.cartan.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        rs.cartan[i][i] = 2;
        if (i + 1 < n)
            rs.cartan[i][i + 1] = rs.cartan[i + 1][i] = -1;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            std::vector<int> root(n, 0);
            for (int k = i; k <= j; ++k)
                root[k] = 1;
            rs.positive_roots.push_back(std::move(root));
        }
    rs.dim_g = n * (n + 2);
    return rs;
}

inline RootSystem root_system(const std::string& name)
{
    if (name.size() >= 2 && name[0] == 'A') {
        try {
            return root_system_a(std::stoi(name.substr(1)));
        } catch (const std::invalid_argument&) {
        }
    }
    throw Error(ErrorKind::BadParameters, "unsupported root system '" + name + "' (simply-laced type A only)");
}

inline long determinant(std::vector<std::vector<long>> a)
{
    // Bareiss fraction-free elimination
    const std::size_t n = a.size();
    long sign = 1, prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

inline long cartan_determinant(const RootSystem& rs)
{
    std::vector<std::vector<long>> a(rs.rank, std::vector<long>(rs.rank));
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j)
            a[i][j] = rs.cartan[i][j];
    return determinant(a);
}

inline long ipow(long base, int e)
{
    long r = 1;
    while (e-- > 0)
        r *= base;
    return r;
}

namespace detail {

inline void check_uqg(const RootSystem& rs, int ell, int s)
{
    if (ell < 3 || ell % 2 == 0)
        throw Error(ErrorKind::BadParameters, "ell must be odd and at least 3");
    if (std::gcd(static_cast<long>(ell), std::abs(cartan_determinant(rs))) != 1)
        throw Error(ErrorKind::BadParameters, "ell = " + std::to_string(ell) + " shares a factor with det(Cartan of " +
                                                  rs.name + ") = " + std::to_string(cartan_determinant(rs)));
    if (std::gcd(positive_mod(s, ell), static_cast<long>(ell)) != 1)
        throw Error(ErrorKind::BadParameters, "q = zeta_ell^s must be primitive");
}

// (lambda, alpha) mod ell for weight lambda and root alpha, both in simple-root coordinates.
inline long pairing(const RootSystem& rs, const std::vector<int>& lambda, const std::vector<int>& alpha, int ell)
{
    long acc = 0;
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j)
            acc += static_cast<long>(lambda[i]) * rs.cartan[i][j] * alpha[j];
    return positive_mod(acc, ell);
}

inline std::vector<std::vector<int>> all_weights(int rank, int ell)
{
    std::vector<std::vector<int>> out;
    std::vector<int> w(rank, 0);
    const long total = ipow(ell, rank);
    for (long k = 0; k < total; ++k) {
        long t = k;
        for (int i = 0; i < rank; ++i) {
            w[i] = static_cast<int>(t % ell);
            t /= ell;
        }
        out.push_back(w);
    }
    return out;
}

// y_lambda * y_kappa / (y_mu * y_nu) over all four-tuples, each weighted by `weight`.
template <class V>
SpectrumFactorization<V> quotient_spectrum(const std::vector<V>& y, long weight)
{
    const std::size_t p = y.size();
    std::vector<V> products;
    products.reserve(p * p);
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = 0; b < p; ++b)
            products.push_back(y[a] * y[b]);
    const auto [num, index] = distinct_values(products);
    std::vector<long> counts(num.size(), 0);
    for (auto i : index)
        ++counts[i];
    std::vector<V> inverses;
    for (const auto& v : num)
        inverses.push_back(v.inverse());
    std::vector<long> weights(num.size() * num.size());
    for (std::size_t a = 0; a < num.size(); ++a)
        for (std::size_t b = 0; b < num.size(); ++b)
            weights[a * num.size() + b] = counts[a] * counts[b] * weight;
    return merged_products(num, inverses, weights);
}

} // namespace detail

/// Torus point for uqg_family: symbolic, or numeric Lambda_1..Lambda_rank.
struct TorusPoint {
    bool symbolic = true;
    std::vector<std::complex<double>> values;
    double tolerance = default_tolerance;
};

/// y_lambda = prod_{alpha>0} (Lambda_alpha q^{(lambda,alpha)} - q^{-(lambda,alpha)}) in factored form.
inline std::vector<FactoredValue> uqg_y_symbolic(const RootSystem& rs, int ell, int s)
{
    auto field = cyclotomic_field(ell);
    std::vector<FactoredValue> y;
    for (const auto& lambda : detail::all_weights(rs.rank, ell)) {
        FactoredValue v(CycNum(field, 1L));
        for (const auto& alpha : rs.positive_roots)
            v *= FactoredValue::atom(field, alpha, static_cast<long>(s) * detail::pairing(rs, lambda, alpha, ell));
        y.push_back(std::move(v));
    }
    return y;
}

inline std::vector<NumericScalar> uqg_y_numeric(const RootSystem& rs, int ell, int s, const TorusPoint& point)
{
    if (static_cast<int>(point.values.size()) != rs.rank)
        throw Error(ErrorKind::BadParameters, "torus point needs one value per simple root");
    const std::complex<double> z = cyclotomic_field(ell)->zeta();
    std::vector<NumericScalar> y;
    for (const auto& lambda : detail::all_weights(rs.rank, ell)) {
        std::complex<double> v = 1.0;
        for (const auto& alpha : rs.positive_roots) {
            std::complex<double> lam = 1.0;
            for (int i = 0; i < rs.rank; ++i)
                lam *= std::pow(point.values[i], alpha[i]);
            const long a = positive_mod(static_cast<long>(s) * detail::pairing(rs, lambda, alpha, ell), ell);
            const std::complex<double> za = std::pow(z, static_cast<double>(a));
            const std::complex<double> factor = lam * za - 1.0 / za;
            if (std::abs(factor) <= point.tolerance)
                throw Error(ErrorKind::ZeroEntry, "Lambda_alpha^ell = 1 for a positive root");
            v *= factor;
        }
        y.emplace_back(v, point.tolerance);
    }
    return y;
}

inline long uqg_multiplicity(const RootSystem& rs, int ell) { return ipow(ell, rs.dim_g - 2 * rs.rank); }

inline SpectrumFactorization<FactoredValue> uqg_family_symbolic(const RootSystem& rs, int ell, int s)
{
    detail::check_uqg(rs, ell, s);
    return detail::quotient_spectrum(uqg_y_symbolic(rs, ell, static_cast<int>(positive_mod(s, ell))),
                                     uqg_multiplicity(rs, ell));
}

inline SpectrumFactorization<NumericScalar> uqg_family_numeric(const RootSystem& rs, int ell, int s,
                                                               const TorusPoint& point)
{
    detail::check_uqg(rs, ell, s);
    return detail::quotient_spectrum(uqg_y_numeric(rs, ell, static_cast<int>(positive_mod(s, ell)), point),
                                     uqg_multiplicity(rs, ell));
}

// ---------------------------------------------------------------------------
// pointed categories Vec_G with module categories of cosets

struct GroupTable {
    std::string name;
    std::vector<std::vector<int>> mult; // mult[g][h] = index of gh
    int identity = 0;
    std::vector<std::string> names;

    int size() const { return static_cast<int>(mult.size()); }
    int inverse(int g) const
    {
        for (int h = 0; h < size(); ++h)
            if (mult[g][h] == identity)
                return h;
        throw Error(ErrorKind::BadParameters, "group table has no inverse for element " + std::to_string(g));
    }
};

inline GroupTable cyclic_group(int n)
{
    GroupTable g;
    g.name = "Z" + std::to_string(n);
    g.mult.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            g.mult[a][b] = (a + b) % n;
    g.names = numbered_labels("g", n);
    return g;
}

inline GroupTable klein_four()
{
    GroupTable g;
    g.name = "Z2xZ2";
    g.mult.assign(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            g.mult[a][b] = a ^ b;
    g.names = {"e", "a", "b", "ab"};
    return g;
}

/// S3 as permutations of {0,1,2}; elements 0..2 are the rotations.
inline GroupTable symmetric_group_3()
{
    const std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    GroupTable g;
    g.name = "S3";
    g.mult.assign(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            std::array<int, 3> c{};
            for (int x = 0; x < 3; ++x)
                c[x] = perms[a][perms[b][x]];
            for (int k = 0; k < 6; ++k)
                if (perms[k] == c)
                    g.mult[a][b] = k;
        }
    g.names = {"e", "r", "r2", "s", "sr", "sr2"};
    return g;
}

struct VecGFamily : Family<CycNum> {
    std::optional<std::vector<CycNum>> m;
    std::optional<ErrorKind> failure; // EmptyEigenspace when kappa is nontrivial on H
    std::string failure_detail;
};

inline VecGFamily vecg_family(const GroupTable& g, const std::vector<CycNum>& kappa, const std::vector<int>& subgroup)
{
    const int n = g.size();
    if (static_cast<int>(kappa.size()) != n)
        throw Error(ErrorKind::NotACharacter, "one character value per group element is required");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (!(kappa[g.mult[a][b]] == kappa[a] * kappa[b]))
                throw Error(ErrorKind::NotACharacter, "kappa(" + g.names[a] + g.names[b] + ") != kappa(" + g.names[a] +
                                                          ") kappa(" + g.names[b] + ")");
    std::vector<bool> in_h(n, false);
    for (int h : subgroup) {
        if (h < 0 || h >= n)
            throw Error(ErrorKind::NotASubgroup, "subgroup element out of range");
        in_h[h] = true;
    }
    if (!in_h[g.identity])
        throw Error(ErrorKind::NotASubgroup, "subgroup misses the identity");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (in_h[a] && in_h[b] && !in_h[g.mult[a][b]])
                throw Error(ErrorKind::NotASubgroup, "subgroup not closed: " + g.names[a] + g.names[b]);

    VecGFamily v;
    auto& f = v.fusion;
    f.labels = g.names;
    f.unit = g.identity;
    for (int a = 0; a < n; ++a) {
        f.dual.push_back(g.inverse(a));
        for (int b = 0; b < n; ++b)
            f.set_coefficient(a, b, g.mult[a][b], 1);
    }
    f.dims = kappa;

    // left cosets gH, indexed in order of their first element
    std::vector<int> coset_of(n, -1);
    std::vector<int> reps;
    for (int a = 0; a < n; ++a) {
        if (coset_of[a] != -1)
            continue;
        for (int h = 0; h < n; ++h)
            if (in_h[h])
                coset_of[g.mult[a][h]] = static_cast<int>(reps.size());
        reps.push_back(a);
    }
    for (int rep : reps)
        v.module.labels.push_back(g.names[rep] + "H");
    const int cosets = static_cast<int>(reps.size());
    for (int a = 0; a < n; ++a) {
        IntMatrix p(cosets, cosets, 0);
        for (int i = 0; i < cosets; ++i)
            p(coset_of[g.mult[a][reps[i]]], i) = 1;
        v.module.action.push_back(std::move(p));
    }

    try {
        const auto space = dimension_eigenspace(f, v.module);
        v.m = select_m(f, v.module, space);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::EmptyEigenspace)
            throw;
        v.failure = e.kind();
        v.failure_detail = e.what();
    }
    return v;
}

/// Character of Z/n sending the generator to zeta_n^t.
inline std::vector<CycNum> cyclic_character(int n, int t)
{
    std::vector<CycNum> k;
    for (int a = 0; a < n; ++a)
        k.push_back(CycNum::zeta_power(cyclotomic_field(n), static_cast<long>(t) * a));
    return k;
}

/// Sign character of S3 (rotations first), embedded in Q(zeta_order).
inline std::vector<CycNum> sign_character_s3(bool trivial, int order = 1)
{
    std::vector<CycNum> k;
    for (int a = 0; a < 6; ++a)
        k.emplace_back(cyclotomic_field(order), (trivial || a < 3) ? 1L : -1L);
    return k;
}

// ---------------------------------------------------------------------------
// regular module and presets

struct RegularModule {
    ModuleActionData module;
    std::vector<CycNum> m;
};

template <class D>
ModuleActionData regular_action(const FusionData<D>& f)
{
    ModuleActionData mod;
    mod.labels = f.labels;
    for (std::size_t r = 0; r < f.size(); ++r)
        mod.action.push_back(f.left_multiplication(static_cast<int>(r)));
    return mod;
}

template <class D>
std::pair<ModuleActionData, std::vector<D>> regular_module(const FusionData<D>& f)
{
    return {regular_action(f), f.require_dims()};
}

/// Fibonacci: tau^2 = 1 + tau with phi = -z^2 - z^3 in Q(zeta_5).
inline FusionData<CycNum> fibonacci_fusion()
{
    auto field = cyclotomic_field(5);
    FusionData<CycNum> f;
    f.labels = {"1", "tau"};
    f.unit = 0;
    f.dual = {0, 1};
    f.set_coefficient(0, 0, 0, 1);
    f.set_coefficient(0, 1, 1, 1);
    f.set_coefficient(1, 0, 1, 1);
    f.set_coefficient(1, 1, 0, 1);
    f.set_coefficient(1, 1, 1, 1);
    f.dims = std::vector<CycNum>{CycNum(field, 1L), -CycNum::zeta_power(field, 2) - CycNum::zeta_power(field, 3)};
    return f;
}

/// Vec_{Z/2} with kappa(1) = -1 on the regular module.
inline VecGFamily signed_z2() { return vecg_family(cyclic_group(2), cyclic_character(2, 1), {0}); }

/// Trivial category Vec acting on itself.
inline FusionData<CycNum> trivial_fusion()
{
    FusionData<CycNum> f;
    f.labels = {"1"};
    f.unit = 0;
    f.dual = {0};
    f.set_coefficient(0, 0, 0, 1);
    f.dims = std::vector<CycNum>{CycNum(cyclotomic_field(1), 1L)};
    return f;
}

} // namespace antipode

#endif
