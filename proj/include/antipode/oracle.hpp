#ifndef ANTIPODE_ORACLE_HPP
#define ANTIPODE_ORACLE_HPP

#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "antipode/cyclotomic.hpp"
#include "antipode/error.hpp"
#include "antipode/families.hpp"
#include "antipode/matrix.hpp"
#include "antipode/report.hpp"
#include "antipode/scalar.hpp"
#include "antipode/spectrum.hpp"

namespace antipode {

using Element = std::vector<CycNum>;

/// Finite-dimensional algebra given by structure constants on a basis.
struct StructureAlgebra {
    std::string name;
    std::vector<std::string> labels;
    FieldPtr field;
    // e_u e_v, sparse, at index u * dim + v
    std::vector<std::vector<std::pair<std::size_t, CycNum>>> table;
    Element unit;

    std::size_t dim() const noexcept { return labels.size(); }
    Element zero() const { return Element(dim(), CycNum(field, 0L)); }
    Element basis(std::size_t i) const
    {
        Element e = zero();
        e[i] = CycNum(field, 1L);
        return e;
    }

    Element multiply(const Element& a, const Element& b) const
    {
        Element out = zero();
        const std::size_t n = dim();
        for (std::size_t u = 0; u < n; ++u) {
            if (a[u].is_zero())
                continue;
            for (std::size_t v = 0; v < n; ++v) {
                if (b[v].is_zero())
                    continue;
                const CycNum c = a[u] * b[v];
                for (const auto& [w, s] : table[u * n + v])
                    out[w] += c * s;
            }
        }
        return out;
    }

    /// Column v holds a * e_v.
    Matrix<CycNum> left_matrix(const Element& a) const
    {
        Matrix<CycNum> m(dim(), dim(), CycNum(field, 0L));
        for (std::size_t v = 0; v < dim(); ++v) {
            const Element col = multiply(a, basis(v));
            for (std::size_t w = 0; w < dim(); ++w)
                m(w, v) = col[w];
        }
        return m;
    }

    Matrix<CycNum> right_matrix(const Element& a) const
    {
        Matrix<CycNum> m(dim(), dim(), CycNum(field, 0L));
        for (std::size_t v = 0; v < dim(); ++v) {
            const Element col = multiply(basis(v), a);
            for (std::size_t w = 0; w < dim(); ++w)
                m(w, v) = col[w];
        }
        return m;
    }
};

/// An explicit module: one matrix per algebra generator.
struct ExplicitModule {
    std::string name;
    std::size_t dim = 0;
    std::vector<Matrix<CycNum>> action;
};

/// Algebra with generators, simple modules (indexed like the Cartan candidate) and optional lifted idempotents.
struct OracleAlgebra {
    StructureAlgebra algebra;
    std::vector<std::string> generator_names;
    std::vector<Element> generators;
    std::vector<ExplicitModule> simples;
    std::vector<Element> idempotents; // primitive, e_r covering simples[r]; may be empty
    std::optional<Matrix<CycNum>> antipode;
    int s2_order = 0; // order of S^2 when known
};

namespace detail {

inline bool is_zero_element(const Element& e)
{
    for (const auto& c : e)
        if (!c.is_zero())
            return false;
    return true;
}

inline std::string element_string(const StructureAlgebra& a, const Element& e)
{
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (!e[i].is_zero()) {
            if (!out.empty())
                out += " + ";
            out += "(" + e[i].to_string() + ")" + a.labels[i];
        }
    return out.empty() ? "0" : out;
}

} // namespace detail

inline VerificationReport verify_algebra(const StructureAlgebra& a, std::size_t max_triples = 40000)
{
    VerificationReport report(a.name);
    const std::size_t n = a.dim();
    for (std::size_t v = 0; v < n; ++v) {
        const Element e = a.basis(v);
        if (a.multiply(a.unit, e) != e || a.multiply(e, a.unit) != e)
            report.fail("unit", "1 * " + a.labels[v] + " or " + a.labels[v] + " * 1 differs");
    }
    auto check = [&](std::size_t u, std::size_t v, std::size_t w) {
        const Element lhs = a.multiply(a.multiply(a.basis(u), a.basis(v)), a.basis(w));
        const Element rhs = a.multiply(a.basis(u), a.multiply(a.basis(v), a.basis(w)));
        if (lhs != rhs)
            report.fail("associativity", "(" + a.labels[u] + " " + a.labels[v] + ") " + a.labels[w] + " = " +
                                             detail::element_string(a, lhs) + " but " + a.labels[u] + " (" +
                                             a.labels[v] + " " + a.labels[w] + ") = " + detail::element_string(a, rhs));
    };
    if (n * n * n <= max_triples) {
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v)
                for (std::size_t w = 0; w < n; ++w)
                    check(u, v, w);
    } else {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (std::size_t t = 0; t < max_triples / 8; ++t)
            check(pick(rng), pick(rng), pick(rng));
    }
    return report;
}

// ---------------------------------------------------------------------------
// explicit algebras

/// Group algebra of a finite group over Q(zeta_order).
inline OracleAlgebra group_algebra(const GroupTable& g, int order = 1)
{
    OracleAlgebra o;
    auto& a = o.algebra;
    a.name = "k[" + g.name + "]";
    a.labels = g.names;
    a.field = cyclotomic_field(order);
    const std::size_t n = g.names.size();
    a.table.resize(n * n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            a.table[u * n + v].emplace_back(static_cast<std::size_t>(g.mult[u][v]), CycNum(a.field, 1L));
    a.unit = a.basis(static_cast<std::size_t>(g.identity));
    for (std::size_t u = 0; u < n; ++u) {
        o.generator_names.push_back(g.names[u]);
        o.generators.push_back(a.basis(u));
    }
    return o;
}

/// Taft algebra T_n: g^n = 1, x^n = 0, g x g^-1 = q x, basis g^a x^b at index a n + b.
inline OracleAlgebra taft_algebra(int n, int s)
{
    if (n < 2 || std::gcd(positive_mod(s, n), static_cast<long>(n)) != 1)
        throw Error(ErrorKind::BadParameters, "Taft algebra needs n >= 2 and gcd(s, n) = 1");
    OracleAlgebra o;
    auto& a = o.algebra;
    a.name = "T_" + std::to_string(n);
    a.field = cyclotomic_field(n);
    const long sq = positive_mod(s, n);
    auto qpow = [&](long e) { return CycNum::zeta_power(a.field, sq * e); };
    for (int ga = 0; ga < n; ++ga)
        for (int xb = 0; xb < n; ++xb)
            a.labels.push_back("g^" + std::to_string(ga) + "x^" + std::to_string(xb));
    const std::size_t dim = static_cast<std::size_t>(n) * n;
    a.table.resize(dim * dim);
    // (g^a x^b)(g^c x^d) = q^{-bc} g^{a+c} x^{b+d}
    for (int ga = 0; ga < n; ++ga)
        for (int xb = 0; xb < n; ++xb)
            for (int gc = 0; gc < n; ++gc)
                for (int xd = 0; xd < n; ++xd) {
                    if (xb + xd >= n)
                        continue;
                    const std::size_t u = ga * n + xb, v = gc * n + xd;
                    const std::size_t w = ((ga + gc) % n) * n + (xb + xd);
                    a.table[u * dim + v].emplace_back(w, qpow(-static_cast<long>(xb) * gc));
                }
    a.unit = a.basis(0);
    const Element g = a.basis(static_cast<std::size_t>(n)), x = a.basis(1);
    o.generator_names = {"g", "x"};
    o.generators = {g, x};

    for (int c = 0; c < n; ++c) {
        ExplicitModule l;
        l.name = "L_" + std::to_string(c);
        l.dim = 1;
        l.action = {Matrix<CycNum>(1, 1, qpow(c)), Matrix<CycNum>(1, 1, CycNum(a.field, 0L))};
        o.simples.push_back(std::move(l));
        // e_c = (1/n) sum_k q^{-ck} g^k acts as 1 exactly on L_c
        Element e = a.zero();
        for (int k = 0; k < n; ++k)
            e[static_cast<std::size_t>(k) * n] = qpow(-static_cast<long>(c) * k) * CycNum(a.field, Rational(1, n));
        o.idempotents.push_back(std::move(e));
    }

    // S(g) = g^{-1}, S(x) = -x g^{-1}; S is an anti-homomorphism
    const Element g_inv = a.basis(static_cast<std::size_t>(n - 1) * n);
    Element s_x = a.multiply(x, g_inv);
    for (auto& c : s_x)
        c = -c;
    Matrix<CycNum> antipode(dim, dim, CycNum(a.field, 0L));
    for (int ga = 0; ga < n; ++ga)
        for (int xb = 0; xb < n; ++xb) {
            Element image = a.unit;
            for (int k = 0; k < xb; ++k)
                image = a.multiply(image, s_x);
            for (int k = 0; k < ga; ++k)
                image = a.multiply(image, g_inv);
            for (std::size_t w = 0; w < dim; ++w)
                antipode(w, static_cast<std::size_t>(ga) * n + xb) = image[w];
        }
    o.antipode = antipode;
    o.s2_order = n;
    return o;
}

namespace detail {

// Normal-ordered E^a F^b K^c products for u_q(sl2), by left multiplication with generators.
class Uqsl2Builder {
public:
    Uqsl2Builder(int ell, int s)
        : ell_(ell), s_(s), field_(cyclotomic_field(ell)), q_(CycNum::zeta_power(field_, s)),
          dim_(static_cast<std::size_t>(ell) * ell * ell)
    {
        inv_diff_ = (q_ - q_.inverse()).inverse();
    }

    std::size_t index(int a, int b, int c) const { return (static_cast<std::size_t>(a) * ell_ + b) * ell_ + c; }
    std::size_t dim() const { return dim_; }
    const FieldPtr& field() const { return field_; }
    const CycNum& q() const { return q_; }
    CycNum qpow(long e) const { return CycNum::zeta_power(field_, static_cast<long>(s_) * e); }

    Element zero() const { return Element(dim_, CycNum(field_, 0L)); }

    Element e_left(const Element& y) const
    {
        Element out = zero();
        for_each(y, [&](int a, int b, int c, const CycNum& v) {
            if (a + 1 < ell_)
                out[index(a + 1, b, c)] += v;
        });
        return out;
    }

    // K^{sign} E^a F^b K^c = q^{sign (2a - 2b)} E^a F^b K^{c + sign}
    Element k_left(const Element& y, int sign) const
    {
        Element out = zero();
        for_each(y, [&](int a, int b, int c, const CycNum& v) {
            const long e = static_cast<long>(sign) * (2L * a - 2L * b);
            out[index(a, b, static_cast<int>(positive_mod(c + sign, ell_)))] += v * qpow(e);
        });
        return out;
    }

    Element f_left(const Element& y)
    {
        Element out = zero();
        for_each(y, [&](int a, int b, int c, const CycNum& v) {
            const Element& part = f_monomial(a, b, c);
            for (std::size_t w = 0; w < dim_; ++w)
                if (!part[w].is_zero())
                    out[w] += v * part[w];
        });
        return out;
    }

private:
    template <class F>
    void for_each(const Element& y, F&& fn) const
    {
        for (int a = 0; a < ell_; ++a)
            for (int b = 0; b < ell_; ++b)
                for (int c = 0; c < ell_; ++c) {
                    const CycNum& v = y[index(a, b, c)];
                    if (!v.is_zero())
                        fn(a, b, c, v);
                }
    }

    // F E^a F^b K^c, using F E = E F - (K - K^-1)/(q - q^-1)
    const Element& f_monomial(int a, int b, int c)
    {
        const std::size_t key = index(a, b, c);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        Element out = zero();
        if (a == 0) {
            if (b + 1 < ell_)
                out[index(0, b + 1, c)] = CycNum(field_, 1L);
        } else {
            Element rest = zero();
            rest[index(a - 1, b, c)] = CycNum(field_, 1L);
            out = e_left(f_left(rest));
            const Element kp = k_left(rest, 1), km = k_left(rest, -1);
            for (std::size_t w = 0; w < dim_; ++w)
                out[w] -= (kp[w] - km[w]) * inv_diff_;
        }
        return memo_.emplace(key, std::move(out)).first->second;
    }

    int ell_, s_;
    FieldPtr field_;
    CycNum q_, inv_diff_;
    std::size_t dim_;
    std::map<std::size_t, Element> memo_;
};

inline CycNum quantum_integer(const Uqsl2Builder& b, long n)
{
    return (b.qpow(n) - b.qpow(-n)) / (b.q() - b.q().inverse());
}

} // namespace detail

/// L(lambda), lambda = 0..ell-1, dim lambda + 1; matrices for E, F, K.
inline std::vector<ExplicitModule> uqsl2_simple_modules(int ell, int s)
{
    if (ell < 3 || ell % 2 == 0 || std::gcd(positive_mod(s, ell), static_cast<long>(ell)) != 1)
        throw Error(ErrorKind::BadParameters, "u_q(sl2) needs odd ell >= 3 and q primitive");
    const detail::Uqsl2Builder b(ell, static_cast<int>(positive_mod(s, ell)));
    std::vector<ExplicitModule> out;
    const CycNum zero(b.field(), 0L);
    for (int lambda = 0; lambda < ell; ++lambda) {
        const std::size_t d = static_cast<std::size_t>(lambda) + 1;
        Matrix<CycNum> e(d, d, zero), f(d, d, zero), k(d, d, zero);
        for (std::size_t i = 0; i < d; ++i) {
            k(i, i) = b.qpow(static_cast<long>(lambda) - 2L * static_cast<long>(i));
            if (i + 1 < d)
                f(i + 1, i) = CycNum(b.field(), 1L);
            if (i > 0)
                e(i - 1, i) = detail::quantum_integer(b, static_cast<long>(i)) *
                              detail::quantum_integer(b, static_cast<long>(lambda) - static_cast<long>(i) + 1);
        }
        out.push_back({"L(" + std::to_string(lambda) + ")", d, {e, f, k}});
    }
    return out;
}

/// Small quantum group u_q(sl2), basis E^a F^b K^c.
inline OracleAlgebra uqsl2_algebra(int ell, int s)
{
    if (ell < 3 || ell % 2 == 0 || std::gcd(positive_mod(s, ell), static_cast<long>(ell)) != 1)
        throw Error(ErrorKind::BadParameters, "u_q(sl2) algebra needs odd ell >= 3 and q primitive");
    detail::Uqsl2Builder b(ell, static_cast<int>(positive_mod(s, ell)));
    OracleAlgebra o;
    auto& a = o.algebra;
    a.name = "u_q(sl2), ell=" + std::to_string(ell);
    a.field = b.field();
    for (int i = 0; i < ell; ++i)
        for (int j = 0; j < ell; ++j)
            for (int k = 0; k < ell; ++k)
                a.labels.push_back("E^" + std::to_string(i) + "F^" + std::to_string(j) + "K^" + std::to_string(k));
    const std::size_t dim = b.dim();
    a.table.resize(dim * dim);
    for (int i = 0; i < ell; ++i)
        for (int j = 0; j < ell; ++j)
            for (int k = 0; k < ell; ++k)
                for (std::size_t v = 0; v < dim; ++v) {
                    Element y = b.zero();
                    y[v] = CycNum(a.field, 1L);
                    for (int t = 0; t < k; ++t)
                        y = b.k_left(y, 1);
                    for (int t = 0; t < j; ++t)
                        y = b.f_left(y);
                    for (int t = 0; t < i; ++t)
                        y = b.e_left(y);
                    auto& slot = a.table[b.index(i, j, k) * dim + v];
                    for (std::size_t w = 0; w < dim; ++w)
                        if (!y[w].is_zero())
                            slot.emplace_back(w, y[w]);
                }
    a.unit = a.basis(0);
    o.generator_names = {"E", "F", "K"};
    o.generators = {a.basis(b.index(1, 0, 0)), a.basis(b.index(0, 1, 0)), a.basis(b.index(0, 0, 1))};

    o.simples = uqsl2_simple_modules(ell, s);
    return o;
}

// ---------------------------------------------------------------------------
// subspaces, radical, layers

/// Row-reduced basis of a subspace; coordinates are read off at the pivot columns.
struct Subspace {
    std::vector<Element> rows;
    std::vector<std::size_t> pivots;
    std::size_t dim() const noexcept { return rows.size(); }
};

inline Subspace span_of(const std::vector<Element>& vectors, std::size_t ambient, const FieldPtr& field)
{
    Subspace sp;
    if (vectors.empty())
        return sp;
    Matrix<CycNum> m(vectors.size(), ambient, CycNum(field, 0L));
    for (std::size_t r = 0; r < vectors.size(); ++r)
        for (std::size_t c = 0; c < ambient; ++c)
            m(r, c) = vectors[r][c];
    const auto [reduced, pivots] = row_reduce(m);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        Element row(ambient, CycNum(field, 0L));
        for (std::size_t c = 0; c < ambient; ++c)
            row[c] = reduced(r, c);
        sp.rows.push_back(std::move(row));
    }
    sp.pivots = pivots;
    return sp;
}

/// v minus its projection along the subspace rows; zero iff v lies in the subspace.
inline Element reduce_modulo(Element v, const Subspace& sp)
{
    for (std::size_t k = 0; k < sp.rows.size(); ++k) {
        const CycNum c = v[sp.pivots[k]];
        if (c.is_zero())
            continue;
        for (std::size_t w = 0; w < v.size(); ++w)
            if (!sp.rows[k][w].is_zero())
                v[w] -= c * sp.rows[k][w];
    }
    return v;
}

inline std::vector<CycNum> coordinates(const Element& v, const Subspace& sp)
{
    std::vector<CycNum> out;
    for (auto p : sp.pivots)
        out.push_back(v[p]);
    return out;
}

/// Gram matrix (u, v) -> Tr(L_{e_u e_v}).
inline Matrix<CycNum> trace_form(const StructureAlgebra& a)
{
    const std::size_t n = a.dim();
    std::vector<CycNum> tr(n, CycNum(a.field, 0L));
    for (std::size_t w = 0; w < n; ++w)
        for (std::size_t v = 0; v < n; ++v)
            for (const auto& [t, c] : a.table[w * n + v])
                if (t == v)
                    tr[w] += c;
    Matrix<CycNum> gram(n, n, CycNum(a.field, 0L));
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            for (const auto& [w, c] : a.table[u * n + v])
                gram(u, v) += c * tr[w];
    return gram;
}

/// Jacobson radical in characteristic 0: the kernel of the trace form.
inline Subspace radical_via_trace_form(const StructureAlgebra& a)
{
    const auto basis = null_space(trace_form(a), CycNum(a.field, 0L));
    return span_of(basis, a.dim(), a.field);
}

inline VerificationReport ideal_check(const StructureAlgebra& a, const Subspace& ideal)
{
    VerificationReport report(a.name + " ideal");
    for (std::size_t k = 0; k < ideal.dim(); ++k)
        for (std::size_t v = 0; v < a.dim(); ++v) {
            const Element e = a.basis(v);
            if (!detail::is_zero_element(reduce_modulo(a.multiply(e, ideal.rows[k]), ideal)))
                report.fail("left ideal", a.labels[v] + " * r_" + std::to_string(k) + " leaves the subspace");
            if (!detail::is_zero_element(reduce_modulo(a.multiply(ideal.rows[k], e), ideal)))
                report.fail("right ideal", "r_" + std::to_string(k) + " * " + a.labels[v] + " leaves the subspace");
        }
    return report;
}

/// A / I on the basis vectors that are not pivot columns of I.
inline StructureAlgebra quotient_algebra(const StructureAlgebra& a, const Subspace& ideal)
{
    std::vector<bool> pivot(a.dim(), false);
    for (auto p : ideal.pivots)
        pivot[p] = true;
    std::vector<std::size_t> keep;
    std::vector<std::size_t> position(a.dim(), a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (!pivot[i]) {
            position[i] = keep.size();
            keep.push_back(i);
        }
    StructureAlgebra q;
    q.name = a.name + " / I";
    q.field = a.field;
    for (auto i : keep)
        q.labels.push_back(a.labels[i]);
    const std::size_t n = keep.size();
    q.table.resize(n * n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
            const Element prod = reduce_modulo(a.multiply(a.basis(keep[u]), a.basis(keep[v])), ideal);
            for (std::size_t w = 0; w < a.dim(); ++w)
                if (!prod[w].is_zero())
                    q.table[u * n + v].emplace_back(position[w], prod[w]);
        }
    const Element unit = reduce_modulo(a.unit, ideal);
    q.unit = q.zero();
    for (std::size_t w = 0; w < a.dim(); ++w)
        if (!unit[w].is_zero())
            q.unit[position[w]] = unit[w];
    return q;
}

/// J^0 = A, J^1 = rad, J^{k+1} = J J^k, until zero.
inline std::vector<Subspace> radical_powers(const StructureAlgebra& a, const Subspace& rad)
{
    std::vector<Subspace> out;
    std::vector<Element> all;
    for (std::size_t v = 0; v < a.dim(); ++v)
        all.push_back(a.basis(v));
    out.push_back(span_of(all, a.dim(), a.field));
    Subspace current = rad;
    while (current.dim() > 0) {
        out.push_back(current);
        std::vector<Element> products;
        for (const auto& r : rad.rows)
            for (const auto& c : current.rows)
                products.push_back(a.multiply(r, c));
        Subspace next = span_of(products, a.dim(), a.field);
        if (next.dim() >= current.dim())
            throw Error(ErrorKind::NonConvergence, "radical powers do not shrink; radical is not nilpotent");
        current = std::move(next);
    }
    out.push_back(current);
    return out;
}

/// dim Hom_A(upper / lower, L) for a module layer of the regular representation.
inline std::size_t intertwiner_count(const OracleAlgebra& o, const Subspace& upper, const Subspace& lower,
                                     const ExplicitModule& simple)
{
    const auto& a = o.algebra;
    const std::size_t m = upper.dim(), d = simple.dim;
    if (m == 0)
        return 0;
    const CycNum zero(a.field, 0L);
    // unknown F (d x m), variable index p * m + t
    std::vector<std::vector<CycNum>> rows;
    for (std::size_t g = 0; g < o.generators.size(); ++g) {
        // generator on upper, in upper coordinates: column t = coords(g * b_t)
        Matrix<CycNum> rep(m, m, zero);
        for (std::size_t t = 0; t < m; ++t) {
            const auto c = coordinates(a.multiply(o.generators[g], upper.rows[t]), upper);
            for (std::size_t u = 0; u < m; ++u)
                rep(u, t) = c[u];
        }
        const auto& rho = simple.action[g];
        // (F rep)(p, t) - (rho F)(p, t) = 0
        for (std::size_t p = 0; p < d; ++p)
            for (std::size_t t = 0; t < m; ++t) {
                std::vector<CycNum> eq(d * m, zero);
                for (std::size_t u = 0; u < m; ++u)
                    eq[p * m + u] += rep(u, t);
                for (std::size_t r = 0; r < d; ++r)
                    eq[r * m + t] -= rho(p, r);
                rows.push_back(std::move(eq));
            }
    }
    for (const auto& low : lower.rows) {
        const auto c = coordinates(low, upper);
        for (std::size_t p = 0; p < d; ++p) {
            std::vector<CycNum> eq(d * m, zero);
            for (std::size_t u = 0; u < m; ++u)
                eq[p * m + u] = c[u];
            rows.push_back(std::move(eq));
        }
    }
    Matrix<CycNum> sys(rows.size(), d * m, zero);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < d * m; ++c)
            sys(r, c) = rows[r][c];
    return d * m - rank(sys);
}

struct CartanValidation {
    VerificationReport report{"cartan"};
    std::vector<long> aggregate;          // [A : L_q] from radical layers
    std::vector<long> expected_aggregate; // sum_r C_qr dim L_r
    std::vector<long> projective_dims;    // dim A e_r (empty without idempotents)
    std::vector<long> expected_projective;
    std::size_t radical_dim = 0;
};

inline CartanValidation validate_cartan(const OracleAlgebra& o, const IntMatrix& candidate)
{
    CartanValidation out;
    out.report = VerificationReport(o.algebra.name + " Cartan candidate");
    const std::size_t k = o.simples.size();
    if (candidate.rows() != k || candidate.cols() != k) {
        out.report.fail("shape", "candidate is " + std::to_string(candidate.rows()) + "x" +
                                     std::to_string(candidate.cols()) + ", expected " + std::to_string(k) + "x" +
                                     std::to_string(k));
        return out;
    }
    for (std::size_t q = 0; q < k; ++q)
        for (std::size_t r = 0; r < k; ++r)
            if (candidate(q, r) < 0)
                out.report.fail("nonnegative", "C(" + std::to_string(q) + "," + std::to_string(r) + ") < 0");

    const auto& a = o.algebra;
    if (!o.idempotents.empty()) {
        for (std::size_t r = 0; r < k; ++r) {
            long expected = 0;
            for (std::size_t q = 0; q < k; ++q)
                expected += static_cast<long>(candidate(q, r)) * static_cast<long>(o.simples[q].dim);
            const long got = static_cast<long>(rank(a.right_matrix(o.idempotents[r])));
            out.projective_dims.push_back(got);
            out.expected_projective.push_back(expected);
            if (got != expected)
                out.report.fail("projective", "dim A e_" + std::to_string(r) + " = " + std::to_string(got) +
                                                  ", candidate gives " + std::to_string(expected));
        }
    }

    const Subspace rad = radical_via_trace_form(a);
    out.radical_dim = rad.dim();
    const auto layers = radical_powers(a, rad);
    out.aggregate.assign(k, 0);
    for (std::size_t layer = 0; layer + 1 < layers.size(); ++layer)
        for (std::size_t q = 0; q < k; ++q)
            out.aggregate[q] +=
                static_cast<long>(intertwiner_count(o, layers[layer], layers[layer + 1], o.simples[q]));
    for (std::size_t q = 0; q < k; ++q) {
        long expected = 0;
        for (std::size_t r = 0; r < k; ++r)
            expected += static_cast<long>(candidate(q, r)) * static_cast<long>(o.simples[r].dim);
        out.expected_aggregate.push_back(expected);
        if (expected != out.aggregate[q])
            out.report.fail("aggregate", "[A : " + o.simples[q].name + "] = " + std::to_string(out.aggregate[q]) +
                                             ", candidate gives " + std::to_string(expected));
    }
    return out;
}

// ---------------------------------------------------------------------------
// S^2 on an explicit Hopf algebra

/// Spectrum of a matrix whose eigenvalues are order-th roots of unity, by nullities of (M - zeta^k I).
inline SpectrumFactorization<CycNum> finite_order_spectrum(const Matrix<CycNum>& m, int order)
{
    if (m.rows() == 0)
        return {};
    const FieldPtr field = m(0, 0).field();
    if (field->order() % order != 0)
        throw Error(ErrorKind::FieldMismatch, std::to_string(order) + "-th roots of unity are not in Q(zeta_" +
                                                  std::to_string(field->order()) + ")");
    const int step = field->order() / order;
    std::vector<std::pair<CycNum, long>> pairs;
    long total = 0;
    for (int k = 0; k < order; ++k) {
        const CycNum lambda = CycNum::zeta_power(field, static_cast<long>(k) * step);
        Matrix<CycNum> shifted = m;
        for (std::size_t i = 0; i < m.rows(); ++i)
            shifted(i, i) -= lambda;
        const long nullity = static_cast<long>(m.rows() - rank(shifted));
        total += nullity;
        pairs.emplace_back(lambda, nullity);
    }
    if (total != static_cast<long>(m.rows()))
        throw Error(ErrorKind::NonConvergence, "S^2 is not diagonalizable over " + std::to_string(order) +
                                                   "-th roots of unity (eigenspaces span " + std::to_string(total) +
                                                   " of " + std::to_string(m.rows()) + ")");
    return SpectrumFactorization<CycNum>::from_pairs(std::move(pairs));
}

inline SpectrumFactorization<CycNum> oracle_s2_spectrum(const OracleAlgebra& o)
{
    if (!o.antipode)
        throw Error(ErrorKind::BadParameters, o.algebra.name + " carries no antipode");
    const auto s = *o.antipode;
    return finite_order_spectrum(s * s, o.s2_order);
}

} // namespace antipode

#endif
