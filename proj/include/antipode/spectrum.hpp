#ifndef ANTIPODE_SPECTRUM_HPP
#define ANTIPODE_SPECTRUM_HPP

#include <algorithm>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "antipode/error.hpp"
#include "antipode/fusion.hpp"
#include "antipode/literal.hpp"
#include "antipode/matrix.hpp"
#include "antipode/module_action.hpp"
#include "antipode/parallel.hpp"
#include "antipode/report.hpp"
#include "antipode/scalar.hpp"

namespace antipode {

// How eigenvalues of type V are deduplicated: canonical order, or a tolerant sweep over approximate().
template <class V>
struct MergeTraits {
    static constexpr bool tolerant = is_numeric_v<V>;
};

namespace detail {
template <class V>
std::string value_string(const V& v)
{
    return to_string(v);
}
} // namespace detail

template <class V>
struct SpectrumFactor {
    V eigenvalue;
    long multiplicity = 0;
};

/// chi(z) = prod (z - eigenvalue)^multiplicity with pairwise distinct eigenvalues.
template <class V>
class SpectrumFactorization {
public:
    SpectrumFactorization() = default;

    /// Merges equal eigenvalues; the result is sorted by the canonical key.
    static SpectrumFactorization from_pairs(std::vector<std::pair<V, long>> pairs)
    {
        SpectrumFactorization s;
        if constexpr (MergeTraits<V>::tolerant) {
            std::stable_sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
                const auto x = approximate(a.first), y = approximate(b.first);
                return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
            });
            for (auto& [value, mult] : pairs) {
                if (mult == 0)
                    continue;
                const double re = approximate(value).real();
                const double tol = merge_tolerance(value);
                bool merged = false;
                for (auto it = s.factors_.rbegin(); it != s.factors_.rend(); ++it) {
                    if (approximate(it->eigenvalue).real() < re - tol)
                        break;
                    if (it->eigenvalue == value) {
                        it->multiplicity += mult;
                        merged = true;
                        break;
                    }
                }
                if (!merged)
                    s.factors_.push_back({std::move(value), mult});
                s.total_degree_ += mult;
            }
        } else {
            std::map<V, long> merged;
            for (auto& [value, mult] : pairs)
                if (mult != 0)
                    merged[value] += mult;
            for (auto& [value, mult] : merged) {
                s.factors_.push_back({value, mult});
                s.total_degree_ += mult;
            }
        }
        return s;
    }

    const std::vector<SpectrumFactor<V>>& factors() const noexcept { return factors_; }
    long total_degree() const noexcept { return total_degree_; }
    std::size_t distinct() const noexcept { return factors_.size(); }

    long multiplicity_of(const V& value) const
    {
        for (const auto& f : factors_)
            if (f.eigenvalue == value)
                return f.multiplicity;
        return 0;
    }

    /// Applies a value map and re-merges (e.g. specialization of a symbolic parameter).
    template <class W, class F>
    SpectrumFactorization<W> map(F&& fn) const
    {
        std::vector<std::pair<W, long>> pairs;
        pairs.reserve(factors_.size());
        for (const auto& f : factors_)
            pairs.emplace_back(fn(f.eigenvalue), f.multiplicity);
        return SpectrumFactorization<W>::from_pairs(std::move(pairs));
    }

    friend bool operator==(const SpectrumFactorization& a, const SpectrumFactorization& b)
    {
        if (a.total_degree_ != b.total_degree_ || a.factors_.size() != b.factors_.size())
            return false;
        if constexpr (MergeTraits<V>::tolerant) {
            std::vector<bool> used(b.factors_.size(), false);
            for (const auto& f : a.factors_) {
                bool found = false;
                for (std::size_t k = 0; k < b.factors_.size() && !found; ++k)
                    if (!used[k] && b.factors_[k].multiplicity == f.multiplicity && b.factors_[k].eigenvalue == f.eigenvalue)
                        used[k] = found = true;
                if (!found)
                    return false;
            }
            return true;
        } else {
            for (std::size_t k = 0; k < a.factors_.size(); ++k)
                if (a.factors_[k].multiplicity != b.factors_[k].multiplicity ||
                    !(a.factors_[k].eigenvalue == b.factors_[k].eigenvalue))
                    return false;
            return true;
        }
    }

    std::string to_string() const
    {
        std::string out;
        for (const auto& f : factors_) {
            out += "(z - " + detail::value_string(f.eigenvalue) + ")^" + std::to_string(f.multiplicity) + "\n";
        }
        out += "total degree " + std::to_string(total_degree_) + "\n";
        return out;
    }

private:
    static double merge_tolerance(const V& v)
    {
        if constexpr (requires { v.tolerance(); })
            return v.tolerance();
        else if constexpr (requires { v.squared.tolerance(); })
            return v.squared.tolerance();
        else
            return default_tolerance;
    }

    std::vector<SpectrumFactor<V>> factors_;
    long total_degree_ = 0;
};

// ---------------------------------------------------------------------------
// dimension eigenvectors

/// Basis of the joint eigenspace {m : sum_j N_{ri}^j m_j = d_r m_i for all r}.
template <class D>
struct Eigenspace {
    std::vector<std::vector<D>> basis;
    std::size_t multiplicity() const noexcept { return basis.size(); }
};

namespace detail {

// Rows (N_r^T - d_r I) for every r, stacked.
template <class D>
Matrix<D> eigen_system(const FusionData<D>& f, const ModuleActionData& mod)
{
    const auto& d = f.require_dims();
    const std::size_t n = mod.size(), labels = f.size();
    Matrix<D> a(labels * n, n, zero_like(d.front()));
    for (std::size_t r = 0; r < labels; ++r)
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                if (mod.action[r](j, i) != 0)
                    a(r * n + i, j) = scalar_from_int(mod.action[r](j, i), d.front());
            a(r * n + i, i) -= d[r];
        }
    return a;
}

template <class D>
bool in_eigenspace(const FusionData<D>& f, const ModuleActionData& mod, const std::vector<D>& m)
{
    const auto a = eigen_system(f, mod);
    if (m.size() != mod.size())
        return false;
    for (const auto& v : mat_vec(a, m))
        if (!is_zero(v))
            return false;
    return true;
}

} // namespace detail

template <class D>
Eigenspace<D> dimension_eigenspace(const FusionData<D>& f, const ModuleActionData& mod)
{
    const auto a = detail::eigen_system(f, mod);
    Eigenspace<D> e{null_space(a, f.require_dims().front())};
    if (e.basis.empty())
        throw Error(ErrorKind::EmptyEigenspace, "no nonzero m with sum_j N_ri^j m_j = d_r m_i; the dimensions are not matched to this module");
    return e;
}

template <class D>
std::vector<D> select_m(const FusionData<D>& f, const ModuleActionData& mod, const Eigenspace<D>& space,
                        const std::optional<std::type_identity_t<std::vector<D>>>& candidate = std::nullopt)
{
    std::vector<D> m;
    if (candidate) {
        if (candidate->size() != mod.size())
            throw Error(ErrorKind::DimensionMismatch, "candidate m has the wrong length");
        if (!detail::in_eigenspace(f, mod, *candidate))
            throw Error(ErrorKind::NotInEigenspace, "candidate m fails sum_j N_ri^j m_j = d_r m_i");
        m = *candidate;
    } else {
        if (space.multiplicity() > 1)
            throw Error(ErrorKind::AmbiguousM, "dimension eigenspace has dimension " +
                                                   std::to_string(space.multiplicity()) + "; supply m explicitly");
        m = space.basis.front();
        const auto first = std::find_if(m.begin(), m.end(), [](const D& x) { return !is_zero(x); });
        const D scale = first->inverse();
        for (auto& x : m)
            x *= scale;
    }
    for (std::size_t i = 0; i < m.size(); ++i)
        if (is_zero(m[i]))
            throw Error(ErrorKind::ZeroEntry, "m_" + mod.labels[i] + " = 0");
    return m;
}

/*
 * Symbolic candidate: entries are Laurent polynomials in the torus
 * parameters.  Every monomial coefficient vector must lie in the eigenspace;
 * the entries are then converted to factored form.
 */
template <class D>
std::vector<FactoredValue> select_m_symbolic(const FusionData<D>& f, const ModuleActionData& mod,
                                             const std::vector<TorusPolynomial>& candidate)
{
    if (candidate.size() != mod.size())
        throw Error(ErrorKind::DimensionMismatch, "candidate m has the wrong length");
    std::vector<TorusPolynomial::Exponents> monomials;
    for (const auto& p : candidate)
        for (const auto& [e, c] : p.terms())
            if (std::find(monomials.begin(), monomials.end(), e) == monomials.end())
                monomials.push_back(e);
    for (const auto& e : monomials) {
        std::vector<D> slice;
        for (const auto& p : candidate)
            slice.push_back(lift(p.coefficient(e), f.require_dims().front()));
        if (!detail::in_eigenspace(f, mod, slice))
            throw Error(ErrorKind::NotInEigenspace, "a torus coefficient of m leaves the eigenspace");
    }
    std::vector<FactoredValue> m;
    for (std::size_t i = 0; i < candidate.size(); ++i) {
        if (candidate[i].is_zero())
            throw Error(ErrorKind::ZeroEntry, "m_" + mod.labels[i] + " = 0");
        m.push_back(candidate[i].to_factored());
    }
    return m;
}

/// Positive m from the Perron vector of sum_r N_r^T, scaled to first entry 1 (pseudounitary inputs).
inline std::vector<NumericScalar> fp_module_vector(const ModuleActionData& mod, double tol = default_tolerance)
{
    const auto v = perron_vector(mod.action, true);
    std::vector<NumericScalar> m;
    for (double x : v)
        m.emplace_back(x / v.front(), tol);
    return m;
}

// ---------------------------------------------------------------------------
// the Q element

namespace detail {

// First (i, j, k) with Q_ij m_k != Q_ik m_j, i.e. the columns of Q are not m-proportional.
template <class T>
std::optional<std::array<std::size_t, 3>> proportionality_witness(const Matrix<T>& q, const std::vector<T>& m)
{
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (!(q(i, j) * m[k] == q(i, k) * m[j]))
                    return std::array<std::size_t, 3>{i, j, k};
    return std::nullopt;
}

} // namespace detail

/// m-bar := (Q_M e_j) / m_j, which must not depend on j.
template <class D>
std::vector<D> m_bar(const FusionData<D>& f, const ModuleActionData& mod, const std::vector<D>& m)
{
    const auto q = q_matrix(f, mod.action);
    if (auto w = detail::proportionality_witness(q, m))
        throw Error(ErrorKind::JDependence, "Q_M e_j / m_j differs between j=" + mod.labels[(*w)[1]] +
                                                " and j=" + mod.labels[(*w)[2]] + " at row " + mod.labels[(*w)[0]]);
    std::vector<D> bar;
    const D inv = m.front().inverse();
    for (std::size_t i = 0; i < m.size(); ++i)
        bar.push_back(q(i, 0) * inv);
    return bar;
}

/// The same j-independence test for a symbolic m; a consistent answer cannot be stored as a vector here.
template <class D>
void m_bar_symbolic(const FusionData<D>& f, const ModuleActionData& mod, const std::vector<TorusPolynomial>& m)
{
    const auto q = q_matrix(f, mod.action);
    const int rank = m.front().rank();
    Matrix<TorusPolynomial> qp(q.rows(), q.cols(), TorusPolynomial(m.front().field(), rank));
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j)
            qp(i, j) = TorusPolynomial::constant(q(i, j), rank);
    if (auto w = detail::proportionality_witness(qp, m))
        throw Error(ErrorKind::JDependence, "Q_M e_j / m_j differs between j=" + mod.labels[(*w)[1]] +
                                                " and j=" + mod.labels[(*w)[2]] + " at row " + mod.labels[(*w)[0]]);
    throw Error(ErrorKind::UnsupportedSymbolic, "m-bar is a rational function of the torus parameters");
}

template <class D>
D trace(const Matrix<D>& a)
{
    D acc = zero_like(a(0, 0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        acc += a(i, i);
    return acc;
}

/// Trace, rank-one, Q^2 = dim(C) Q, pivotal normalization and the Hom table.
template <class D>
VerificationReport matched_checks(const FusionData<D>& f, const ModuleActionData& mod, const std::vector<D>& m,
                                  const std::optional<std::type_identity_t<std::vector<D>>>& bar)
{
    VerificationReport report("matched");
    const auto q = q_matrix(f, mod.action);
    const D dim = global_dimension(f);
    const std::size_t n = mod.size();

    const D tr = trace(q);
    if (!(tr == dim))
        report.fail("trace", "Tr(Q_M)=" + to_string(tr) + " but dim(C)=" + to_string(dim));
    const auto rk = rank(q);
    if (rk != 1)
        report.fail("rank", "rank(Q_M)=" + std::to_string(rk));
    const auto q2 = q * q;
    for (std::size_t i = 0; i < n && !report.failed("square"); ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!(q2(i, j) == dim * q(i, j))) {
                report.fail("square", "(Q_M^2)(" + mod.labels[i] + "," + mod.labels[j] + ") != dim(C) Q_M");
                break;
            }
    if (!bar) {
        report.fail("m-bar", "no j-independent m-bar");
        return report;
    }
    D pairing = zero_like(dim);
    for (std::size_t i = 0; i < n; ++i)
        pairing += m[i] * (*bar)[i];
    if (!(pairing == dim))
        report.fail("normalization", "sum m_i mbar_i=" + to_string(pairing) + " but dim(C)=" + to_string(dim));

    const auto& d = f.require_dims();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            D table = zero_like(dim);
            for (std::size_t r = 0; r < f.size(); ++r)
                if (mod.action[r](j, i) != 0)
                    table += d[r] * scalar_from_int(mod.action[r](j, i), dim);
            if (!(table == (*bar)[i] * m[j]))
                report.fail("table", "(i,j)=(" + mod.labels[i] + "," + mod.labels[j] + "): " + to_string(table) +
                                         " != " + to_string((*bar)[i] * m[j]));
        }
    return report;
}

// ---------------------------------------------------------------------------
// characteristic polynomial of S^2

/// n_ijkl = sum_{q,r} N_qi^j C_qr N_rl^k, stored densely at ((i*n + j)*n + k)*n + l.
template <class S>
std::vector<long> multiplicity_table(const FusionData<S>& f, const ModuleActionData& mod)
{
    const std::size_t n = mod.size(), labels = f.size();
    const IntMatrix c = f.cartan_or_identity();
    // left[(i*n+j)*labels + r] = sum_q N_qi^j C_qr ; right[(k*n+l)*labels + r] = N_rl^k
    std::vector<long> left(n * n * labels, 0), right(n * n * labels, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t q = 0; q < labels; ++q) {
                const int nq = mod.action[q](j, i);
                if (nq == 0)
                    continue;
                for (std::size_t r = 0; r < labels; ++r)
                    left[(i * n + j) * labels + r] += static_cast<long>(nq) * c(q, r);
            }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t r = 0; r < labels; ++r)
                right[(k * n + l) * labels + r] = mod.action[r](k, l);
    std::vector<long> table(n * n * n * n, 0);
    for (std::size_t ij = 0; ij < n * n; ++ij)
        for (std::size_t kl = 0; kl < n * n; ++kl) {
            long acc = 0;
            for (std::size_t r = 0; r < labels; ++r)
                acc += left[ij * labels + r] * right[kl * labels + r];
            table[ij * n * n + kl] = acc;
        }
    return table;
}

namespace detail {

// Distinct values of a list, with the index of each input in the distinct list.
template <class V>
std::pair<std::vector<V>, std::vector<std::size_t>> distinct_values(const std::vector<V>& values)
{
    std::vector<V> distinct;
    std::vector<std::size_t> index(values.size());
    if constexpr (MergeTraits<V>::tolerant) {
        for (std::size_t a = 0; a < values.size(); ++a) {
            std::size_t k = 0;
            while (k < distinct.size() && !(distinct[k] == values[a]))
                ++k;
            if (k == distinct.size())
                distinct.push_back(values[a]);
            index[a] = k;
        }
    } else {
        std::map<V, std::size_t> seen;
        for (std::size_t a = 0; a < values.size(); ++a) {
            auto [it, inserted] = seen.emplace(values[a], distinct.size());
            if (inserted)
                distinct.push_back(values[a]);
            index[a] = it->second;
        }
    }
    return {std::move(distinct), std::move(index)};
}

/*
 * Sum over index pairs (a, b) with weight w(a,b) of the products
 * left[a] * right[b], merged.  Equal factors are collapsed before any
 * multiplication, so the cost is governed by the number of distinct
 * factor pairs.
 */
template <class V>
SpectrumFactorization<V> merged_products(const std::vector<V>& left_values, const std::vector<V>& right_values,
                                         const std::vector<long>& weights)
{
    const auto [lv, li] = distinct_values(left_values);
    const auto [rv, ri] = distinct_values(right_values);
    std::vector<long> counts(lv.size() * rv.size(), 0);
    for (std::size_t a = 0; a < left_values.size(); ++a)
        for (std::size_t b = 0; b < right_values.size(); ++b) {
            const long w = weights[a * right_values.size() + b];
            if (w)
                counts[li[a] * rv.size() + ri[b]] += w;
        }
    const std::size_t rows = lv.size();
    const unsigned chunks = planned_chunks(rows, 8);
    std::vector<std::vector<std::pair<V, long>>> partial(chunks);
    parallel_chunks(
        rows,
        [&](std::size_t begin, std::size_t end, unsigned chunk) {
            auto& out = partial[chunk];
            for (std::size_t a = begin; a < end; ++a)
                for (std::size_t b = 0; b < rv.size(); ++b)
                    if (const long c = counts[a * rv.size() + b])
                        out.emplace_back(lv[a] * rv[b], c);
        },
        8);
    std::vector<std::pair<V, long>> pairs;
    for (auto& p : partial)
        pairs.insert(pairs.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    return SpectrumFactorization<V>::from_pairs(std::move(pairs));
}

} // namespace detail

/// chi(z) = prod (z - m_j m_l / (m_i m_k))^{n_ijkl}.
template <class S, class V>
SpectrumFactorization<V> char_poly_s2(const FusionData<S>& f, const ModuleActionData& mod, const std::vector<V>& m)
{
    const std::size_t n = mod.size();
    if (m.size() != n)
        throw Error(ErrorKind::DimensionMismatch, "m has the wrong length");
    const auto table = multiplicity_table(f, mod);
    // eigenvalue = (m_j / m_i) * (m_l / m_k); left index (i,j), right index (k,l)
    std::vector<V> ratios;
    ratios.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            ratios.push_back(m[j] / m[i]);
    std::vector<V> right(n * n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
            right[k * n + l] = ratios[k * n + l];
    return detail::merged_products(ratios, right, table);
}

/// Sum over i,k of n_iikk: a lower bound for the multiplicity of eigenvalue 1.
template <class S>
long diagonal_count(const FusionData<S>& f, const ModuleActionData& mod)
{
    const std::size_t n = mod.size();
    const auto table = multiplicity_table(f, mod);
    long acc = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            acc += table[((i * n + i) * n + k) * n + k];
    return acc;
}

/*
 * Spectrum comparison under a character twist: b_r on labels of C (a ring
 * character) and a compatible grading b_i on M, i.e. b_j = b_r b_i whenever
 * N_ri^j > 0.  The twisted m'_i = m_i b_i is then a trace vector for the
 * twisted dimensions d_r b_r.
 */
template <class S, class V>
bool pivotal_twist_invariance(const FusionData<S>& f, const ModuleActionData& mod, const std::vector<V>& m,
                              const std::vector<V>& twist_labels, const std::vector<V>& twist_module)
{
    if (twist_labels.size() != f.size() || twist_module.size() != mod.size())
        throw Error(ErrorKind::InvalidTwist, "twist vectors have the wrong length");
    for (const auto& b : twist_labels)
        if (is_zero(b))
            throw Error(ErrorKind::InvalidTwist, "twist value 0");
    for (const auto& b : twist_module)
        if (is_zero(b))
            throw Error(ErrorKind::InvalidTwist, "twist value 0");
    for (const auto& [key, c] : f.structure)
        if (!(twist_labels[key[0]] * twist_labels[key[1]] == twist_labels[key[2]]))
            throw Error(ErrorKind::InvalidTwist, "b is not a character: b_" + f.labels[key[0]] + " b_" +
                                                     f.labels[key[1]] + " != b_" + f.labels[key[2]]);
    for (std::size_t r = 0; r < f.size(); ++r)
        for (std::size_t j = 0; j < mod.size(); ++j)
            for (std::size_t i = 0; i < mod.size(); ++i)
                if (mod.action[r](j, i) != 0 && !(twist_module[j] == twist_labels[r] * twist_module[i]))
                    throw Error(ErrorKind::InvalidTwist, "grading incompatible at N_" + f.labels[r] + "(" +
                                                             mod.labels[j] + "," + mod.labels[i] + ")");
    std::vector<V> twisted = m;
    for (std::size_t i = 0; i < m.size(); ++i)
        twisted[i] *= twist_module[i];
    if constexpr (std::is_same_v<S, V>) {
      if (f.dims && m.size() == mod.size()) {
        // m' has to be a dimension vector for the twisted dims d_r b_r
        for (std::size_t r = 0; r < f.size(); ++r)
            for (std::size_t i = 0; i < mod.size(); ++i) {
                V lhs = zero_like(twisted[i]);
                for (std::size_t j = 0; j < mod.size(); ++j)
                    if (mod.action[r](j, i) != 0)
                        lhs += twisted[j] * scalar_from_int(mod.action[r](j, i), twisted[j]);
                if (!(lhs == twisted[i] * (*f.dims)[r] * twist_labels[r]))
                    throw Error(ErrorKind::InvalidTwist, "m' is not a dimension vector for the twisted dims");
            }
      }
    }
    return char_poly_s2(f, mod, m) == char_poly_s2(f, mod, twisted);
}

/// M when the spectrum is exactly (z^ell - 1)^M, i.e. every ell-th root of unity with multiplicity M.
inline std::optional<long> roots_of_unity_power(const SpectrumFactorization<CycNum>& s, int ell)
{
    if (s.distinct() != static_cast<std::size_t>(ell) || s.factors().empty())
        return std::nullopt;
    const long mult = s.factors().front().multiplicity;
    const FieldPtr field = s.factors().front().eigenvalue.field();
    if (field->order() % ell != 0)
        return std::nullopt;
    const int step = field->order() / ell;
    for (int t = 0; t < ell; ++t)
        if (s.multiplicity_of(CycNum::zeta_power(field, static_cast<long>(t) * step)) != mult)
            return std::nullopt;
    return mult;
}

} // namespace antipode

#endif
