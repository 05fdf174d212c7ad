#ifndef ANTIPODE_FUSION_HPP
#define ANTIPODE_FUSION_HPP

#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "antipode/error.hpp"
#include "antipode/matrix.hpp"
#include "antipode/report.hpp"
#include "antipode/scalar.hpp"

namespace antipode {

/*
 * Grothendieck-ring data of a finite tensor category: labels J, the unit,
 * the duality involution, sparse structure constants c_{qr}^s of
 * X_q X_r = sum_s c_{qr}^s X_s, an optional Cartan matrix (identity when
 * absent, i.e. the semisimple case) and optional pivotal dimensions.
 */
template <class Scalar>
struct FusionData {
    std::vector<std::string> labels;
    int unit = 0;
    std::vector<int> dual;
    std::map<std::array<int, 3>, int> structure; // (q, r, s) -> c_{qr}^s, nonzero entries only
    std::optional<IntMatrix> cartan;
    std::optional<std::vector<Scalar>> dims;

    std::size_t size() const noexcept { return labels.size(); }

    int coefficient(int q, int r, int s) const
    {
        auto it = structure.find({q, r, s});
        return it == structure.end() ? 0 : it->second;
    }

    void set_coefficient(int q, int r, int s, int c)
    {
        if (c == 0)
            structure.erase({q, r, s});
        else
            structure[{q, r, s}] = c;
    }

    int index_of(std::string_view label) const
    {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == label)
                return static_cast<int>(i);
        throw Error(ErrorKind::SchemaError, "unknown label '" + std::string(label) + "'");
    }

    bool semisimple() const { return !cartan || is_identity(*cartan); }

    IntMatrix cartan_or_identity() const
    {
        if (cartan)
            return *cartan;
        IntMatrix c(size(), size(), 0);
        for (std::size_t i = 0; i < size(); ++i)
            c(i, i) = 1;
        return c;
    }

    /// Matrix of x -> X_r x on Gr(C): entry (t, s) is c_{rs}^t.
    IntMatrix left_multiplication(int r) const
    {
        IntMatrix m(size(), size(), 0);
        for (const auto& [key, c] : structure)
            if (key[0] == r)
                m(key[2], key[1]) = c;
        return m;
    }

    const std::vector<Scalar>& require_dims() const
    {
        if (!dims)
            throw Error(ErrorKind::MissingDims, "the category carries no pivotal dimensions");
        return *dims;
    }
};

namespace detail {

inline std::vector<int> dense_structure(const auto& f)
{
    const std::size_t n = f.size();
    std::vector<int> c(n * n * n, 0);
    for (const auto& [key, v] : f.structure)
        c[(key[0] * n + key[1]) * n + key[2]] = v;
    return c;
}

} // namespace detail

/// Checks unit, associativity and the duality involution (plus c_{qr}^1 = delta_{r,q*} when strict).
template <class Scalar>
VerificationReport verify_fusion(const FusionData<Scalar>& f, bool strict_duality)
{
    VerificationReport report("fusion");
    const int n = static_cast<int>(f.size());
    if (n == 0) {
        report.fail("nonempty", "no labels");
        return report;
    }
    auto name = [&](int i) { return f.labels[i]; };
    for (const auto& [key, c] : f.structure) {
        for (int k : key)
            if (k < 0 || k >= n) {
                report.fail("labels", "structure constant index out of range");
                return report;
            }
        if (c < 0)
            report.fail("nonnegative", "c(" + name(key[0]) + "," + name(key[1]) + "->" + name(key[2]) + ")=" +
                                           std::to_string(c));
    }
    if (f.unit < 0 || f.unit >= n) {
        report.fail("unit", "unit label out of range");
        return report;
    }
    if (static_cast<int>(f.dual.size()) != n) {
        report.fail("dual", "duality map must list one label per label");
        return report;
    }

    const auto c = detail::dense_structure(f);
    auto at = [&](int q, int r, int s) { return c[(q * n + r) * n + s]; };

    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
            const int expect = r == s ? 1 : 0;
            if (at(f.unit, r, s) != expect)
                report.fail("unit", "left: (1," + name(r) + "->" + name(s) + ")=" + std::to_string(at(f.unit, r, s)));
            if (at(r, f.unit, s) != expect)
                report.fail("unit", "right: (" + name(r) + ",1->" + name(s) + ")=" + std::to_string(at(r, f.unit, s)));
        }

    for (int q = 0; q < n; ++q)
        for (int r = 0; r < n; ++r)
            for (int s = 0; s < n; ++s)
                for (int u = 0; u < n; ++u) {
                    long lhs = 0, rhs = 0;
                    for (int t = 0; t < n; ++t) {
                        lhs += static_cast<long>(at(q, r, t)) * at(t, s, u);
                        rhs += static_cast<long>(at(r, s, t)) * at(q, t, u);
                    }
                    if (lhs != rhs)
                        report.fail("associativity", "(q,r,s,u)=(" + name(q) + "," + name(r) + "," + name(s) + "," +
                                                         name(u) + "): " + std::to_string(lhs) +
                                                         " != " + std::to_string(rhs));
                }

    for (int r = 0; r < n; ++r) {
        const int d = f.dual[r];
        if (d < 0 || d >= n || f.dual[d] != r)
            report.fail("dual", "not an involution at " + name(r));
    }
    if (f.dual[f.unit] != f.unit)
        report.fail("dual", "dual(unit) != unit");

    if (strict_duality)
        for (int q = 0; q < n; ++q)
            for (int r = 0; r < n; ++r) {
                const int expect = r == f.dual[q] ? 1 : 0;
                if (at(q, r, f.unit) != expect)
                    report.fail("strict-duality", "c(" + name(q) + "," + name(r) + "->1)=" +
                                                      std::to_string(at(q, r, f.unit)));
            }
    return report;
}

/// dim(C) = sum_r d_r d_{r*}.
template <class Scalar>
Scalar global_dimension(const FusionData<Scalar>& f)
{
    const auto& d = f.require_dims();
    Scalar acc = zero_like(d.front());
    for (std::size_t r = 0; r < f.size(); ++r)
        acc += d[r] * d[f.dual[r]];
    if (is_zero(acc))
        throw Error(ErrorKind::ZeroGlobalDimension, "sum_r d_r d_r* vanishes; the dimension data is inconsistent");
    return acc;
}

/// Q_M = sum_r d_{r*} N_r, the action of sum_r dim(X_r^*) X_r on Gr(M).
template <class Scalar>
Matrix<Scalar> q_matrix(const FusionData<Scalar>& f, const std::vector<IntMatrix>& action)
{
    const auto& d = f.require_dims();
    if (action.size() != f.size())
        throw Error(ErrorKind::DimensionMismatch, "one action matrix per label is required");
    const std::size_t m = action.front().rows();
    Matrix<Scalar> q(m, m, zero_like(d.front()));
    for (std::size_t r = 0; r < f.size(); ++r) {
        if (action[r].rows() != m || action[r].cols() != m)
            throw Error(ErrorKind::DimensionMismatch, "action matrices must share one square size");
        const Scalar& w = d[f.dual[r]];
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (action[r](i, j) != 0)
                    q(i, j) += w * scalar_from_int(action[r](i, j), w);
    }
    return q;
}

/*
 * Positive eigenvector of a sum of nonnegative matrices by power iteration on
 * (sum + I), normalized to unit sum.
 */
inline std::vector<double> perron_vector(const std::vector<IntMatrix>& matrices, bool transpose = false,
                                         int max_iterations = 200000)
{
    const std::size_t n = matrices.front().rows();
    std::vector<double> a(n * n, 0.0);
    for (const auto& m : matrices)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a[i * n + j] += transpose ? m(j, i) : m(i, j);
    for (std::size_t i = 0; i < n; ++i)
        a[i * n + i] += 1.0;
    std::vector<double> v(n, 1.0 / static_cast<double>(n)), w(n);
    for (int it = 0; it < max_iterations; ++it) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            w[i] = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                w[i] += a[i * n + j] * v[j];
            sum += w[i];
        }
        double change = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            w[i] /= sum;
            change = std::max(change, std::abs(w[i] - v[i]));
        }
        v.swap(w);
        if (change < 1e-15)
            return v;
    }
    throw Error(ErrorKind::NonConvergence, "power iteration exceeded its budget");
}

/// Frobenius-Perron dimensions: the positive character of Gr(C), numeric.
template <class Scalar>
std::vector<double> fp_dimensions(const FusionData<Scalar>& f)
{
    std::vector<IntMatrix> left;
    for (std::size_t r = 0; r < f.size(); ++r)
        left.push_back(f.left_multiplication(static_cast<int>(r)));
    // The regular element R is the common Perron eigenvector: X_r R = FPdim(X_r) R.
    const auto regular = perron_vector(left);
    std::vector<double> fp(f.size());
    for (std::size_t r = 0; r < f.size(); ++r) {
        double num = 0.0;
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = 0; j < f.size(); ++j)
                num += left[r](i, j) * regular[j];
        fp[r] = num; // regular sums to 1
    }
    return fp;
}

} // namespace antipode

#endif
