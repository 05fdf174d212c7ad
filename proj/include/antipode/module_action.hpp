#ifndef ANTIPODE_MODULE_ACTION_HPP
#define ANTIPODE_MODULE_ACTION_HPP

#include <numeric>
#include <string>
#include <vector>

#include "antipode/error.hpp"
#include "antipode/fusion.hpp"
#include "antipode/matrix.hpp"
#include "antipode/report.hpp"

namespace antipode {

/// Gr(M) as a Z_+-module: action[r](j, i) = N_{ri}^j = dim Hom(X_r (x) M_i, M_j).
struct ModuleActionData {
    std::vector<std::string> labels;
    std::vector<IntMatrix> action;

    std::size_t size() const noexcept { return labels.size(); }

    int index_of(const std::string& label) const
    {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == label)
                return static_cast<int>(i);
        throw Error(ErrorKind::SchemaError, "unknown module label '" + label + "'");
    }

    long row_total(int r) const
    {
        long t = 0;
        const auto& n = action[r];
        for (std::size_t j = 0; j < n.rows(); ++j)
            for (std::size_t i = 0; i < n.cols(); ++i)
                t += n(j, i);
        return t;
    }
};

namespace detail {

inline bool support_connected(const ModuleActionData& m)
{
    const std::size_t n = m.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& a : m.action)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i)
                if (a(j, i) > 0)
                    parent[find(i)] = find(j);
    for (std::size_t i = 1; i < n; ++i)
        if (find(i) != find(0))
            return false;
    return true;
}

} // namespace detail

template <class Scalar>
VerificationReport verify_module(const FusionData<Scalar>& f, const ModuleActionData& m)
{
    VerificationReport report("module");
    const std::size_t n = m.size();
    if (n == 0) {
        report.fail("nonempty", "no module labels");
        return report;
    }
    if (m.action.size() != f.size()) {
        report.fail("shape", "expected " + std::to_string(f.size()) + " action matrices, got " +
                                 std::to_string(m.action.size()));
        return report;
    }
    for (std::size_t r = 0; r < f.size(); ++r)
        if (m.action[r].rows() != n || m.action[r].cols() != n) {
            report.fail("shape", "N_" + f.labels[r] + " is not " + std::to_string(n) + "x" + std::to_string(n));
            return report;
        }

    for (std::size_t r = 0; r < f.size(); ++r)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i)
                if (m.action[r](j, i) < 0)
                    report.fail("nonnegative", "N_" + f.labels[r] + "(" + m.labels[j] + "," + m.labels[i] + ")=" +
                                                   std::to_string(m.action[r](j, i)));

    const IntMatrix& unit = m.action[f.unit];
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (unit(j, i) != (i == j ? 1 : 0))
                report.fail("unit", "N_1(" + m.labels[j] + "," + m.labels[i] + ")=" + std::to_string(unit(j, i)));

    for (std::size_t q = 0; q < f.size(); ++q)
        for (std::size_t r = 0; r < f.size(); ++r) {
            const IntMatrix lhs = m.action[q] * m.action[r];
            IntMatrix rhs(n, n, 0);
            for (std::size_t s = 0; s < f.size(); ++s) {
                const int c = f.coefficient(static_cast<int>(q), static_cast<int>(r), static_cast<int>(s));
                if (c == 0)
                    continue;
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t i = 0; i < n; ++i)
                        rhs(j, i) += c * m.action[s](j, i);
            }
            if (!(lhs == rhs))
                report.fail("action", "N_" + f.labels[q] + " N_" + f.labels[r] + " != sum_s c N_s");
        }

    for (std::size_t r = 0; r < f.size(); ++r)
        if (!(m.action[f.dual[r]] == m.action[r].transpose()))
            report.fail("duality", "N_" + f.labels[f.dual[r]] + " != transpose(N_" + f.labels[r] + ")");

    if (!detail::support_connected(m))
        report.fail("indecomposable", "support graph on module labels is disconnected");
    return report;
}

/// True iff the invertible class acts trivially on Gr(M).
inline bool d_action_triviality(const ModuleActionData& m, int label)
{
    const IntMatrix& a = m.action.at(label);
    for (std::size_t i = 0; i < a.cols(); ++i) {
        int ones = 0;
        for (std::size_t j = 0; j < a.rows(); ++j) {
            if (a(j, i) != 0 && a(j, i) != 1)
                throw Error(ErrorKind::NotInvertibleClass, "action matrix is not a permutation");
            ones += a(j, i);
        }
        if (ones != 1)
            throw Error(ErrorKind::NotInvertibleClass, "action matrix is not a permutation");
    }
    for (std::size_t j = 0; j < a.rows(); ++j) {
        int ones = 0;
        for (std::size_t i = 0; i < a.cols(); ++i)
            ones += a(j, i);
        if (ones != 1)
            throw Error(ErrorKind::NotInvertibleClass, "action matrix is not a permutation");
    }
    return is_identity(a);
}

/// sum_{q,r} rowTotal(q) C_qr rowTotal(r): the dimension of the weak Hopf algebra.
template <class Scalar>
long dimension_identity(const FusionData<Scalar>& f, const ModuleActionData& m)
{
    const IntMatrix c = f.cartan_or_identity();
    std::vector<long> totals(f.size());
    for (std::size_t r = 0; r < f.size(); ++r)
        totals[r] = m.row_total(static_cast<int>(r));
    long acc = 0;
    for (std::size_t q = 0; q < f.size(); ++q)
        for (std::size_t r = 0; r < f.size(); ++r)
            acc += totals[q] * c(q, r) * totals[r];
    return acc;
}

} // namespace antipode

#endif
