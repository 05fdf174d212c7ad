#ifndef ANTIPODE_PIVOTALIZATION_HPP
#define ANTIPODE_PIVOTALIZATION_HPP

#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "antipode/error.hpp"
#include "antipode/fusion.hpp"
#include "antipode/matrix.hpp"
#include "antipode/module_action.hpp"
#include "antipode/scalar.hpp"
#include "antipode/spectrum.hpp"

namespace antipode {

/// +-sqrt(squared), kept unextracted.
template <class D>
struct SignedEigenvalue {
    D squared;
    int sign = 1;

    SignedEigenvalue inverse() const { return {one_like(squared) / squared, sign}; }

    friend SignedEigenvalue operator*(const SignedEigenvalue& a, const SignedEigenvalue& b)
    {
        return {a.squared * b.squared, a.sign * b.sign};
    }
    friend bool operator==(const SignedEigenvalue& a, const SignedEigenvalue& b)
    {
        return a.sign == b.sign && a.squared == b.squared;
    }
    friend bool operator<(const SignedEigenvalue& a, const SignedEigenvalue& b)
        requires CanonicallyOrdered<D>
    {
        if (a.sign != b.sign)
            return a.sign > b.sign;
        return a.squared < b.squared;
    }
};

template <class D>
struct MergeTraits<SignedEigenvalue<D>> {
    static constexpr bool tolerant = is_numeric_v<D>;
};

template <class D>
std::complex<double> approximate(const SignedEigenvalue<D>& v)
{
    return static_cast<double>(v.sign) * std::sqrt(approximate(v.squared));
}

template <class D>
std::string to_string(const SignedEigenvalue<D>& v)
{
    return std::string(v.sign > 0 ? "+" : "-") + "sqrt(" + to_string(v.squared) + ")";
}

/// Sign of a real scalar; nullopt when it is not real or is zero.
inline std::optional<int> real_sign(const CycNum& x)
{
    if (x.is_zero() || !(x == x.conj()))
        return std::nullopt;
    return x.to_complex().real() > 0 ? 1 : -1;
}

inline std::optional<int> real_sign(const NumericScalar& x)
{
    const auto c = x.to_complex();
    if (std::abs(c.imag()) > x.tolerance() || std::abs(c.real()) <= x.tolerance())
        return std::nullopt;
    return c.real() > 0 ? 1 : -1;
}

/// Müger squared norms and the signed split N = N+ + N- (matrices indexed (j, i) like the action).
template <class D>
struct PivotalizationData {
    std::vector<D> nu;
    std::vector<IntMatrix> n_plus;
    std::vector<IntMatrix> n_minus;
};

namespace detail {

template <class D>
void check_pivotalization(const PivotalizationData<D>& p, const ModuleActionData& mod)
{
    const std::size_t n = mod.size();
    if (p.nu.size() != n)
        throw Error(ErrorKind::DimensionMismatch, "nu has " + std::to_string(p.nu.size()) + " entries, expected " +
                                                      std::to_string(n));
    if (p.n_plus.size() != mod.action.size() || p.n_minus.size() != mod.action.size())
        throw Error(ErrorKind::SignSplitMismatch, "N+ / N- need one matrix per label");
    for (std::size_t r = 0; r < mod.action.size(); ++r) {
        const auto& a = mod.action[r];
        const auto& plus = p.n_plus[r];
        const auto& minus = p.n_minus[r];
        if (plus.rows() != n || plus.cols() != n || minus.rows() != n || minus.cols() != n)
            throw Error(ErrorKind::SignSplitMismatch, "N+ / N- for label " + std::to_string(r) + " have the wrong shape");
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i)
                if (plus(j, i) < 0 || minus(j, i) < 0 || plus(j, i) + minus(j, i) != a(j, i))
                    throw Error(ErrorKind::SignSplitMismatch,
                                "N+ + N- != N for label " + std::to_string(r) + " at (" + mod.labels[j] + "," +
                                    mod.labels[i] + ")");
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto s = real_sign(p.nu[i]);
        if (!s || *s < 0)
            throw Error(ErrorKind::NonRealSigns, "nu_" + mod.labels[i] + " = " + to_string(p.nu[i]) + " is not positive");
    }
}

} // namespace detail

/// chi(z) = prod (z - lambda)^{n+} (z + lambda)^{n-}, lambda^2 = nu_j nu_l / (nu_i nu_k).
template <class D>
SpectrumFactorization<SignedEigenvalue<D>> char_poly_pivotalized(const PivotalizationData<D>& p,
                                                                 const ModuleActionData& mod)
{
    detail::check_pivotalization(p, mod);
    const std::size_t n = mod.size(), pairs = n * n;
    std::vector<long> plus(pairs * pairs, 0), minus(pairs * pairs, 0);
    for (std::size_t r = 0; r < mod.action.size(); ++r) {
        const auto& np = p.n_plus[r];
        const auto& nm = p.n_minus[r];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const long lp = np(j, i), lm = nm(j, i);
                if (!lp && !lm)
                    continue;
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t l = 0; l < n; ++l) {
                        const long rp = np(k, l), rm = nm(k, l);
                        const std::size_t at = (i * n + j) * pairs + k * n + l;
                        plus[at] += lp * rp + lm * rm;
                        minus[at] += lp * rm + lm * rp;
                    }
            }
    }
    std::vector<SignedEigenvalue<D>> ratios, negated;
    ratios.reserve(pairs);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            ratios.push_back({p.nu[j] / p.nu[i], 1});
    negated = ratios;
    for (auto& v : negated)
        v.sign = -1;
    auto up = detail::merged_products(ratios, ratios, plus);
    auto down = detail::merged_products(ratios, negated, minus);
    std::vector<std::pair<SignedEigenvalue<D>, long>> all;
    for (const auto* s : {&up, &down})
        for (const auto& f : s->factors())
            all.emplace_back(f.eigenvalue, f.multiplicity);
    return SpectrumFactorization<SignedEigenvalue<D>>::from_pairs(std::move(all));
}

/// Sign bookkeeping for a matched pivotal structure with real, possibly negative, dimensions.
template <class D>
PivotalizationData<D> from_matched_pivotal(const FusionData<D>& f, const ModuleActionData& mod,
                                           const std::vector<D>& m)
{
    const auto& d = f.require_dims();
    if (m.size() != mod.size())
        throw Error(ErrorKind::DimensionMismatch, "m has the wrong length");
    std::vector<int> dim_sign(f.size()), m_sign(mod.size());
    for (std::size_t r = 0; r < f.size(); ++r) {
        const auto s = real_sign(d[r]);
        if (!s)
            throw Error(ErrorKind::NonRealSigns, "dim(" + f.labels[r] + ") = " + to_string(d[r]) + " is not real");
        dim_sign[r] = *s;
    }
    for (std::size_t i = 0; i < mod.size(); ++i) {
        const auto s = real_sign(m[i]);
        if (!s)
            throw Error(ErrorKind::NonRealSigns, "m_" + mod.labels[i] + " = " + to_string(m[i]) + " is not real");
        m_sign[i] = *s;
    }
    const auto bar = m_bar(f, mod, m);
    PivotalizationData<D> p;
    for (std::size_t i = 0; i < mod.size(); ++i)
        p.nu.push_back(m[i] * bar[i]);
    const std::size_t n = mod.size();
    for (std::size_t r = 0; r < f.size(); ++r) {
        IntMatrix plus(n, n, 0), minus(n, n, 0);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) {
                const long v = mod.action[r](j, i);
                if (!v)
                    continue;
                (dim_sign[r] * m_sign[i] * m_sign[j] > 0 ? plus : minus)(j, i) = v;
            }
        p.n_plus.push_back(std::move(plus));
        p.n_minus.push_back(std::move(minus));
    }
    return p;
}

/// Rewrites a spectrum with real eigenvalues as (lambda^2, sign lambda).
template <class D>
SpectrumFactorization<SignedEigenvalue<D>> signed_spectrum(const SpectrumFactorization<D>& s)
{
    std::vector<std::pair<SignedEigenvalue<D>, long>> pairs;
    for (const auto& f : s.factors()) {
        const auto sign = real_sign(f.eigenvalue);
        if (!sign)
            throw Error(ErrorKind::NonRealSigns, "eigenvalue " + to_string(f.eigenvalue) + " is not real");
        pairs.emplace_back(SignedEigenvalue<D>{f.eigenvalue * f.eigenvalue, *sign}, f.multiplicity);
    }
    return SpectrumFactorization<SignedEigenvalue<D>>::from_pairs(std::move(pairs));
}

} // namespace antipode

#endif
