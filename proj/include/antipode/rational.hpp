#ifndef ANTIPODE_RATIONAL_HPP
#define ANTIPODE_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

#include "antipode/error.hpp"

namespace antipode {

using Rational = mpq_class;

// Dense univariate polynomial over Q; index k holds the coefficient of x^k.
// Kept trimmed: no trailing zero coefficients, the zero polynomial is empty.
using QPoly = std::vector<Rational>;

inline void trim(QPoly& p)
{
    while (!p.empty() && sgn(p.back()) == 0)
        p.pop_back();
}

inline int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

inline QPoly poly_add(const QPoly& a, const QPoly& b)
{
    QPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] += b[i];
    trim(r);
    return r;
}

inline QPoly poly_sub(const QPoly& a, const QPoly& b)
{
    QPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] -= b[i];
    trim(r);
    return r;
}

inline QPoly poly_mul(const QPoly& a, const QPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    QPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

/// Quotient and remainder of a by a nonzero b.
inline std::pair<QPoly, QPoly> poly_divmod(QPoly a, const QPoly& b)
{
    if (b.empty())
        throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    trim(a);
    if (a.size() < b.size())
        return {QPoly{}, std::move(a)};
    QPoly quot(a.size() - b.size() + 1);
    const Rational& lead = b.back();
    for (int k = degree(a); k >= degree(b); --k) {
        Rational c = a[k] / lead;
        if (sgn(c) == 0)
            continue;
        const int shift = k - degree(b);
        quot[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] -= c * b[j];
    }
    trim(a);
    trim(quot);
    return {std::move(quot), std::move(a)};
}

/// Solves s*a + t*m = gcd(a, m) and returns s together with the monic gcd.
inline std::pair<QPoly, QPoly> poly_gcdext(const QPoly& a, const QPoly& m)
{
    QPoly r0 = m, r1 = a;
    QPoly s0{}, s1{Rational(1)};
    trim(r1);
    while (!r1.empty()) {
        auto [q, r] = poly_divmod(r0, r1);
        QPoly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (!r0.empty()) {
        Rational inv = 1 / r0.back();
        for (auto& c : r0)
            c *= inv;
        for (auto& c : s0)
            c *= inv;
    }
    return {std::move(s0), std::move(r0)};
}

} // namespace antipode

#endif
