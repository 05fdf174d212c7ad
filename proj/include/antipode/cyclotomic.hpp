#ifndef ANTIPODE_CYCLOTOMIC_HPP
#define ANTIPODE_CYCLOTOMIC_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "antipode/error.hpp"
#include "antipode/rational.hpp"

namespace antipode {

/*
 * Q(zeta_n) in the power basis 1, zeta, ..., zeta^{phi(n)-1}, reduced modulo
 * the cyclotomic polynomial Phi_n.  Reduction modulo Phi_n (and not x^n - 1)
 * makes the coefficient vector a canonical form, so equality of field
 * elements is plain vector equality.
 */
class CycField {
public:
    explicit CycField(int order) : order_(order)
    {
        if (order < 1)
            throw Error(ErrorKind::BadParameters, "cyclotomic order must be positive");
        modulus_ = cyclotomic_polynomial(order);
        degree_ = antipode::degree(modulus_);
        // x^k mod Phi_n for k in [degree, 2*degree - 2], used by multiplication.
        QPoly xk(degree_ + 1);
        xk[degree_] = 1;
        for (int k = degree_; k <= std::max(degree_, 2 * degree_ - 2); ++k) {
            auto [q, r] = poly_divmod(xk, modulus_);
            r.resize(degree_);
            high_powers_.push_back(std::move(r));
            xk.insert(xk.begin(), Rational(0));
        }
    }

    int order() const noexcept { return order_; }
    int degree() const noexcept { return degree_; }
    const QPoly& modulus() const noexcept { return modulus_; }

    /// x^k mod Phi_n for degree <= k <= 2*degree - 2, padded to length degree.
    const std::vector<Rational>& high_power(int k) const { return high_powers_[k - degree_]; }

    std::complex<double> zeta() const
    {
        const double angle = 2.0 * std::numbers::pi / order_;
        return {std::cos(angle), std::sin(angle)};
    }

    /// Reduces an arbitrary polynomial in zeta to the canonical coefficient vector.
    std::vector<Rational> reduce(QPoly p) const
    {
        trim(p);
        if (antipode::degree(p) >= degree_)
            p = poly_divmod(std::move(p), modulus_).second;
        p.resize(degree_);
        return p;
    }

    static QPoly cyclotomic_polynomial(int n)
    {
        QPoly p(n + 1);
        p[0] = -1;
        p[n] = 1;
        for (int d = 1; d < n; ++d) {
            if (n % d != 0)
                continue;
            auto [q, r] = poly_divmod(p, cyclotomic_polynomial(d));
            if (!r.empty())
                throw Error(ErrorKind::BadParameters, "inexact cyclotomic division");
            p = std::move(q);
        }
        return p;
    }

private:
    int order_;
    int degree_ = 0;
    QPoly modulus_;
    std::vector<std::vector<Rational>> high_powers_;
};

using FieldPtr = std::shared_ptr<const CycField>;

/// Shared, cached field instance; safe to call from several threads.
inline FieldPtr cyclotomic_field(int order)
{
    static std::mutex mutex;
    static std::map<int, FieldPtr> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(order);
    if (it != cache.end())
        return it->second;
    auto field = std::make_shared<const CycField>(order);
    cache.emplace(order, field);
    return field;
}

inline long positive_mod(long a, long n)
{
    long r = a % n;
    return r < 0 ? r + n : r;
}

class CycNum {
public:
    /// Rational zero in Q = Q(zeta_1).
    CycNum() : CycNum(cyclotomic_field(1), Rational(0)) {}

    CycNum(FieldPtr field, const Rational& value) : field_(std::move(field)), coeffs_(field_->degree())
    {
        coeffs_[0] = value;
    }

    CycNum(FieldPtr field, long value) : CycNum(std::move(field), Rational(value)) {}

    CycNum(FieldPtr field, std::vector<Rational> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs))
    {
        if (static_cast<int>(coeffs_.size()) != field_->degree())
            coeffs_ = field_->reduce(std::move(coeffs_));
    }

    /// zeta_n^k for any integer k.
    static CycNum zeta_power(const FieldPtr& field, long k)
    {
        const long e = positive_mod(k, field->order());
        QPoly p(e + 1);
        p[e] = 1;
        return CycNum(field, field->reduce(std::move(p)));
    }

    const FieldPtr& field() const noexcept { return field_; }
    int order() const noexcept { return field_->order(); }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const
    {
        for (const auto& c : coeffs_)
            if (sgn(c) != 0)
                return false;
        return true;
    }

    bool is_rational() const
    {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (sgn(coeffs_[i]) != 0)
                return false;
        return true;
    }

    CycNum operator-() const
    {
        CycNum r = *this;
        for (auto& c : r.coeffs_)
            c = -c;
        return r;
    }

    CycNum& operator+=(const CycNum& b)
    {
        if (b.order() != order())
            return *this += coerce(b);
        const CycNum& rhs = b;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] += rhs.coeffs_[i];
        return *this;
    }

    CycNum& operator-=(const CycNum& b)
    {
        if (b.order() != order())
            return *this -= coerce(b);
        const CycNum& rhs = b;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] -= rhs.coeffs_[i];
        return *this;
    }

    CycNum& operator*=(const CycNum& b)
    {
        if (b.order() != order())
            return *this *= coerce(b);
        const CycNum& rhs = b;
        const int d = field_->degree();
        if (rhs.is_rational()) {
            for (auto& c : coeffs_)
                c *= rhs.coeffs_[0];
            return *this;
        }
        std::vector<Rational> prod(2 * d - 1);
        for (int i = 0; i < d; ++i) {
            if (sgn(coeffs_[i]) == 0)
                continue;
            for (int j = 0; j < d; ++j)
                if (sgn(rhs.coeffs_[j]) != 0)
                    prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
        for (int i = 0; i < d; ++i)
            coeffs_[i] = prod[i];
        for (int k = d; k < 2 * d - 1; ++k) {
            if (sgn(prod[k]) == 0)
                continue;
            const auto& red = field_->high_power(k);
            for (int i = 0; i < d; ++i)
                if (sgn(red[i]) != 0)
                    coeffs_[i] += prod[k] * red[i];
        }
        return *this;
    }

    CycNum& operator/=(const CycNum& b)
    {
        if (b.order() != order())
            return *this /= coerce(b);
        return *this *= b.inverse();
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Phi_n.
    CycNum inverse() const
    {
        if (is_zero())
            throw Error(ErrorKind::DivisionByZero, "inverse of zero in Q(zeta_" + std::to_string(order()) + ")");
        if (is_rational())
            return CycNum(field_, Rational(1) / coeffs_[0]);
        QPoly a(coeffs_.begin(), coeffs_.end());
        trim(a);
        auto [s, g] = poly_gcdext(a, field_->modulus());
        return CycNum(field_, field_->reduce(std::move(s)));
    }

    /// The field automorphism zeta -> zeta^t; t must be a unit mod n.
    CycNum galois(long t) const
    {
        const long n = order();
        if (std::gcd(positive_mod(t, n), n) != 1)
            throw Error(ErrorKind::BadParameters, "Galois exponent must be a unit modulo the field order");
        QPoly p(n);
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            p[positive_mod(static_cast<long>(k) * t, n)] += coeffs_[k];
        return CycNum(field_, field_->reduce(std::move(p)));
    }

    /// zeta -> zeta^{-1}; complex conjugation under the standard embedding.
    CycNum conj() const { return galois(-1); }

    std::complex<double> to_complex() const
    {
        const std::complex<double> z = field_->zeta();
        std::complex<double> acc = 0, power = 1;
        for (const auto& c : coeffs_) {
            acc += c.get_d() * power;
            power *= z;
        }
        return acc;
    }

    std::string to_string() const
    {
        std::string out;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            const Rational& c = coeffs_[k];
            if (sgn(c) == 0)
                continue;
            Rational mag = abs(c);
            std::string term;
            if (k == 0)
                term = mag.get_str();
            else if (mag == 1)
                term = "z^" + std::to_string(k);
            else
                term = mag.get_str() + "*z^" + std::to_string(k);
            if (out.empty())
                out = (sgn(c) < 0 ? "-" : "") + term;
            else
                out += (sgn(c) < 0 ? " - " : " + ") + term;
        }
        return out.empty() ? "0" : out;
    }

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
    friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }

    friend bool operator==(const CycNum& a, const CycNum& b)
    {
        if (a.order() != b.order()) {
            // Rationals are shared by every field.
            if (a.is_rational() && b.is_rational())
                return a.coeffs_[0] == b.coeffs_[0];
            return false;
        }
        return a.coeffs_ == b.coeffs_;
    }

    /// Canonical total order consistent with ==: rationals first by value, then field order, then coefficients.
    friend bool operator<(const CycNum& a, const CycNum& b)
    {
        const bool ra = a.is_rational(), rb = b.is_rational();
        if (ra != rb)
            return ra;
        if (ra)
            return a.coeffs_[0] < b.coeffs_[0];
        if (a.order() != b.order())
            return a.order() < b.order();
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            const int c = cmp(a.coeffs_[i], b.coeffs_[i]);
            if (c != 0)
                return c < 0;
        }
        return false;
    }

private:
    // Rationals from Q(zeta_1) are promoted silently; any other order clash is an error.
    CycNum coerce(const CycNum& b)
    {
        if (b.order() == 1)
            return CycNum(field_, b.coeffs_[0]);
        if (order() == 1) {
            Rational r = coeffs_[0];
            *this = CycNum(b.field_, r);
            return b;
        }
        throw Error(ErrorKind::FieldMismatch,
                    "Q(zeta_" + std::to_string(order()) + ") vs Q(zeta_" + std::to_string(b.order()) + ")");
    }

    FieldPtr field_;
    std::vector<Rational> coeffs_;
};

} // namespace antipode

#endif
