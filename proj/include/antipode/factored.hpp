#ifndef ANTIPODE_FACTORED_HPP
#define ANTIPODE_FACTORED_HPP

#include <complex>
#include <compare>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "antipode/cyclotomic.hpp"
#include "antipode/error.hpp"

namespace antipode {

/// Identifies the atomic factor  Lambda^root * zeta^exponent - zeta^{-exponent}.
struct FactorKey {
    std::vector<int> root; // positive root, simple-root coordinates
    int exponent = 0;      // residue mod the field order

    auto operator<=>(const FactorKey&) const = default;
};

/*
 * Rational function in torus parameters Lambda_1..Lambda_r kept as
 *     constant * prod (Lambda^root zeta^a - zeta^{-a})^power.
 *
 * For odd field order the atomic factors are pairwise non-associate
 * irreducibles (distinct roots or distinct zeroes zeta^{-2a}), so the
 * (constant, factor map) pair is a canonical form and value equality is
 * structural equality.  Zero is represented by a zero constant with no
 * factors.
 */
class FactoredValue {
public:
    FactoredValue() = default;
    explicit FactoredValue(CycNum constant) : constant_(std::move(constant)) {}

    static FactoredValue atom(const FieldPtr& field, std::vector<int> root, long exponent, int power = 1)
    {
        FactoredValue v(CycNum(field, 1L));
        if (power != 0)
            v.factors_[FactorKey{std::move(root), static_cast<int>(positive_mod(exponent, field->order()))}] = power;
        return v;
    }

    const CycNum& constant() const noexcept { return constant_; }
    const std::map<FactorKey, int>& factors() const noexcept { return factors_; }
    int order() const noexcept { return constant_.order(); }
    bool is_zero() const { return constant_.is_zero(); }
    bool is_constant() const { return factors_.empty(); }

    FactoredValue& operator*=(const FactoredValue& b) { return combine(b, +1); }
    FactoredValue& operator/=(const FactoredValue& b)
    {
        if (b.is_zero())
            throw Error(ErrorKind::DivisionByZero, "division by the zero rational function");
        return combine(b, -1);
    }

    FactoredValue inverse() const
    {
        FactoredValue one(CycNum(constant_.field(), 1L));
        return one /= *this;
    }

    FactoredValue pow(int e) const
    {
        FactoredValue acc(CycNum(constant_.field(), 1L));
        FactoredValue base = e >= 0 ? *this : inverse();
        for (int k = 0; k < (e >= 0 ? e : -e); ++k)
            acc *= base;
        return acc;
    }

    friend FactoredValue operator*(FactoredValue a, const FactoredValue& b) { return a *= b; }
    friend FactoredValue operator/(FactoredValue a, const FactoredValue& b) { return a /= b; }

    friend bool operator==(const FactoredValue& a, const FactoredValue& b)
    {
        return a.constant_ == b.constant_ && a.factors_ == b.factors_;
    }

    friend bool operator<(const FactoredValue& a, const FactoredValue& b)
    {
        if (a.constant_ < b.constant_)
            return true;
        if (b.constant_ < a.constant_)
            return false;
        return a.factors_ < b.factors_;
    }

    /// Numeric value at a torus point Lambda = (Lambda_1, ..., Lambda_r).
    std::complex<double> evaluate(std::span<const std::complex<double>> torus) const
    {
        std::complex<double> acc = constant_.to_complex();
        const std::complex<double> z = constant_.field()->zeta();
        for (const auto& [key, power] : factors_) {
            std::complex<double> lam = 1.0;
            for (std::size_t i = 0; i < key.root.size(); ++i)
                lam *= std::pow(torus[i], key.root[i]);
            const std::complex<double> za = std::pow(z, key.exponent);
            acc *= std::pow(lam * za - 1.0 / za, power);
        }
        return acc;
    }

    /// Exact substitution of Lambda by field elements.
    CycNum evaluate(std::span<const CycNum> torus) const
    {
        CycNum acc = constant_;
        for (const auto& [key, power] : factors_) {
            CycNum lam(constant_.field(), 1L);
            for (std::size_t i = 0; i < key.root.size(); ++i)
                for (int k = 0; k < key.root[i]; ++k)
                    lam *= torus[i];
            CycNum f = lam * CycNum::zeta_power(constant_.field(), key.exponent) -
                       CycNum::zeta_power(constant_.field(), -key.exponent);
            if (f.is_zero() && power < 0)
                throw Error(ErrorKind::DivisionByZero, "a denominator factor vanishes at this torus point");
            CycNum fp = power > 0 ? f : f.inverse();
            for (int k = 0; k < std::abs(power); ++k)
                acc *= fp;
        }
        return acc;
    }

    /// The limit Lambda -> 0: every factor becomes -zeta^{-a}.
    CycNum at_zero() const
    {
        CycNum acc = constant_;
        for (const auto& [key, power] : factors_) {
            CycNum f = -CycNum::zeta_power(constant_.field(), -key.exponent);
            CycNum fp = power > 0 ? f : f.inverse();
            for (int k = 0; k < std::abs(power); ++k)
                acc *= fp;
        }
        return acc;
    }

    std::string to_string() const
    {
        if (is_zero())
            return "0";
        std::string out;
        const bool unit_constant = constant_ == CycNum(constant_.field(), 1L);
        if (!unit_constant || factors_.empty())
            out = factors_.empty() ? constant_.to_string() : "(" + constant_.to_string() + ")";
        for (const auto& [key, power] : factors_) {
            if (!out.empty())
                out += "*";
            out += "(" + factor_string(key) + ")";
            if (power != 1)
                out += "^" + std::to_string(power);
        }
        return out;
    }

    static std::string factor_string(const FactorKey& key)
    {
        std::string lam;
        for (std::size_t i = 0; i < key.root.size(); ++i) {
            if (key.root[i] == 0)
                continue;
            if (!lam.empty())
                lam += "*";
            lam += (key.root.size() == 1 ? std::string("L") : "L" + std::to_string(i + 1)) + "^" +
                   std::to_string(key.root[i]);
        }
        if (key.exponent == 0)
            return lam + " - 1";
        return lam + "*z^" + std::to_string(key.exponent) + " - z^-" + std::to_string(key.exponent);
    }

private:
    FactoredValue& combine(const FactoredValue& b, int sign)
    {
        if (b.order() != order() && !(b.constant_.is_rational() && b.factors_.empty()) &&
            !(constant_.is_rational() && factors_.empty()))
            throw Error(ErrorKind::FieldMismatch, "factored values over different cyclotomic fields");
        if (sign > 0)
            constant_ *= b.constant_;
        else
            constant_ /= b.constant_;
        if (constant_.is_zero()) {
            factors_.clear();
            return *this;
        }
        for (const auto& [key, power] : b.factors_) {
            int& p = factors_[key];
            p += sign * power;
            if (p == 0)
                factors_.erase(key);
        }
        return *this;
    }

    CycNum constant_;
    std::map<FactorKey, int> factors_;
};

} // namespace antipode

#endif
