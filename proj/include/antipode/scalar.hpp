#ifndef ANTIPODE_SCALAR_HPP
#define ANTIPODE_SCALAR_HPP

#include <complex>
#include <concepts>
#include <string>
#include <type_traits>

#include "antipode/cyclotomic.hpp"
#include "antipode/factored.hpp"
#include "antipode/numeric.hpp"

namespace antipode {

// Uniform helpers so the linear-algebra and spectrum templates can run over
// CycNum (exact), NumericScalar (tolerance) and FactoredValue (symbolic).

inline bool is_zero(const CycNum& x) { return x.is_zero(); }
inline bool is_zero(const NumericScalar& x) { return x.is_zero(); }
inline bool is_zero(const FactoredValue& x) { return x.is_zero(); }

inline CycNum zero_like(const CycNum& x) { return CycNum(x.field(), 0L); }
inline CycNum one_like(const CycNum& x) { return CycNum(x.field(), 1L); }
inline NumericScalar zero_like(const NumericScalar& x) { return NumericScalar(0.0, x.tolerance()); }
inline NumericScalar one_like(const NumericScalar& x) { return NumericScalar(1.0, x.tolerance()); }
inline FactoredValue zero_like(const FactoredValue& x) { return FactoredValue(CycNum(x.constant().field(), 0L)); }
inline FactoredValue one_like(const FactoredValue& x) { return FactoredValue(CycNum(x.constant().field(), 1L)); }

inline std::string to_string(const CycNum& x) { return x.to_string(); }
inline std::string to_string(const NumericScalar& x) { return x.to_string(); }
inline std::string to_string(const FactoredValue& x) { return x.to_string(); }

inline std::complex<double> approximate(const CycNum& x) { return x.to_complex(); }
inline std::complex<double> approximate(const NumericScalar& x) { return x.to_complex(); }

/// Types whose operator< is a strict total order on canonical forms.
template <class T>
concept CanonicallyOrdered = requires(const T& a, const T& b) {
    { a < b } -> std::convertible_to<bool>;
};

template <class T>
inline constexpr bool is_numeric_v = std::is_same_v<T, NumericScalar>;

/// Maps a dimension-field value into the eigenvalue type V (shaped like `like`).
template <class V>
V lift(const CycNum& x, const V& like)
{
    if constexpr (std::is_same_v<V, CycNum>)
        return x;
    else if constexpr (std::is_same_v<V, FactoredValue>)
        return FactoredValue(x);
    else
        return NumericScalar(x.to_complex(), like.tolerance());
}

inline NumericScalar lift(const NumericScalar& x, const NumericScalar&) { return x; }

inline NumericScalar to_numeric(const CycNum& x, double tol = default_tolerance) { return {x.to_complex(), tol}; }

} // namespace antipode

#endif
