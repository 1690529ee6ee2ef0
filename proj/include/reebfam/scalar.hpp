#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <string>

#include "reebfam/errors.hpp"

namespace reebfam {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Which arithmetic produced a value.
enum class Pipeline { exact, floating };

inline double to_double(const Rational& x) { return x.template convert_to<double>(); }
inline double to_double(double x) { return x; }

inline Rational rational_from_int(long long v) { return Rational(v); }

/// Parse "p/q" or a plain integer/decimal string into a Rational (exact).
Rational parse_rational(const std::string& s);
std::string format_rational(const Rational& x);

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool is_exact = true;
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& x, const Rational& = Rational(0)) { return x == 0; }
    static Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }
};

template <>
struct scalar_traits<double> {
    static constexpr bool is_exact = false;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    // zero test relative to a caller-supplied scale
    static bool is_zero(double x, double scale = 1.0) {
        return std::abs(x) <= 1e-9 * (scale > 1.0 ? scale : 1.0);
    }
    static double abs(double x) { return std::abs(x); }
};

}  // namespace reebfam
