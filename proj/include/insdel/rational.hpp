#ifndef INSDEL_RATIONAL_HPP
#define INSDEL_RATIONAL_HPP

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

// Exact arithmetic helpers shared by all bound computations. Every feasibility
// comparison in this library is an exact rational comparison; doubles appear
// only in reporting and in the two closed forms that genuinely contain a
// square root (t_equal and the deletion-radius curve).

namespace insdel {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

// Floor of a rational (works for negative values too).
inline Int rat_floor(const Rational& r) {
    Int n = rat_num(r), d = rat_den(r);  // d > 0 canonically
    Int q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

inline Int rat_ceil(const Rational& r) {
    Int n = rat_num(r), d = rat_den(r);
    Int q = n / d;
    if (n % d != 0 && n > 0) ++q;
    return q;
}

inline double rat_double(const Rational& r) { return r.convert_to<double>(); }

inline long long to_ll(const Int& v) { return v.convert_to<long long>(); }

// Floor of the integer square root.
inline Int isqrt(const Int& v) {
    if (v < 0) throw std::domain_error("isqrt of negative value");
    return boost::multiprecision::sqrt(v);
}

// Parses "7", "-3/4" or "0.25" into an exact rational. Decimal strings are
// converted digit-by-digit so no binary float is ever involved.
Rational parse_rational(const std::string& text);

// "num/den" (or just "num" when integral).
std::string rat_string(const Rational& r);

// Smallest rational >= sqrt(x) whose denominator is at most max_den.
// Exact whenever x is the square of a rational.
Rational sqrt_upper(const Rational& x, unsigned max_den = 1u << 16);

}  // namespace insdel

#endif
