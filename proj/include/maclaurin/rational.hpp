#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace maclaurin {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    return Rat(num, den);
}

// Number of bits in |x|; 0 for x == 0.
inline long bit_length(const Int& x) {
    if (x == 0) return 0;
    return static_cast<long>(boost::multiprecision::msb(boost::multiprecision::abs(x))) + 1;
}

// Floor / ceiling division with positive divisor.
Int div_floor(const Int& a, const Int& b);
Int div_ceil(const Int& a, const Int& b);

Int int_pow(Int base, unsigned exp);
Rat rat_pow(const Rat& base, unsigned exp);

// C(n, k) as an exact big integer; 0 when k > n.
Int binomial(long n, long k);

// Largest r with r^n <= x.  Requires x >= 0, n >= 1.
Int iroot_floor(const Int& x, unsigned n);

// If x is an exact n-th power of a rational, stores the (nonnegative) root
// and returns true.  Requires x >= 0.
bool exact_nth_root(const Rat& x, unsigned n, Rat& root);

// Parses "p/q" or "p" (optionally signed); used by weights files.
Rat parse_rational(std::string_view token);

std::string rat_to_string(const Rat& value);

// Closest-ish rational to v with denominator <= max_den (continued fractions).
Rat rational_from_double(double v, long long max_den = 1000000000LL);

}  // namespace maclaurin
