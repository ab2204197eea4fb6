#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace nervecheck {

// Exact arithmetic everywhere: entry growth during elimination is unbounded,
// so fixed-width words are not an option.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int gcd_int(const Int& a, const Int& b)
{
    return boost::multiprecision::gcd(a, b);
}

inline Int lcm_int(const Int& a, const Int& b)
{
    return boost::multiprecision::lcm(a, b);
}

}  // namespace nervecheck
