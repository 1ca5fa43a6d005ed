#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace adem {

// Exact integer coefficients.  Arbitrary precision so no computation can
// overflow.
struct ZRing {
    using elem = boost::multiprecision::cpp_int;
    static elem zero() { return 0; }
    static elem one() { return 1; }
    static bool is_zero(const elem& x) { return x == 0; }
    static elem neg(const elem& x) { return -x; }
    static elem add(const elem& x, const elem& y) { return x + y; }
    static elem mul(const elem& x, const elem& y) { return x * y; }
    static elem from_int(long v) { return v; }
    // (-1)^parity
    static elem from_sign(int parity) { return (parity & 1) ? -1 : 1; }
    static bool is_unit(const elem& x) { return x == 1 || x == -1; }
    static elem inv(const elem& x) { return x; }  // only valid on units
    static constexpr bool mod2 = false;
    static const char* name() { return "Z"; }
};

// Coefficients in Z/2.
struct Z2Ring {
    using elem = std::uint8_t;
    static elem zero() { return 0; }
    static elem one() { return 1; }
    static bool is_zero(elem x) { return x == 0; }
    static elem neg(elem x) { return x; }
    static elem add(elem x, elem y) { return x ^ y; }
    static elem mul(elem x, elem y) { return x & y; }
    static elem from_int(long v) { return static_cast<elem>(v & 1); }
    static elem from_sign(int) { return 1; }
    static bool is_unit(elem x) { return x == 1; }
    static elem inv(elem x) { return x; }
    static constexpr bool mod2 = true;
    static const char* name() { return "Z/2"; }
};

}  // namespace adem
