#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace seshadri {

// Arbitrary-precision integers and rationals. Every quantity in the library
// that enters an inequality is one of these (or a QuadraticValue); there is
// no floating point anywhere on a decision path.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Input that violates a documented precondition or domain rule.  The CLI
// maps this family to exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A conjecture-conditional hypothesis (NBS threshold) is not met and the
// caller did not pass an assume-conjecture override.  CLI exit code 3.
class HypothesisError : public std::runtime_error {
public:
    explicit HypothesisError(const std::string& what) : std::runtime_error(what) {}
};

inline BigInt isqrt(const BigInt& n) {
    if (n < 0) throw InputError("isqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const BigInt& n) {
    if (n < 0) return false;
    BigInt s = boost::multiprecision::sqrt(n);
    return s * s == n;
}

inline int sign(const BigInt& x) { return x.sign(); }
inline int sign(const Rational& x) { return x.sign(); }

// Largest integer <= num/den (den > 0 not required).
inline BigInt floor_div(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InputError("floor_div: zero denominator");
    BigInt q = num / den;
    if ((num % den) != 0 && ((num < 0) != (den < 0))) --q;
    return q;
}

inline BigInt rational_floor(const Rational& x) {
    return floor_div(numerator(x), denominator(x));
}

inline BigInt rational_ceil(const Rational& x) {
    return -rational_floor(-x);
}

// Canonical "num/den" rendering used in all JSON payloads.
inline std::string rational_str(const Rational& x) {
    return numerator(x).str() + "/" + denominator(x).str();
}

// num/den with any signs; the underlying type insists on den > 0.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InputError("make_rational: zero denominator");
    if (den < 0) return Rational(-num, -den);
    return Rational(num, den);
}

// Accepts "num/den" or a bare integer.
inline Rational parse_rational(const std::string& s) {
    auto pos = s.find('/');
    try {
        if (pos == std::string::npos) return Rational(BigInt(s));
        return make_rational(BigInt(s.substr(0, pos)), BigInt(s.substr(pos + 1)));
    } catch (const std::runtime_error&) {
        throw InputError("parse_rational: cannot parse '" + s + "'");
    }
}

} // namespace seshadri
