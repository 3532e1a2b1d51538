#pragma once

#include <compare>
#include <string>
#include <vector>

#include "seshadri/numeric.hpp"

namespace seshadri {

/**
 * An exact value p + q*sqrt(d) with p, q rational and d a square-free
 * nonnegative integer.
 *
 * Canonical form: d is square-free; if the value is rational then q = 0 and
 * d = 0.  Equality is therefore componentwise.  Values are immutable after
 * construction.
 */
class QuadraticValue {
public:
    QuadraticValue() : p_(0), q_(0), d_(0) {}
    QuadraticValue(const Rational& p) : p_(p), q_(0), d_(0) {}          // NOLINT
    QuadraticValue(const BigInt& p) : p_(Rational(p)), q_(0), d_(0) {}  // NOLINT
    QuadraticValue(long long p) : p_(Rational(p)), q_(0), d_(0) {}      // NOLINT
    QuadraticValue(const Rational& p, const Rational& q, const BigInt& d);

    const Rational& rational_part() const { return p_; }
    const Rational& radical_coeff() const { return q_; }
    const BigInt& radicand() const { return d_; }

    bool is_rational() const { return q_ == 0; }
    bool is_zero() const { return p_ == 0 && q_ == 0; }
    // Only valid when is_rational().
    const Rational& as_rational() const;

    QuadraticValue operator-() const;
    QuadraticValue operator+(const QuadraticValue& o) const;
    QuadraticValue operator-(const QuadraticValue& o) const;
    QuadraticValue operator*(const QuadraticValue& o) const;

    bool operator==(const QuadraticValue& o) const {
        return p_ == o.p_ && q_ == o.q_ && d_ == o.d_;
    }

    std::string str() const;

private:
    Rational p_;
    Rational q_;
    BigInt d_;
};

/**
 * Exact total-order comparison of two quadratic values sharing a radicand
 * (or with at least one side rational).  Decided by isolating the radical
 * and squaring with sign analysis; no floating point.
 *
 * Throws InputError when both sides carry distinct irrational radicands.
 */
std::strong_ordering quad_cmp(const QuadraticValue& x, const QuadraticValue& y);

inline bool operator<(const QuadraticValue& a, const QuadraticValue& b) {
    return quad_cmp(a, b) == std::strong_ordering::less;
}
inline bool operator>(const QuadraticValue& a, const QuadraticValue& b) {
    return quad_cmp(a, b) == std::strong_ordering::greater;
}
inline bool operator<=(const QuadraticValue& a, const QuadraticValue& b) {
    return quad_cmp(a, b) != std::strong_ordering::greater;
}
inline bool operator>=(const QuadraticValue& a, const QuadraticValue& b) {
    return quad_cmp(a, b) != std::strong_ordering::less;
}

// sqrt(n) as k*sqrt(d) with n = k^2*d, d square-free.  Perfect squares come
// back rational.  Negative n is a domain error.
QuadraticValue sqrt_symbolic(const BigInt& n);

// sqrt(x) for a nonnegative rational: sqrt(p/q) = sqrt(p*q)/q.
QuadraticValue sqrt_rational(const Rational& x);

// Decimal rendering with the given number of significant digits, for the
// CLI --approx flag and the test oracle.  Not used in any decision path.
std::string approx_decimal(const QuadraticValue& v, unsigned digits);

} // namespace seshadri
