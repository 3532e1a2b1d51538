#include "seshadri/quadratic.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <sstream>

namespace seshadri {

namespace {

// n = k^2 * d with d square-free; returns (k, d).  Trial division: radicands
// in this library come from self-intersection numbers, which stay small even
// when the surrounding thresholds do not.
std::pair<BigInt, BigInt> extract_square(const BigInt& n) {
    if (n == 0) return {0, 0};
    BigInt root = isqrt(n);
    if (root * root == n) return {root, 1};
    BigInt k = 1, d = 1, m = n;
    for (BigInt p = 2; p * p <= m; p = (p == 2 ? BigInt(3) : BigInt(p + 2))) {
        if (m % p != 0) continue;
        unsigned exp = 0;
        while (m % p == 0) {
            m /= p;
            ++exp;
        }
        for (unsigned i = 0; i + 1 < exp; i += 2) k *= p;
        if (exp % 2 == 1) d *= p;
    }
    d *= m; // leftover factor appears exactly once
    return {k, d};
}

} // namespace

QuadraticValue::QuadraticValue(const Rational& p, const Rational& q, const BigInt& d)
    : p_(p), q_(q), d_(d) {
    if (d_ < 0) throw InputError("QuadraticValue: negative radicand");
    if (q_ == 0) {
        d_ = 0;
        return;
    }
    auto [k, sf] = extract_square(d_);
    if (sf <= 1) { // d was 0, 1 or a perfect square: value is rational
        p_ += q_ * Rational(k);
        q_ = 0;
        d_ = 0;
        return;
    }
    q_ *= Rational(k);
    d_ = sf;
}

const Rational& QuadraticValue::as_rational() const {
    if (!is_rational()) throw InputError("QuadraticValue: not rational: " + str());
    return p_;
}

QuadraticValue QuadraticValue::operator-() const {
    QuadraticValue r;
    r.p_ = -p_;
    r.q_ = -q_;
    r.d_ = d_;
    return r;
}

namespace {
// Common radicand for a binary operation; throws on two distinct irrationals.
BigInt align_radicand(const QuadraticValue& x, const QuadraticValue& y) {
    if (x.is_rational()) return y.radicand();
    if (y.is_rational()) return x.radicand();
    if (x.radicand() != y.radicand())
        throw InputError("mixed radicands sqrt(" + x.radicand().str() + ") and sqrt(" +
                         y.radicand().str() + ") are unsupported");
    return x.radicand();
}
} // namespace

QuadraticValue QuadraticValue::operator+(const QuadraticValue& o) const {
    BigInt d = align_radicand(*this, o);
    return QuadraticValue(p_ + o.p_, q_ + o.q_, d);
}

QuadraticValue QuadraticValue::operator-(const QuadraticValue& o) const {
    return *this + (-o);
}

QuadraticValue QuadraticValue::operator*(const QuadraticValue& o) const {
    BigInt d = align_radicand(*this, o);
    // (p1 + q1 s)(p2 + q2 s) = p1 p2 + q1 q2 d + (p1 q2 + p2 q1) s
    return QuadraticValue(p_ * o.p_ + q_ * o.q_ * Rational(d), p_ * o.q_ + o.p_ * q_, d);
}

std::strong_ordering quad_cmp(const QuadraticValue& x, const QuadraticValue& y) {
    BigInt d = align_radicand(x, y);
    Rational a = x.rational_part() - y.rational_part();
    Rational b = x.radical_coeff() - y.radical_coeff();
    // x - y = a + b*sqrt(d); decide the sign of that.
    if (b == 0) return a.sign() <=> 0;
    if (a == 0) return b.sign() <=> 0; // sqrt(d) > 0 here: b != 0 forces d >= 2
    if (a.sign() == b.sign()) return a.sign() <=> 0;
    // Opposite signs: |a| vs |b| sqrt(d), squared.
    Rational lhs = a * a;
    Rational rhs = b * b * Rational(d);
    if (lhs > rhs) return a.sign() <=> 0;
    if (lhs < rhs) return b.sign() <=> 0;
    return std::strong_ordering::equal; // unreachable for square-free d >= 2
}

QuadraticValue sqrt_symbolic(const BigInt& n) {
    if (n < 0) throw InputError("sqrt_symbolic: negative argument " + n.str());
    return QuadraticValue(Rational(0), Rational(1), n);
}

QuadraticValue sqrt_rational(const Rational& x) {
    if (x < 0) throw InputError("sqrt_rational: negative argument " + rational_str(x));
    // sqrt(p/q) = sqrt(p*q) / q
    BigInt num = numerator(x), den = denominator(x);
    QuadraticValue root = sqrt_symbolic(num * den);
    return QuadraticValue(root.rational_part() / Rational(den),
                          root.radical_coeff() / Rational(den), root.radicand());
}

std::string QuadraticValue::str() const {
    if (is_rational()) return rational_str(p_);
    return rational_str(p_) + " + " + rational_str(q_) + "*sqrt(" + d_.str() + ")";
}

std::string approx_decimal(const QuadraticValue& v, unsigned digits) {
    using Dec = boost::multiprecision::cpp_dec_float_100;
    if (digits == 0 || digits > 90) throw InputError("approx_decimal: digits must be in [1,90]");
    Dec val = v.rational_part().convert_to<Dec>() +
              v.radical_coeff().convert_to<Dec>() * sqrt(Dec(v.radicand()));
    std::ostringstream os;
    os.precision(digits);
    os << val;
    return os.str();
}

} // namespace seshadri
