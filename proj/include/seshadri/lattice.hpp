#pragma once

#include <cstddef>
#include <vector>

#include "seshadri/numeric.hpp"
#include "seshadri/quadratic.hpp"

namespace seshadri {

/**
 * A ruled surface X -> Gamma reduced to the data the lattice needs: the
 * genus g of the base curve, the invariant e of the surface, and whether
 * X is the product Gamma x P^1.
 */
struct SurfaceParams {
    long long g = 0;
    long long e = 0;
    bool is_product = false;
};

// Validates (g, e, product) and names the violated rule on rejection:
// g >= 0, product forces e = 0, and e >= -g.
SurfaceParams make_surface(long long g, long long e, bool is_product);

/**
 * An element a*H_e + b*F_e - sum_i n_i*E_i of Num(X_r).  The number of
 * exceptional multiplicities r is part of the value; classes interoperate
 * only with equal r.
 *
 * H_e, F_e are the pullbacks of the normalized section Gamma_e and the
 * fiber f; E_i are the exceptional curves of the blown-up points.
 */
struct DivisorClass {
    BigInt a;
    BigInt b;
    std::vector<BigInt> mults;

    std::size_t r() const { return mults.size(); }

    bool operator==(const DivisorClass& o) const {
        return a == o.a && b == o.b && mults == o.mults;
    }
};

// Lexicographic order on (a, b, mults); used for deterministic output.
bool lex_less(const DivisorClass& x, const DivisorClass& y);

// Basis classes.
DivisorClass gamma_class(std::size_t r);               // Gamma_e = (1,0; 0..0)
DivisorClass fiber_class(std::size_t r);               // f       = (0,1; 0..0)
DivisorClass exceptional_class(std::size_t i, std::size_t r); // E_{i+1}

DivisorClass operator+(const DivisorClass& x, const DivisorClass& y);
DivisorClass operator-(const DivisorClass& x, const DivisorClass& y);
DivisorClass operator*(const BigInt& k, const DivisorClass& x);

/**
 * The intersection pairing on Num(X_r):
 *   H_e^2 = -e,  H_e.F_e = 1,  F_e^2 = 0,  E_i.E_j = -delta_ij,
 *   E_i orthogonal to H_e and F_e.
 * Symmetric and bilinear; classes must share r.
 */
BigInt intersect(const DivisorClass& d1, const DivisorClass& d2, const SurfaceParams& s);

// K_{X_r} = -2 H_e - (e+2-2g) F_e + sum E_i.
DivisorClass canonical_class(const SurfaceParams& s, std::size_t r);

// p_a(C) = 1 + (C^2 + K.C)/2.
Rational arithmetic_genus(const DivisorClass& c, const SurfaceParams& s);

// Numerical strict transform alpha*H_e + beta*F_e - sum m_i E_i of an
// effective curve; multiplicities must be nonnegative.
DivisorClass strict_transform(const BigInt& a, const BigInt& b, std::vector<BigInt> mults);

/**
 * A divisor class with one extra exceptional multiplicity that may be a
 * quadratic irrational: models pullback(L) - c*E_x on the blow-up at one
 * more point x.
 */
struct ExtendedDivisorClass {
    DivisorClass base;
    QuadraticValue ex_mult;
};

} // namespace seshadri
