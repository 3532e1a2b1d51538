#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seshadri/curves.hpp"
#include "seshadri/lattice.hpp"

namespace seshadri {

/**
 * Result of the good-form test for L = a*H_e + b*F_e - sum n_i E_i.
 * The decomposition re-expresses L against (H_e, F_e, H'_1, ..., H'_r)
 * with H'_i = 2 H_e + (e+2-2g) F_e - (E_1 + ... + E_i):
 *   c_H = a - 2 n_1, c_F = b - (e+2-2g) n_1, c_i = n_i - n_{i+1}, c_r = n_r,
 * taken over the multiplicities sorted in descending order.
 */
struct GoodFormReport {
    bool is_good = false;
    std::optional<std::string> failed_condition; // "i", "ii", "iii" or "iv"
    QuadraticValue c_H;
    QuadraticValue c_F;
    std::vector<QuadraticValue> c; // coefficients of H'_1..H'_r
    std::vector<QuadraticValue> sorted_mults;
    std::vector<std::size_t> permutation; // sorted_mults[k] = input mults[permutation[k]]
};

// Ampleness of a*Gamma_e + b*f on the ruled surface itself:
// a > 0 and b > a*e (e >= 0) resp. 2b > a*e (e < 0).
bool is_ample_base(const SurfaceParams& s, const BigInt& a, const BigInt& b);

GoodFormReport decompose_good_form(const DivisorClass& l, const SurfaceParams& s);
GoodFormReport decompose_good_form(const ExtendedDivisorClass& l, const SurfaceParams& s);

/**
 * The four-condition normal form over the sorted multiplicities:
 *   (i)   n_1 >= ... >= n_r >= 0,
 *   (ii)  a >= 2 n_1,
 *   (iii) b >= (e+2-2g) n_1,
 *   (iv)  b >= a e + n_1 on the product, b >= a e otherwise.
 * All comparisons are exact; quadratic multiplicities are allowed.
 * Reports the first failed condition.
 */
GoodFormReport is_good_form(const DivisorClass& l, const SurfaceParams& s);
GoodFormReport is_good_form(const ExtendedDivisorClass& l, const SurfaceParams& s);

/**
 * Ampleness of pullback(L) - m(E_1+...+E_r) for ample L = (a, b), r very
 * general points, uniform multiplicity m > 0: equivalent to L^2 - r m^2 > 0
 * once the threshold hypothesis holds.  Refuses with HypothesisError when
 * r < r_threshold(L) and assume_conjecture is not set.
 */
bool is_ample_uniform(const SurfaceParams& s, const BigInt& a, const BigInt& b, const BigInt& r,
                      const BigInt& m, bool assume_conjecture = false);

struct NonnegViolation {
    DivisorClass candidate;
    BigInt ex_mult_of_candidate; // multiplicity at the extra point (0 if none)
    QuadraticValue value;        // L.C
};

struct NonnegReport {
    std::size_t candidates_checked = 0;
    std::vector<NonnegViolation> violations;
};

/**
 * Checks L.C >= 0 for every enumerated (-1)-class and section-transform
 * pattern within bounds.  A nonempty violation list disproves the good-form
 * guarantee (bug detector).  Precondition: L in good form, unless
 * override_precondition is set.
 */
NonnegReport nonneg_on_candidates(const DivisorClass& l, const SurfaceParams& s,
                                  const EnumerationBounds& bounds,
                                  bool override_precondition = false);
NonnegReport nonneg_on_candidates(const ExtendedDivisorClass& l, const SurfaceParams& s,
                                  const EnumerationBounds& bounds,
                                  bool override_precondition = false);

// Candidate section-transform patterns compatible with the rigidity rules:
// the bare section, plus (on the product with e = 0) the section through one
// of the points.  Used by the nonneg sweep alongside the (-1)-classes.
std::vector<DivisorClass> gamma_transform_patterns(const SurfaceParams& s, std::size_t r);

} // namespace seshadri
