#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seshadri/lattice.hpp"

namespace seshadri {

// Finite search box for candidate classes alpha*H + beta*F - sum m_i E_i:
// 0 <= alpha <= alpha_max, |beta| <= beta_max, 0 <= m_i <= mult_max, r slots.
struct EnumerationBounds {
    long long alpha_max = 0;
    long long beta_max = 0;
    long long mult_max = 0;
    long long r = 0;
};

enum class Verdict {
    Exceptional,                  // C = E_i
    MinusOne,                     // C^2 = -1 and -K.C = 1
    NonPositiveImage,             // C pulled back from X with image square <= 0
    GammaETransform,              // transform of (a multiple of) the section
    RigidExcluded,                // rigidity or the multiplicity filter rules C out
    ConjectureViolationCandidate, // would violate the classification if a curve existed
};

const char* verdict_name(Verdict v);

struct ClassificationDetail {
    BigInt c_sq;          // C^2
    BigInt minus_k_dot_c; // -K.C
    BigInt image_sq;      // C^2 + sum m_i^2
    std::string fired;    // which test fired
    std::string note;     // overlap / pattern remarks
};

struct CurveClassification {
    Verdict verdict;
    ClassificationDetail detail;
};

/**
 * Multiplicity filter for an irreducible curve through very general points:
 * the image square must be >= sum m_i^2 - m with m the least nonzero m_i.
 * Returns false when the class cannot contain such a curve.
 *
 * Preconditions: some multiplicity > 0, none negative.
 */
bool xu_filter(const BigInt& image_sq, const std::vector<BigInt>& mults);

// Numerical (-1)-class: C^2 = -1 and -K.C = 1.
bool is_minus_one_class(const DivisorClass& c, const SurfaceParams& s);

/**
 * True when a class on X (all multiplicities zero) is excluded from passing
 * through very general points: the half-fiber family 2*beta = alpha*e with
 * e != 0, the section when e > 0, or the section on a non-product when
 * e <= 0.  On the product the section moves in a pencil and is not rigid.
 */
bool is_rigid_class(const DivisorClass& c, const SurfaceParams& s);

/**
 * Classifies a class with C^2 < 0 against the negative-curve trichotomy.
 * Tests are applied in a fixed priority order (Exceptional, MinusOne,
 * NonPositiveImage, GammaETransform, RigidExcluded); anything left is a
 * ConjectureViolationCandidate, meaning: this class violates the expected
 * classification IF an irreducible curve in it passes through the points.
 *
 * Domain: C^2 < 0, and multiplicities either all >= 0 or a single -1
 * (a pure exceptional class).
 */
CurveClassification classify_negative_class(const DivisorClass& c, const SurfaceParams& s);

enum class Conjecture2Result {
    Strict,           // image^2 > sum m_i^2 - 1
    EqualityMinusOne, // equality, transform is a (-1)-class
    EqualityGamma,    // equality, transform is a section pattern
    Violation,        // bound fails, or equality in a forbidden pattern
};

const char* conjecture2_result_name(Conjecture2Result r);

/**
 * The lower-bound side of the classification: compares the image square
 * 2*alpha*beta - alpha^2*e with sum m_i^2 - 1 and, on equality, reports
 * which permitted pattern the strict transform falls into.
 * Precondition: some multiplicity > 0.
 */
Conjecture2Result conjecture2_check(const BigInt& alpha, const BigInt& beta,
                                    const std::vector<BigInt>& mults, const SurfaceParams& s);

/**
 * All classes alpha*H + beta*F - sum m_i E_i in the box with C^2 = -1 and
 * -K.C = 1, plus the pure exceptional classes E_1..E_r (listed first).
 * Output order is deterministic: E_i by index, then lexicographic in
 * (alpha, beta, m_1, ..., m_r).
 */
std::vector<DivisorClass> enumerate_minus_one_classes(const SurfaceParams& s,
                                                      const EnumerationBounds& bounds);

/**
 * Multiset-level view of the same candidate set, usable when r is large:
 * for a (-1)-class both sum(m_i) and sum(m_i^2) are determined by the image
 * (alpha, beta), so a family is (alpha, beta, S, Q) together with a witness
 * multiset.  Exact for any check that depends on the multiplicities only
 * through the multiset (uniform bundles, NBS sums).
 */
struct MinusOneFamily {
    BigInt alpha;
    BigInt beta;
    BigInt mult_sum;            // S = -K.C - 1 contribution: sum m_i
    BigInt mult_sq_sum;         // Q = image^2 + 1: sum m_i^2
    std::vector<BigInt> sample; // one realizing multiset, descending
};

// include_pointless also lists families whose classes meet none of the
// blown-up points (all multiplicities zero).
std::vector<MinusOneFamily> minus_one_families(const SurfaceParams& s, long long alpha_max,
                                               long long beta_max, long long mult_max,
                                               const BigInt& r, bool include_pointless = false);

// Is there a multiset of at most `max_parts` integers in [1, part_max] with
// the given sum and sum of squares?  Returns a witness when so.
std::optional<std::vector<BigInt>> feasible_multiset(const BigInt& sum, const BigInt& sq_sum,
                                                     long long part_max, const BigInt& max_parts);

} // namespace seshadri
