#pragma once

#include <string>
#include <vector>

#include "seshadri/curves.hpp"
#include "seshadri/lattice.hpp"
#include "seshadri/quadratic.hpp"

namespace seshadri {

struct ThresholdContribution {
    std::string case_tag; // which curve family the bound governs
    std::string formula;  // the bound in terms of L^2, a, b
    Rational value;
};

/**
 * Sufficient point count r0 for the multi-point inequality
 * L.C >= (sum n_i) sqrt(L^2 / r): the maximum over every sub-case bound for
 * the sign of e, ceilinged.  Each contribution is listed so callers can
 * audit which formula dominated.
 */
struct ThresholdReport {
    BigInt r0;
    std::vector<ThresholdContribution> contributions;
};

// Precondition: (a, b) ample on the base surface.
ThresholdReport r_threshold(const SurfaceParams& s, const BigInt& a, const BigInt& b);

/**
 * Exact test of L.C >= (sum n_i) sqrt(L^2 / r) for L = a*Gamma_e + b*f and
 * a curve with image (alpha, beta) and multiplicities `mults` at r very
 * general points.  L.C expands to -a*alpha*e + a*beta + b*alpha.
 * Preconditions: r >= 1, some multiplicity positive, L^2 >= 0.
 */
bool nbs_check(const SurfaceParams& s, const BigInt& a, const BigInt& b, const BigInt& r,
               const BigInt& alpha, const BigInt& beta, const std::vector<BigInt>& mults);

struct MultipointValue {
    QuadraticValue value; // sqrt(L^2 / r), exact
    bool certified;       // r >= r0, so the value holds under the classification conjecture
    BigInt r0;
};

// The conjectural r-point Seshadri constant sqrt(L^2 / r) of an ample L.
MultipointValue multipoint_conjectural(const SurfaceParams& s, const BigInt& a, const BigInt& b,
                                       const BigInt& r);

struct NbsViolation {
    BigInt alpha;
    BigInt beta;
    std::vector<BigInt> mults;
    std::string kind;
};

struct NbsSweepReport {
    std::size_t candidates_checked = 0;
    std::vector<NbsViolation> violations;
};

/**
 * Runs nbs_check over every candidate negative-curve family within bounds:
 * (-1)-class families (multiset level, exact for the sum-based inequality),
 * fiber and section unit-multiplicity patterns, and the section multiples
 * when e = 0.  An empty violation list certifies, under the classification
 * conjecture and within the box, the hypothesis of the uniform ampleness
 * criterion for (L, r).
 */
NbsSweepReport nbs_candidate_sweep(const SurfaceParams& s, const BigInt& a, const BigInt& b,
                                   const BigInt& r, const EnumerationBounds& bounds);

} // namespace seshadri
