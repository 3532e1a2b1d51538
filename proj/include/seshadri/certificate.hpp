#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seshadri/nbs.hpp"
#include "seshadri/positivity.hpp"

namespace seshadri {

// Every certificate emitted by this pipeline is conditional on the
// negative-curve classification conjecture; the tag travels with the data.
inline constexpr const char* kConditionality = "assumes Conjecture 2.1";

// Bundles carry one multiplicity per blown-up point; refuse point counts
// that cannot be materialized.
inline constexpr long long kMaxPoints = 1000000;

// Default ample bundle a*Gamma_e + b*f used by the construction:
// (1, e+1) when e >= 0, (1, 1) when e < 0.
std::pair<BigInt, BigInt> base_bundle_default(const SurfaceParams& s);

struct WindowInterval {
    BigInt lo;
    BigInt hi;
    bool empty() const { return lo > hi; }
    bool contains(const BigInt& r) const { return lo <= r && r <= hi; }
};

/**
 * The point counts r for which L = s*L0 - sum E_i keeps L^2 >= 1 while the
 * blown-down shape stays in good form after subtracting sqrt(L^2) at one
 * more point: with q = e+2 (e >= 0) or 2-e (e < 0), all integers r with
 *   ceil(s^2 q - s^2/4) <= r <= s^2 q - 1.
 */
WindowInterval find_r_window(const SurfaceParams& s, const BigInt& s_mult);

struct ConstructResult {
    BigInt r;
    BigInt s_mult;
    DivisorClass bundle; // s*L0 pulled back minus E_1+...+E_r
    BigInt l_sq;
    WindowInterval window;
};

/**
 * Picks (r, s) in the window and builds the bundle.  With r given, the
 * smallest admissible s is chosen (skipping perfect-square L^2 when
 * require_irrational is set); with r free, the smallest r at or above the
 * existence bound that admits an s.  Throws InputError listing the nearest
 * windows when no s fits the requested r.
 */
ConstructResult construct_pair(const SurfaceParams& s, const std::optional<BigInt>& r,
                               bool require_irrational = false);

struct CertificateChecks {
    bool ample_base = false;
    bool r_ge_threshold = false; // threshold or candidate-sweep route
    bool l_sq_positive = false;
    bool good_form_at_generic_point = false;
};

struct SeshadriCertificate {
    SurfaceParams surface;
    BigInt base_a; // primitive bundle on X
    BigInt base_b;
    BigInt s_mult;
    BigInt r;
    DivisorClass bundle;
    BigInt l_sq;
    QuadraticValue epsilon; // sqrt(L^2); certified only when valid
    bool is_irrational = false;
    CertificateChecks checks;
    std::string threshold_route; // "r>=r0", "candidate-sweep", "r=0", "unestablished"
    std::optional<std::string> good_form_failed;
    // Partial certificates bracket epsilon in [candidate upper bound, sqrt(L^2)].
    std::optional<QuadraticValue> upper_bound;
    bool valid = false;
    std::string conditionality = kConditionality;
};

/**
 * Certifies epsilon(X_r, L, x) = sqrt(L^2) at a very general point x for a
 * uniform bundle L: checks base ampleness, the ampleness hypothesis (point
 * threshold, falling back to an exhaustive candidate sweep within bounds),
 * L^2 >= 1, and good form of pullback(L) - sqrt(L^2) E_x.  On a good-form
 * failure the certificate is partial and reports the best candidate upper
 * bound instead.
 *
 * Precondition: L has uniform multiplicities and an ample base; violations
 * raise InputError.
 */
SeshadriCertificate seshadri_certify(const SurfaceParams& s, const DivisorClass& l,
                                     const BigInt& r,
                                     const EnumerationBounds& sweep_bounds = {4, 6, 3, 0});

/**
 * min( sqrt(L^2), min over candidate curves through the generic point x of
 * L.C / mult_x(C) ).  Candidates: (-1)-classes on the lattice extended by x
 * with positive multiplicity there, fibers through x (optionally through one
 * of the points), and, on the product with e = 0, section multiples through
 * x.  Exact.
 */
QuadraticValue seshadri_upper_bound(const SurfaceParams& s, const DivisorClass& l,
                                    const EnumerationBounds& bounds);

/**
 * The irrationality construction: r = s^2 q - 2 makes L^2 = 2, so
 * epsilon = sqrt(2).  Valid for every s >= 3; returns the full certificate.
 */
SeshadriCertificate irrationality_witness(const SurfaceParams& s, const BigInt& s_mult);

} // namespace seshadri
