#include "seshadri/certificate.hpp"

#include <algorithm>

namespace seshadri {

std::pair<BigInt, BigInt> base_bundle_default(const SurfaceParams& s) {
    if (s.e >= 0) return {1, BigInt(s.e) + 1};
    return {1, 1};
}

namespace {
BigInt window_q(const SurfaceParams& s) {
    return s.e >= 0 ? BigInt(s.e) + 2 : BigInt(2) - s.e;
}
} // namespace

WindowInterval find_r_window(const SurfaceParams& s, const BigInt& s_mult) {
    if (s_mult < 1) throw InputError("find_r_window: s must be at least 1");
    BigInt q = window_q(s);
    BigInt s2 = s_mult * s_mult;
    // ceil(s^2 q - s^2 / 4) = ceil((4 s^2 q - s^2) / 4)
    BigInt lo = -floor_div(-(4 * s2 * q - s2), 4);
    BigInt hi = s2 * q - 1;
    return WindowInterval{lo, hi};
}

ConstructResult construct_pair(const SurfaceParams& s, const std::optional<BigInt>& r_opt,
                               bool require_irrational) {
    BigInt q = window_q(s);
    auto [a0, b0] = base_bundle_default(s);

    auto build = [&](const BigInt& r, const BigInt& s_mult) {
        if (r > kMaxPoints)
            throw InputError("construct_pair: r = " + r.str() + " exceeds the point-count cap");
        DivisorClass l{s_mult * a0, s_mult * b0,
                       std::vector<BigInt>(r.convert_to<std::size_t>(), 1)};
        return ConstructResult{r, s_mult, std::move(l), s_mult * s_mult * q - r,
                               find_r_window(s, s_mult)};
    };

    auto smallest_s_for = [&](const BigInt& r) -> std::optional<BigInt> {
        // r <= s^2 q - 1 needs s^2 >= (r+1)/q; the window lower edge caps s.
        BigInt s_hi = isqrt((4 * r) / (4 * q - 1)) + 1;
        for (BigInt sm = 1; sm <= s_hi; ++sm) {
            if (!find_r_window(s, sm).contains(r)) continue;
            if (require_irrational && is_perfect_square(sm * sm * q - r)) continue;
            return sm;
        }
        return std::nullopt;
    };

    if (r_opt) {
        const BigInt& r = *r_opt;
        if (r < 0) throw InputError("construct_pair: r must be nonnegative");
        if (auto sm = smallest_s_for(r)) return build(r, *sm);
        // Report the windows bracketing the requested r.
        std::string nearest;
        for (BigInt sm = 1; sm <= isqrt((4 * r) / (4 * q - 1)) + 2; ++sm) {
            WindowInterval w = find_r_window(s, sm);
            if (w.empty()) continue;
            nearest += " s=" + sm.str() + ":[" + w.lo.str() + "," + w.hi.str() + "]";
        }
        throw InputError("construct_pair: no s admits r = " + r.str() +
                         (require_irrational ? " with irrational sqrt(L^2)" : "") +
                         "; nearest windows:" + nearest);
    }

    // Existence bound: (15+8e)^2 (e+2) - (15+8e)^2/4 for e >= 0, and the
    // mirrored coefficient for e < 0.
    BigInt c = s.e >= 0 ? BigInt(15) + 8 * BigInt(s.e) : BigInt(15) - 8 * BigInt(s.e);
    Rational bound = Rational(c * c) * Rational(q) - Rational(c * c, 4);
    BigInt r = rational_ceil(bound);
    if (r < 1) r = 1;
    for (BigInt tries = 0; tries < 4 * q + 8; ++tries, ++r) {
        if (auto sm = smallest_s_for(r)) return build(r, *sm);
    }
    throw InputError("construct_pair: no admissible (r, s) found above the existence bound");
}

QuadraticValue seshadri_upper_bound(const SurfaceParams& s, const DivisorClass& l,
                                    const EnumerationBounds& bounds) {
    BigInt gc = gcd(abs(l.a), abs(l.b));
    if (gc == 0) gc = 1;
    if (!is_ample_base(s, l.a / gc, l.b / gc))
        throw InputError("seshadri_upper_bound: bundle is not ample on the base");
    BigInt l_sq = intersect(l, l, s);
    if (l_sq <= 0) throw InputError("seshadri_upper_bound: L^2 <= 0");

    std::size_t r = l.r();
    QuadraticValue best = sqrt_symbolic(l_sq);
    std::optional<Rational> best_candidate;
    auto offer = [&](const Rational& v) {
        if (!best_candidate || v < *best_candidate) best_candidate = v;
    };
    auto pairing = [&](const DivisorClass& c) { return intersect(l, c, s); };

    if (r <= 10) {
        EnumerationBounds eb{bounds.alpha_max, bounds.beta_max, bounds.mult_max,
                             static_cast<long long>(r + 1)};
        for (auto cand : enumerate_minus_one_classes(s, eb)) {
            BigInt mx = cand.mults.back();
            if (mx < 1) continue; // candidate must pass through x
            cand.mults.pop_back();
            offer(Rational(pairing(cand), mx));
        }
    } else {
        // Uniform bundles only once the point count is large.
        for (std::size_t i = 1; i < r; ++i)
            if (l.mults[i] != l.mults[0])
                throw InputError("seshadri_upper_bound: r too large for a non-uniform bundle");
        BigInt n = r > 0 ? l.mults[0] : BigInt(0);
        BigInt e = s.e, g = s.g;
        for (long long alpha = 0; alpha <= bounds.alpha_max; ++alpha) {
            for (long long beta = -bounds.beta_max; beta <= bounds.beta_max; ++beta) {
                BigInt a = alpha, b = beta;
                if (a == 0 && b == 0) continue;
                BigInt q_total = 2 * a * b - a * a * e + 1;
                BigInt s_total = 2 * a + 2 * b - a * e - 2 * a * g - 1;
                for (long long mx = 1; mx <= bounds.mult_max; ++mx) {
                    BigInt rest_sum = s_total - mx;
                    BigInt rest_sq = q_total - BigInt(mx) * mx;
                    if (!feasible_multiset(rest_sum, rest_sq, bounds.mult_max,
                                           BigInt(static_cast<long long>(r))))
                        continue;
                    BigInt lc = -l.a * a * e + l.a * b + a * l.b - n * rest_sum;
                    offer(Rational(lc, mx));
                }
            }
        }
    }

    // Fiber through x, optionally through one of the points.
    {
        DivisorClass f = fiber_class(r);
        offer(Rational(pairing(f)));
        for (std::size_t j = 0; j < std::min<std::size_t>(r, 10); ++j) {
            DivisorClass fj = f;
            fj.mults[j] = 1;
            offer(Rational(pairing(fj)));
        }
    }
    // Section multiples through x exist only on the product with e = 0.
    if (s.e == 0 && s.is_product) {
        for (long long alpha = 1; alpha <= std::max<long long>(1, bounds.alpha_max); ++alpha)
            offer(Rational(BigInt(alpha) * pairing(gamma_class(r))));
    }

    if (best_candidate && quad_cmp(QuadraticValue(*best_candidate), best) ==
                              std::strong_ordering::less)
        return QuadraticValue(*best_candidate);
    return best;
}

SeshadriCertificate seshadri_certify(const SurfaceParams& s, const DivisorClass& l,
                                     const BigInt& r, const EnumerationBounds& sweep_bounds) {
    if (BigInt(static_cast<long long>(l.r())) != r)
        throw InputError("seshadri_certify: r does not match the bundle's point count");
    for (std::size_t i = 0; i < l.r(); ++i) {
        if (l.mults[i] < 1) throw InputError("seshadri_certify: multiplicities must be >= 1");
        if (l.mults[i] != l.mults[0])
            throw InputError("seshadri_certify: bundle must have uniform multiplicities");
    }

    SeshadriCertificate cert;
    cert.surface = s;
    cert.bundle = l;
    cert.r = r;
    BigInt gc = gcd(abs(l.a), abs(l.b));
    if (gc == 0) gc = 1;
    cert.base_a = l.a / gc;
    cert.base_b = l.b / gc;
    cert.s_mult = gc;

    cert.checks.ample_base = is_ample_base(s, cert.base_a, cert.base_b);
    if (!cert.checks.ample_base)
        throw InputError("seshadri_certify: bundle is not ample on the base surface");

    cert.l_sq = intersect(l, l, s);
    cert.checks.l_sq_positive = cert.l_sq >= 1;
    if (!cert.checks.l_sq_positive)
        throw InputError("seshadri_certify: L^2 = " + cert.l_sq.str() +
                         " <= 0, bundle cannot be ample");

    // Ampleness hypothesis: the point threshold (scale-invariant, so checked
    // for the primitive bundle), or an explicit candidate sweep.
    if (r == 0) {
        cert.checks.r_ge_threshold = true;
        cert.threshold_route = "r=0";
    } else {
        ThresholdReport rt = r_threshold(s, cert.base_a, cert.base_b);
        if (r >= rt.r0) {
            cert.checks.r_ge_threshold = true;
            cert.threshold_route = "r>=r0";
        } else {
            NbsSweepReport sweep = nbs_candidate_sweep(s, cert.base_a, cert.base_b, r,
                                                       sweep_bounds);
            if (sweep.violations.empty()) {
                cert.checks.r_ge_threshold = true;
                cert.threshold_route = "candidate-sweep";
            } else {
                cert.checks.r_ge_threshold = false;
                cert.threshold_route = "unestablished";
            }
        }
    }

    cert.epsilon = sqrt_symbolic(cert.l_sq);
    cert.is_irrational = !is_perfect_square(cert.l_sq);

    ExtendedDivisorClass at_x{l, sqrt_symbolic(cert.l_sq)};
    GoodFormReport gf = is_good_form(at_x, s);
    cert.checks.good_form_at_generic_point = gf.is_good;
    if (!gf.is_good) cert.good_form_failed = gf.failed_condition;

    cert.valid = cert.checks.ample_base && cert.checks.r_ge_threshold &&
                 cert.checks.l_sq_positive && cert.checks.good_form_at_generic_point;
    if (!cert.valid) cert.upper_bound = seshadri_upper_bound(s, l, sweep_bounds);
    return cert;
}

SeshadriCertificate irrationality_witness(const SurfaceParams& s, const BigInt& s_mult) {
    if (s_mult < 3)
        throw InputError("irrationality_witness: needs s >= 3 (the window requires s^2 >= 8)");
    BigInt q = window_q(s);
    BigInt r = s_mult * s_mult * q - 2;
    if (r > kMaxPoints)
        throw InputError("irrationality_witness: r = " + r.str() +
                         " exceeds the point-count cap");
    if (!find_r_window(s, s_mult).contains(r))
        throw std::logic_error("irrationality_witness: r = s^2 q - 2 left the window");
    auto [a0, b0] = base_bundle_default(s);
    DivisorClass l{s_mult * a0, s_mult * b0, std::vector<BigInt>(r.convert_to<std::size_t>(), 1)};
    SeshadriCertificate cert = seshadri_certify(s, l, r);
    if (cert.l_sq != 2)
        throw std::logic_error("irrationality_witness: L^2 != 2");
    return cert;
}

} // namespace seshadri
