#include "seshadri/nbs.hpp"

#include "seshadri/positivity.hpp"

#include <algorithm>

namespace seshadri {

ThresholdReport r_threshold(const SurfaceParams& s, const BigInt& a, const BigInt& b) {
    if (!is_ample_base(s, a, b))
        throw InputError("r_threshold: bundle (" + a.str() + "," + b.str() +
                         ") is not ample on the base");
    BigInt e = s.e, g = s.g;
    Rational l_sq(2 * a * b - a * a * e);
    ThresholdReport rep;
    auto add = [&](std::string tag, std::string formula, Rational value) {
        rep.contributions.push_back({std::move(tag), std::move(formula), std::move(value)});
    };

    if (e > 0) {
        BigInt base = 4 - e - 2 * g;
        if (base > 0) {
            add("e>0/minus-one transforms", "(4-e-2g)^2 L^2", Rational(base * base) * l_sq);
        } else {
            // 4-e-2g <= 0 makes the sub-case inequality unsatisfiable for
            // every r >= 1; no constraint arises.
            add("e>0/minus-one transforms (degenerate)", "(4-e-2g)^2 L^2", Rational(0));
        }
    } else if (e == 0) {
        add("e=0/minus-one, alpha,beta>0", "16 L^2", Rational(16) * l_sq);
        add("e=0/minus-one, beta=0", "4 L^2", Rational(4) * l_sq);
        add("e=0/minus-one, alpha=0 (fiber)", "L^2", l_sq);
        add("e=0/section through one point", "2a/b", Rational(2 * a, b));
    } else {
        add("e<0/minus-one, beta=0,alpha>1 (also alpha>=2,beta>=0 when e=-1)", "36 L^2",
            Rational(36) * l_sq);
        add("e<0/minus-one, alpha=1,beta>0", "9 L^2", Rational(9) * l_sq);
        add("e<0/minus-one, alpha>=2,beta>=0,e<-1", "16 L^2", Rational(16) * l_sq);
        BigInt c = 4 - 2 * e;
        add("e<0/minus-one, beta<0", "(4-2e)^2 L^2", Rational(c * c) * l_sq);
        Rational gamma_ratio(1 - e, b - a * e);
        add("e<0/section", "((1-e)/(b-ae))^2 L^2", gamma_ratio * gamma_ratio * l_sq);
        add("e<0/minus-one, alpha=0 (fiber)", "L^2", l_sq);
    }

    Rational best(0);
    for (const auto& c : rep.contributions) best = std::max(best, c.value);
    rep.r0 = rational_ceil(best);
    if (rep.r0 < 1) rep.r0 = 1;
    return rep;
}

bool nbs_check(const SurfaceParams& s, const BigInt& a, const BigInt& b, const BigInt& r,
               const BigInt& alpha, const BigInt& beta, const std::vector<BigInt>& mults) {
    if (r < 1) throw InputError("nbs_check: r must be at least 1");
    BigInt mult_sum = 0;
    bool any_positive = false;
    for (const auto& m : mults) {
        if (m < 0) throw InputError("nbs_check: negative multiplicity");
        if (m > 0) any_positive = true;
        mult_sum += m;
    }
    if (!any_positive) throw InputError("nbs_check: needs a positive multiplicity");
    BigInt l_sq = 2 * a * b - a * a * BigInt(s.e);
    if (l_sq < 0) throw InputError("nbs_check: L^2 < 0");
    BigInt lhs = -a * alpha * BigInt(s.e) + a * beta + b * alpha;
    QuadraticValue rhs = QuadraticValue(Rational(mult_sum)) * sqrt_rational(Rational(l_sq, r));
    return quad_cmp(QuadraticValue(lhs), rhs) != std::strong_ordering::less;
}

MultipointValue multipoint_conjectural(const SurfaceParams& s, const BigInt& a, const BigInt& b,
                                       const BigInt& r) {
    if (r <= 0) throw InputError("multipoint_conjectural: r must be positive");
    if (!is_ample_base(s, a, b))
        throw InputError("multipoint_conjectural: bundle is not ample on the base");
    BigInt l_sq = 2 * a * b - a * a * BigInt(s.e);
    ThresholdReport rt = r_threshold(s, a, b);
    return MultipointValue{sqrt_rational(Rational(l_sq, r)), r >= rt.r0, rt.r0};
}

NbsSweepReport nbs_candidate_sweep(const SurfaceParams& s, const BigInt& a, const BigInt& b,
                                   const BigInt& r, const EnumerationBounds& bounds) {
    NbsSweepReport rep;
    auto check = [&](const BigInt& alpha, const BigInt& beta, const std::vector<BigInt>& mults,
                     const char* kind) {
        ++rep.candidates_checked;
        if (!nbs_check(s, a, b, r, alpha, beta, mults))
            rep.violations.push_back(NbsViolation{alpha, beta, mults, kind});
    };

    // (-1)-class families: the inequality depends on the multiplicities only
    // through their sum, which the family data fixes, so one witness multiset
    // per (alpha, beta) covers every class in the family.
    for (const auto& fam :
         minus_one_families(s, bounds.alpha_max, bounds.beta_max, bounds.mult_max, r))
        check(fam.alpha, fam.beta, fam.sample, "minus-one family");

    if (r >= 1) {
        check(0, 1, {1}, "fiber through one point");
        // Section patterns: the multiplicity filter allows up to 1-e unit
        // multiplicities when e < 0, a single one otherwise.
        long long max_units = s.e < 0 ? static_cast<long long>(1 - s.e) : 1;
        max_units = std::min<long long>(max_units, bounds.r > 0 ? bounds.r : max_units);
        if (r < max_units) max_units = r.convert_to<long long>();
        for (long long k = 1; k <= max_units; ++k)
            check(1, 0, std::vector<BigInt>(static_cast<std::size_t>(k), 1), "section pattern");
        if (s.e == 0)
            for (long long alpha = 2; alpha <= bounds.alpha_max; ++alpha)
                check(alpha, 0, {1}, "section multiple through one point");
    }
    return rep;
}

} // namespace seshadri
