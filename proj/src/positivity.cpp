#include "seshadri/positivity.hpp"

#include "seshadri/nbs.hpp"

#include <algorithm>
#include <numeric>

namespace seshadri {

bool is_ample_base(const SurfaceParams& s, const BigInt& a, const BigInt& b) {
    if (a <= 0) return false;
    if (s.e >= 0) return b > a * BigInt(s.e);
    return 2 * b > a * BigInt(s.e);
}

namespace {

struct GeneralDivisor {
    BigInt a;
    BigInt b;
    std::vector<QuadraticValue> mults;
};

GeneralDivisor lift(const DivisorClass& l) {
    GeneralDivisor g{l.a, l.b, {}};
    g.mults.reserve(l.mults.size());
    for (const auto& m : l.mults) g.mults.emplace_back(m);
    return g;
}

GeneralDivisor lift(const ExtendedDivisorClass& l) {
    GeneralDivisor g = lift(l.base);
    g.mults.push_back(l.ex_mult);
    return g;
}

GoodFormReport decompose(const GeneralDivisor& l, const SurfaceParams& s) {
    GoodFormReport rep;
    std::size_t r = l.mults.size();
    rep.permutation.resize(r);
    std::iota(rep.permutation.begin(), rep.permutation.end(), std::size_t{0});
    std::stable_sort(rep.permutation.begin(), rep.permutation.end(),
                     [&](std::size_t i, std::size_t j) {
                         return quad_cmp(l.mults[i], l.mults[j]) == std::strong_ordering::greater;
                     });
    rep.sorted_mults.reserve(r);
    for (std::size_t k = 0; k < r; ++k) rep.sorted_mults.push_back(l.mults[rep.permutation[k]]);

    QuadraticValue n1 = r > 0 ? rep.sorted_mults.front() : QuadraticValue(0);
    BigInt fiber_coeff = BigInt(s.e) + 2 - 2 * BigInt(s.g); // e + 2 - 2g
    rep.c_H = QuadraticValue(l.a) - QuadraticValue(2) * n1;
    rep.c_F = QuadraticValue(l.b) - QuadraticValue(fiber_coeff) * n1;
    rep.c.reserve(r);
    for (std::size_t k = 0; k + 1 < r; ++k)
        rep.c.push_back(rep.sorted_mults[k] - rep.sorted_mults[k + 1]);
    if (r > 0) rep.c.push_back(rep.sorted_mults.back());
    return rep;
}

GoodFormReport good_form(const GeneralDivisor& l, const SurfaceParams& s) {
    GoodFormReport rep = decompose(l, s);
    std::size_t r = l.mults.size();
    QuadraticValue zero(0);
    QuadraticValue n1 = r > 0 ? rep.sorted_mults.front() : zero;

    auto fail = [&](const char* tag) {
        rep.is_good = false;
        rep.failed_condition = tag;
        return rep;
    };
    if (r > 0 && quad_cmp(rep.sorted_mults.back(), zero) == std::strong_ordering::less)
        return fail("i");
    if (quad_cmp(QuadraticValue(l.a), QuadraticValue(2) * n1) == std::strong_ordering::less)
        return fail("ii");
    BigInt fiber_coeff = BigInt(s.e) + 2 - 2 * BigInt(s.g);
    if (quad_cmp(QuadraticValue(l.b), QuadraticValue(fiber_coeff) * n1) ==
        std::strong_ordering::less)
        return fail("iii");
    QuadraticValue ae(l.a * BigInt(s.e));
    QuadraticValue iv_bound = s.is_product ? ae + n1 : ae;
    if (quad_cmp(QuadraticValue(l.b), iv_bound) == std::strong_ordering::less) return fail("iv");
    rep.is_good = true;
    return rep;
}

} // namespace

GoodFormReport decompose_good_form(const DivisorClass& l, const SurfaceParams& s) {
    return decompose(lift(l), s);
}
GoodFormReport decompose_good_form(const ExtendedDivisorClass& l, const SurfaceParams& s) {
    return decompose(lift(l), s);
}

GoodFormReport is_good_form(const DivisorClass& l, const SurfaceParams& s) {
    return good_form(lift(l), s);
}
GoodFormReport is_good_form(const ExtendedDivisorClass& l, const SurfaceParams& s) {
    return good_form(lift(l), s);
}

bool is_ample_uniform(const SurfaceParams& s, const BigInt& a, const BigInt& b, const BigInt& r,
                      const BigInt& m, bool assume_conjecture) {
    if (!is_ample_base(s, a, b))
        throw InputError("is_ample_uniform: base bundle (" + a.str() + "," + b.str() +
                         ") is not ample");
    if (m < 1) throw InputError("is_ample_uniform: multiplicity m must be positive");
    if (r < 0) throw InputError("is_ample_uniform: r must be nonnegative");
    if (r > 0 && !assume_conjecture) {
        ThresholdReport rt = r_threshold(s, a, b);
        if (r < rt.r0)
            throw HypothesisError(
                "is_ample_uniform: hypothesis r >= r_threshold unmet (r = " + r.str() +
                " < r0 = " + rt.r0.str() + "); pass assume-conjecture to override");
    }
    BigInt l_sq = 2 * a * b - a * a * BigInt(s.e);
    return l_sq - r * m * m > 0;
}

std::vector<DivisorClass> gamma_transform_patterns(const SurfaceParams& s, std::size_t r) {
    std::vector<DivisorClass> out;
    out.push_back(gamma_class(r));
    if (s.e == 0 && s.is_product) {
        for (std::size_t j = 0; j < r; ++j) {
            DivisorClass c = gamma_class(r);
            c.mults[j] = 1;
            out.push_back(c);
        }
    }
    return out;
}

namespace {

QuadraticValue pair_with(const GeneralDivisor& l, const DivisorClass& c,
                         const BigInt& c_ex_mult, const SurfaceParams& s) {
    // <l, c> with c living on the same lattice; c_ex_mult is c's multiplicity
    // in l's last slot when l has one more slot than c.
    BigInt scalar = -BigInt(s.e) * l.a * c.a + l.a * c.b + c.a * l.b;
    QuadraticValue v(scalar);
    for (std::size_t i = 0; i < c.mults.size(); ++i)
        v = v - l.mults[i] * QuadraticValue(c.mults[i]);
    if (l.mults.size() == c.mults.size() + 1)
        v = v - l.mults.back() * QuadraticValue(c_ex_mult);
    else if (l.mults.size() != c.mults.size())
        throw InputError("pair_with: slot mismatch");
    return v;
}

NonnegReport nonneg_core(const GeneralDivisor& l, bool has_ex_slot, const SurfaceParams& s,
                         const EnumerationBounds& bounds, bool override_precondition) {
    if (!override_precondition) {
        GoodFormReport rep = good_form(l, s);
        if (!rep.is_good)
            throw InputError("nonneg_on_candidates: bundle is not in good form (condition " +
                             *rep.failed_condition + " fails); pass the override to force");
    }
    std::size_t slots = l.mults.size();
    NonnegReport report;
    QuadraticValue zero(0);

    auto check = [&](const DivisorClass& cand, const BigInt& ex) {
        ++report.candidates_checked;
        QuadraticValue v = pair_with(l, cand, ex, s);
        if (quad_cmp(v, zero) == std::strong_ordering::less)
            report.violations.push_back(NonnegViolation{cand, ex, v});
    };

    if (slots <= 12) {
        // Candidate classes occupy every slot (the extra point behaves like
        // one more very general point).
        EnumerationBounds eb{bounds.alpha_max, bounds.beta_max, bounds.mult_max,
                             static_cast<long long>(slots)};
        for (const auto& cand : enumerate_minus_one_classes(s, eb)) {
            DivisorClass base = cand;
            BigInt ex = 0;
            if (has_ex_slot) {
                ex = base.mults.back();
                base.mults.pop_back();
            }
            check(base, ex);
        }
        for (const auto& cand : gamma_transform_patterns(s, slots)) {
            DivisorClass base = cand;
            BigInt ex = 0;
            if (has_ex_slot) {
                ex = base.mults.back();
                base.mults.pop_back();
            }
            check(base, ex);
        }
        return report;
    }

    // Large r: only meaningful for uniform bundles, where the pairing depends
    // on a candidate's multiplicities through their multiset alone.
    for (std::size_t i = 1; i < l.mults.size() - (has_ex_slot ? 1 : 0); ++i)
        if (!(l.mults[i] == l.mults[0]))
            throw InputError("nonneg_on_candidates: r too large for a non-uniform bundle");

    std::size_t base_r = slots - (has_ex_slot ? 1 : 0);
    BigInt total_slots = BigInt(static_cast<long long>(slots));
    for (const auto& fam : minus_one_families(s, bounds.alpha_max, bounds.beta_max,
                                              bounds.mult_max, total_slots,
                                              /*include_pointless=*/true)) {
        long long ex_cap = has_ex_slot ? bounds.mult_max : 0;
        for (long long ex = 0; ex <= ex_cap; ++ex) {
            BigInt rest_sum = fam.mult_sum - ex;
            BigInt rest_sq = fam.mult_sq_sum - BigInt(ex) * ex;
            auto rest = feasible_multiset(rest_sum, rest_sq, bounds.mult_max,
                                          BigInt(static_cast<long long>(base_r)));
            if (!rest) continue;
            DivisorClass cand{fam.alpha, fam.beta, std::vector<BigInt>(base_r, 0)};
            for (std::size_t i = 0; i < rest->size(); ++i) cand.mults[i] = (*rest)[i];
            check(cand, BigInt(ex));
        }
    }
    for (auto cand : gamma_transform_patterns(s, slots)) {
        BigInt ex = 0;
        if (has_ex_slot) {
            ex = cand.mults.back();
            cand.mults.pop_back();
        }
        check(cand, ex);
    }
    return report;
}

} // namespace

NonnegReport nonneg_on_candidates(const DivisorClass& l, const SurfaceParams& s,
                                  const EnumerationBounds& bounds, bool override_precondition) {
    return nonneg_core(lift(l), false, s, bounds, override_precondition);
}

NonnegReport nonneg_on_candidates(const ExtendedDivisorClass& l, const SurfaceParams& s,
                                  const EnumerationBounds& bounds, bool override_precondition) {
    return nonneg_core(lift(l), true, s, bounds, override_precondition);
}

} // namespace seshadri
