#include "seshadri/curves.hpp"

#include <algorithm>

namespace seshadri {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Exceptional: return "Exceptional";
        case Verdict::MinusOne: return "MinusOne";
        case Verdict::NonPositiveImage: return "NonPositiveImage";
        case Verdict::GammaETransform: return "GammaETransform";
        case Verdict::RigidExcluded: return "RigidExcluded";
        case Verdict::ConjectureViolationCandidate: return "ConjectureViolationCandidate";
    }
    return "?";
}

const char* conjecture2_result_name(Conjecture2Result r) {
    switch (r) {
        case Conjecture2Result::Strict: return "strict";
        case Conjecture2Result::EqualityMinusOne: return "equality_minus_one";
        case Conjecture2Result::EqualityGamma: return "equality_gamma";
        case Conjecture2Result::Violation: return "violation";
    }
    return "?";
}

bool xu_filter(const BigInt& image_sq, const std::vector<BigInt>& mults) {
    BigInt min_nonzero = -1;
    BigInt sq_sum = 0;
    for (const auto& m : mults) {
        if (m < 0) throw InputError("xu_filter: negative multiplicity " + m.str());
        if (m == 0) continue;
        sq_sum += m * m;
        if (min_nonzero < 0 || m < min_nonzero) min_nonzero = m;
    }
    if (min_nonzero < 0)
        throw InputError("xu_filter: needs a positive multiplicity (curve through the points)");
    return image_sq >= sq_sum - min_nonzero;
}

bool is_minus_one_class(const DivisorClass& c, const SurfaceParams& s) {
    if (intersect(c, c, s) != -1) return false;
    DivisorClass k = canonical_class(s, c.r());
    return intersect(k, c, s) == -1; // -K.C = 1
}

bool is_rigid_class(const DivisorClass& c, const SurfaceParams& s) {
    for (const auto& m : c.mults)
        if (m != 0)
            throw InputError("is_rigid_class: class must have all multiplicities zero");
    const BigInt& alpha = c.a;
    const BigInt& beta = c.b;
    if (alpha >= 1 && s.e != 0 && 2 * beta == alpha * BigInt(s.e)) return true;
    bool is_gamma = (alpha == 1 && beta == 0);
    if (is_gamma && s.e > 0) return true;
    if (is_gamma && s.e <= 0 && !s.is_product) return true;
    return false;
}

namespace {

bool is_gamma_pattern(const BigInt& alpha, const BigInt& beta, const SurfaceParams& s) {
    if (beta != 0) return false;
    if (alpha == 1) return true;
    return s.e == 0 && alpha >= 1; // alpha*Gamma_e only degenerates like this when e = 0
}

} // namespace

CurveClassification classify_negative_class(const DivisorClass& c, const SurfaceParams& s) {
    BigInt c_sq = intersect(c, c, s);
    if (c_sq >= 0)
        throw InputError("classify_negative_class: C^2 = " + c_sq.str() + " is not negative");

    DivisorClass k = canonical_class(s, c.r());
    ClassificationDetail detail;
    detail.c_sq = c_sq;
    detail.minus_k_dot_c = -intersect(k, c, s);
    BigInt sq_sum = 0;
    std::size_t negatives = 0, positives = 0;
    std::size_t neg_index = 0;
    for (std::size_t i = 0; i < c.mults.size(); ++i) {
        sq_sum += c.mults[i] * c.mults[i];
        if (c.mults[i] < 0) {
            ++negatives;
            neg_index = i;
        }
        if (c.mults[i] > 0) ++positives;
    }
    detail.image_sq = c_sq + sq_sum;

    // Pure exceptional class E_i.
    if (c.a == 0 && c.b == 0 && negatives == 1 && positives == 0 && c.mults[neg_index] == -1) {
        detail.fired = "C = E_" + std::to_string(neg_index + 1);
        return {Verdict::Exceptional, detail};
    }
    if (negatives > 0)
        throw InputError("classify_negative_class: negative multiplicities only occur in a "
                         "pure exceptional class");

    if (is_minus_one_class(c, s)) {
        detail.fired = "C^2 = -1 and -K.C = 1";
        if (is_gamma_pattern(c.a, c.b, s)) detail.note = "also matches the section pattern";
        return {Verdict::MinusOne, detail};
    }

    if (positives == 0) {
        detail.fired = "all multiplicities zero, image square " + detail.image_sq.str() + " <= 0";
        return {Verdict::NonPositiveImage, detail};
    }

    if (is_gamma_pattern(c.a, c.b, s)) {
        detail.fired = "transform of " + c.a.str() + "*Gamma_e";
        if (c.a > 1) detail.note = "alpha > 1 pattern accepted numerically";
        DivisorClass image{c.a, c.b, std::vector<BigInt>(c.r(), 0)};
        if (is_rigid_class(image, s)) detail.note += (detail.note.empty() ? "" : "; ") +
                                                     std::string("image is rigid");
        return {Verdict::GammaETransform, detail};
    }

    DivisorClass image{c.a, c.b, std::vector<BigInt>(c.r(), 0)};
    if (is_rigid_class(image, s)) {
        detail.fired = "image cannot pass through very general points (rigid family)";
        return {Verdict::RigidExcluded, detail};
    }
    if (!xu_filter(detail.image_sq, c.mults)) {
        detail.fired = "multiplicity filter: image^2 < sum m_i^2 - min";
        return {Verdict::RigidExcluded, detail};
    }

    detail.fired = "no branch matches";
    detail.note = "violates the classification if an irreducible curve in this class "
                  "passes through very general points";
    return {Verdict::ConjectureViolationCandidate, detail};
}

Conjecture2Result conjecture2_check(const BigInt& alpha, const BigInt& beta,
                                    const std::vector<BigInt>& mults, const SurfaceParams& s) {
    BigInt sq_sum = 0;
    bool any_positive = false;
    for (const auto& m : mults) {
        if (m < 0) throw InputError("conjecture2_check: negative multiplicity");
        if (m > 0) any_positive = true;
        sq_sum += m * m;
    }
    if (!any_positive)
        throw InputError("conjecture2_check: needs a positive multiplicity");

    BigInt image_sq = 2 * alpha * beta - alpha * alpha * BigInt(s.e);
    if (image_sq > sq_sum - 1) return Conjecture2Result::Strict;
    if (image_sq < sq_sum - 1) return Conjecture2Result::Violation;

    DivisorClass transform{alpha, beta, mults};
    if (is_minus_one_class(transform, s)) return Conjecture2Result::EqualityMinusOne;
    if (s.e != 0 ? (alpha == 1 && beta == 0) : is_gamma_pattern(alpha, beta, s))
        return Conjecture2Result::EqualityGamma;
    return Conjecture2Result::Violation; // equality outside the permitted patterns
}

namespace {

// Depth-first multiplicity fill with exact remaining budgets.  A (-1)-class
// fixes both sum m_i (from -K.C = 1) and sum m_i^2 (from C^2 = -1), so the
// scan only walks vectors that can still hit both targets.
void fill_mults(std::size_t pos, std::size_t r, long long mult_max, const BigInt& rem_sum,
                const BigInt& rem_sq, std::vector<BigInt>& cur,
                const BigInt& alpha, const BigInt& beta, std::vector<DivisorClass>& out) {
    if (rem_sum < 0 || rem_sq < 0) return;
    BigInt slots = BigInt(static_cast<long long>(r - pos));
    if (rem_sum > slots * mult_max || rem_sq > slots * mult_max * mult_max) return;
    if (rem_sq < rem_sum) return; // integers >= 0: sum of squares >= sum
    if (pos == r) {
        if (rem_sum == 0 && rem_sq == 0) out.push_back(DivisorClass{alpha, beta, cur});
        return;
    }
    for (long long m = 0; m <= mult_max; ++m) {
        cur[pos] = m;
        fill_mults(pos + 1, r, mult_max, rem_sum - m, rem_sq - BigInt(m) * m, cur, alpha, beta,
                   out);
    }
    cur[pos] = 0;
}

} // namespace

std::vector<DivisorClass> enumerate_minus_one_classes(const SurfaceParams& s,
                                                      const EnumerationBounds& bounds) {
    if (bounds.alpha_max < 0 || bounds.beta_max < 0 || bounds.mult_max < 0 || bounds.r < 0)
        throw InputError("enumerate_minus_one_classes: bounds must be nonnegative");
    if (bounds.r > 16)
        throw InputError("enumerate_minus_one_classes: r > 16 explodes combinatorially; "
                         "use minus_one_families for the multiset view");
    std::size_t r = static_cast<std::size_t>(bounds.r);
    std::vector<DivisorClass> out;
    for (std::size_t i = 0; i < r; ++i) out.push_back(exceptional_class(i, r));

    std::vector<BigInt> cur(r, 0);
    for (long long alpha = 0; alpha <= bounds.alpha_max; ++alpha) {
        for (long long beta = -bounds.beta_max; beta <= bounds.beta_max; ++beta) {
            BigInt a = alpha, b = beta;
            BigInt image_sq = 2 * a * b - a * a * BigInt(s.e);
            BigInt sq_target = image_sq + 1; // C^2 = -1
            // -K.C = 1 with all-zero mults gives 2a + 2b - a e - 2 a g; the
            // multiplicities must absorb the rest.
            BigInt sum_target = 2 * a + 2 * b - a * BigInt(s.e) - 2 * a * BigInt(s.g) - 1;
            if (sq_target < 0 || sum_target < 0) continue;
            if (a == 0 && b == 0) continue; // exceptionals already listed
            fill_mults(0, r, bounds.mult_max, sum_target, sq_target, cur, a, b, out);
        }
    }
    return out;
}

std::optional<std::vector<BigInt>> feasible_multiset(const BigInt& sum, const BigInt& sq_sum,
                                                     long long part_max, const BigInt& max_parts) {
    if (sum < 0 || sq_sum < 0 || part_max < 1 || max_parts < 0) return std::nullopt;
    if (sum == 0 && sq_sum == 0) return std::vector<BigInt>{};
    if (sum == 0 || sq_sum == 0) return std::nullopt;
    if (sq_sum < sum || sq_sum > sum * part_max) return std::nullopt;
    if (sum > 2000 || sq_sum > 20000)
        throw InputError("feasible_multiset: targets too large (sum " + sum.str() + ", squares " +
                         sq_sum.str() + ")");
    long long s = sum.convert_to<long long>();
    long long q = sq_sum.convert_to<long long>();
    // dp[i][j]: min number of parts realizing sum i, square-sum j.
    const long long kInf = 1LL << 60;
    std::vector<std::vector<long long>> dp(s + 1, std::vector<long long>(q + 1, kInf));
    dp[0][0] = 0;
    for (long long i = 1; i <= s; ++i) {
        for (long long j = 1; j <= q; ++j) {
            for (long long v = 1; v <= part_max && v <= i && v * v <= j; ++v) {
                if (dp[i - v][j - v * v] + 1 < dp[i][j]) dp[i][j] = dp[i - v][j - v * v] + 1;
            }
        }
    }
    if (dp[s][q] >= kInf || BigInt(dp[s][q]) > max_parts) return std::nullopt;
    std::vector<BigInt> parts;
    long long i = s, j = q;
    while (i > 0) {
        for (long long v = std::min<long long>(part_max, i); v >= 1; --v) {
            if (v * v <= j && dp[i - v][j - v * v] + 1 == dp[i][j]) {
                parts.emplace_back(v);
                i -= v;
                j -= v * v;
                break;
            }
        }
    }
    std::sort(parts.begin(), parts.end(), [](const BigInt& x, const BigInt& y) { return x > y; });
    return parts;
}

std::vector<MinusOneFamily> minus_one_families(const SurfaceParams& s, long long alpha_max,
                                               long long beta_max, long long mult_max,
                                               const BigInt& r, bool include_pointless) {
    std::vector<MinusOneFamily> out;
    for (long long alpha = 0; alpha <= alpha_max; ++alpha) {
        for (long long beta = -beta_max; beta <= beta_max; ++beta) {
            BigInt a = alpha, b = beta;
            if (a == 0 && b == 0) continue;
            BigInt q = 2 * a * b - a * a * BigInt(s.e) + 1;
            BigInt sum = 2 * a + 2 * b - a * BigInt(s.e) - 2 * a * BigInt(s.g) - 1;
            if (q == 0 && sum == 0) {
                if (include_pointless) out.push_back(MinusOneFamily{a, b, 0, 0, {}});
                continue;
            }
            if (q < 1 || sum < 1) continue; // families through at least one point
            auto witness = feasible_multiset(sum, q, mult_max, r);
            if (!witness) continue;
            out.push_back(MinusOneFamily{a, b, sum, q, std::move(*witness)});
        }
    }
    return out;
}

} // namespace seshadri
