#include "seshadri/json_io.hpp"

#include <limits>

namespace seshadri {

long long to_json_int(const BigInt& v) {
    if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max())
        throw InputError("to_json_int: " + v.str() + " exceeds the JSON integer range");
    return v.convert_to<long long>();
}

Json to_json(const Rational& v) { return rational_str(v); }

Json to_json(const QuadraticValue& v) {
    Json j;
    j["p"] = rational_str(v.rational_part());
    j["q"] = rational_str(v.radical_coeff());
    j["d"] = to_json_int(v.radicand());
    return j;
}

Json to_json(const SurfaceParams& s) {
    Json j;
    j["g"] = s.g;
    j["e"] = s.e;
    j["product"] = s.is_product;
    return j;
}

Json to_json(const DivisorClass& d) {
    Json j;
    j["a"] = to_json_int(d.a);
    j["b"] = to_json_int(d.b);
    Json mults = Json::array();
    for (const auto& m : d.mults) mults.push_back(to_json_int(m));
    j["mults"] = std::move(mults);
    return j;
}

Json to_json(const ExtendedDivisorClass& d) {
    Json j = to_json(d.base);
    j["ex_mult"] = to_json(d.ex_mult);
    return j;
}

Json to_json(const CurveClassification& c) {
    Json j;
    j["verdict"] = verdict_name(c.verdict);
    Json detail;
    detail["C_sq"] = to_json_int(c.detail.c_sq);
    detail["minus_K_dot_C"] = to_json_int(c.detail.minus_k_dot_c);
    detail["image_sq"] = to_json_int(c.detail.image_sq);
    detail["fired"] = c.detail.fired;
    if (!c.detail.note.empty()) detail["note"] = c.detail.note;
    j["detail"] = std::move(detail);
    return j;
}

Json to_json(const GoodFormReport& r) {
    Json j;
    j["is_good"] = r.is_good;
    if (r.failed_condition) j["failed_condition"] = *r.failed_condition;
    Json decomp;
    decomp["c_H"] = to_json(r.c_H);
    decomp["c_F"] = to_json(r.c_F);
    Json cs = Json::array();
    for (const auto& c : r.c) cs.push_back(to_json(c));
    decomp["c"] = std::move(cs);
    j["decomposition"] = std::move(decomp);
    Json sorted = Json::array();
    for (const auto& m : r.sorted_mults) sorted.push_back(to_json(m));
    j["sorted_mults"] = std::move(sorted);
    Json perm = Json::array();
    for (auto p : r.permutation) perm.push_back(p);
    j["permutation"] = std::move(perm);
    return j;
}

Json to_json(const ThresholdReport& r) {
    Json j;
    j["r0"] = to_json_int(r.r0);
    Json contributions = Json::array();
    for (const auto& c : r.contributions) {
        Json e;
        e["case"] = c.case_tag;
        e["formula"] = c.formula;
        e["value"] = rational_str(c.value);
        contributions.push_back(std::move(e));
    }
    j["contributions"] = std::move(contributions);
    return j;
}

Json to_json(const NonnegReport& r) {
    Json j;
    j["candidates_checked"] = r.candidates_checked;
    Json violations = Json::array();
    for (const auto& v : r.violations) {
        Json e;
        e["candidate"] = to_json(v.candidate);
        if (v.ex_mult_of_candidate != 0)
            e["ex_mult_of_candidate"] = to_json_int(v.ex_mult_of_candidate);
        e["value"] = to_json(v.value);
        violations.push_back(std::move(e));
    }
    j["violations"] = std::move(violations);
    return j;
}

Json to_json(const NbsSweepReport& r) {
    Json j;
    j["candidates_checked"] = r.candidates_checked;
    Json violations = Json::array();
    for (const auto& v : r.violations) {
        Json e;
        e["alpha"] = to_json_int(v.alpha);
        e["beta"] = to_json_int(v.beta);
        Json mults = Json::array();
        for (const auto& m : v.mults) mults.push_back(to_json_int(m));
        e["mults"] = std::move(mults);
        e["kind"] = v.kind;
        violations.push_back(std::move(e));
    }
    j["violations"] = std::move(violations);
    return j;
}

Json to_json(const WindowInterval& w) {
    Json j;
    if (w.empty()) {
        j["empty"] = true;
    } else {
        j["empty"] = false;
        j["lo"] = to_json_int(w.lo);
        j["hi"] = to_json_int(w.hi);
    }
    return j;
}

Json to_json(const ConstructResult& c) {
    Json j;
    j["r"] = to_json_int(c.r);
    j["s"] = to_json_int(c.s_mult);
    j["L"] = to_json(c.bundle);
    j["L_sq"] = to_json_int(c.l_sq);
    j["window"] = to_json(c.window);
    return j;
}

Json to_json(const SeshadriCertificate& c) {
    Json j;
    j["surface"] = to_json(c.surface);
    Json base;
    base["a"] = to_json_int(c.base_a);
    base["b"] = to_json_int(c.base_b);
    j["base_bundle"] = std::move(base);
    j["s"] = to_json_int(c.s_mult);
    j["r"] = to_json_int(c.r);
    j["L"] = to_json(c.bundle);
    j["L_sq"] = to_json_int(c.l_sq);
    j["epsilon"] = to_json(c.epsilon);
    j["is_irrational"] = c.is_irrational;
    Json checks;
    checks["ample_base"] = c.checks.ample_base;
    checks["r_ge_threshold"] = c.checks.r_ge_threshold;
    checks["L_sq_positive"] = c.checks.l_sq_positive;
    checks["good_form_at_generic_point"] = c.checks.good_form_at_generic_point;
    j["checks"] = std::move(checks);
    j["threshold_route"] = c.threshold_route;
    if (c.good_form_failed) j["good_form_failed_condition"] = *c.good_form_failed;
    if (c.upper_bound) {
        Json interval;
        interval["lower"] = to_json(*c.upper_bound);
        interval["upper"] = to_json(c.epsilon);
        j["epsilon_interval"] = std::move(interval);
    }
    j["valid"] = c.valid;
    j["conditionality"] = c.conditionality;
    return j;
}

namespace {
const Json& require(const Json& j, const char* key, const char* ctx) {
    auto it = j.find(key);
    if (it == j.end()) throw InputError(std::string(ctx) + ": missing field '" + key + "'");
    return *it;
}
BigInt int_from_json(const Json& j, const char* ctx) {
    if (j.is_number_integer()) return BigInt(j.get<long long>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw InputError(std::string(ctx) + ": expected an integer");
}
} // namespace

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw InputError("rational: expected \"num/den\" or an integer");
}

QuadraticValue quadratic_from_json(const Json& j) {
    if (j.is_number_integer() || j.is_string()) return QuadraticValue(rational_from_json(j));
    return QuadraticValue(rational_from_json(require(j, "p", "quadratic")),
                          rational_from_json(require(j, "q", "quadratic")),
                          int_from_json(require(j, "d", "quadratic"), "quadratic.d"));
}

SurfaceParams surface_from_json(const Json& j) {
    bool product = j.value("product", false);
    return make_surface(require(j, "g", "surface").get<long long>(),
                        require(j, "e", "surface").get<long long>(), product);
}

DivisorClass divisor_from_json(const Json& j) {
    DivisorClass d;
    d.a = int_from_json(require(j, "a", "class"), "class.a");
    d.b = int_from_json(require(j, "b", "class"), "class.b");
    for (const auto& m : require(j, "mults", "class"))
        d.mults.push_back(int_from_json(m, "class.mults"));
    return d;
}

ExtendedDivisorClass extended_divisor_from_json(const Json& j) {
    ExtendedDivisorClass d;
    d.base = divisor_from_json(j);
    d.ex_mult = quadratic_from_json(require(j, "ex_mult", "extended class"));
    return d;
}

EnumerationBounds bounds_from_json(const Json& j) {
    EnumerationBounds b;
    b.alpha_max = require(j, "alpha_max", "bounds").get<long long>();
    b.beta_max = require(j, "beta_max", "bounds").get<long long>();
    b.mult_max = require(j, "mult_max", "bounds").get<long long>();
    b.r = j.value("r", 0LL);
    return b;
}

} // namespace seshadri
