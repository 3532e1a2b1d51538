// Command-line front end: every library operation behind a subcommand, all
// output as JSON documents (JSON-lines for enumerate), no floating point
// anywhere unless --approx asks for labeled decimal strings.
//
// Exit codes: 0 success, 1 a verification sweep found a violation,
// 2 invalid input, 3 conditional hypothesis unmet without --assume-conjecture.

#include <CLI11.hpp>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <atomic>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <thread>

#include "seshadri/certificate.hpp"
#include "seshadri/json_io.hpp"

using namespace seshadri;

namespace {

constexpr const char* kToolConditionality = "Conjecture 2.1";

// ---------------------------------------------------------------------------
// Deterministic worker pool: unit i writes results[i]; merge order is fixed
// no matter how many workers run.

template <typename Fn>
void run_units(std::size_t n_units, unsigned workers, Fn&& fn) {
    if (workers <= 1 || n_units <= 1) {
        for (std::size_t i = 0; i < n_units; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= n_units) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

// ---------------------------------------------------------------------------
// Shared option state.

struct Options {
    long long genus = 0;
    long long invariant_e = 0;
    bool product = false;
    std::string json_in;
    bool assume = false;
    std::string bounds_str;
    unsigned long long seed = 0;
    unsigned workers = 1;
    unsigned approx = 0;

    CLI::Option* genus_opt = nullptr;
    CLI::Option* e_opt = nullptr;
    CLI::Option* product_opt = nullptr;
    CLI::Option* bounds_opt = nullptr;

    Json scenario; // parsed --json-in payload

    void load_scenario() {
        if (json_in.empty()) return;
        std::ifstream in(json_in);
        if (!in) throw InputError("cannot open scenario file " + json_in);
        try {
            in >> scenario;
        } catch (const std::exception& e) {
            throw InputError("scenario file " + json_in + ": " + e.what());
        }
    }

    SurfaceParams surface() const {
        Json merged = scenario.contains("surface") ? scenario["surface"] : Json::object();
        if (genus_opt->count()) merged["g"] = genus;
        if (e_opt->count()) merged["e"] = invariant_e;
        if (product_opt->count()) merged["product"] = product;
        if (!merged.contains("g") || !merged.contains("e"))
            throw InputError("surface parameters required: --genus and --invariant-e "
                             "(or a \"surface\" object in --json-in)");
        return surface_from_json(merged);
    }

    EnumerationBounds bounds(long long def_alpha, long long def_beta, long long def_mult) const {
        EnumerationBounds b{def_alpha, def_beta, def_mult, 0};
        if (scenario.contains("bounds")) b = bounds_from_json(scenario["bounds"]);
        if (bounds_opt->count()) {
            long long a, be, m;
            if (std::sscanf(bounds_str.c_str(), "%lld,%lld,%lld", &a, &be, &m) != 3)
                throw InputError("--bounds expects A,B,M");
            b.alpha_max = a;
            b.beta_max = be;
            b.mult_max = m;
        }
        return b;
    }

    Json field(const std::string& key) const {
        return scenario.contains(key) ? scenario[key] : Json();
    }
};

std::pair<BigInt, BigInt> parse_bundle(const std::string& str) {
    auto comma = str.find(',');
    if (comma == std::string::npos) throw InputError("--bundle expects a,b");
    return {BigInt(str.substr(0, comma)), BigInt(str.substr(comma + 1))};
}

// Adds a decimal "approx" sibling inside every quadratic-value object.
void add_approx(Json& j, unsigned digits) {
    if (j.is_object()) {
        if (j.contains("p") && j.contains("q") && j.contains("d")) {
            QuadraticValue v = quadratic_from_json(j);
            j["approx"] = approx_decimal(v, digits);
            return;
        }
        for (auto& [key, value] : j.items()) add_approx(value, digits);
    } else if (j.is_array()) {
        for (auto& value : j) add_approx(value, digits);
    }
}

void emit(Json doc, const Options& opt) {
    if (opt.approx > 0) add_approx(doc, opt.approx);
    std::cout << doc.dump(2) << "\n";
}

// All valid (g, e, product) combinations with g <= g_max, |e| <= 2 used by
// the verification sweeps.  There is no non-product ruled surface over P^1
// with e = 0, so that combination is not generated.
std::vector<SurfaceParams> sweep_surfaces(long long g_max = 2) {
    std::vector<SurfaceParams> out;
    for (long long e = -2; e <= 2; ++e)
        for (long long g = 0; g <= g_max; ++g) {
            if (e < -g) continue;
            if (e == 0) {
                out.push_back(make_surface(g, 0, true));
                if (g >= 1) out.push_back(make_surface(g, 0, false));
            } else {
                out.push_back(make_surface(g, e, false));
            }
        }
    return out;
}

// ---------------------------------------------------------------------------
// Simple commands.

int cmd_intersect(const Options& opt) {
    Json d1 = opt.field("d1"), d2 = opt.field("d2");
    if (d1.is_null() || d2.is_null())
        throw InputError("intersect: provide \"d1\" and \"d2\" classes via --json-in");
    SurfaceParams s = opt.surface();
    DivisorClass a = divisor_from_json(d1), b = divisor_from_json(d2);
    Json out;
    out["surface"] = to_json(s);
    out["d1"] = to_json(a);
    out["d2"] = to_json(b);
    out["product"] = to_json_int(intersect(a, b, s));
    emit(out, opt);
    return 0;
}

int cmd_classify(const Options& opt, const std::string& class_json) {
    SurfaceParams s = opt.surface();
    Json cj = class_json.empty() ? opt.field("class") : Json::parse(class_json);
    if (cj.is_null()) throw InputError("classify: provide --class or a \"class\" field");
    DivisorClass c = divisor_from_json(cj);
    Json out;
    out["surface"] = to_json(s);
    out["class"] = to_json(c);
    out["classification"] = to_json(classify_negative_class(c, s));
    out["conditionality"] = kToolConditionality;
    emit(out, opt);
    return 0;
}

int cmd_enumerate(const Options& opt, long long r, const std::string& what) {
    SurfaceParams s = opt.surface();
    if (!opt.field("r").is_null()) r = opt.field("r").get<long long>();
    if (r < 0) throw InputError("enumerate: --r must be nonnegative");
    EnumerationBounds b = opt.bounds(3, 4, 3);
    b.r = r;

    std::vector<std::string> lines;
    auto line_for = [&](const DivisorClass& c) {
        Json j;
        j["class"] = to_json(c);
        j["classification"] = to_json(classify_negative_class(c, s));
        return j.dump();
    };

    if (what == "minus-one") {
        // The exceptional classes come first, then the box scan in
        // lexicographic order; chunks split the (alpha, beta) plane.
        for (long long i = 0; i < r; ++i)
            lines.push_back(line_for(exceptional_class(static_cast<std::size_t>(i),
                                                       static_cast<std::size_t>(r))));
        std::size_t n_alpha = static_cast<std::size_t>(b.alpha_max + 1);
        std::vector<std::vector<std::string>> chunks(n_alpha);
        run_units(n_alpha, opt.workers, [&](std::size_t i) {
            EnumerationBounds slice = b;
            std::vector<std::string> out;
            for (const auto& c : enumerate_minus_one_classes(s, slice)) {
                bool pure_exceptional = c.a == 0 && c.b == 0;
                if (pure_exceptional) continue;
                if (c.a != BigInt(static_cast<long long>(i))) continue;
                out.push_back(line_for(c));
            }
            chunks[i] = std::move(out);
        });
        for (auto& chunk : chunks)
            for (auto& l : chunk) lines.push_back(std::move(l));
    } else if (what == "negative") {
        double box = static_cast<double>(b.alpha_max + 1) * (2 * b.beta_max + 1) *
                     std::pow(static_cast<double>(b.mult_max + 1), static_cast<double>(r));
        if (box > 1e8)
            throw InputError("enumerate: the box has ~" + std::to_string(box) +
                             " classes; shrink --bounds or --r");
        std::size_t n_alpha = static_cast<std::size_t>(b.alpha_max + 1);
        std::vector<std::vector<std::string>> chunks(n_alpha);
        run_units(n_alpha, opt.workers, [&](std::size_t ai) {
            std::vector<std::string> out;
            std::vector<long long> mults(static_cast<std::size_t>(r), 0);
            for (long long beta = -b.beta_max; beta <= b.beta_max; ++beta) {
                std::fill(mults.begin(), mults.end(), 0);
                while (true) {
                    DivisorClass c{BigInt(static_cast<long long>(ai)), beta,
                                   std::vector<BigInt>(mults.begin(), mults.end())};
                    if (intersect(c, c, s) < 0) out.push_back(line_for(c));
                    std::size_t i = 0;
                    while (i < mults.size() && mults[i] == b.mult_max) mults[i++] = 0;
                    if (i == mults.size()) break;
                    ++mults[i];
                }
            }
            chunks[ai] = std::move(out);
        });
        for (auto& chunk : chunks)
            for (auto& l : chunk) lines.push_back(std::move(l));
    } else {
        throw InputError("enumerate: --what must be minus-one or negative");
    }
    for (const auto& l : lines) std::cout << l << "\n";
    return 0;
}

int cmd_good_form(const Options& opt, const std::string& class_json, long long ex_sqrt) {
    SurfaceParams s = opt.surface();
    Json cj = class_json.empty() ? opt.field("class") : Json::parse(class_json);
    if (cj.is_null()) throw InputError("good-form: provide --class or a \"class\" field");
    Json out;
    out["surface"] = to_json(s);
    GoodFormReport rep;
    if (ex_sqrt >= 0 || cj.contains("ex_mult")) {
        ExtendedDivisorClass l;
        if (cj.contains("ex_mult")) {
            l = extended_divisor_from_json(cj);
        } else {
            l.base = divisor_from_json(cj);
            l.ex_mult = sqrt_symbolic(ex_sqrt);
        }
        out["class"] = to_json(l);
        rep = is_good_form(l, s);
    } else {
        DivisorClass l = divisor_from_json(cj);
        out["class"] = to_json(l);
        rep = is_good_form(l, s);
    }
    out["report"] = to_json(rep);
    emit(out, opt);
    return 0;
}

int cmd_ample(const Options& opt, const std::string& bundle_str, long long r, bool r_set,
              long long m) {
    SurfaceParams s = opt.surface();
    std::string bstr = bundle_str;
    if (bstr.empty() && !opt.field("bundle").is_null()) {
        Json bj = opt.field("bundle");
        bstr = bj["a"].dump() + "," + bj["b"].dump();
    }
    if (bstr.empty()) throw InputError("ample: provide --bundle a,b");
    auto [a, b] = parse_bundle(bstr);
    Json out;
    out["surface"] = to_json(s);
    out["bundle"] = Json{{"a", to_json_int(a)}, {"b", to_json_int(b)}};
    if (!r_set) {
        out["ample_base"] = is_ample_base(s, a, b);
        emit(out, opt);
        return 0;
    }
    ThresholdReport rt = r_threshold(s, a, b);
    bool ample = is_ample_uniform(s, a, b, r, m, opt.assume);
    out["r"] = r;
    out["m"] = m;
    out["ample"] = ample;
    out["L_sq"] = to_json_int(2 * a * b - a * a * BigInt(s.e));
    out["hypothesis"] = Json{{"r0", to_json_int(rt.r0)},
                             {"route", BigInt(r) >= rt.r0 ? "r>=r0" : "assumed"}};
    out["conditionality"] = kToolConditionality;
    emit(out, opt);
    return 0;
}

int cmd_threshold(const Options& opt, const std::string& bundle_str) {
    SurfaceParams s = opt.surface();
    auto [a, b] = parse_bundle(bundle_str);
    ThresholdReport rt = r_threshold(s, a, b);
    Json out = to_json(rt);
    out["surface"] = to_json(s);
    out["bundle"] = Json{{"a", to_json_int(a)}, {"b", to_json_int(b)}};
    out["conditionality"] = kToolConditionality;
    emit(out, opt);
    return 0;
}

int cmd_multipoint(const Options& opt, const std::string& bundle_str, long long r) {
    SurfaceParams s = opt.surface();
    auto [a, b] = parse_bundle(bundle_str);
    MultipointValue v = multipoint_conjectural(s, a, b, r);
    Json out;
    out["surface"] = to_json(s);
    out["bundle"] = Json{{"a", to_json_int(a)}, {"b", to_json_int(b)}};
    out["r"] = r;
    out["value"] = to_json(v.value);
    out["status"] = v.certified ? "certified-under-conjecture" : "below-threshold";
    out["r0"] = to_json_int(v.r0);
    out["conditionality"] = kToolConditionality;
    emit(out, opt);
    return 0;
}

int cmd_window(const Options& opt, long long s_mult) {
    SurfaceParams s = opt.surface();
    Json out;
    out["surface"] = to_json(s);
    out["s"] = s_mult;
    out["window"] = to_json(find_r_window(s, s_mult));
    emit(out, opt);
    return 0;
}

int cmd_construct(const Options& opt, long long r, bool r_set, bool require_irrational) {
    SurfaceParams s = opt.surface();
    std::optional<BigInt> r_opt;
    if (r_set) r_opt = BigInt(r);
    else if (!opt.field("r").is_null()) r_opt = BigInt(opt.field("r").get<long long>());
    ConstructResult c = construct_pair(s, r_opt, require_irrational);
    Json out = to_json(c);
    out["surface"] = to_json(s);
    out["certificate"] = to_json(seshadri_certify(s, c.bundle, c.r, opt.bounds(4, 6, 3)));
    emit(out, opt);
    return 0;
}

int cmd_certify(const Options& opt, const std::string& class_json, long long s_mult,
                bool s_set, long long r, bool r_set) {
    SurfaceParams s = opt.surface();
    DivisorClass l;
    BigInt rr;
    if (!class_json.empty() || !opt.field("class").is_null()) {
        Json cj = class_json.empty() ? opt.field("class") : Json::parse(class_json);
        l = divisor_from_json(cj);
        rr = static_cast<long long>(l.r());
        if (r_set && BigInt(r) != rr)
            throw InputError("certify: --r disagrees with the class's point count");
    } else if (s_set && r_set) {
        if (r < 0 || r > kMaxPoints)
            throw InputError("certify: --r outside [0, " + std::to_string(kMaxPoints) + "]");
        auto [a0, b0] = base_bundle_default(s);
        l = DivisorClass{s_mult * a0, s_mult * b0,
                         std::vector<BigInt>(static_cast<std::size_t>(r), 1)};
        rr = r;
    } else {
        throw InputError("certify: provide --class, or --s with --r");
    }
    Json out = to_json(seshadri_certify(s, l, rr, opt.bounds(4, 6, 3)));
    emit(out, opt);
    return 0;
}

int cmd_witness(const Options& opt, long long s_mult) {
    SurfaceParams s = opt.surface();
    Json out = to_json(irrationality_witness(s, BigInt(s_mult)));
    emit(out, opt);
    return 0;
}

int cmd_upper_bound(const Options& opt, const std::string& class_json) {
    SurfaceParams s = opt.surface();
    Json cj = class_json.empty() ? opt.field("class") : Json::parse(class_json);
    if (cj.is_null()) throw InputError("upper-bound: provide --class or a \"class\" field");
    DivisorClass l = divisor_from_json(cj);
    Json out;
    out["surface"] = to_json(s);
    out["class"] = to_json(l);
    out["upper_bound"] = to_json(seshadri_upper_bound(s, l, opt.bounds(4, 6, 3)));
    out["conditionality"] = kToolConditionality;
    emit(out, opt);
    return 0;
}

int cmd_nonneg(const Options& opt, const std::string& class_json, long long ex_sqrt,
               bool override_pre) {
    SurfaceParams s = opt.surface();
    Json cj = class_json.empty() ? opt.field("class") : Json::parse(class_json);
    if (cj.is_null()) throw InputError("nonneg: provide --class or a \"class\" field");
    EnumerationBounds b = opt.bounds(3, 4, 3);
    Json out;
    out["surface"] = to_json(s);
    NonnegReport rep;
    if (ex_sqrt >= 0 || cj.contains("ex_mult")) {
        ExtendedDivisorClass l;
        if (cj.contains("ex_mult")) l = extended_divisor_from_json(cj);
        else {
            l.base = divisor_from_json(cj);
            l.ex_mult = sqrt_symbolic(ex_sqrt);
        }
        out["class"] = to_json(l);
        rep = nonneg_on_candidates(l, s, b, override_pre);
    } else {
        DivisorClass l = divisor_from_json(cj);
        out["class"] = to_json(l);
        rep = nonneg_on_candidates(l, s, b, override_pre);
    }
    out["report"] = to_json(rep);
    emit(out, opt);
    return rep.violations.empty() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// Verification suites.

Json suite_equivalence(const Options& opt, long long r_max) {
    EnumerationBounds b = opt.bounds(3, 4, 3);
    auto surfaces = sweep_surfaces();
    struct Unit {
        SurfaceParams s;
        long long r;
    };
    std::vector<Unit> units;
    for (const auto& s : surfaces)
        for (long long r = 1; r <= r_max; ++r) units.push_back({s, r});

    struct UnitResult {
        std::size_t checked = 0, negative = 0, candidates = 0;
        std::vector<Json> disagreements;
    };
    std::vector<UnitResult> results(units.size());

    run_units(units.size(), opt.workers, [&](std::size_t ui) {
        const auto& [s, r] = units[ui];
        UnitResult res;
        std::vector<long long> mults(static_cast<std::size_t>(r), 0);
        for (long long alpha = 0; alpha <= b.alpha_max; ++alpha)
            for (long long beta = -b.beta_max; beta <= b.beta_max; ++beta) {
                std::fill(mults.begin(), mults.end(), 0);
                while (true) {
                    DivisorClass c{alpha, beta, std::vector<BigInt>(mults.begin(), mults.end())};
                    bool any_positive = false;
                    for (auto m : mults) any_positive |= m > 0;
                    ++res.checked;
                    if (intersect(c, c, s) < 0) {
                        ++res.negative;
                        auto cls = classify_negative_class(c, s);
                        if (cls.verdict == Verdict::ConjectureViolationCandidate)
                            ++res.candidates;
                        if (any_positive) {
                            auto c2 = conjecture2_check(c.a, c.b, c.mults, s);
                            DivisorClass image{c.a, c.b, std::vector<BigInt>(c.r(), 0)};
                            bool excluded =
                                is_rigid_class(image, s) ||
                                !xu_filter(intersect(image, image, s), c.mults);
                            bool lhs = cls.verdict != Verdict::ConjectureViolationCandidate;
                            bool rhs = c2 != Conjecture2Result::Violation || excluded;
                            if (lhs != rhs) {
                                Json d;
                                d["surface"] = to_json(s);
                                d["class"] = to_json(c);
                                d["classifier"] = verdict_name(cls.verdict);
                                d["bound_checker"] = conjecture2_result_name(c2);
                                d["exclusion_applies"] = excluded;
                                res.disagreements.push_back(std::move(d));
                            }
                        }
                    }
                    std::size_t i = 0;
                    while (i < mults.size() && mults[i] == b.mult_max) mults[i++] = 0;
                    if (i == mults.size()) break;
                    ++mults[i];
                }
            }
        results[ui] = std::move(res);
    });

    Json out;
    out["suite"] = "equivalence";
    out["bounds"] = Json{{"alpha_max", b.alpha_max}, {"beta_max", b.beta_max},
                         {"mult_max", b.mult_max}};
    out["r_max"] = r_max;
    out["surfaces"] = surfaces.size();
    std::size_t checked = 0, negative = 0, candidates = 0;
    Json disagreements = Json::array();
    for (const auto& res : results) {
        checked += res.checked;
        negative += res.negative;
        candidates += res.candidates;
        for (const auto& d : res.disagreements) disagreements.push_back(d);
    }
    out["classes_checked"] = checked;
    out["negative_classes"] = negative;
    out["violation_candidates_consistent"] = candidates;
    out["disagreements"] = std::move(disagreements);
    out["status"] = out["disagreements"].empty() ? "ok" : "violations";
    out["conditionality"] = kToolConditionality;
    return out;
}

Json suite_nonneg(const Options& opt, long long r_max) {
    EnumerationBounds cand_bounds = opt.bounds(3, 4, 3);
    auto surfaces = sweep_surfaces();
    struct Unit {
        SurfaceParams s;
        long long r;
    };
    std::vector<Unit> units;
    for (const auto& s : surfaces)
        for (long long r = 0; r <= r_max; ++r) units.push_back({s, r});

    struct UnitResult {
        std::size_t bundles = 0, pairs = 0;
        std::vector<Json> violations;
    };
    std::vector<UnitResult> results(units.size());

    run_units(units.size(), opt.workers, [&](std::size_t ui) {
        const auto& [s, r] = units[ui];
        UnitResult res;
        std::size_t rr = static_cast<std::size_t>(r);
        EnumerationBounds eb = cand_bounds;
        eb.r = r;
        auto candidates = enumerate_minus_one_classes(s, eb);
        for (const auto& g : gamma_transform_patterns(s, rr)) candidates.push_back(g);

        // Descending multiplicity tuples <= 3; ascending a, b.
        std::vector<long long> n(rr, 0);
        auto next_sorted = [&]() {
            std::size_t i = rr;
            while (i-- > 0) {
                long long cap = i == 0 ? 3 : n[i - 1];
                if (n[i] < cap) {
                    ++n[i];
                    for (std::size_t j = i + 1; j < rr; ++j) n[j] = 0;
                    return true;
                }
            }
            return false;
        };
        do {
            for (long long a = 0; a <= 8; ++a)
                for (long long bb = -12; bb <= 12; ++bb) {
                    DivisorClass l{a, bb, std::vector<BigInt>(n.begin(), n.end())};
                    if (!is_good_form(l, s).is_good) continue;
                    ++res.bundles;
                    for (const auto& c : candidates) {
                        ++res.pairs;
                        BigInt v = intersect(l, c, s);
                        if (v < 0) {
                            Json viol;
                            viol["surface"] = to_json(s);
                            viol["bundle"] = to_json(l);
                            viol["candidate"] = to_json(c);
                            viol["value"] = to_json_int(v);
                            res.violations.push_back(std::move(viol));
                        }
                    }
                }
        } while (next_sorted());
        results[ui] = std::move(res);
    });

    Json out;
    out["suite"] = "nonneg";
    out["r_max"] = r_max;
    std::size_t bundles = 0, pairs = 0;
    Json violations = Json::array();
    for (const auto& res : results) {
        bundles += res.bundles;
        pairs += res.pairs;
        for (const auto& v : res.violations) violations.push_back(v);
    }
    out["good_form_bundles"] = bundles;
    out["pairs_checked"] = pairs;
    out["violations"] = std::move(violations);
    out["status"] = out["violations"].empty() ? "ok" : "violations";
    return out;
}

Json suite_nbs(const Options& opt) {
    EnumerationBounds b = opt.bounds(4, 6, 3);
    struct Case {
        SurfaceParams s;
        BigInt a, bb;
    } cases[] = {
        {make_surface(0, 1, false), 1, 2},
        {make_surface(1, 0, true), 1, 1},
        {make_surface(2, -1, false), 1, 1},
    };
    Json out;
    out["suite"] = "nbs";
    Json runs = Json::array();
    bool ok = true;
    for (const auto& c : cases) {
        ThresholdReport rt = r_threshold(c.s, c.a, c.bb);
        NbsSweepReport rep = nbs_candidate_sweep(c.s, c.a, c.bb, rt.r0, b);
        Json run;
        run["surface"] = to_json(c.s);
        run["bundle"] = Json{{"a", to_json_int(c.a)}, {"b", to_json_int(c.bb)}};
        run["r0"] = to_json_int(rt.r0);
        run["sweep"] = to_json(rep);
        ok = ok && rep.violations.empty();
        runs.push_back(std::move(run));
    }
    out["runs"] = std::move(runs);
    out["status"] = ok ? "ok" : "violations";
    out["conditionality"] = kToolConditionality;
    return out;
}

Json suite_lattice(const Options& opt, std::size_t samples) {
    std::mt19937_64 rng(opt.seed);
    auto pick = [&](long long lo, long long hi) {
        return static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1)) + lo;
    };
    std::size_t failures = 0;
    std::vector<SurfaceParams> surfaces = sweep_surfaces();
    for (std::size_t i = 0; i < samples; ++i) {
        const SurfaceParams& s = surfaces[i % surfaces.size()];
        std::size_t r = static_cast<std::size_t>(pick(0, 8));
        auto rand_class = [&]() {
            DivisorClass d{pick(-50, 50), pick(-50, 50), {}};
            for (std::size_t k = 0; k < r; ++k) d.mults.emplace_back(pick(-20, 20));
            return d;
        };
        DivisorClass d1 = rand_class(), d2 = rand_class(), d3 = rand_class();
        BigInt k = pick(-10, 10);
        if (intersect(d1, d2, s) != intersect(d2, d1, s)) ++failures;
        if (intersect(d1 + k * d2, d3, s) != intersect(d1, d3, s) + k * intersect(d2, d3, s))
            ++failures;
        DivisorClass kc = canonical_class(s, r);
        if ((intersect(d1, d1, s) + intersect(kc, d1, s)) % 2 != 0) ++failures;
    }

    // Gram determinant sweep: exact elimination, all e in [-5, 5], r <= 50.
    std::size_t gram_checked = 0;
    for (long long e = -5; e <= 5; ++e) {
        SurfaceParams s = make_surface(5, e, false);
        for (std::size_t r = 0; r <= 50; ++r) {
            std::vector<std::vector<BigInt>> m(r + 2, std::vector<BigInt>(r + 2, 0));
            m[0][0] = -e;
            m[0][1] = 1;
            m[1][0] = 1;
            for (std::size_t i = 0; i < r; ++i) m[i + 2][i + 2] = -1;
            // Bareiss elimination.
            BigInt sign = 1, prev = 1;
            std::size_t n = r + 2;
            bool singular = false;
            for (std::size_t kk = 0; kk + 1 < n && !singular; ++kk) {
                if (m[kk][kk] == 0) {
                    std::size_t sw = kk + 1;
                    while (sw < n && m[sw][kk] == 0) ++sw;
                    if (sw == n) {
                        singular = true;
                        break;
                    }
                    std::swap(m[kk], m[sw]);
                    sign = -sign;
                }
                for (std::size_t i = kk + 1; i < n; ++i)
                    for (std::size_t j = kk + 1; j < n; ++j)
                        m[i][j] = (m[i][j] * m[kk][kk] - m[i][kk] * m[kk][j]) / prev;
                prev = m[kk][kk];
            }
            BigInt det = singular ? BigInt(0) : sign * m[n - 1][n - 1];
            BigInt expected = (r % 2 == 0) ? -1 : 1;
            ++gram_checked;
            if (det != expected) ++failures;
        }
    }

    Json out;
    out["suite"] = "lattice";
    out["seed"] = opt.seed;
    out["random_samples"] = samples;
    out["gram_matrices"] = gram_checked;
    out["failures"] = failures;
    out["status"] = failures == 0 ? "ok" : "violations";
    return out;
}

Json suite_exactnum(const Options& opt, std::size_t samples) {
    using Dec50 = boost::multiprecision::cpp_dec_float_50;
    std::mt19937_64 rng(opt.seed);
    auto pick = [&](long long lo, long long hi) {
        return static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1)) + lo;
    };
    auto rand_quad = [&](long long d) {
        return QuadraticValue(Rational(BigInt(pick(-1000, 1000)), BigInt(pick(1, 1000))),
                              Rational(BigInt(pick(-1000, 1000)), BigInt(pick(1, 1000))),
                              BigInt(d));
    };
    auto eval = [](const QuadraticValue& v) {
        return v.rational_part().convert_to<Dec50>() +
               v.radical_coeff().convert_to<Dec50>() * sqrt(Dec50(v.radicand()));
    };
    const Dec50 gap("1e-20");
    std::size_t compared = 0, failures = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        long long d = pick(0, 50);
        QuadraticValue x = rand_quad(d), y = rand_quad(d);
        Dec50 diff = eval(x) - eval(y);
        if (abs(diff) <= gap) continue;
        ++compared;
        auto ord = quad_cmp(x, y);
        bool agree = diff > 0 ? ord == std::strong_ordering::greater
                              : ord == std::strong_ordering::less;
        if (!agree) ++failures;
    }
    Json out;
    out["suite"] = "exactnum";
    out["seed"] = opt.seed;
    out["samples"] = samples;
    out["compared"] = compared;
    out["failures"] = failures;
    out["status"] = failures == 0 ? "ok" : "violations";
    return out;
}

Json suite_minusone(const Options& opt, long long r_max) {
    EnumerationBounds b = opt.bounds(3, 4, 3);
    auto surfaces = sweep_surfaces();
    std::size_t checked = 0, failures = 0;
    for (const auto& s : surfaces)
        for (long long r = 0; r <= r_max; ++r) {
            EnumerationBounds eb = b;
            eb.r = r;
            for (const auto& c : enumerate_minus_one_classes(s, eb)) {
                ++checked;
                bool ok = intersect(c, c, s) == -1 &&
                          intersect(canonical_class(s, c.r()), c, s) == -1 &&
                          arithmetic_genus(c, s) == 0;
                if (!ok) ++failures;
            }
        }
    Json out;
    out["suite"] = "minusone";
    out["r_max"] = r_max;
    out["classes_checked"] = checked;
    out["failures"] = failures;
    out["status"] = failures == 0 ? "ok" : "violations";
    return out;
}

Json suite_witnesses(const Options& opt) {
    (void)opt;
    std::size_t checked = 0, failures = 0;
    Json cases = Json::array();
    for (long long e : {-2LL, -1LL, 0LL, 1LL, 2LL, 3LL}) {
        SurfaceParams s = e > 0    ? make_surface(0, e, false)
                          : e == 0 ? make_surface(1, 0, true)
                                   : make_surface(-e, e, false);
        for (long long sm = 3; sm <= 10; ++sm) {
            ++checked;
            auto cert = irrationality_witness(s, sm);
            bool ok = cert.valid && cert.l_sq == 2 && cert.is_irrational &&
                      cert.epsilon == sqrt_symbolic(2) && find_r_window(s, sm).contains(cert.r);
            if (!ok) {
                ++failures;
                cases.push_back(to_json(cert));
            }
        }
    }
    Json out;
    out["suite"] = "witnesses";
    out["cases"] = checked;
    out["failures"] = failures;
    out["failing_cases"] = std::move(cases);
    out["status"] = failures == 0 ? "ok" : "violations";
    out["conditionality"] = kToolConditionality;
    return out;
}

int cmd_verify(const Options& opt, const std::string& suite, long long r_max, bool r_max_set,
               std::size_t samples) {
    auto run_one = [&](const std::string& name) -> Json {
        if (name == "equivalence") return suite_equivalence(opt, r_max_set ? r_max : 4);
        if (name == "nonneg") return suite_nonneg(opt, r_max_set ? r_max : 5);
        if (name == "nbs") return suite_nbs(opt);
        if (name == "lattice") return suite_lattice(opt, samples);
        if (name == "exactnum") return suite_exactnum(opt, samples ? samples : 10000);
        if (name == "minusone") return suite_minusone(opt, r_max_set ? r_max : 3);
        if (name == "witnesses") return suite_witnesses(opt);
        throw InputError("verify: unknown suite '" + name +
                         "' (equivalence, nonneg, nbs, lattice, exactnum, minusone, witnesses, "
                         "all)");
    };
    Json doc;
    bool ok = true;
    if (suite == "all") {
        Json results = Json::array();
        for (const char* name :
             {"exactnum", "lattice", "minusone", "equivalence", "nonneg", "nbs", "witnesses"}) {
            Json r = run_one(name);
            ok = ok && r["status"] == "ok";
            results.push_back(std::move(r));
        }
        doc["suite"] = "all";
        doc["results"] = std::move(results);
        doc["status"] = ok ? "ok" : "violations";
    } else {
        doc = run_one(suite);
        ok = doc["status"] == "ok";
    }
    emit(doc, opt);
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact divisor-lattice computations and Seshadri-constant certificates on "
                 "blow-ups of ruled surfaces"};
    app.require_subcommand(1);

    Options opt;
    opt.genus_opt = app.add_option("--genus", opt.genus, "Genus g of the base curve");
    opt.e_opt = app.add_option("--invariant-e", opt.invariant_e, "Invariant e of the surface");
    opt.product_opt = app.add_flag("--product", opt.product, "The surface is Gamma x P^1");
    app.add_option("--json-in", opt.json_in, "Scenario file supplying inputs as JSON");
    app.add_flag("--assume-conjecture", opt.assume,
                 "Assert the classification conjecture where a hypothesis is otherwise unmet");
    opt.bounds_opt =
        app.add_option("--bounds", opt.bounds_str, "Search bounds A,B,M (alpha, |beta|, mults)");
    app.add_option("--seed", opt.seed, "Seed for randomized sweeps");
    app.add_option("--workers", opt.workers, "Worker threads for enumerate/verify");
    app.add_option("--approx", opt.approx,
                   "Add decimal approx fields with this many digits (labeled, never exact)");

    std::string class_json, class2_json, bundle_str, what = "minus-one", suite = "equivalence";
    long long r = 0, m = 1, s_mult = 0, ex_sqrt = -1, r_max = 0;
    std::size_t samples = 100000;
    bool require_irrational = false, override_pre = false;

    auto* c_intersect = app.add_subcommand("intersect", "Intersection number of two classes");
    auto* c_classify = app.add_subcommand("classify", "Classify a negative class");
    auto* c_enumerate = app.add_subcommand("enumerate", "Enumerate candidate classes (JSON lines)");
    auto* c_goodform = app.add_subcommand("good-form", "Good-form test and decomposition");
    auto* c_ample = app.add_subcommand("ample", "Ampleness on the base or the blow-up");
    auto* c_threshold = app.add_subcommand("threshold", "Sufficient point count r0");
    auto* c_multipoint = app.add_subcommand("multipoint", "Conjectural multi-point value");
    auto* c_window = app.add_subcommand("window", "Admissible r interval for a scaling s");
    auto* c_construct = app.add_subcommand("construct", "Construct a window bundle");
    auto* c_certify = app.add_subcommand("certify", "Certify epsilon = sqrt(L^2)");
    auto* c_witness = app.add_subcommand("witness", "Irrationality witness for a scaling s");
    auto* c_upper = app.add_subcommand("upper-bound", "Candidate upper bound for epsilon");
    auto* c_nonneg = app.add_subcommand("nonneg", "L.C >= 0 over the candidate classes");
    auto* c_verify = app.add_subcommand("verify", "Exhaustive and randomized property sweeps");

    c_classify->add_option("--class", class_json, "Divisor class as JSON");
    c_enumerate->add_option("--r", r, "Number of blown-up points");
    c_enumerate->add_option("--what", what, "minus-one (default) or negative");
    c_goodform->add_option("--class", class_json, "Divisor class as JSON");
    c_goodform->add_option("--ex-sqrt", ex_sqrt, "Extra multiplicity sqrt(N) at one more point");
    auto* ample_r = c_ample->add_option("--r", r, "Number of blown-up points");
    c_ample->add_option("--m", m, "Uniform multiplicity");
    c_ample->add_option("--bundle", bundle_str, "Base bundle a,b");
    c_threshold->add_option("--bundle", bundle_str, "Base bundle a,b")->required();
    c_multipoint->add_option("--bundle", bundle_str, "Base bundle a,b")->required();
    c_multipoint->add_option("--r", r, "Number of points")->required();
    c_window->add_option("--s", s_mult, "Scaling factor")->required();
    auto* construct_r = c_construct->add_option("--r", r, "Requested point count");
    c_construct->add_flag("--require-irrational", require_irrational,
                          "Skip perfect-square L^2");
    c_certify->add_option("--class", class_json, "Uniform bundle as JSON");
    auto* certify_s = c_certify->add_option("--s", s_mult, "Scaling of the default base bundle");
    auto* certify_r = c_certify->add_option("--r", r, "Number of blown-up points");
    c_witness->add_option("--s", s_mult, "Scaling factor (>= 3)")->required();
    c_upper->add_option("--class", class_json, "Bundle as JSON");
    c_nonneg->add_option("--class", class_json, "Bundle as JSON");
    c_nonneg->add_option("--ex-sqrt", ex_sqrt, "Extra multiplicity sqrt(N)");
    c_nonneg->add_flag("--override-precondition", override_pre,
                       "Run even when the bundle is not in good form");
    c_verify->add_option("--suite", suite,
                         "equivalence | nonneg | nbs | lattice | exactnum | minusone | "
                         "witnesses | all");
    auto* verify_rmax = c_verify->add_option("--r-max", r_max, "Point-count cap for box sweeps");
    c_verify->add_option("--samples", samples, "Sample count for randomized suites");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e, std::cout, std::cerr);
        return 2;
    }

    try {
        opt.load_scenario();
        if (c_intersect->parsed()) return cmd_intersect(opt);
        if (c_classify->parsed()) return cmd_classify(opt, class_json);
        if (c_enumerate->parsed()) return cmd_enumerate(opt, r, what);
        if (c_goodform->parsed()) return cmd_good_form(opt, class_json, ex_sqrt);
        if (c_ample->parsed())
            return cmd_ample(opt, bundle_str, r, ample_r->count() > 0, m);
        if (c_threshold->parsed()) return cmd_threshold(opt, bundle_str);
        if (c_multipoint->parsed()) return cmd_multipoint(opt, bundle_str, r);
        if (c_window->parsed()) return cmd_window(opt, s_mult);
        if (c_construct->parsed())
            return cmd_construct(opt, r, construct_r->count() > 0, require_irrational);
        if (c_certify->parsed())
            return cmd_certify(opt, class_json, s_mult, certify_s->count() > 0, r,
                               certify_r->count() > 0);
        if (c_witness->parsed()) return cmd_witness(opt, s_mult);
        if (c_upper->parsed()) return cmd_upper_bound(opt, class_json);
        if (c_nonneg->parsed()) return cmd_nonneg(opt, class_json, ex_sqrt, override_pre);
        if (c_verify->parsed())
            return cmd_verify(opt, suite, r_max, verify_rmax->count() > 0, samples);
        std::cerr << app.help() << "\n";
        return 2;
    } catch (const HypothesisError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: invalid JSON input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
