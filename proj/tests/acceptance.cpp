// Acceptance suite: one line per criterion, every check exact, runtime
// budgets enforced.  Criterion 9 and the schema check drive the CLI binary,
// whose path comes from --cli; --schema points at schema/output.json.

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <regex>
#include <sstream>

#include "seshadri/certificate.hpp"
#include "seshadri/json_io.hpp"

using namespace seshadri;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

struct Criterion {
    const char* name;
    double budget_seconds;
    Clock::time_point start = Clock::now();

    explicit Criterion(const char* n, double budget) : name(n), budget_seconds(budget) {}

    void finish(bool ok, const std::string& detail) {
        double elapsed =
            std::chrono::duration_cast<std::chrono::duration<double>>(Clock::now() - start)
                .count();
        bool in_budget = budget_seconds <= 0 || elapsed <= budget_seconds;
        bool pass = ok && in_budget;
        if (!pass) ++g_failures;
        std::printf("%-55s %s  (%s; %.2fs%s)\n", name, pass ? "PASS" : "FAIL", detail.c_str(),
                    elapsed,
                    budget_seconds > 0
                        ? (in_budget ? "" : ", OVER BUDGET")
                        : "");
        std::fflush(stdout);
    }
};

std::vector<SurfaceParams> sweep_surfaces() {
    std::vector<SurfaceParams> out;
    for (long long e = -2; e <= 2; ++e)
        for (long long g = 0; g <= 2; ++g) {
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

// --- criterion 1: the flagship irrational witness ---------------------------

void criterion_1() {
    Criterion c("criterion 1 (irrational-witness reproduction):", 1.0);
    SurfaceParams p = make_surface(1, 0, true);
    auto cert = irrationality_witness(p, 3);
    bool ok = cert.r == 16 && cert.l_sq == 2 && cert.epsilon == sqrt_symbolic(2) &&
              cert.is_irrational && cert.valid && cert.checks.ample_base &&
              cert.checks.r_ge_threshold && cert.checks.l_sq_positive &&
              cert.checks.good_form_at_generic_point;
    c.finish(ok, "s=3 -> r=16, L^2=2, epsilon=sqrt(2), all checks");
}

// --- criterion 2: the witness family ----------------------------------------

void criterion_2() {
    Criterion c("criterion 2 (witness family, 48 cases):", 5.0);
    std::size_t cases = 0;
    bool ok = true;
    for (long long e : {-2LL, -1LL, 0LL, 1LL, 2LL, 3LL}) {
        SurfaceParams s = e > 0    ? make_surface(0, e, false)
                          : e == 0 ? make_surface(1, 0, true)
                                   : make_surface(-e, e, false);
        for (long long sm = 3; sm <= 10; ++sm) {
            ++cases;
            auto cert = irrationality_witness(s, sm);
            // Window inequalities recomputed from scratch.
            BigInt q = e >= 0 ? BigInt(e) + 2 : BigInt(2) - e;
            BigInt s2 = BigInt(sm) * sm;
            bool window = (4 * s2 * q - 4 >= 4 * cert.r) && (4 * cert.r >= 4 * s2 * q - s2);
            ok = ok && cert.valid && cert.l_sq == 2 && cert.epsilon == sqrt_symbolic(2) &&
                 cert.is_irrational && window;
        }
    }
    c.finish(ok && cases == 48, std::to_string(cases) + " cases, all L^2=2, epsilon=sqrt(2)");
}

// --- criterion 3: threshold reproduction ------------------------------------

void criterion_3() {
    Criterion c("criterion 3 (threshold reproduction):", 1.0);
    auto dominator = [](const ThresholdReport& rep) {
        Rational best(-1);
        std::string formula;
        for (const auto& contrib : rep.contributions)
            if (contrib.value > best) {
                best = contrib.value;
                formula = contrib.formula;
            }
        return formula;
    };
    auto hirz = r_threshold(make_surface(0, 1, false), 1, 2);
    auto prod = r_threshold(make_surface(1, 0, true), 1, 1);
    auto neg = r_threshold(make_surface(2, -1, false), 1, 1);
    bool ok = hirz.r0 == 27 && dominator(hirz) == "(4-e-2g)^2 L^2" &&
              prod.r0 == 32 && dominator(prod) == "16 L^2" &&
              neg.r0 == 108 && dominator(neg) == "36 L^2" &&
              !hirz.contributions.empty() && prod.contributions.size() == 4 &&
              neg.contributions.size() == 6;
    c.finish(ok, "r0 = 27 / 32 / 108 with dominating formulas");
}

// --- criterion 4: NBS sweep at the threshold --------------------------------

void criterion_4() {
    Criterion c("criterion 4 (NBS sweep at r = r0):", 60.0);
    struct Case {
        SurfaceParams s;
        BigInt a, b;
    } cases[] = {
        {make_surface(0, 1, false), 1, 2},
        {make_surface(1, 0, true), 1, 1},
        {make_surface(2, -1, false), 1, 1},
    };
    bool ok = true;
    std::size_t checked = 0;
    for (const auto& k : cases) {
        BigInt r0 = r_threshold(k.s, k.a, k.b).r0;
        auto sweep = nbs_candidate_sweep(k.s, k.a, k.b, r0, {4, 6, 3, 0});
        ok = ok && sweep.violations.empty();
        checked += sweep.candidates_checked;
        // Unit-multiplicity patterns asserted once more, directly.
        ok = ok && nbs_check(k.s, k.a, k.b, r0, 0, 1, {1}); // fiber
        ok = ok && nbs_check(k.s, k.a, k.b, r0, 1, 0, {1}); // section
    }
    c.finish(ok, std::to_string(checked) + " candidate families, zero violations");
}

// --- criterion 5: good form implies nonnegativity ---------------------------

void criterion_5() {
    Criterion c("criterion 5 (good form => L.C >= 0, exhaustive):", 120.0);
    bool ok = true;
    std::size_t bundles = 0, pairs = 0;
    for (const auto& s : sweep_surfaces()) {
        for (long long r = 0; r <= 5; ++r) {
            std::size_t rr = static_cast<std::size_t>(r);
            auto candidates = enumerate_minus_one_classes(s, {3, 4, 3, r});
            for (const auto& g : gamma_transform_patterns(s, rr)) candidates.push_back(g);
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
                for (long long a = 0; a <= 8 && ok; ++a)
                    for (long long b = -12; b <= 12; ++b) {
                        DivisorClass l{a, b, std::vector<BigInt>(n.begin(), n.end())};
                        if (!is_good_form(l, s).is_good) continue;
                        ++bundles;
                        for (const auto& cand : candidates) {
                            ++pairs;
                            if (intersect(l, cand, s) < 0) {
                                ok = false;
                                break;
                            }
                        }
                        if (!ok) break;
                    }
            } while (next_sorted() && ok);
            if (!ok) break;
        }
        if (!ok) break;
    }
    c.finish(ok, std::to_string(bundles) + " good-form bundles, " + std::to_string(pairs) +
                     " pairs, zero exceptions");
}

// --- criterion 6: classifier and bound checker agree ------------------------

void criterion_6() {
    Criterion c("criterion 6 (conjecture-equivalence cross-check):", 120.0);
    bool ok = true;
    std::size_t negatives = 0;
    for (const auto& s : sweep_surfaces()) {
        for (long long r = 1; r <= 4 && ok; ++r) {
            std::vector<long long> mults(static_cast<std::size_t>(r), 0);
            for (long long alpha = 0; alpha <= 3 && ok; ++alpha)
                for (long long beta = -4; beta <= 4 && ok; ++beta) {
                    std::fill(mults.begin(), mults.end(), 0);
                    while (true) {
                        DivisorClass cl{alpha, beta,
                                        std::vector<BigInt>(mults.begin(), mults.end())};
                        bool any_positive = false;
                        for (auto m : mults) any_positive |= m > 0;
                        if (intersect(cl, cl, s) < 0) {
                            ++negatives;
                            auto verdict = classify_negative_class(cl, s).verdict;
                            if (any_positive) {
                                auto c2 = conjecture2_check(cl.a, cl.b, cl.mults, s);
                                DivisorClass image{cl.a, cl.b, std::vector<BigInt>(cl.r(), 0)};
                                bool excluded =
                                    is_rigid_class(image, s) ||
                                    !xu_filter(intersect(image, image, s), cl.mults);
                                bool lhs = verdict != Verdict::ConjectureViolationCandidate;
                                bool rhs = c2 != Conjecture2Result::Violation || excluded;
                                if (lhs != rhs) {
                                    ok = false;
                                    break;
                                }
                            }
                        }
                        std::size_t i = 0;
                        while (i < mults.size() && mults[i] == 3) mults[i++] = 0;
                        if (i == mults.size()) break;
                        ++mults[i];
                    }
                }
        }
        if (!ok) break;
    }
    c.finish(ok, std::to_string(negatives) + " negative classes, zero disagreements");
}

// --- criterion 7: lattice invariants -----------------------------------------

BigInt bareiss_det(std::vector<std::vector<BigInt>> m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    BigInt sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t sw = k + 1;
            while (sw < n && m[sw][k] == 0) ++sw;
            if (sw == n) return 0;
            std::swap(m[k], m[sw]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

void criterion_7() {
    Criterion c("criterion 7 (lattice invariants):", 10.0);
    std::mt19937_64 rng(2718281828);
    auto pick = [&](long long lo, long long hi) {
        return static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1)) + lo;
    };
    auto surfaces = sweep_surfaces();
    bool ok = true;
    for (std::size_t i = 0; i < 100000 && ok; ++i) {
        const SurfaceParams& s = surfaces[i % surfaces.size()];
        std::size_t r = static_cast<std::size_t>(pick(0, 8));
        auto rand_class = [&]() {
            DivisorClass d{pick(-50, 50), pick(-50, 50), {}};
            for (std::size_t k = 0; k < r; ++k) d.mults.emplace_back(pick(-20, 20));
            return d;
        };
        DivisorClass d1 = rand_class(), d2 = rand_class(), d3 = rand_class();
        BigInt k = pick(-10, 10);
        ok = ok && intersect(d1, d2, s) == intersect(d2, d1, s);
        ok = ok && intersect(d1 + k * d2, d3, s) ==
                       intersect(d1, d3, s) + k * intersect(d2, d3, s);
        ok = ok && (intersect(d1, d1, s) + intersect(canonical_class(s, r), d1, s)) % 2 == 0;
    }
    std::size_t grams = 0;
    for (long long e = -5; e <= 5 && ok; ++e) {
        SurfaceParams s = make_surface(5, e, false);
        for (std::size_t r = 0; r <= 50 && ok; ++r) {
            std::vector<DivisorClass> basis{gamma_class(r), fiber_class(r)};
            for (std::size_t i = 0; i < r; ++i) basis.push_back(exceptional_class(i, r));
            std::vector<std::vector<BigInt>> gram(basis.size(),
                                                  std::vector<BigInt>(basis.size()));
            for (std::size_t i = 0; i < basis.size(); ++i)
                for (std::size_t j = 0; j < basis.size(); ++j)
                    gram[i][j] = intersect(basis[i], basis[j], s);
            BigInt expected = (r % 2 == 0) ? -1 : 1;
            ok = ok && bareiss_det(std::move(gram)) == expected;
            ++grams;
        }
    }
    c.finish(ok, "100000 random classes, " + std::to_string(grams) + " Gram determinants");
}

// --- criterion 8: exact-number oracle ----------------------------------------

void criterion_8() {
    Criterion c("criterion 8 (exact comparison vs 50-digit oracle):", 5.0);
    using Dec50 = boost::multiprecision::cpp_dec_float_50;
    std::mt19937_64 rng(1618);
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
    std::size_t compared = 0;
    bool ok = true;
    for (std::size_t i = 0; i < 10000; ++i) {
        long long d = pick(0, 50);
        QuadraticValue x = rand_quad(d), y = rand_quad(d);
        Dec50 diff = eval(x) - eval(y);
        if (abs(diff) <= gap) continue;
        ++compared;
        auto ord = quad_cmp(x, y);
        ok = ok && (diff > 0 ? ord == std::strong_ordering::greater
                             : ord == std::strong_ordering::less);
    }
    c.finish(ok, std::to_string(compared) + " comparisons above the gap, zero disagreements");
}

// --- criterion 9 + schema: CLI-level checks ----------------------------------

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& cli, const std::string& args) {
    CliResult res;
    std::string cmd = cli + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return res;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) res.output.append(buf, got);
    int status = pclose(p);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

void criterion_9(const std::string& cli) {
    Criterion c("criterion 9 (determinism across worker counts):", 0);
    auto eq1 = run_cli(cli, "verify --suite equivalence --bounds 3,4,3 --r-max 3 --workers 1");
    auto eq4 = run_cli(cli, "verify --suite equivalence --bounds 3,4,3 --r-max 3 --workers 4");
    auto nn1 = run_cli(cli, "verify --suite nonneg --r-max 2 --workers 1");
    auto nn4 = run_cli(cli, "verify --suite nonneg --r-max 2 --workers 4");
    auto en1 = run_cli(cli, "enumerate --genus 0 --invariant-e 2 --r 3 --workers 1");
    auto en4 = run_cli(cli, "enumerate --genus 0 --invariant-e 2 --r 3 --workers 4");
    // Identical argv must also reproduce identical bytes run-to-run.
    auto rerun = run_cli(cli, "verify --suite equivalence --bounds 3,4,3 --r-max 3 --workers 4");
    bool ok = eq1.exit_code == 0 && eq4.exit_code == 0 && eq1.output == eq4.output &&
              nn1.exit_code == 0 && nn4.exit_code == 0 && nn1.output == nn4.output &&
              en1.exit_code == 0 && en4.exit_code == 0 && en1.output == en4.output &&
              rerun.output == eq4.output && !eq1.output.empty() && !en1.output.empty();
    c.finish(ok, "verify x2 and enumerate byte-identical, 1 vs 4 workers and rerun");
}

// Minimal JSON-schema checker covering the subset the published schema uses.
bool schema_valid(const Json& root, const Json& node, const Json& inst, std::string& err);

bool schema_type_ok(const std::string& t, const Json& inst) {
    if (t == "object") return inst.is_object();
    if (t == "array") return inst.is_array();
    if (t == "string") return inst.is_string();
    if (t == "integer") return inst.is_number_integer();
    if (t == "number") return inst.is_number();
    if (t == "boolean") return inst.is_boolean();
    if (t == "null") return inst.is_null();
    return false;
}

bool schema_valid(const Json& root, const Json& node, const Json& inst, std::string& err) {
    if (node.contains("$ref")) {
        std::string ref = node["$ref"].get<std::string>();
        const std::string prefix = "#/$defs/";
        if (ref.rfind(prefix, 0) != 0) {
            err = "unsupported $ref " + ref;
            return false;
        }
        return schema_valid(root, root["$defs"][ref.substr(prefix.size())], inst, err);
    }
    if (node.contains("const") && inst != node["const"]) {
        err = "const mismatch: " + inst.dump();
        return false;
    }
    if (node.contains("enum")) {
        bool found = false;
        for (const auto& v : node["enum"]) found = found || inst == v;
        if (!found) {
            err = "enum mismatch: " + inst.dump();
            return false;
        }
    }
    if (node.contains("type") && !schema_type_ok(node["type"].get<std::string>(), inst)) {
        err = "type mismatch, wanted " + node["type"].get<std::string>() + ": " + inst.dump();
        return false;
    }
    if (node.contains("pattern")) {
        std::regex re(node["pattern"].get<std::string>());
        if (!inst.is_string() || !std::regex_search(inst.get<std::string>(), re)) {
            err = "pattern mismatch: " + inst.dump();
            return false;
        }
    }
    if (node.contains("required"))
        for (const auto& key : node["required"])
            if (!inst.contains(key.get<std::string>())) {
                err = "missing required field " + key.get<std::string>();
                return false;
            }
    if (node.contains("properties") && inst.is_object())
        for (const auto& [key, sub] : node["properties"].items())
            if (inst.contains(key) && !schema_valid(root, sub, inst[key], err)) {
                err = key + ": " + err;
                return false;
            }
    if (node.contains("items") && inst.is_array())
        for (const auto& element : inst)
            if (!schema_valid(root, node["items"], element, err)) return false;
    for (const char* combo : {"anyOf", "oneOf"}) {
        if (!node.contains(combo)) continue;
        int matches = 0;
        for (const auto& branch : node[combo]) {
            std::string branch_err;
            if (schema_valid(root, branch, inst, branch_err)) ++matches;
        }
        if (matches == 0) {
            err = std::string(combo) + ": no branch matched";
            return false;
        }
    }
    return true;
}

void schema_conformance(const std::string& cli, const std::string& schema_path) {
    Criterion c("schema conformance (CLI invariant):", 0);
    std::ifstream in(schema_path);
    Json schema;
    bool ok = static_cast<bool>(in >> schema);
    const char* commands[] = {
        "witness --genus 1 --invariant-e 0 --product --s 3",
        "witness --genus 0 --invariant-e 2 --s 4 --approx 12",
        "threshold --genus 2 --invariant-e -1 --bundle 1,1",
        "multipoint --genus 0 --invariant-e 1 --bundle 1,2 --r 27",
        "window --genus 1 --invariant-e 0 --product --s 4",
        "construct --genus 1 --invariant-e 0 --product --r 16",
        "certify --genus 1 --invariant-e 0 --product --s 2 --r 6",
        "classify --genus 0 --invariant-e 1 --class '{\"a\":0,\"b\":2,\"mults\":[3]}'",
        "good-form --genus 1 --invariant-e 0 --product --class "
        "'{\"a\":3,\"b\":3,\"mults\":[1,1,1]}' --ex-sqrt 2",
        "ample --genus 0 --invariant-e 1 --bundle 1,2",
        "ample --genus 0 --invariant-e 1 --bundle 1,2 --r 27",
        "upper-bound --genus 0 --invariant-e 1 --class '{\"a\":1,\"b\":2,\"mults\":[]}'",
        "nonneg --genus 0 --invariant-e 1 --class '{\"a\":2,\"b\":3,\"mults\":[1]}'",
        "construct --genus 0 --invariant-e 1 --require-irrational",
        "verify --suite nbs",
        "verify --suite witnesses",
    };
    std::size_t docs = 0;
    for (const char* cmd : commands) {
        auto res = run_cli(cli, cmd);
        if (res.exit_code != 0 || res.output.empty()) {
            ok = false;
            std::fprintf(stderr, "schema: command failed: %s (exit %d)\n", cmd, res.exit_code);
            continue;
        }
        Json doc = Json::parse(res.output);
        std::string err;
        if (!schema_valid(schema, schema, doc, err)) {
            ok = false;
            std::fprintf(stderr, "schema: %s: %s\n", cmd, err.c_str());
        }
        ++docs;
    }
    // JSON-lines output: every line validates on its own.
    for (const char* cmd : {"enumerate --genus 0 --invariant-e 1 --r 2",
                            "enumerate --genus 1 --invariant-e 0 --product --r 2 "
                            "--what negative --bounds 2,2,2"}) {
        auto lines = run_cli(cli, cmd);
        std::istringstream ls(lines.output);
        std::string line;
        while (std::getline(ls, line)) {
            if (line.empty()) continue;
            Json doc = Json::parse(line);
            std::string err;
            if (!schema_valid(schema, schema, doc, err)) {
                ok = false;
                std::fprintf(stderr, "schema: enumerate line: %s\n", err.c_str());
            }
            ++docs;
        }
    }

    // Scenario files round-trip: the same inputs arrive via --json-in.
    {
        const char* path = "acceptance_scenario.json";
        std::ofstream scenario(path);
        scenario << R"({"surface": {"g": 0, "e": 1, "product": false},
                        "d1": {"a": 1, "b": 0, "mults": [0]},
                        "d2": {"a": 0, "b": 1, "mults": [1]}})";
        scenario.close();
        auto res = run_cli(cli, std::string("intersect --json-in ") + path);
        Json doc = res.exit_code == 0 ? Json::parse(res.output) : Json();
        std::string err;
        if (res.exit_code != 0 || doc["product"] != 1 ||
            !schema_valid(schema, schema, doc, err)) {
            ok = false;
            std::fprintf(stderr, "schema: intersect via --json-in failed: %s\n", err.c_str());
        }
        ++docs;
        std::remove(path);
    }
    c.finish(ok, std::to_string(docs) + " documents validated");
}

} // namespace

int main(int argc, char** argv) {
    std::string cli = "./tools/seshadri";
    std::string schema = "schema/output.json";
    for (int i = 1; i + 1 < argc; i += 2) {
        std::string flag = argv[i];
        if (flag == "--cli") cli = argv[i + 1];
        else if (flag == "--schema") schema = argv[i + 1];
    }

    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9(cli);
    schema_conformance(cli, schema);

    if (g_failures == 0) {
        std::printf("acceptance: all criteria PASS\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return 1;
}
