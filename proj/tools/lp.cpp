#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lp/expr.hpp"
#include "lp/families.hpp"
#include "lp/lpseed.hpp"
#include "lp/polycore.hpp"
#include "lp/quiver.hpp"
#include "lp/sequence.hpp"

namespace {

using namespace lp;
using nlohmann::ordered_json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Period1: return "period1";
        case Verdict::NotPeriod1: return "not_period1";
        case Verdict::Undetermined: return "undetermined";
    }
    return "?";
}

const char* hat_name(HatCondition h) {
    switch (h) {
        case HatCondition::ByDependency: return "dependency";
        case HatCondition::ByTermCount: return "term_count";
        case HatCondition::ByDirectComputation: return "direct";
        case HatCondition::Failed: return "failed";
    }
    return "?";
}

ordered_json seed_json(const Seed& s) {
    ordered_json j;
    j["n"] = s.n;
    auto& arr = j["polys"] = ordered_json::array();
    for (auto& p : s.polys) arr.push_back(print_poly(p));
    return j;
}

ordered_json report_json(const PeriodReport& rep) {
    ordered_json j;
    j["verdict"] = verdict_name(rep.verdict);
    j["hat"] = hat_name(rep.hat_condition);
    if (rep.stage >= 0) j["stage"] = rep.stage;
    if (!rep.detail.empty()) j["detail"] = rep.detail;
    if (rep.seed) j["seed"] = seed_json(*rep.seed);
    return j;
}

void print_seed_text(const Seed& s) {
    for (int i = 0; i < s.n; ++i)
        std::cout << "  P" << i << " = "
                  << print_poly(s.polys[static_cast<std::size_t>(i)]) << "\n";
}

BMatrix matrix_from_json_text(const std::string& text) {
    auto doc = nlohmann::json::parse(text);
    if (!doc.is_array()) throw std::invalid_argument("matrix must be a JSON array");
    BMatrix B;
    B.n = static_cast<int>(doc.size());
    for (auto& row : doc) {
        if (!row.is_array() || static_cast<int>(row.size()) != B.n)
            throw std::invalid_argument("matrix must be square");
        std::vector<long> r;
        for (auto& v : row) r.push_back(v.get<long>());
        B.b.push_back(std::move(r));
    }
    validate_bmatrix(B);
    return B;
}

std::string matrix_to_json_text(const BMatrix& B) {
    ordered_json j = ordered_json::array();
    for (auto& row : B.b) j.push_back(row);
    return j.dump();
}

std::vector<long> parse_long_list(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
    return out;
}

FamilySpec spec_from_options(const std::string& name, int n, long A, long B,
                             long C, long r, long k, long m, long p, long q,
                             long a1, long b1, long a2, long b2,
                             const std::string& exps, const std::string& coeffs,
                             const std::string& elem,
                             const std::string& balanced_A,
                             const std::string& terms_json) {
    auto fam = family_from_name(name);
    if (!fam) throw std::invalid_argument("unknown family: " + name);
    FamilySpec s;
    s.family = *fam;
    s.n = n;
    s.A = A;
    s.B = B;
    s.C = C;
    s.r = r;
    s.k = k;
    s.m = m;
    s.p = p;
    s.q = q;
    s.a1 = a1;
    s.b1 = b1;
    s.a2 = a2;
    s.b2 = b2;
    if (!exps.empty()) s.exps = parse_long_list(exps);
    if (!coeffs.empty()) s.coeffs = parse_long_list(coeffs);
    if (!elem.empty()) s.elem = parse_long_list(elem);
    if (!balanced_A.empty()) s.balanced_A = parse_long_list(balanced_A);
    if (s.family == Family::SymmetricSecondPowers && s.elem.empty() && A != 0)
        s.elem = {A};
    if (!terms_json.empty()) {
        auto doc = nlohmann::json::parse(terms_json);
        for (auto& t : doc) {
            VectorSumTerm vt;
            vt.coeff = t.at("C").get<long>();
            for (auto& b : t.at("b")) vt.b.push_back(b.get<long>());
            s.terms.push_back(std::move(vt));
        }
    }
    return s;
}

int run_selftest(unsigned long rng_seed);

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"period-1 Laurent phenomenon seed toolkit"};
    app.require_subcommand(1);

    std::string poly_text, seed_file, matrix_text, initial_text;
    int n = 0, pivot = -1, at = 0, terms = 12, classify_n = 3;
    bool json = false, numeric = false, ones = false, symbolic = false;
    bool emit_seed = false;
    long A = 0, B = 0, C = 0, r = 0, k = 0, m = 0, p = 0, q = 0;
    long a1 = 0, b1 = 0, a2 = 0, b2 = 0;
    std::string exps, coeffs, elem, balanced_A, terms_json, family_name_arg;
    unsigned long rng_seed = 20130731;

    auto* check = app.add_subcommand("check", "decide whether a polynomial is period 1");
    check->add_option("poly", poly_text)->required();
    check->add_option("--n", n)->required();
    check->add_option("--pivot", pivot);
    check->add_flag("--json", json);

    auto* seedc = app.add_subcommand("seed", "generate the candidate seed");
    seedc->add_option("poly", poly_text)->required();
    seedc->add_option("--n", n)->required();
    seedc->add_option("--pivot", pivot);
    seedc->add_flag("--json", json);

    auto* mut = app.add_subcommand("mutate", "mutate a seed file at an index");
    mut->add_option("--seed", seed_file)->required();
    mut->add_option("--at", at)->required();
    mut->add_flag("--json", json);

    auto* seq = app.add_subcommand("sequence", "emit recurrence terms");
    seq->add_option("poly", poly_text)->required();
    seq->add_option("--n", n)->required();
    seq->add_option("--terms", terms)->required();
    seq->add_flag("--numeric", numeric);
    seq->add_flag("--ones", ones);
    seq->add_flag("--symbolic", symbolic);
    seq->add_option("--initial", initial_text);
    seq->add_flag("--json", json);

    auto* quiv = app.add_subcommand("quiver", "double quiver operations");
    quiv->require_subcommand(1);
    auto* qmut = quiv->add_subcommand("mutate", "mutate a B-matrix");
    qmut->add_option("--matrix", matrix_text)->required();
    qmut->add_option("--at", at)->required();
    auto* qcheck = quiv->add_subcommand("check", "period-1 test of a B-matrix");
    qcheck->add_option("--matrix", matrix_text)->required();
    auto* qfrom = quiv->add_subcommand("from-binomial", "B-matrix of a binomial seed");
    qfrom->add_option("--seed", seed_file)->required();
    auto* qdot = quiv->add_subcommand("dot", "DOT rendering of a B-matrix");
    qdot->add_option("--matrix", matrix_text)->required();

    auto* cls = app.add_subcommand("classify", "n = 2 or n = 3 classification");
    cls->add_option("poly", poly_text)->required();
    cls->add_option("--n", classify_n)->required();
    cls->add_flag("--json", json);

    auto* fam = app.add_subcommand("family", "build a named family member");
    fam->add_option("name", family_name_arg)->required();
    fam->add_option("--n", n)->required();
    fam->add_option("--A", A);
    fam->add_option("--B", B);
    fam->add_option("--C", C);
    fam->add_option("--r", r);
    fam->add_option("--k", k);
    fam->add_option("--m", m);
    fam->add_option("--p", p);
    fam->add_option("--q", q);
    fam->add_option("--a1", a1);
    fam->add_option("--b1", b1);
    fam->add_option("--a2", a2);
    fam->add_option("--b2", b2);
    fam->add_option("--exps", exps, "comma-separated exponent vector");
    fam->add_option("--coeffs", coeffs, "singleton coefficients a0,a1,...");
    fam->add_option("--elem", elem, "elementary symmetric coefficients");
    fam->add_option("--balanced-A", balanced_A, "balanced family A_i list");
    fam->add_option("--terms-json", terms_json, "vector-sum terms as JSON");
    fam->add_flag("--emit-seed", emit_seed);
    fam->add_flag("--json", json);

    auto* inv = app.add_subcommand("invariant", "verify a conserved quantity");
    inv->add_option("name", family_name_arg)->required();
    inv->add_option("--n", n)->required();
    inv->add_option("--A", A);
    inv->add_option("--B", B);
    inv->add_option("--r", r);
    inv->add_option("--k", k);
    inv->add_option("--terms", terms);

    auto* self = app.add_subcommand("selftest", "run the built-in fixture suite");
    self->add_option("--rng-seed", rng_seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*check) {
            LaurentPoly P = parse_poly(poly_text, n);
            PeriodReport rep = is_period1(P, n, pivot);
            if (json) {
                std::cout << report_json(rep).dump(2) << "\n";
            } else {
                std::cout << "verdict: " << verdict_name(rep.verdict)
                          << " (hat: " << hat_name(rep.hat_condition) << ")\n";
                if (!rep.detail.empty()) std::cout << "detail: " << rep.detail << "\n";
                if (rep.seed) {
                    std::cout << "seed:\n";
                    print_seed_text(*rep.seed);
                }
            }
            return rep.verdict == Verdict::Period1 ? kExitYes : kExitNo;
        }
        if (*seedc) {
            LaurentPoly P = parse_poly(poly_text, n);
            GenerateResult gen = generate_seed(P, n, pivot);
            if (json) {
                ordered_json j;
                j["pseudoperiod"] = gen.pseudoperiod_ok;
                if (!gen.pseudoperiod_ok) {
                    j["stage"] = gen.fail_stage;
                    j["detail"] = gen.detail;
                }
                j["seed"] = seed_json(gen.seed);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "pseudoperiod: " << (gen.pseudoperiod_ok ? "yes" : "no")
                          << "\n";
                if (!gen.pseudoperiod_ok)
                    std::cout << "failed at stage " << gen.fail_stage << ": "
                              << gen.detail << "\n";
                print_seed_text(gen.seed);
            }
            return gen.pseudoperiod_ok ? kExitYes : kExitNo;
        }
        if (*mut) {
            LoadedSeed loaded = load_seed(seed_file);
            for (auto& w : loaded.warnings) std::cerr << "warning: " << w << "\n";
            MutationResult res = mutate(loaded.seed, at);
            if (json) {
                ordered_json j;
                j["new_cluster_var"] = res.new_var_expr;
                j["hat"] = print_laurent_fraction(res.hat.value);
                j["seed"] = seed_json(res.seed);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "x'_" << at << " = " << res.new_var_expr << "\n";
                print_seed_text(res.seed);
            }
            return kExitYes;
        }
        if (*seq) {
            LaurentPoly P = parse_poly(poly_text, n);
            if (numeric) {
                std::vector<Rat> init;
                if (ones || initial_text.empty())
                    init.assign(static_cast<std::size_t>(n), Rat(1));
                else
                    for (long v : parse_long_list(initial_text)) init.emplace_back(Int(v));
                auto ts = numeric_terms(P, n, init, terms);
                ordered_json arr = ordered_json::array();
                for (auto& t : ts) {
                    Rat c = t;
                    c.canonicalize();
                    std::string s = c.get_den() == 1 ? c.get_num().get_str()
                                                      : c.get_str();
                    if (json)
                        arr.push_back(s);
                    else
                        std::cout << s << "\n";
                }
                if (json) std::cout << arr.dump() << "\n";
            } else {
                auto ts = symbolic_terms(P, n, terms);
                ordered_json arr = ordered_json::array();
                for (auto& t : ts) {
                    if (json)
                        arr.push_back(print_laurent_fraction(t));
                    else
                        std::cout << print_laurent_fraction(t) << "\n";
                }
                if (json) std::cout << arr.dump() << "\n";
            }
            return kExitYes;
        }
        if (*quiv) {
            if (*qmut) {
                BMatrix Bm = matrix_from_json_text(matrix_text);
                std::cout << matrix_to_json_text(mutate_bmatrix(Bm, at)) << "\n";
                return kExitYes;
            }
            if (*qcheck) {
                BMatrix Bm = matrix_from_json_text(matrix_text);
                bool ok = is_period1_quiver(Bm);
                std::cout << (ok ? "period1" : "not period1") << "\n";
                return ok ? kExitYes : kExitNo;
            }
            if (*qfrom) {
                LoadedSeed loaded = load_seed(seed_file);
                std::cout << matrix_to_json_text(
                                 canonical_quiver_from_binomial_seed(loaded.seed))
                          << "\n";
                return kExitYes;
            }
            if (*qdot) {
                BMatrix Bm = matrix_from_json_text(matrix_text);
                std::cout << to_dot(Bm);
                return kExitYes;
            }
        }
        if (*cls) {
            if (classify_n == 2) {
                LaurentPoly P = parse_poly(poly_text, 2);
                N2Class c = classify_n2(P);
                const char* name = c == N2Class::Palindromic ? "palindromic"
                                   : c == N2Class::AntipalindromicEven
                                       ? "antipalindromic_even"
                                   : c == N2Class::MonicDeg2 ? "monic_deg2"
                                                             : "none";
                if (json) {
                    ordered_json j;
                    j["class"] = name;
                    std::cout << j.dump() << "\n";
                } else {
                    std::cout << name << "\n";
                }
                return c != N2Class::None ? kExitYes : kExitNo;
            }
            if (classify_n == 3) {
                LaurentPoly P = parse_poly(poly_text, 3);
                N3Class c = classify_n3(P);
                if (json) {
                    ordered_json j;
                    j["class"] = c.class_id;
                    for (auto& [key, v] : c.params) j["params"][key] = v;
                    std::cout << j.dump() << "\n";
                } else if (c.class_id == 0) {
                    std::cout << "none\n";
                } else {
                    std::cout << "class " << c.class_id;
                    for (auto& [key, v] : c.params)
                        std::cout << " " << key << "=" << v;
                    std::cout << "\n";
                }
                return c.class_id != 0 ? kExitYes : kExitNo;
            }
            std::cerr << "classify: --n must be 2 or 3\n";
            return kExitUsage;
        }
        if (*fam) {
            FamilySpec spec = spec_from_options(
                family_name_arg, n, A, B, C, r, k, m, p, q, a1, b1, a2, b2,
                exps, coeffs, elem, balanced_A, terms_json);
            LaurentPoly P = build(spec);
            PeriodReport rep = is_period1(P, n);
            if (json) {
                ordered_json j;
                j["polynomial"] = print_poly(P);
                j["verdict"] = verdict_name(rep.verdict);
                if (emit_seed && rep.seed) j["seed"] = seed_json(*rep.seed);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "P = " << print_poly(P) << "\n";
                std::cout << "verdict: " << verdict_name(rep.verdict) << "\n";
                if (emit_seed && rep.seed) print_seed_text(*rep.seed);
            }
            return rep.verdict == Verdict::Period1 ? kExitYes : kExitNo;
        }
        if (*inv) {
            InvariantSpec spec;
            if (family_name_arg == "symmetric-second-powers")
                spec.family = InvariantFamily::SymmetricSecondPowers;
            else if (family_name_arg == "jumping")
                spec.family = InvariantFamily::Jumping;
            else if (family_name_arg == "sink-binomial")
                spec.family = InvariantFamily::SinkBinomial;
            else if (family_name_arg == "extreme")
                spec.family = InvariantFamily::Extreme;
            else if (family_name_arg == "chain")
                spec.family = InvariantFamily::Chain;
            else if (family_name_arg == "multilinear-symmetric")
                spec.family = InvariantFamily::MultilinearSymmetric;
            else {
                std::cerr << "unknown invariant family: " << family_name_arg << "\n";
                return kExitUsage;
            }
            spec.n = n;
            spec.A = A;
            spec.B = B;
            spec.r = r;
            spec.k = k;
            InvariantReport jrep = check_invariant(spec, terms);
            InvariantReport lrep = check_multilinearization(spec, terms);
            std::cout << "invariant (k = " << jrep.k_period << "): "
                      << (jrep.ok ? "holds" : "FAILS") << "\n";
            std::cout << "linearized recurrence: " << (lrep.ok ? "holds" : "FAILS")
                      << "\n";
            return jrep.ok && lrep.ok ? kExitYes : kExitNo;
        }
        if (*self) return run_selftest(rng_seed);
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNo;
    }
    return kExitUsage;
}

namespace {

int run_selftest(unsigned long rng_seed) {
    int failures = 0;
    auto expect = [&](bool ok, const char* what) {
        std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
        if (!ok) ++failures;
    };

    // golden seeds
    {
        auto rep = is_period1(parse_poly("x1*x2 + 1", 3), 3);
        Seed want{3, {parse_poly("x1*x2 + 1", 3), parse_poly("x0 + x2", 3),
                      parse_poly("x0*x1 + 1", 3)}};
        expect(rep.verdict == Verdict::Period1 && rep.seed && *rep.seed == want,
               "x1*x2 + 1 generates the n = 3 seed");
        expect(verify_period1_by_mutation(want), "n = 3 seed verified by mutation");
    }
    {
        FamilySpec s;
        s.family = Family::SinkBinomial;
        s.n = 6;
        s.exps = {2, 0, 3, 0, 1};
        auto gen = generate_seed(build(s), 6);
        auto exp = expected_seed(s);
        expect(gen.pseudoperiod_ok && exp.seed && gen.seed == *exp.seed,
               "sink binomial n = 6 golden seed");
    }
    {
        FamilySpec s;
        s.family = Family::Pi;
        s.n = 8;
        s.k = 2;
        s.A = -2;
        s.B = 3;
        s.a1 = 3;
        s.b1 = 2;
        s.a2 = 2;
        s.b2 = 3;
        auto gen = generate_seed(build(s), 8);
        auto exp = expected_seed(s);
        expect(gen.pseudoperiod_ok && exp.seed && gen.seed == *exp.seed,
               "pi n = 8 golden seed");
    }
    // negative control
    {
        auto rep = is_period1(parse_poly("x1 + x2 + 1", 3), 3);
        expect(rep.verdict == Verdict::NotPeriod1, "x1 + x2 + 1 is not period 1");
    }
    // quiver fixtures
    {
        BMatrix fig1;
        fig1.n = 3;
        fig1.b = {{0, -1, 2}, {1, 0, -3}, {-1, 0, 0}};
        expect(is_mutable(fig1, 0) && is_mutable(fig1, 1) && !is_mutable(fig1, 2),
               "figure 1 mutability");
        BMatrix fig2 = mutate_bmatrix(fig1, 0);
        expect(mutate_bmatrix(fig2, 0) == fig1, "figure 1 mutation involution");
    }
    // random involution spot check
    {
        std::mt19937_64 rng(rng_seed);
        bool ok = true;
        for (int trial = 0; trial < 50; ++trial) {
            int size = 3 + static_cast<int>(rng() % 4);
            BMatrix Bm = BMatrix::zero(size);
            for (int i = 0; i < size; ++i)
                for (int j = 0; j < size; ++j)
                    if (i != j) Bm.at(i, j) = static_cast<long>(rng() % 5) - 2;
            if (!is_mutable(Bm, 0)) continue;
            BMatrix once = mutate_bmatrix(Bm, 0);
            if (!is_mutable(once, 0)) continue;
            if (!(mutate_bmatrix(once, 0) == Bm)) ok = false;
        }
        expect(ok, "random B-matrix mutate-twice involution");
    }
    // Somos-4 integer prefix
    {
        auto ts = numeric_terms(parse_poly("x1*x3 + x2^2", 4), 4,
                                {Rat(1), Rat(1), Rat(1), Rat(1)}, 12);
        const long want[] = {1, 1, 1, 1, 2, 3, 7, 23, 59, 314, 1529, 8209};
        bool ok = true;
        for (int i = 0; i < 12; ++i)
            if (ts[static_cast<std::size_t>(i)] != Rat(want[i])) ok = false;
        expect(ok, "Somos-4 all-ones prefix");
    }
    // one invariant
    {
        InvariantSpec s{InvariantFamily::SymmetricSecondPowers, 3, 2, 5, 0, 0, 0};
        expect(check_invariant(s, 10).ok, "symmetric-second-powers invariant");
        expect(check_multilinearization(s, 10).ok,
               "symmetric-second-powers linearization");
    }
    std::cout << (failures == 0 ? "selftest passed\n" : "selftest FAILED\n");
    return failures == 0 ? kExitYes : kExitNo;
}

}  // namespace
