// majorkit command line front end: exact majorization checks, witnesses,
// reductions, Birkhoff decomposition, preserver classification and the
// property fuzzer, over JSON/CSV matrices with p/q rational entries.
//
// Exit codes: 0 relation holds / classification succeeded / suite passed /
// no counterexample; 1 fails / none / counterexample found; 2 usage or
// input error (diagnostic JSON on stderr).

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "majorkit/io.hpp"
#include "majorkit/matrix_major.hpp"
#include "majorkit/propcheck.hpp"
#include "majorkit/reductions.hpp"
#include "majorkit/vector_major.hpp"

using namespace majorkit;
using nlohmann::json;

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RMatrix load_matrix(const std::string& path) { return parse_matrix(read_input(path)); }

json matrix_json(const RMatrix& m) { return json::parse(matrix_to_json(m)); }

json vector_json(const RVector& v) {
    json arr = json::array();
    for (int i = 0; i < v.size(); ++i) arr.push_back(to_string(v[i]));
    return arr;
}

json perm_json(const Permutation& p) {
    json arr = json::array();
    for (int x : p.map()) arr.push_back(x + 1);
    return arr;
}

void emit(const json& payload) { std::cout << payload.dump(2) << "\n"; }

Relation parse_relation(const std::string& kind) {
    if (kind == "vector") return Relation::Vector;
    if (kind == "strong") return Relation::Strong;
    if (kind == "weak") return Relation::Weak;
    if (kind == "directional") return Relation::Directional;
    if (kind == "equiv") return Relation::StrongEquiv;
    throw CLI::ValidationError("--kind", "unknown relation '" + kind + "'");
}

Domain parse_domain(const std::string& d) {
    if (d == "all") return Domain::All;
    if (d == "dist" || d == "distributions") return Domain::Distributions;
    if (d == "zerosum" || d == "zero-sum") return Domain::ZeroSum;
    if (d == "cs" || d == "column-stochastic") return Domain::ColumnStochastic;
    if (d == "01" || d == "zero-one") return Domain::ZeroOne;
    throw CLI::ValidationError("--domain", "unknown domain '" + d + "'");
}

std::string status_name(MajorizationVerdict::Status s) {
    switch (s) {
        case MajorizationVerdict::Status::Holds: return "holds";
        case MajorizationVerdict::Status::Fails: return "fails";
        case MajorizationVerdict::Status::Refuted: return "refuted";
        case MajorizationVerdict::Status::NotRefuted: return "not_refuted";
    }
    return "?";
}

json verdict_json(const MajorizationVerdict& v) {
    json out{{"schema", kSchema},
             {"relation", relation_name(v.relation)},
             {"status", status_name(v.status)}};
    if (v.witness) out["witness"] = matrix_json(*v.witness);
    if (v.certificate) out["certificate"] = vector_json(*v.certificate);
    if (v.direction) out["direction"] = vector_json(*v.direction);
    if (v.status == MajorizationVerdict::Status::NotRefuted) out["trials"] = v.trials;
    if (!v.reason.empty()) out["reason"] = v.reason;
    return out;
}

int run_check(const std::string& kind, const std::string& a_path, const std::string& b_path,
              long budget, std::uint64_t seed) {
    const Relation rel = parse_relation(kind);
    const RMatrix a = load_matrix(a_path);
    const RMatrix b = load_matrix(b_path);

    if (rel == Relation::Vector) {
        const bool ok = check_vector_majorization(as_vector(a), as_vector(b));
        emit(json{{"schema", kSchema}, {"relation", "vector"}, {"status", ok ? "holds" : "fails"}});
        return ok ? 0 : 1;
    }
    if (rel == Relation::StrongEquiv) {
        auto p = check_strong_equiv(a, b);
        json out{{"schema", kSchema}, {"relation", "strong-equiv"}, {"status", p ? "holds" : "fails"}};
        if (p) out["permutation"] = perm_json(*p);
        emit(out);
        return p ? 0 : 1;
    }

    MajorizationVerdict v = rel == Relation::Strong ? check_strong(a, b)
                            : rel == Relation::Weak ? check_weak(a, b)
                                                    : check_directional(a, b, budget, seed);
    emit(verdict_json(v));
    switch (v.status) {
        case MajorizationVerdict::Status::Holds:
        case MajorizationVerdict::Status::NotRefuted: return 0;
        default: return 1;
    }
}

int run_witness(const std::string& kind, const std::string& a_path, const std::string& b_path) {
    const RMatrix a = load_matrix(a_path);
    const RMatrix b = load_matrix(b_path);
    if (kind == "vector") {
        const RVector av = as_vector(a), bv = as_vector(b);
        if (!check_vector_majorization(av, bv)) {
            emit(json{{"schema", kSchema}, {"relation", "vector"}, {"witness", nullptr},
                      {"reason", "a is not majorized by b"}});
            return 1;
        }
        HlpWitness w = hlp_witness_detailed(av, bv);
        json chain = json::array();
        for (const TTransform& t : w.chain)
            chain.push_back(json{{"i", t.i + 1}, {"j", t.j + 1}, {"t", to_string(t.t)}});
        emit(json{{"schema", kSchema},
                  {"relation", "vector"},
                  {"witness", matrix_json(w.d)},
                  {"t_transforms", std::move(chain)}});
        return 0;
    }
    if (kind != "strong" && kind != "weak")
        throw CLI::ValidationError("--kind", "witness supports vector|strong|weak");
    MajorizationVerdict v = kind == "strong" ? check_strong(a, b) : check_weak(a, b);
    if (!v.holds()) {
        emit(json{{"schema", kSchema}, {"relation", relation_name(v.relation)}, {"witness", nullptr},
                  {"reason", v.reason}});
        return 1;
    }
    emit(json{{"schema", kSchema}, {"relation", relation_name(v.relation)},
              {"witness", matrix_json(*v.witness)}});
    return 0;
}

json certificate_json(const ReductionCertificate& c) {
    json out{{"method", c.method == ReductionMethod::ShiftNormalize ? "shift" : "diag"},
             {"lambda", to_string(c.lambda)}};
    if (c.mu) out["mu"] = to_string(*c.mu);
    if (c.v) out["v"] = vector_json(*c.v);
    if (c.d_diag) out["d_diag"] = vector_json(*c.d_diag);
    return out;
}

int run_reduce(const std::string& kind, const std::string& method, const std::string& a_path,
               const std::string& b_path, const std::string& lambda_text, const std::string& mu_text,
               const std::string& anchor_text) {
    const RMatrix a = load_matrix(a_path);
    const RMatrix b = load_matrix(b_path);

    if (kind == "vector") {
        VectorReduction r = reduce_vector_to_distributions(as_vector(a), as_vector(b));
        emit(json{{"schema", kSchema},
                  {"a_prime", vector_json(r.a_prime)},
                  {"b_prime", vector_json(r.b_prime)},
                  {"lambda", to_string(r.lambda)},
                  {"scale", to_string(r.scale)}});
        return 0;
    }
    if (kind != "matrix") throw CLI::ValidationError("--kind", "reduce supports vector|matrix");

    std::optional<Rational> lambda, mu;
    if (!lambda_text.empty()) lambda = parse_rational(lambda_text);
    if (!mu_text.empty()) mu = parse_rational(mu_text);
    if (anchor_text != "a" && anchor_text != "b")
        throw CLI::ValidationError("--anchor", "anchor must be a or b");
    const ReduceAnchor anchor = anchor_text == "a" ? ReduceAnchor::A : ReduceAnchor::B;

    ReductionResult r = [&] {
        if (method == "shift") return reduce_shift_normalize(a, b, lambda, mu, anchor);
        if (method == "diag") return reduce_diag_scale(a, b, lambda, anchor);
        throw CLI::ValidationError("--method", "reduce supports shift|diag");
    }();
    emit(json{{"schema", kSchema},
              {"a_prime", matrix_json(r.a_prime)},
              {"b_prime", matrix_json(r.b_prime)},
              {"certificate", certificate_json(r.certificate)}});
    return 0;
}

json classify_result_json(const std::string& target, const OperatorInput& input) {
    json out{{"schema", kSchema}, {"target", target}};
    out["form"] = nullptr;

    auto set_ando = [&](const std::optional<AndoForm>& form) {
        if (!form) return;
        if (const Ando1* a1 = std::get_if<Ando1>(&*form)) {
            out["form"] = "ando1";
            out["params"] = json{{"s", vector_json(a1->s)}};
        } else {
            const Ando2& a2 = std::get<Ando2>(*form);
            out["form"] = "ando2";
            out["params"] = json{{"alpha", to_string(a2.alpha)},
                                 {"beta", to_string(a2.beta)},
                                 {"p", perm_json(a2.p)}};
        }
    };

    if (target == "vector" || target == "prob" || target == "zerosum") {
        const auto* op = std::get_if<VectorOperator>(&input);
        if (!op) throw precondition_error("targets vector|prob|zerosum need a \"vecop\" operator");
        if (target == "zerosum") {
            if (auto form = classify_zero_sum_preserver(*op)) {
                out["form"] = "zero-sum";
                out["params"] = json{{"v", vector_json(form->v)},
                                     {"lambda", to_string(form->lambda)},
                                     {"p", perm_json(form->p)}};
            }
            if (auto alpha = check_condition_alpha(*op)) out["alpha"] = to_string(*alpha);
        } else {
            set_ando(classify_vector_preserver(*op));
        }
    } else if (target == "strong") {
        const auto* op = std::get_if<OperatorGrid>(&input);
        if (!op) throw precondition_error("targets strong|cs need an operator grid with \"blocks\"");
        if (auto form = classify_strong_preserver(*op)) {
            if (const LiPoon1* f1 = std::get_if<LiPoon1>(&*form)) {
                out["form"] = "li-poon-1";
                json s = json::array();
                for (const RMatrix& sj : f1->s) s.push_back(matrix_json(sj));
                out["params"] = json{{"s", std::move(s)}};
            } else {
                const LiPoon2& f2 = std::get<LiPoon2>(*form);
                out["form"] = "li-poon-2";
                out["params"] = json{{"r", matrix_json(f2.r)},
                                     {"s", matrix_json(f2.s)},
                                     {"p", perm_json(f2.p)}};
            }
        }
    } else if (target == "cs") {
        const auto* op = std::get_if<OperatorGrid>(&input);
        if (!op) throw precondition_error("targets strong|cs need an operator grid with \"blocks\"");
        if (auto form = extract_cs_preserver_form(*op)) {
            out["form"] = "cs-form";
            json s = json::array();
            for (const RMatrix& sj : form->s) s.push_back(matrix_json(sj));
            out["params"] = json{{"s", std::move(s)},
                                 {"p", perm_json(form->p)},
                                 {"r", matrix_json(form->r)}};
            out["constraint_ok"] = form->constraint_ok;
            out["is_preserver"] = form->constraint_ok;
        }
    } else {
        throw CLI::ValidationError("--target", "classify supports vector|prob|zerosum|strong|cs");
    }
    // Classifiers re-verify by reconstruction before returning a form.
    if (!out["form"].is_null()) out["reconstruction_verified"] = true;
    return out;
}

int run_fuzz(const std::string& op_path, const std::string& relation, const std::string& domain,
             long trials, std::uint64_t seed) {
    const OperatorInput input = parse_operator_json(read_input(op_path));
    const RelationSpec spec{parse_relation(relation), parse_domain(domain)};
    std::optional<Counterexample> ce = std::holds_alternative<VectorOperator>(input)
        ? fuzz_preserver(std::get<VectorOperator>(input), spec, trials, seed)
        : fuzz_preserver(std::get<OperatorGrid>(input), spec, trials, seed);
    json out{{"schema", kSchema},
             {"relation", relation_name(spec.relation)},
             {"domain", domain_name(spec.domain)},
             {"trials", trials}};
    if (!ce) {
        out["counterexample"] = nullptr;
        emit(out);
        return 0;
    }
    out["counterexample"] = json{{"a", matrix_json(ce->a)},
                                 {"b", matrix_json(ce->b)},
                                 {"image_a", matrix_json(ce->image_a)},
                                 {"image_b", matrix_json(ce->image_b)},
                                 {"from_battery", ce->from_battery},
                                 {"trial", ce->trial_index},
                                 {"transcript", ce->transcript}};
    emit(out);
    return 1;
}

// "n=5,m=4,cases=200" with any subset of the three keys.
void parse_sizes(const std::string& text, int& max_n, int& max_m, long& cases) {
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw parse_error("bad --sizes item '" + item + "'");
        const std::string key = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        try {
            if (key == "n") max_n = std::stoi(value);
            else if (key == "m") max_m = std::stoi(value);
            else if (key == "cases") cases = std::stol(value);
            else throw parse_error("unknown --sizes key '" + key + "'");
        } catch (const std::logic_error&) {
            throw parse_error("bad --sizes value '" + value + "'");
        }
    }
}

int run_suite(std::uint64_t seed, int max_n, int max_m, long cases) {
    SuiteReport report = lemma_suite(seed, SuiteSizes{max_n, max_m, cases});
    json props = json::array();
    for (const PropertyOutcome& p : report.properties) {
        json entry{{"name", p.name}, {"cases", p.cases}, {"failures", p.failures},
                   {"pass", p.passed()}};
        if (p.first_failure_seed) entry["replay_seed"] = *p.first_failure_seed;
        props.push_back(std::move(entry));
    }
    emit(json{{"schema", kSchema}, {"properties", std::move(props)}, {"all_pass", report.all_pass()}});
    return report.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"majorkit: exact majorization relations, reductions and preserver classification"};
    app.require_subcommand(1);

    std::string kind, method = "shift", a_path, b_path, d_path, op_path;
    std::string lambda_text, mu_text, anchor = "b", target, relation = "strong", domain = "all";
    std::string format = "json";
    std::uint64_t seed = 1;
    long budget = 200, trials = 1000, cases = 200;
    int gen_n = 3, gen_m = 3, gen_k = 3, max_n = 5, max_m = 4;

    auto* check = app.add_subcommand("check", "decide a majorization relation between A and B");
    check->add_option("--kind", kind, "vector|strong|weak|directional|equiv")->required();
    check->add_option("-A,--a", a_path, "left operand (JSON/CSV file or -)")->required();
    check->add_option("-B,--b", b_path, "right operand")->required();
    check->add_option("--budget", budget, "random directions for --kind directional");
    check->add_option("--seed", seed, "seed for the random directions");

    auto* witness = app.add_subcommand("witness", "produce the stochastic witness for a relation");
    witness->add_option("--kind", kind, "vector|strong|weak")->required();
    witness->add_option("-A,--a", a_path)->required();
    witness->add_option("-B,--b", b_path)->required();

    auto* reduce = app.add_subcommand("reduce", "reduce (A, B) to column stochastic form");
    reduce->add_option("--kind", kind, "matrix (default) or vector")->default_val("matrix");
    reduce->add_option("--method", method, "shift|diag (matrix kind)");
    reduce->add_option("--lambda", lambda_text, "pin the shift (p/q); canonical when omitted");
    reduce->add_option("--mu", mu_text, "pin the scale for --method shift");
    reduce->add_option("--anchor", anchor, "which matrix becomes column stochastic: b (default) or a");
    reduce->add_option("-A,--a", a_path)->required();
    reduce->add_option("-B,--b", b_path)->required();

    auto* theta_cmd = app.add_subcommand("theta", "column-normalize a matrix");
    theta_cmd->add_option("-A,--a", a_path)->required();
    theta_cmd->add_option("--format", format, "json|csv");

    auto* birkhoff_cmd = app.add_subcommand("birkhoff", "decompose a doubly stochastic matrix");
    birkhoff_cmd->add_option("-D,--d", d_path)->required();

    auto* gen = app.add_subcommand("gen", "generate a random stochastic object");
    gen->add_option("--kind", kind, "ds|cs|zerosum|dist")->required();
    gen->add_option("--seed", seed)->required();
    gen->add_option("-n", gen_n, "rows / length");
    gen->add_option("-m", gen_m, "columns (cs)");
    gen->add_option("-k", gen_k, "permutation terms (ds)");
    gen->add_option("--format", format, "json|csv");

    auto* classify = app.add_subcommand("classify", "classify an operator against the preserver forms");
    classify->add_option("--target", target, "vector|prob|zerosum|strong|cs")->required();
    classify->add_option("--op", op_path, "operator JSON file")->required();

    auto* fuzz = app.add_subcommand("fuzz", "search for a preservation counterexample");
    fuzz->add_option("--op", op_path)->required();
    fuzz->add_option("--relation", relation, "vector|strong|weak");
    fuzz->add_option("--domain", domain, "all|cs|dist|zerosum|01");
    fuzz->add_option("--trials", trials);
    fuzz->add_option("--seed", seed);

    std::string sizes_text;
    auto* suite = app.add_subcommand("suite", "run the registered property suite");
    suite->add_option("--seed", seed);
    suite->add_option("--sizes", sizes_text, "compact form: n=5,m=4,cases=200");
    suite->add_option("--max-n", max_n);
    suite->add_option("--max-m", max_m);
    suite->add_option("--cases", cases);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << json{{"error", "usage"}, {"detail", e.what()}}.dump() << "\n";
        return 2;
    }

    try {
        if (*check) return run_check(kind, a_path, b_path, budget, seed);
        if (*witness) return run_witness(kind, a_path, b_path);
        if (*reduce) return run_reduce(kind, method, a_path, b_path, lambda_text, mu_text, anchor);
        if (*theta_cmd) {
            const RMatrix t = theta(load_matrix(a_path));
            if (format == "csv") std::cout << matrix_to_csv(t);
            else emit(json::parse(matrix_to_json(t)));
            return 0;
        }
        if (*birkhoff_cmd) {
            const BirkhoffDecomposition d = birkhoff_decompose(load_matrix(d_path));
            emit(json::parse(decomposition_to_json(d)));
            return 0;
        }
        if (*gen) {
            auto make = [&]() -> RMatrix {
                if (kind == "ds") return random_doubly_stochastic(gen_n, gen_k, seed);
                if (kind == "cs") return random_column_stochastic(gen_n, gen_m, seed);
                if (kind == "zerosum") return RMatrix::from_columns({random_zero_sum(gen_n, seed)});
                if (kind == "dist") return RMatrix::from_columns({random_distribution(gen_n, seed)});
                throw CLI::ValidationError("--kind", "gen supports ds|cs|zerosum|dist");
            };
            const RMatrix out = make();
            if (format == "csv") std::cout << matrix_to_csv(out);
            else emit(json::parse(matrix_to_json(out)));
            return 0;
        }
        if (*classify) {
            const json out = classify_result_json(target, parse_operator_json(read_input(op_path)));
            emit(out);
            return out["form"].is_null() ? 1 : 0;
        }
        if (*fuzz) return run_fuzz(op_path, relation, domain, trials, seed);
        if (*suite) {
            if (!sizes_text.empty()) parse_sizes(sizes_text, max_n, max_m, cases);
            return run_suite(seed, max_n, max_m, cases);
        }
    } catch (const CLI::Error& e) {
        std::cerr << json{{"error", "usage"}, {"detail", e.what()}}.dump() << "\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << json{{"error", "parse"}, {"detail", e.what()}}.dump() << "\n";
        return 2;
    } catch (const dimension_error& e) {
        std::cerr << json{{"error", "dimension"}, {"detail", e.what()}}.dump() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << json{{"error", "precondition"}, {"detail", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "internal"}, {"detail", e.what()}}.dump() << "\n";
        return 2;
    }
    return 2;
}
