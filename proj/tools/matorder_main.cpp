// matorder: file-driven front end for matrix order relations, generalized
// inverses, preserver analysis, and the finite-ring oracle.

#include <CLI11.hpp>
#include <json.hpp>

#include "matorder/io.hpp"
#include "matorder/preservers.hpp"
#include "matorder/ringlab.hpp"

#include <chrono>
#include <iostream>

using namespace matorder;
using Json = nlohmann::ordered_json;

namespace {

// Exit codes: 0 = relation holds / operation succeeded, 1 = relation fails /
// refuted, 2 = usage or input error. Timing goes to stderr so stdout is
// byte-identical for identical inputs and seeds.
struct Report {
    std::string command;
    std::string verdict;
    int exit_code = 0;
    std::optional<double> tolerance;
    std::vector<std::pair<std::string, std::string>> fields;
    std::vector<std::pair<std::string, std::string>> matrices; // name -> matrix text format

    void add_field(std::string key, std::string value) { fields.emplace_back(std::move(key), std::move(value)); }
    void add_matrix(std::string name, const AnyMat& m) { matrices.emplace_back(std::move(name), write_matrix(m)); }

    void print(bool as_json) const {
        if (as_json) {
            Json j;
            j["command"] = command;
            j["verdict"] = verdict;
            if (tolerance) j["tolerance"] = *tolerance;
            for (const auto& [k, v] : fields) j[k] = v;
            Json w = Json::object();
            for (const auto& [k, v] : matrices) w[k] = v;
            j["witnesses"] = w;
            j["exit"] = exit_code;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "command: " << command << "\n";
            std::cout << "verdict: " << verdict << "\n";
            if (tolerance) std::cout << "tolerance: " << *tolerance << "\n";
            for (const auto& [k, v] : fields) std::cout << k << ": " << v << "\n";
            for (const auto& [k, v] : matrices) std::cout << k << ":\n" << v;
            std::cout << "exit: " << exit_code << "\n";
        }
    }
};

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += " ";
        s += argv[i];
    }
    return s;
}

bool uses_floats(const AnyMat& m) { return std::holds_alternative<MatC>(m); }

template <Field F>
void add_order_witness(Report& rep, const OrderReport<F>& r) {
    if (!r.witness) return;
    rep.add_matrix("p", AnyMat{r.witness->p});
    rep.add_matrix("q", AnyMat{r.witness->q});
    rep.add_matrix("a_inner", AnyMat{r.witness->a_inner});
    rep.add_matrix("b_inner", AnyMat{r.witness->b_inner});
}

Report run_order_check(const std::string& cmd, const std::string& relation,
                       const AnyMat& a, const AnyMat& b, double tol) {
    Report rep;
    rep.command = cmd;
    if (uses_floats(a) || uses_floats(b)) rep.tolerance = tol;
    visit_same(
        [&](const auto& x, const auto& y) {
            using F = typename std::decay_t<decltype(x)>::Fld;
            OrderReport<F> r;
            if (relation == "minus") r = minus_leq(x, y);
            else if (relation == "space") r = space_leq(x, y);
            else if (relation == "star") r = star_leq(x, y);
            else throw CLI::ValidationError("--relation must be minus, space, or star");
            if (r.internal_error) {
                rep.verdict = "internal-error";
                rep.exit_code = 2;
                rep.add_field("detail", r.detail);
                return;
            }
            rep.verdict = r.holds ? "holds" : "fails";
            rep.exit_code = r.holds ? 0 : 1;
            std::string methods;
            for (const auto& [name, verdict] : r.methods)
                methods += (methods.empty() ? "" : " ") + name + "=" + (verdict ? "true" : "false");
            rep.add_field("relation", relation_name(r.relation));
            rep.add_field("methods", methods);
            if (r.ill_conditioned) rep.add_field("ill-conditioned", "true");
            add_order_witness(rep, r);
        },
        a, b);
    return rep;
}

Report run_geninv(const std::string& cmd, const std::string& op, const AnyMat& a,
                  const std::optional<AnyMat>& g, double tol) {
    Report rep;
    rep.command = cmd;
    if (uses_floats(a)) rep.tolerance = tol;
    std::visit(
        [&](const auto& x) {
            using M = std::decay_t<decltype(x)>;
            rep.verdict = "ok";
            if (op == "mp") {
                rep.add_matrix("pseudoinverse", AnyMat{moore_penrose(x)});
            } else if (op == "inner") {
                rep.add_matrix("inner_inverse", AnyMat{inner_inverse(x)});
            } else if (op == "reflexive") {
                M base = g ? std::get<M>(*g) : inner_inverse(x);
                rep.add_matrix("reflexive_inverse", AnyMat{reflexive_inverse(x, base)});
            } else if (op == "family") {
                InverseFamily<typename M::Fld> fam = g1_family(x);
                rep.add_field("d1_dimension", std::to_string(fam.d1.size()));
                rep.add_matrix("base", AnyMat{fam.base});
                for (std::size_t k = 0; k < fam.d1.size(); ++k)
                    rep.add_matrix("d1_basis_" + std::to_string(k), AnyMat{fam.d1[k]});
            }
        },
        a);
    return rep;
}

Report run_combo(const std::string& cmd, const AnyMat& a, const AnyMat& b,
                 const std::string& c1, const std::string& c2, double tol) {
    Report rep;
    rep.command = cmd;
    if (uses_floats(a)) rep.tolerance = tol;
    visit_same(
        [&](const auto& x, const auto& y) {
            auto s1 = x.field().parse(c1);
            auto s2 = x.field().parse(c2);
            rep.add_matrix("inverse", AnyMat{combo_inverse(x, y, s1, s2)});
            rep.verdict = "ok";
        },
        a, b);
    return rep;
}

Report run_minimal_below(const std::string& cmd, const AnyMat& a, double tol) {
    Report rep;
    rep.command = cmd;
    if (uses_floats(a)) rep.tolerance = tol;
    std::visit(
        [&](const auto& x) {
            auto u = minimal_below(x);
            rep.verdict = "ok";
            rep.add_field("tau", x.field().str(u.tau));
            rep.add_matrix("minimal_element", AnyMat{u.value});
            rep.add_matrix("left_factor", AnyMat{u.left_factor});
            rep.add_matrix("right_factor", AnyMat{u.right_factor});
        },
        a);
    return rep;
}

Report run_maximal(const std::string& cmd, const AnyMat& a, double tol) {
    Report rep;
    rep.command = cmd;
    if (uses_floats(a)) rep.tolerance = tol;
    std::visit(
        [&](const auto& x) {
            auto r = is_maximal(x);
            rep.verdict = r.maximal ? "maximal" : "not-maximal";
            rep.exit_code = r.maximal ? 0 : 1;
            if (r.extension) rep.add_matrix("strict_extension", AnyMat{*r.extension});
        },
        a);
    return rep;
}

Report run_preserver(const std::string& cmd, const std::string& op, const AnyMat& coeffs,
                     long long trials, std::uint64_t seed, double tol) {
    Report rep;
    rep.command = cmd;
    if (uses_floats(coeffs)) rep.tolerance = tol;
    std::visit(
        [&](const auto& c) {
            using F = typename std::decay_t<decltype(c)>::Fld;
            MatrixLinearMap<F> phi(c);
            if (op == "check") {
                auto v = preserves_minus_sampled(phi, trials, seed);
                rep.add_field("trials", std::to_string(v.trials));
                if (v.passed) {
                    rep.verdict = "PASSED";
                } else {
                    rep.verdict = "REFUTED";
                    rep.exit_code = 1;
                    rep.add_matrix("counterexample_a", AnyMat{v.counterexample->first});
                    rep.add_matrix("counterexample_b", AnyMat{v.counterexample->second});
                }
            } else { // decompose
                auto out = decompose_preserver(phi, trials, seed);
                if (out.ok()) {
                    rep.verdict = "decomposed";
                    rep.add_field("kind", out.form->kind == CanonicalPreserverForm<F>::Kind::Isomorphism
                                              ? "isomorphism-type"
                                              : "anti-isomorphism-type");
                    rep.add_matrix("T", AnyMat{out.form->t});
                    rep.add_matrix("S", AnyMat{out.form->s});
                } else {
                    rep.verdict = "refused";
                    rep.exit_code = 1;
                    rep.add_field("error", out.error);
                    if (out.refutation) {
                        rep.add_matrix("counterexample_a", AnyMat{out.refutation->first});
                        rep.add_matrix("counterexample_b", AnyMat{out.refutation->second});
                    }
                }
            }
        },
        coeffs);
    return rep;
}

int run_oracle(const std::string& ring_spec, const std::string& prop, bool as_json) {
    ringlab::FiniteRing ring = ringlab::FiniteRing::parse(ring_spec);
    std::vector<ringlab::VerifyReport> reports;
    if (prop == "all") reports = ringlab::verify_all(ring);
    else reports.push_back(ringlab::verify(prop, ring));

    bool counterexample = false;
    if (as_json) {
        Json arr = Json::array();
        for (const auto& r : reports) {
            Json j;
            j["prop"] = r.prop_id;
            j["ring"] = r.ring;
            j["status"] = ringlab::to_string(r.status);
            j["detail"] = r.detail;
            if (!r.notes.empty()) j["notes"] = r.notes;
            arr.push_back(std::move(j));
            counterexample |= r.status == ringlab::VerifyStatus::Counterexample;
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << "prop " << r.prop_id << " on " << r.ring << ": " << ringlab::to_string(r.status)
                      << " -- " << r.detail;
            if (!r.notes.empty()) std::cout << " [" << r.notes << "]";
            std::cout << "\n";
            counterexample |= r.status == ringlab::VerifyStatus::Counterexample;
        }
    }
    return counterexample ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"matrix order relations, generalized inverses, and finite-ring verification"};
    app.require_subcommand(1);

    double tol = 1e-10;
    bool as_json = false;
    app.add_option("--tol", tol, "comparison tolerance for complex-float matrices")->capture_default_str();
    app.add_flag("--json", as_json, "emit a JSON report");

    // order check
    auto* order = app.add_subcommand("order", "decide an order relation between two matrices");
    auto* order_check = order->add_subcommand("check", "check a relation on a pair of matrix files");
    std::string relation;
    std::string file_a, file_b;
    order_check->add_option("--relation", relation, "minus | space | star")->required();
    order_check->add_option("A", file_a, "left matrix file")->required();
    order_check->add_option("B", file_b, "right matrix file")->required();

    // geninv
    auto* geninv = app.add_subcommand("geninv", "construct generalized inverses");
    std::string geninv_file, geninv_gfile;
    std::vector<CLI::App*> geninv_subs;
    for (const char* name : {"mp", "inner", "reflexive", "family"}) {
        auto* sub = geninv->add_subcommand(name);
        sub->add_option("A", geninv_file, "matrix file")->required();
        if (std::string(name) == "reflexive")
            sub->add_option("G", geninv_gfile, "a {1}-inverse file (defaults to the computed inner inverse)");
        geninv_subs.push_back(sub);
    }

    // combo-inverse
    auto* combo = app.add_subcommand("combo-inverse", "invert c1 a + c2 b for a <=- b with b invertible");
    std::string combo_a, combo_b, c1_str, c2_str;
    combo->add_option("A", combo_a)->required();
    combo->add_option("B", combo_b)->required();
    combo->add_option("--c1", c1_str, "scalar c1 (field syntax)")->required();
    combo->add_option("--c2", c2_str, "scalar c2 (field syntax)")->required();

    // minimal-below / maximal
    auto* minimal = app.add_subcommand("minimal-below", "rank-one element below a nonzero matrix");
    std::string minimal_file;
    minimal->add_option("A", minimal_file)->required();
    auto* maximal = app.add_subcommand("maximal", "maximality in the minus order, with extension witness");
    std::string maximal_file;
    maximal->add_option("A", maximal_file)->required();

    // preserver
    auto* preserver = app.add_subcommand("preserver", "analyze a linear map on M_n");
    long long trials = 200;
    std::uint64_t seed = 1;
    std::string map_file;
    auto* pres_check = preserver->add_subcommand("check", "sampled minus-order preservation");
    auto* pres_dec = preserver->add_subcommand("decompose", "canonical form of a bijective preserver");
    for (auto* sub : {pres_check, pres_dec}) {
        sub->add_option("PHI", map_file, "map file (vec column-major header + coefficients)")->required();
        sub->add_option("--trials", trials, "sampling budget")->capture_default_str();
        sub->add_option("--seed", seed, "sampling seed")->capture_default_str();
    }

    // oracle
    auto* oracle = app.add_subcommand("oracle", "finite-ring verification");
    auto* oracle_run = oracle->add_subcommand("run", "run registered proposition checkers");
    std::string ring_spec, prop = "all";
    oracle_run->add_option("--ring", ring_spec, "ring spec: m<k>gf<p>, z<n>, ut<k>gf<p>, sums via +")->required();
    oracle_run->add_option("--prop", prop, "proposition id or 'all'")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    const auto start = std::chrono::steady_clock::now();
    const std::string cmd = join_args(argc, argv);
    int code = 2;
    try {
        Report rep;
        if (order_check->parsed()) {
            rep = run_order_check(cmd, relation, read_matrix_file(file_a, tol), read_matrix_file(file_b, tol), tol);
        } else if (geninv->parsed()) {
            std::string op;
            for (auto* sub : geninv_subs)
                if (sub->parsed()) op = sub->get_name();
            if (op.empty()) throw CLI::CallForHelp();
            std::optional<AnyMat> g;
            if (!geninv_gfile.empty()) g = read_matrix_file(geninv_gfile, tol);
            rep = run_geninv(cmd, op, read_matrix_file(geninv_file, tol), g, tol);
        } else if (combo->parsed()) {
            rep = run_combo(cmd, read_matrix_file(combo_a, tol), read_matrix_file(combo_b, tol), c1_str, c2_str, tol);
        } else if (minimal->parsed()) {
            rep = run_minimal_below(cmd, read_matrix_file(minimal_file, tol), tol);
        } else if (maximal->parsed()) {
            rep = run_maximal(cmd, read_matrix_file(maximal_file, tol), tol);
        } else if (preserver->parsed()) {
            auto [coeffs, n] = read_map_file(map_file, tol);
            rep = run_preserver(cmd, pres_check->parsed() ? "check" : "decompose", coeffs, trials, seed, tol);
        } else if (oracle_run->parsed()) {
            code = run_oracle(ring_spec, prop, as_json);
            const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - start).count();
            std::cerr << "# elapsed_ms " << ms << "\n";
            return code;
        } else {
            std::cerr << "error: no subcommand\n";
            return 2;
        }
        rep.print(as_json);
        code = rep.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        code = 2;
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start).count();
    std::cerr << "# elapsed_ms " << ms << "\n";
    return code;
}
