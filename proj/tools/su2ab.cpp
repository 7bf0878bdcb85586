#include "su2ab/grid.hpp"
#include "su2ab/io.hpp"
#include "su2ab/oracle.hpp"
#include "su2ab/paper_checks.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace su2ab;

namespace {

constexpr int kAbelian = 0, kNotAbelian = 1, kInvalid = 2, kInternal = 3;

struct Config {
    double tol = 1e-10;
    int restarts = 50;
    std::uint64_t seed = 0x5eed5eedULL;
    std::int64_t p_max = 6, bound = 3;
    std::string format = "json";
};

// Defaults may come from a JSON file named by SU2AB_CONFIG; command-line flags override them.
Config load_config() {
    Config c;
    const char* path = std::getenv("SU2AB_CONFIG");
    if (!path || !*path) return c;
    std::ifstream in(path);
    if (!in) throw InputError("/", std::string("cannot open config ") + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("/", std::string("malformed config: ") + e.what());
    }
    auto get = [&](const char* key, auto& out) {
        if (!j.contains(key)) return;
        try {
            j.at(key).get_to(out);
        } catch (const json::exception&) {
            throw InputError(std::string("/") + key, "wrong type in config");
        }
    };
    get("tol", c.tol);
    get("restarts", c.restarts);
    get("seed", c.seed);
    get("p_max", c.p_max);
    get("bound", c.bound);
    get("format", c.format);
    if (!(c.tol > 0) || c.restarts <= 0 || c.p_max < 2 || c.bound < 0)
        throw InputError("/", "config bounds must be positive");
    if (c.format != "json" && c.format != "csv" && c.format != "text")
        throw InputError("/format", "expected json, csv or text");
    return c;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

json emptiness_json(const Emptiness& e) {
    json j{{"empty", e.empty},
           {"predicate", e.predicate},
           {"enumerated", e.enumerated},
           {"predicate_applicable", e.predicate_applicable},
           {"lemma_exception", e.lemma_exception}};
    j["witness"] = e.witness ? to_json(*e.witness) : json(nullptr);
    return j;
}

SeifertPiece parse_piece_arg(const std::string& s) {
    // "p1/q1,p2/q2"
    std::int64_t p1, q1, p2, q2;
    char c1, c2, c3;
    std::istringstream is(s);
    if (!(is >> p1 >> c1 >> q1 >> c2 >> p2 >> c3 >> q2) || c1 != '/' || c2 != ',' || c3 != '/')
        throw InputError("/", "expected a piece as p1/q1,p2/q2, got '" + s + "'");
    SeifertPiece piece{p1, q1, p2, q2};
    try {
        validate(piece);
    } catch (const InvalidPiece& e) {
        throw InputError("/", e.what());
    }
    return piece;
}

std::string csv_row(const GraphManifold& M, const Verdict& v, const std::optional<ClassId>& c) {
    GraphManifold N = normalize_order(M);
    std::ostringstream os;
    const auto& k = v.deltas;
    os << M.m1.p1 << ',' << M.m1.q1 << ',' << M.m1.p2 << ',' << M.m1.q2 << ',' << M.m2.p1 << ',' << M.m2.q1 << ','
       << M.m2.p2 << ',' << M.m2.q2 << ',' << M.phi.alpha << ',' << M.phi.beta << ',' << M.phi.gamma << ','
       << M.phi.delta << ',' << k.h1h2 << ',' << k.l1h2 << ',' << k.l2h1 << ',' << k.l1l2 << ',' << k.l2mu1 << ','
       << k.l1mu2 << ',' << condition_a(N) << ',' << condition_b(N) << ',' << condition_c(N) << ','
       << (v.su2_abelian ? "abelian" : "not_abelian") << ',' << to_string(v.reason) << ',';
    if (c) os << c->id;
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact SU(2)-abelianness decisions for graph manifolds D2(p1/q1,p2/q2) u D2(p3/q3,p4/q4)"};
    app.require_subcommand(1);
    Config cfg;
    try {
        cfg = load_config();
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }

    std::string file, out_path, parity = "both", format = cfg.format, interval_format = "text";
    std::int64_t p1 = 0, p2 = 0, n_arg = 1, m_arg = 1;
    std::string m1_arg, m2_arg;
    bool full = false, algorithms = false;
    SolveOptions sopt;
    sopt.restarts = cfg.restarts;
    sopt.tol = cfg.tol;
    sopt.seed = cfg.seed;
    std::int64_t p_max = cfg.p_max, bound = cfg.bound;

    auto* decide_cmd = app.add_subcommand("decide", "decide SU(2)-abelianness of a manifold JSON file");
    decide_cmd->add_option("file", file, "manifold JSON")->required();
    auto* classify_cmd = app.add_subcommand("classify", "table row of an abelian manifold");
    classify_cmd->add_option("file", file, "manifold JSON")->required();
    auto* intervals_cmd = app.add_subcommand("intervals", "trace sets J0 / Jpi");
    intervals_cmd->add_option("p1", p1)->required();
    intervals_cmd->add_option("p2", p2)->required();
    intervals_cmd->add_option("--parity", parity, "zero, pi or both")->check(CLI::IsMember({"zero", "pi", "both"}));
    intervals_cmd->add_option("--format", interval_format)->check(CLI::IsMember({"json", "text"}));
    auto* sets_cmd = app.add_subcommand("sets", "emptiness of the four intersections");
    sets_cmd->add_option("file", file, "manifold JSON")->required();
    auto* witness_cmd = app.add_subcommand("witness", "explicit irreducible representation");
    witness_cmd->add_option("file", file, "manifold JSON")->required();
    auto* oracle_cmd = app.add_subcommand("oracle", "numeric search for an irreducible representation");
    oracle_cmd->add_option("file", file, "manifold JSON")->required();
    oracle_cmd->add_option("--restarts", sopt.restarts)->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--tol", sopt.tol)->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--seed", sopt.seed);
    auto* plot_cmd = app.add_subcommand("plot", "SVG of the boundary representation sets");
    plot_cmd->add_option("file", file, "piece or manifold JSON")->required();
    plot_cmd->add_option("-o,--output", out_path, "SVG path (JSON sidecar written next to it)")->required();
    auto* build_cmd = app.add_subcommand("build-gluing", "gluing with Delta(h1,h2)=1 and prescribed deltas");
    build_cmd->add_option("--m1", m1_arg, "p1/q1,p2/q2")->required();
    build_cmd->add_option("--m2", m2_arg, "p3/q3,p4/q4")->required();
    build_cmd->add_option("--n", n_arg, "Delta(lambda_M1, h2)");
    build_cmd->add_option("--m", m_arg, "Delta(lambda_M2, h1)");
    auto* torus_cmd = app.add_subcommand("torus-knot", "Seifert piece of a torus knot exterior");
    torus_cmd->add_option("p", p1)->required();
    torus_cmd->add_option("q", p2)->required();
    auto* sweep_cmd = app.add_subcommand("sweep", "exhaustive grid sweep (CSV) or the finite-case algorithms");
    sweep_cmd->add_option("--p-max", p_max)->check(CLI::Range(2, 12));
    sweep_cmd->add_option("--bound", bound)->check(CLI::Range(0, 6));
    sweep_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));
    sweep_cmd->add_flag("--algorithms", algorithms, "run the three finite-case sweeps instead");
    auto* verify_cmd = app.add_subcommand("verify-paper", "reproduction report");
    verify_cmd->add_flag("--full", full, "include the grid-wide criteria");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kInvalid;
    }

    try {
        if (decide_cmd->parsed() || classify_cmd->parsed()) {
            GraphManifold M = read_manifold_file(file);
            Verdict v = decide(M);
            std::optional<ClassId> c = classify(M);
            json j = verdict_json(M, v, c);
            if (classify_cmd->parsed())
                j = {{"su2_abelian", v.su2_abelian},
                     {"class", c ? json(c->id) : json(nullptr)},
                     {"bindings", c ? json(c->bindings) : json(nullptr)},
                     {"swapped", c ? c->swapped : false}};
            print(j);
            return v.su2_abelian ? kAbelian : kNotAbelian;
        }
        if (intervals_cmd->parsed()) {
            if (p1 < 2 || p2 < 2) throw InputError("/", "fiber orders must be >= 2");
            if (p1 > p2) std::swap(p1, p2);
            json j;
            if (parity != "pi") j["zero"] = to_json(j_zero(p1, p2));
            if (parity != "zero") j["pi"] = to_json(j_pi(p1, p2));
            if (interval_format == "text") {
                if (parity != "pi") std::cout << (parity == "both" ? "J0: " : "") << j_zero(p1, p2).pretty() << "\n";
                if (parity != "zero") std::cout << (parity == "both" ? "Jpi: " : "") << j_pi(p1, p2).pretty() << "\n";
            } else {
                if (parity != "pi") j["zero"]["pretty"] = j_zero(p1, p2).pretty();
                if (parity != "zero") j["pi"]["pretty"] = j_pi(p1, p2).pretty();
                print(j);
            }
            return 0;
        }
        if (sets_cmd->parsed()) {
            GraphManifold M = read_manifold_file(file);
            json j;
            j["manifold"] = to_json(M);
            j["P1nP2"] = emptiness_json(p1p2_empty(M));
            j["H1nA2"] = emptiness_json(h1a2_empty(M));
            j["A1nH2"] = emptiness_json(a1h2_empty(M));
            if (M.phi.beta != 0)
                j["H1nH2"] = emptiness_json(h1h2_empty(M));
            else
                j["H1nH2"] = {{"empty", !find_h1h2(M).has_value()}, {"predicate_applicable", false}};
            const std::int64_t ab = M.phi.beta < 0 ? -M.phi.beta : M.phi.beta;
            if (ab >= 3) {
                SSets s = s_sets(M);
                json arr = json::array();
                for (const auto& set : s.s) {
                    json vals = json::array();
                    for (const auto& v : set.values) vals.push_back(v.turn().get_str());
                    arr.push_back(vals);
                }
                j["S_sets_turns"] = arr;
            }
            print(j);
            return 0;
        }
        if (witness_cmd->parsed()) {
            GraphManifold M = read_manifold_file(file);
            Verdict v = decide(M);
            json j = verdict_json(M, v, std::nullopt);
            if (v.su2_abelian) {
                j["representation"] = nullptr;
                print(j);
                return kAbelian;
            }
            RepWitness w = assemble_witness(M, v);
            j["representation"] = to_json(w, build_presentation(M));
            j["fiber_central"] = fiber_central(w);
            print(j);
            return kNotAbelian;
        }
        if (oracle_cmd->parsed()) {
            GraphManifold M = read_manifold_file(file);
            Presentation p = build_presentation(M);
            auto w = solve_numeric(p, sopt);
            json j{{"manifold", to_json(M)}, {"restarts", sopt.restarts}, {"tol", sopt.tol}, {"seed", sopt.seed}};
            j["found"] = w.has_value();
            j["representation"] = w ? to_json(*w, p) : json(nullptr);
            print(j);
            return w ? kNotAbelian : kAbelian;
        }
        if (plot_cmd->parsed()) {
            std::ifstream in(file);
            if (!in) throw InputError("/", "cannot open " + file);
            json j;
            try {
                j = json::parse(in);
            } catch (const json::parse_error& e) {
                throw InputError("/", std::string("malformed JSON: ") + e.what());
            }
            PlotData d = j.is_object() && j.contains("m1") ? plot_data(manifold_from_json(j)) : plot_data(piece_from_json(j));
            std::ofstream svg(out_path);
            svg << plot_svg(d);
            json side;
            side["piece"] = to_json(d.piece);
            for (const auto& s : d.h_segments)
                side["h_segments"].push_back({{"psi", s.psi.str()}, {"theta", {to_string(s.theta_lo), to_string(s.theta_hi)}}});
            for (const auto& l : d.a_lines) side["a_lines"].push_back({l.coef_theta, l.coef_psi});
            for (const auto& p : d.p_points) side["p_points"].push_back(to_json(p));
            side["p_markers"] = d.p_markers;
            if (d.overlay_phi) {
                side["phi"] = to_json(*d.overlay_phi);
                for (const auto& s : d.overlay_h)
                    side["overlay_h_segments_side2"].push_back(
                        {{"psi", s.psi.str()}, {"theta", {to_string(s.theta_lo), to_string(s.theta_hi)}}});
                for (const auto& l : d.overlay_a) side["overlay_a_lines"].push_back({l.coef_theta, l.coef_psi});
                for (const auto& p : d.overlay_p) side["overlay_p_points"].push_back(to_json(p));
            }
            std::ofstream(out_path + ".json") << side.dump(2) << "\n";
            std::cout << "wrote " << out_path << " and " << out_path << ".json\n";
            return 0;
        }
        if (build_cmd->parsed()) {
            SeifertPiece a = parse_piece_arg(m1_arg), b = parse_piece_arg(m2_arg);
            GluingMatrix f = build_gluing(a, b, n_arg, m_arg);
            GraphManifold M{a, b, f};
            json j = to_json(M);
            j["deltas"] = to_json(key_deltas(M));
            print(j);
            return 0;
        }
        if (torus_cmd->parsed()) {
            SeifertPiece s = torus_knot_exterior(p1, p2);
            BoundarySlope m = knot_meridian(s);
            json j = to_json(s);
            j["knot_meridian"] = {{"mu", m.mu}, {"h", m.h}};
            print(j);
            return 0;
        }
        if (sweep_cmd->parsed()) {
            if (algorithms) {
                SweepReport r = sweep_algorithms();
                json j{{"checked", {r.checked[0], r.checked[1], r.checked[2]}},
                       {"counterexamples", json::array()},
                       {"sanity_333_empty", r.sanity_333_empty},
                       {"crosschecked", r.crosschecked}};
                for (const auto& t : r.counterexamples)
                    j["counterexamples"].push_back({{"algorithm", t.algorithm}, {"beta", t.beta}, {"alpha", t.alpha},
                                                    {"gamma", t.gamma}, {"delta", t.delta},
                                                    {"p", {t.p1, t.p2, t.p3, t.p4}},
                                                    {"exact_confirmed", t.exact_confirmed},
                                                    {"other_level_meets", t.other_level_meets}});
                print(j);
                return r.counterexamples.empty() ? 0 : 1;
            }
            const std::size_t n = grid_size(p_max, bound);
            std::vector<std::string> rows(n);
            std::vector<json> objs(format == "csv" ? 0 : n);
            parallel_for(n, [&](std::size_t i) {
                GraphManifold M = grid_manifold(i, p_max, bound);
                Verdict v = decide(M);
                std::optional<ClassId> c = v.su2_abelian ? classify(M) : std::nullopt;
                if (format == "csv")
                    rows[i] = csv_row(M, v, c);
                else
                    objs[i] = verdict_json(M, v, c);
            });
            if (format == "csv") {
                std::cout << "p1,q1,p2,q2,p3,q3,p4,q4,alpha,beta,gamma,delta,h1_h2,lambda1_h2,lambda2_h1,"
                             "lambda1_lambda2,lambda2_mu1,lambda1_mu2,cond_A,cond_B,cond_C,verdict,reason,class\n";
                for (const auto& r : rows) std::cout << r << "\n";
            } else if (format == "json") {
                std::cout << json(objs).dump() << "\n";
            } else {
                std::size_t ab = 0;
                for (const auto& o : objs) ab += o["su2_abelian"].get<bool>();
                std::cout << n << " manifolds, " << ab << " abelian\n";
            }
            return 0;
        }
        if (verify_cmd->parsed()) {
            json r = verify_paper_report(full);
            print(r);
            return r["all_pass"].get<bool>() ? 0 : 1;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const NoSuchGluing& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return 0;
}
