#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sombor/bounds.hpp"
#include "sombor/extremal.hpp"
#include "sombor/graph.hpp"
#include "sombor/graph6.hpp"
#include "sombor/invariants.hpp"
#include "sombor/jsonout.hpp"
#include "sombor/matchings.hpp"
#include "sombor/parallel.hpp"
#include "sombor/spectra.hpp"
#include "sombor/trees.hpp"

namespace {

using namespace sombor;

std::vector<Graph> read_graph6_lines(std::istream& in) {
    std::vector<Graph> graphs;
    std::string line;
    long no = 0;
    while (std::getline(in, line)) {
        ++no;
        const auto rec = strip_graph6_line(line);
        if (rec.empty()) continue;
        try {
            graphs.push_back(parse_graph6(rec));
        } catch (const Error& e) {
            throw Error("line " + std::to_string(no) + ": " + e.what());
        }
    }
    return graphs;
}

std::vector<Graph> load_graphs(const std::string& path, const std::string& format) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
        file.open(path);
        if (!file) throw Error("cannot open input file: " + path);
        in = &file;
    }
    if (format == "graph6") return read_graph6_lines(*in);
    if (format == "edgelist") return read_edge_list_stream(*in);
    throw Error("unknown input format: " + format);
}

std::string compute_report_line(const Graph& g) {
    const DegreeProfile prof = degree_profile(g);
    const IndexValues idx = compute_indices(g);
    const Spectrum spec = eigenvalues(sombor_matrix(g));
    JsonWriter w;
    w.begin_object();
    w.key("graph6").value(write_graph6(g));
    w.key("n").value(g.vertex_count());
    w.key("m").value(g.edge_count());
    w.key("max_degree").value(prof.max_deg);
    w.key("min_degree").value(prof.min_deg);
    w.key("sombor_index").value(idx.sombor);
    w.key("first_zagreb").value(idx.first_zagreb);
    w.key("forgotten").value(idx.forgotten);
    w.key("isi").value(idx.isi);
    w.key("eigenvalues").begin_array();
    for (double v : spec.eigenvalues) w.value(v);
    w.end_array();
    w.key("inertia").begin_object();
    w.key("p").value(spec.positives);
    w.key("n0").value(spec.zeros);
    w.key("q").value(spec.negatives);
    w.end_object();
    w.key("spectral_radius").value(spectral_radius(spec));
    w.key("energy").value(energy(spec));
    w.key("estrada").value(estrada(spec));
    w.key("abs_det").value(determinant_abs(spec));
    w.end_object();
    return w.str();
}

int cmd_compute(const std::string& input, const std::string& format) {
    const std::vector<Graph> graphs = load_graphs(input, format);
    parallel_map_ordered<std::string>(
        graphs.size(), worker_count(),
        [&](std::size_t i) { return compute_report_line(graphs[i]); },
        [&](std::size_t, std::string&& line) { std::cout << line << '\n'; });
    return 0;
}

std::string bound_report_line(const BoundReport& r) {
    JsonWriter w;
    w.begin_object();
    w.key("graph6").value(r.graph6);
    w.key("bound_id").value(r.bound_id);
    w.key("target_value").value(r.target_value);
    w.key("bound_value").value(r.bound_value);
    w.key("slack").value(r.slack);
    w.key("holds").value(r.holds);
    w.key("equality").value(r.equality);
    w.key("equality_family_matches").value(r.equality_family_matches);
    w.end_object();
    return w.str();
}

int cmd_verify_bounds(const std::string& input, const std::string& format,
                      const std::string& bounds_arg, double tol) {
    const std::vector<Graph> graphs = load_graphs(input, format);
    std::vector<std::string> ids;
    if (bounds_arg == "all") {
        ids = bound_ids();
    } else {
        std::stringstream ss(bounds_arg);
        std::string id;
        while (std::getline(ss, id, ',')) {
            if (id.empty()) continue;
            find_bound(id); // validate now: unknown ids are a usage error
            ids.push_back(id);
        }
    }

    struct PerBound {
        long applicable = 0, violations = 0, equalities = 0, mismatches = 0;
    };
    std::map<std::string, PerBound> per_bound;
    for (const auto& id : ids) per_bound[id];
    const VerifySummary summary = verify_corpus(
        graphs, ids,
        [&](const BoundReport& r) {
            std::cout << bound_report_line(r) << '\n';
            PerBound& pb = per_bound[r.bound_id];
            ++pb.applicable;
            if (!r.holds) ++pb.violations;
            if (r.equality) ++pb.equalities;
            if (!r.equality_family_matches) ++pb.mismatches;
        },
        worker_count(), tol);

    std::cerr << "bound_id,applicable,violations,equalities,family_mismatches\n";
    for (const auto& [id, pb] : per_bound)
        std::cerr << id << ',' << pb.applicable << ',' << pb.violations << ',' << pb.equalities
                  << ',' << pb.mismatches << '\n';
    std::cerr << "TOTAL," << summary.evaluated << ',' << summary.violations << ','
              << summary.equalities << ',' << summary.family_mismatches << '\n';
    if (summary.errors > 0)
        std::cerr << "warning: " << summary.errors << " (graph,bound) evaluations failed\n";
    return summary.violations > 0 ? 1 : 0;
}

std::string extremal_result_line(const ExtremalResult& r) {
    JsonWriter w;
    w.begin_object();
    w.key("invariant").value(to_string(r.invariant));
    w.key("objective").value(to_string(r.objective));
    w.key("corpus").value(r.corpus);
    w.key("optimum").value(r.optimum);
    w.key("witnesses").begin_array();
    for (const auto& wit : r.witnesses) {
        w.begin_object();
        w.key("graph6").value(wit.graph6);
        w.key("value").value(wit.value);
        w.end_object();
    }
    w.end_array();
    w.key("total").value(r.total);
    w.key("skipped").value(r.skipped);
    w.end_object();
    return w.str();
}

int cmd_extremal(const std::string& family, const std::string& range, const std::string& input,
                 const std::string& format, const std::string& invariant_name,
                 const std::string& objective_name) {
    const auto invariant = invariant_from_name(invariant_name);
    if (!invariant) throw Error("unknown invariant: " + invariant_name);
    Objective objective;
    if (objective_name == "min") objective = Objective::min;
    else if (objective_name == "max") objective = Objective::max;
    else throw Error("objective must be min or max");

    std::vector<ExtremalResult> results;
    if (!family.empty()) {
        if (family != "trees") throw Error("extremal --family supports only: trees");
        int lo = 0, hi = 0;
        const auto dots = range.find("..");
        try {
            if (dots == std::string::npos) {
                lo = hi = std::stoi(range);
            } else {
                lo = std::stoi(range.substr(0, dots));
                hi = std::stoi(range.substr(dots + 2));
            }
        } catch (const std::exception&) {
            throw Error("bad --n range: " + range);
        }
        results = tree_sweep(lo, hi, *invariant, objective, worker_count());
    } else {
        const std::vector<Graph> graphs = load_graphs(input, format);
        results.push_back(
            sweep(graphs, *invariant, objective, "file:" + input, worker_count()));
    }
    long skipped = 0;
    for (const auto& r : results) {
        std::cout << extremal_result_line(r) << '\n';
        skipped += r.skipped;
    }
    return skipped > 0 ? 1 : 0;
}

int cmd_charpoly(const std::string& input, const std::string& format, const std::string& method) {
    const std::vector<Graph> graphs = load_graphs(input, format);
    for (const Graph& g : graphs) {
        CharPoly poly;
        if (method == "eigen") poly = char_poly_from_spectrum(eigenvalues(sombor_matrix(g)));
        else if (method == "leverrier") poly = char_poly(sombor_matrix(g));
        else if (method == "matchings") poly = sombor_charpoly_bipartite(g);
        else throw Error("unknown charpoly method: " + method);
        JsonWriter w;
        w.begin_object();
        w.key("graph6").value(write_graph6(g));
        w.key("method").value(method);
        w.key("coefficients").begin_array();
        for (double c : poly.coefficients) w.value(c);
        w.end_array();
        w.end_object();
        std::cout << w.str() << '\n';
    }
    return 0;
}

int cmd_coulson(const std::string& input, const std::string& format, double tol) {
    const std::vector<Graph> graphs = load_graphs(input, format);
    for (const Graph& g : graphs) {
        const CoulsonResult r = coulson_energy(g, tol);
        JsonWriter w;
        w.begin_object();
        w.key("graph6").value(write_graph6(g));
        w.key("energy").value(r.energy);
        w.key("rel_tol").value(tol);
        w.key("evaluations").value(r.evaluations);
        w.key("max_depth").value(r.max_depth);
        w.key("est_error").value(r.est_error);
        w.end_object();
        std::cout << w.str() << '\n';
    }
    return 0;
}

int cmd_gen(const std::string& family_name, const std::vector<int>& params) {
    if (family_name == "trees") {
        if (params.size() != 1) throw BadParamsError("gen --family trees needs one parameter");
        enumerate_trees(params[0],
                        [](const Graph& g) { std::cout << write_graph6(g) << '\n'; });
        return 0;
    }
    const auto kind = family_kind_from_name(family_name);
    if (!kind) throw BadParamsError("unknown family: " + family_name);
    std::cout << write_graph6(family(*kind, params)) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sombor matrix toolkit: spectra, energies, bound verification, extremal search"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string format = "graph6";
    std::string bounds_arg = "all";
    double tol = kEqualityTolFactor;
    std::string family;
    std::string range;
    std::string invariant_name;
    std::string objective_name;
    std::string method = "leverrier";
    double coulson_tol = 1e-8;
    std::vector<int> gen_params;
    std::string gen_family;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "input file (\"-\" for stdin)");
        cmd->add_option("--format", format, "graph6 or edgelist")
            ->check(CLI::IsMember({"graph6", "edgelist"}));
    };

    CLI::App* compute = app.add_subcommand("compute", "per-graph spectral report (JSON lines)");
    add_input(compute);

    CLI::App* verify = app.add_subcommand("verify-bounds", "check registry bounds over a corpus");
    add_input(verify);
    verify->add_option("--bounds", bounds_arg, "comma-separated bound ids or \"all\"");
    verify->add_option("--tol", tol, "equality/violation tolerance factor");

    CLI::App* extremal = app.add_subcommand("extremal", "extremal search over a corpus");
    extremal->add_option("--family", family, "built-in corpus family (trees)");
    extremal->add_option("--n", range, "order or order range a..b for --family");
    extremal->add_option("--input", input, "graph6/edgelist corpus file");
    extremal->add_option("--format", format, "graph6 or edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
    extremal->add_option("--invariant", invariant_name, "rho1|energy|estrada|sombor")->required();
    extremal->add_option("--objective", objective_name, "min|max")->required();

    CLI::App* charpoly = app.add_subcommand("charpoly", "Sombor characteristic polynomial");
    add_input(charpoly);
    charpoly->add_option("--method", method, "eigen|leverrier|matchings")
        ->check(CLI::IsMember({"eigen", "leverrier", "matchings"}));

    CLI::App* coulson = app.add_subcommand("coulson", "Sombor energy via the Coulson integral");
    add_input(coulson);
    coulson->add_option("--tol", coulson_tol, "relative quadrature tolerance");

    CLI::App* gen = app.add_subcommand("gen", "emit graph6 for standard families");
    gen->add_option("--family", gen_family, "complete|complete_bipartite|path|cycle|star|empty|k2_union|trees")
        ->required();
    gen->add_option("params", gen_params, "family parameters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed()) return cmd_compute(input, format);
        if (verify->parsed()) return cmd_verify_bounds(input, format, bounds_arg, tol);
        if (extremal->parsed()) {
            if (!family.empty() && extremal->count("--input") > 0) {
                std::cerr << "error: --family and --input are mutually exclusive\n";
                return 2;
            }
            if (family.empty() && extremal->count("--input") == 0) {
                std::cerr << "error: one of --family or --input is required\n";
                return 2;
            }
            return cmd_extremal(family, range, input, format, invariant_name, objective_name);
        }
        if (charpoly->parsed()) return cmd_charpoly(input, format, method);
        if (coulson->parsed()) return cmd_coulson(input, format, coulson_tol);
        if (gen->parsed()) return cmd_gen(gen_family, gen_params);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
