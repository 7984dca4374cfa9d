#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "profilekit/bounds.hpp"
#include "profilekit/constructions.hpp"
#include "profilekit/experiment.hpp"
#include "profilekit/io.hpp"
#include "profilekit/oracles.hpp"
#include "profilekit/verify.hpp"

using namespace profilekit;

namespace {

std::vector<int> parse_id_list(const std::string & text)
{
    std::vector<int> out;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token.empty())
            continue;
        out.push_back(std::stoi(token));
    }
    return out;
}

struct TargetFlags {
    std::string inline_set;
    std::string set_file;

    TargetSet resolve(const Graph & g) const
    {
        if (!inline_set.empty() && !set_file.empty())
            throw InputError("--set and --set-file are mutually exclusive");
        std::string text = inline_set;
        if (!set_file.empty()) {
            std::string contents = read_file(set_file);
            for (char & c : contents)
                if (c == '\n' || c == ' ' || c == '\t' || c == '\r')
                    c = ',';
            text = contents;
        }
        if (text.empty())
            throw InputError("a target set is required (--set or --set-file)");
        return TargetSet::of(g, parse_id_list(text));
    }
};

void add_target_flags(CLI::App * cmd, TargetFlags & flags)
{
    cmd->add_option("--set", flags.inline_set, "target set as comma-separated ids, e.g. 1,5,9");
    cmd->add_option("--set-file", flags.set_file, "file with whitespace/comma separated ids");
}

int threads_from_env()
{
    const char * env = std::getenv("PROFILEKIT_THREADS");
    if (env == nullptr)
        return 1;
    try {
        return std::max(1, std::stoi(env));
    }
    catch (...) {
        return 1;
    }
}

std::string infinity_aware(int value)
{
    return value == kInfinity ? "inf" : std::to_string(value);
}

void print_profile(const Profile & p)
{
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < p.size(); ++i)
        out << (i ? "," : "") << infinity_aware(p[i]);
    out << ")";
    std::cout << out.str();
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"profilekit: distance-profile and neighbourhood complexity toolkit"};
    app.require_subcommand(1);
    int threads = threads_from_env();
    app.add_option("--threads", threads,
                   "worker threads (outputs do not depend on the schedule)");

    std::string graph_path, td_path, ordering_path, balls_path, family_path, out_path;
    TargetFlags target_flags;
    int radius = 0;
    int k = 1;
    long long samples = 1000;
    std::uint64_t seed = 0;
    std::string mode = "exact";
    Budgets budgets;

    // pc / nc -------------------------------------------------------------
    auto * pc_cmd = app.add_subcommand("pc", "profile complexity of a fixed target set");
    pc_cmd->add_option("--graph", graph_path, "PACE-style graph file")->required();
    add_target_flags(pc_cmd, target_flags);
    pc_cmd->add_option("-r,--radius", radius, "radius")->required();
    bool witnesses = false;
    pc_cmd->add_flag("--witnesses", witnesses, "also print the distinct profiles");
    pc_cmd->callback([&]() {
        Graph g = parse_graph_text(read_file(graph_path));
        auto a = target_flags.resolve(g);
        auto result = profile_complexity(g, a, radius, witnesses);
        std::cout << result.count << "\n";
        if (witnesses) {
            for (const auto & p : result.witness_profiles) {
                print_profile(p);
                std::cout << "\n";
            }
        }
    });

    auto * nc_cmd = app.add_subcommand("nc", "neighbourhood complexity of a fixed target set");
    nc_cmd->add_option("--graph", graph_path, "PACE-style graph file")->required();
    add_target_flags(nc_cmd, target_flags);
    nc_cmd->add_option("-r,--radius", radius, "radius")->required();
    nc_cmd->callback([&]() {
        Graph g = parse_graph_text(read_file(graph_path));
        auto a = target_flags.resolve(g);
        std::cout << neighbourhood_complexity(g, a, radius).count << "\n";
    });

    // pc-k / nc-k ----------------------------------------------------------
    for (bool use_nc : {false, true}) {
        auto * cmd = app.add_subcommand(use_nc ? "nc-k" : "pc-k",
                                        use_nc ? "max neighbourhood complexity over k-sets"
                                               : "max profile complexity over k-sets");
        cmd->add_option("--graph", graph_path, "PACE-style graph file")->required();
        cmd->add_option("-k", k, "target set size")->required();
        cmd->add_option("-r,--radius", radius, "radius")->required();
        cmd->add_option("--mode", mode, "exact or sampled")->check(CLI::IsMember({"exact", "sampled"}));
        cmd->add_option("--samples", samples, "sample count for sampled mode");
        cmd->add_option("--seed", seed, "sampling seed");
        cmd->add_option("--subset-budget", budgets.exact_subset_cap, "exact-mode subset cap");
        cmd->callback([&, use_nc]() {
            Graph g = parse_graph_text(read_file(graph_path));
            auto m = mode == "exact" ? MaxMode::Exact : MaxMode::Sampled;
            auto result = use_nc ? nc_over_k_sets(g, k, radius, m, samples, seed, budgets)
                                 : pc_over_k_sets(g, k, radius, m, samples, seed, budgets);
            std::cout << result.count << (result.sampled_lower_bound ? " (sampled lower bound)" : "")
                      << "\n";
            std::cout << "witness:";
            for (int v : result.witness_set.vertices)
                std::cout << " " << v;
            std::cout << "\n";
        });
    }

    // md --------------------------------------------------------------------
    auto * md_cmd = app.add_subcommand("md", "metric dimension by brute force");
    md_cmd->add_option("--graph", graph_path, "PACE-style graph file")->required();
    md_cmd->add_option("--budget", budgets.metric_dimension_cap, "max n for the brute force");
    md_cmd->callback([&]() {
        Graph g = parse_graph_text(read_file(graph_path));
        auto result = metric_dimension(g, budgets);
        std::cout << result.dimension << "\n";
        std::cout << "witness:";
        for (int v : result.witness.vertices)
            std::cout << " " << v;
        std::cout << "\n";
    });

    // guard-tw / guard-colnum ------------------------------------------------
    auto * gtw = app.add_subcommand("guard-tw", "guarding family from a tree decomposition");
    gtw->add_option("--graph", graph_path, "PACE-style graph file")->required();
    gtw->add_option("--td", td_path, "decomposition file")->required();
    add_target_flags(gtw, target_flags);
    gtw->add_option("-r,--radius", radius, "radius")->required();
    int root = 1;
    gtw->add_option("--root", root, "root node of the decomposition");
    gtw->callback([&]() {
        Graph g = parse_graph_text(read_file(graph_path));
        auto rep = parse_td_text(read_file(td_path));
        rep.root = root;
        auto a = target_flags.resolve(g);
        auto family = tw_guarding_family(g, rep, a, radius);
        std::cout << emit_family(family);
    });

    auto * gcn = app.add_subcommand("guard-colnum", "guarding family from a vertex ordering");
    gcn->add_option("--graph", graph_path, "PACE-style graph file")->required();
    gcn->add_option("--ordering", ordering_path, "ordering file (default: degeneracy ordering)");
    add_target_flags(gcn, target_flags);
    gcn->add_option("-r,--radius", radius, "radius")->required();
    gcn->callback([&]() {
        Graph g = parse_graph_text(read_file(graph_path));
        Ordering ord = ordering_path.empty()
                           ? degeneracy_ordering(g)
                           : parse_ordering_text(read_file(ordering_path), g.vertex_count());
        auto a = target_flags.resolve(g);
        auto family = colnum_guarding_family(g, ord, a, radius);
        std::cout << emit_family(family);
    });

    // verify-guard -------------------------------------------------------------
    auto * vg = app.add_subcommand("verify-guard", "check a guarding family");
    vg->add_option("--graph", graph_path, "PACE-style graph file")->required();
    vg->add_option("--family", family_path, "family file")->required();
    add_target_flags(vg, target_flags);
    vg->callback([&]() {
        Graph g = parse_graph_text(read_file(graph_path));
        auto a = target_flags.resolve(g);
        std::istringstream in(read_file(family_path));
        auto family = parse_family(in, g, a);
        auto report = verify_guarding(g, a, family.radius, family);
        for (std::size_t i : report.cap_violations)
            std::cout << "cap violation: member " << i + 1 << " exceeds p=" << family.member_cap
                      << "\n";
        if (report.ok) {
            std::cout << "ok\n";
        }
        else {
            std::cout << "not guarding";
            if (report.counterexample) {
                std::cout << ": vertex " << report.counterexample->vertex << " reaches "
                          << report.counterexample->target << " via";
                for (int v : report.counterexample->path)
                    std::cout << " " << v;
            }
            std::cout << "\n";
            throw DomainError("guarding check failed");
        }
    });

    // colnum -----------------------------------------------------------------
    auto * cn = app.add_subcommand("colnum", "weak/strong colouring numbers of an ordering");
    cn->add_option("--graph", graph_path, "PACE-style graph file")->required();
    cn->add_option("--ordering", ordering_path, "ordering file (default: degeneracy ordering)");
    cn->add_option("-r,--radius", radius, "radius")->required();
    int reach_vertex = 0;
    cn->add_option("--vertex", reach_vertex, "also print the reach sets of this vertex");
    cn->callback([&]() {
        Graph g = parse_graph_text(read_file(graph_path));
        Ordering ord = ordering_path.empty()
                           ? degeneracy_ordering(g)
                           : parse_ordering_text(read_file(ordering_path), g.vertex_count());
        std::cout << "wcol_" << radius << " = " << wcol_of(g, ord, radius) << "\n";
        std::cout << "scol_" << radius << " = " << scol_of(g, ord, radius) << "\n";
        if (reach_vertex != 0) {
            std::cout << "wreach:";
            for (int u : wreach(g, ord, reach_vertex, radius))
                std::cout << " " << u;
            std::cout << "\nsreach:";
            for (int u : sreach(g, ord, reach_vertex, radius))
                std::cout << " " << u;
            std::cout << "\n";
        }
    });

    // gen ----------------------------------------------------------------------
    auto * gen = app.add_subcommand("gen", "generate a named construction");
    std::string gen_name, out_prefix;
    int gen_k = 2, gen_r = 2, gen_n = 10, gen_t = 2, gen_d = 2, keep_permille = 1000;
    gen->add_option("name", gen_name,
                    "split | interval-lb | chordal-lb | tl2-lb | subcubic | ktree | mop | "
                    "random-interval | balls")
        ->required();
    gen->add_option("--out-prefix", out_prefix, "write files with this path prefix")->required();
    gen->add_option("-k", gen_k, "subset/target parameter");
    gen->add_option("-r,--radius", gen_r, "radius parameter");
    gen->add_option("-n", gen_n, "vertex count");
    gen->add_option("-t", gen_t, "treewidth parameter");
    gen->add_option("-d", gen_d, "ball dimension");
    gen->add_option("--keep-permille", keep_permille, "edge keep probability, per mille");
    gen->add_option("--seed", seed, "generator seed");
    gen->callback([&]() {
        LabeledInstance inst;
        if (gen_name == "split")
            inst = gen_split_gadget(gen_k, gen_r);
        else if (gen_name == "interval-lb")
            inst = gen_interval_lb(gen_r, gen_k);
        else if (gen_name == "chordal-lb")
            inst = gen_chordal_lb(gen_r, gen_k);
        else if (gen_name == "tl2-lb")
            inst = gen_tl2_lb(gen_r, gen_k);
        else if (gen_name == "subcubic")
            inst = gen_subcubic(gen_k);
        else if (gen_name == "ktree")
            inst = gen_random_partial_ktree(gen_n, gen_t, keep_permille, seed);
        else if (gen_name == "mop")
            inst = gen_random_mop(gen_n, seed);
        else if (gen_name == "random-interval")
            inst = gen_random_interval(gen_n, seed);
        else if (gen_name == "balls")
            inst = gen_random_balls(gen_n, gen_d, seed);
        else
            throw InputError("unknown construction '" + gen_name + "'");

        write_file(out_prefix + ".gr", emit_graph(inst.graph));
        std::cout << "graph: " << out_prefix << ".gr\n";
        if (inst.decomposition) {
            write_file(out_prefix + ".td", emit_td(*inst.decomposition));
            std::cout << "decomposition: " << out_prefix << ".td\n";
        }
        if (inst.ordering) {
            write_file(out_prefix + ".ord", emit_ordering(*inst.ordering));
            std::cout << "ordering: " << out_prefix << ".ord\n";
        }
        if (inst.intervals) {
            write_file(out_prefix + ".ivl", emit_balls(balls_from_intervals(*inst.intervals)));
            std::cout << "intervals: " << out_prefix << ".ivl\n";
        }
        else if (inst.balls) {
            write_file(out_prefix + ".balls", emit_balls(*inst.balls));
            std::cout << "balls: " << out_prefix << ".balls\n";
        }
        if (inst.circular_order) {
            std::ostringstream out;
            for (std::size_t i = 0; i < inst.circular_order->size(); ++i)
                out << (*inst.circular_order)[i]
                    << (i + 1 == inst.circular_order->size() ? "\n" : " ");
            write_file(out_prefix + ".circ", out.str());
            std::cout << "circular order: " << out_prefix << ".circ\n";
        }
        if (!inst.target.vertices.empty()) {
            std::cout << "target:";
            for (int v : inst.target.vertices)
                std::cout << " " << v;
            std::cout << "\n";
        }
        if (inst.prescribed_radius >= 0)
            std::cout << "prescribed radius: " << inst.prescribed_radius << "\n";
        for (const auto & [key, value] : inst.predicted)
            std::cout << "predicted " << key << ": " << value << "\n";
    });

    // bound ----------------------------------------------------------------------
    auto * bound_cmd = app.add_subcommand("bound", "explicit bound formulas");
    std::string bound_class;
    long long p_t = -1, p_h = -1, p_ell = -1, p_s = -1, p_d = -1, p_thin = -1, p_r = -1, p_k = -1;
    bound_cmd->add_option("--class", bound_class, "bound class name")->required();
    bound_cmd->add_option("-r", p_r, "radius");
    bound_cmd->add_option("-k", p_k, "target size");
    bound_cmd->add_option("-t", p_t, "treewidth / clique-minor parameter");
    bound_cmd->add_option("--hsize", p_h, "excluded clique size");
    bound_cmd->add_option("--ell", p_ell, "treelength");
    bound_cmd->add_option("-s", p_s, "excluded subdivision size");
    bound_cmd->add_option("-d", p_d, "ball dimension");
    bound_cmd->add_option("--thinness", p_thin, "ball thinness");
    bound_cmd->callback([&]() {
        BoundQuery query;
        query.cls = bound_class_from_name(bound_class);
        auto put = [&](const char * name, long long value) {
            if (value >= 0)
                query.params[name] = value;
        };
        put("r", p_r);
        put("k", p_k);
        put("h", p_h);
        put("ell", p_ell);
        put("s", p_s);
        put("d", p_d);
        if (query.cls == BoundClass::KtMinor || query.cls == BoundClass::Treewidth)
            put("t", p_t);
        else
            put("t", p_thin);
        std::cout << bound_value(query).str() << "\n";
    });

    // signatures --------------------------------------------------------------
    auto * sig_cmd = app.add_subcommand("signatures", "interval sweep signatures");
    sig_cmd->add_option("--graph", graph_path, "PACE-style graph file")->required();
    sig_cmd->add_option("--intervals", balls_path, "interval certificate (1-d ball CSV)")->required();
    add_target_flags(sig_cmd, target_flags);
    sig_cmd->add_option("-r,--radius", radius, "radius")->required();
    sig_cmd->callback([&]() {
        Graph g = parse_graph_text(read_file(graph_path));
        auto intervals = intervals_from_balls(parse_balls_text(read_file(balls_path)));
        auto a = target_flags.resolve(g);
        auto result = interval_signatures(g, intervals, a, radius);
        std::cout << "cut points:";
        for (const auto & x : result.cut_points)
            std::cout << " " << x.str();
        std::cout << "\n";
        for (int v = 1; v <= g.vertex_count(); ++v)
            std::cout << v << ": " << result.signatures[static_cast<std::size_t>(v)].first << " "
                      << result.signatures[static_cast<std::size_t>(v)].second << "\n";
    });

    // levels --------------------------------------------------------------------
    auto * lv_cmd = app.add_subcommand("levels", "outerplanar level analysis");
    std::string circ_path;
    int a1 = 0;
    lv_cmd->add_option("--graph", graph_path, "PACE-style graph file")->required();
    lv_cmd->add_option("--circular", circ_path, "circular order file")->required();
    lv_cmd->add_option("--a1", a1, "start vertex (must be in the target set)")->required();
    add_target_flags(lv_cmd, target_flags);
    lv_cmd->add_option("-r,--radius", radius, "radius")->required();
    lv_cmd->callback([&]() {
        Graph g = parse_graph_text(read_file(graph_path));
        std::istringstream in(read_file(circ_path));
        std::vector<int> circ;
        int v;
        while (in >> v)
            circ.push_back(v);
        auto a = target_flags.resolve(g);
        auto report = outerplanar_levels(g, circ, a1, a, radius);
        for (std::size_t i = 1; i < report.levels.size(); ++i) {
            std::cout << "L" << i << ":";
            for (int u : report.levels[i])
                std::cout << " " << u;
            std::cout << " | targets:";
            for (int u : report.level_targets[i])
                std::cout << " " << u;
            std::cout << "\n";
        }
        std::cout << "sum |A_i| = " << report.sum_level_targets << " <= " << report.sum_bound
                  << (report.sum_ok ? " ok" : " VIOLATED") << "\n";
        if (report.monotone) {
            std::cout << "monotone ok\n";
        }
        else {
            auto [av, u, w] = *report.violation;
            std::cout << "monotonicity violated at a=" << av << " u=" << u << " v=" << w << "\n";
            throw DomainError("monotonicity violated");
        }
    });

    // check-td -------------------------------------------------------------------
    auto * ct_cmd = app.add_subcommand("check-td", "validate a tree decomposition");
    ct_cmd->add_option("--graph", graph_path, "PACE-style graph file")->required();
    ct_cmd->add_option("--td", td_path, "decomposition file")->required();
    ct_cmd->callback([&]() {
        Graph g = parse_graph_text(read_file(graph_path));
        auto rep = parse_td_text(read_file(td_path));
        auto report = validate_representation(g, rep);
        std::cout << (report.valid ? "valid" : "invalid") << ", width " << report.width << ", length "
                  << infinity_aware(report.length) << "\n";
        for (const auto & violation : report.violations)
            std::cout << "violation: " << violation << "\n";
        if (!report.valid)
            throw DomainError("invalid decomposition");
    });

    // experiment -------------------------------------------------------------------
    auto * ex_cmd = app.add_subcommand("experiment", "run a named acceptance suite");
    std::string suite;
    bool no_micros = false;
    ex_cmd->add_option("--suite", suite, "suite name, or 'all'")->required();
    ex_cmd->add_option("--seed", seed, "master seed");
    ex_cmd->add_option("--out", out_path, "CSV output path");
    ex_cmd->add_flag("--no-micros", no_micros,
                     "omit the micros column so reruns are byte-identical");
    ex_cmd->callback([&]() {
        bool all_ok = true;
        std::string csv;
        auto append = [&](const ExperimentReport & report) {
            auto text = to_csv(report, !no_micros);
            if (csv.empty())
                csv = text;
            else
                csv += text.substr(text.find('\n') + 1); // drop the duplicate header
        };
        if (suite == "all") {
            for (const auto & name : suite_names()) {
                auto report = run_suite(name, seed, budgets);
                append(report);
                all_ok = all_ok && report.all_pass();
                std::cout << name << ": " << (report.all_pass() ? "pass" : "FAIL") << " ("
                          << report.rows.size() << " rows)\n";
            }
        }
        else {
            auto report = run_suite(suite, seed, budgets);
            append(report);
            std::cout << suite << ": " << (report.all_pass() ? "pass" : "FAIL") << " ("
                      << report.rows.size() << " rows)\n";
            all_ok = report.all_pass();
        }
        if (!out_path.empty())
            write_file(out_path, csv);
        if (!all_ok)
            throw DomainError("suite reported failures");
    });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    catch (const InputError & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const ParseError & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const Error & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    (void)threads;
    return 0;
}
