#include <cstdio>
#include <filesystem>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cvnet/fock.hpp"
#include "cvnet/quadrature.hpp"
#include "cvnet/serialize.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace cvnet;

namespace {

// ---------------------------------------------------------------- plumbing

struct TopologyOpts {
    std::string family;
    int y = 0;
    int m = 0, f = 0;
    std::string topology_file;
};

struct ResolvedTopology {
    NetworkTopology topo;
    IndependentSet K;
    std::string family_label;
    std::string params_label;
};

ResolvedTopology resolve_topology(const TopologyOpts& o) {
    ResolvedTopology rt;
    if (!o.topology_file.empty()) {
        rt.topo = parse_topology_json(json::parse(read_text_file(o.topology_file)));
        rt.family_label = "custom";
        rt.params_label = "y=" + std::to_string(rt.topo.party_count);
    } else if (o.family == "chain" || o.family == "star" || o.family == "cycle") {
        if (o.y < 3) throw DomainError(o.family + ": --y must be >= 3");
        rt.topo = o.family == "chain" ? chain(o.y)
                  : o.family == "star" ? star(o.y)
                                       : cycle(o.y);
        rt.family_label = o.family;
        rt.params_label = "y=" + std::to_string(o.y);
    } else if (o.family == "tree") {
        rt.topo = tree(o.m, o.f);
        rt.family_label = "tree";
        rt.params_label = "m=" + std::to_string(o.m) + ";f=" + std::to_string(o.f);
    } else {
        throw StructuralError("unknown family \"" + o.family
                              + "\" (chain|star|tree|cycle, or --topology FILE)");
    }
    rt.K = canonical_independent_set(rt.topo);
    return rt;
}

void add_topology_options(CLI::App* cmd, TopologyOpts& o) {
    cmd->add_option("--family", o.family, "Network family: chain|star|tree|cycle");
    cmd->add_option("--y", o.y, "Party count for chain/star/cycle");
    cmd->add_option("--m", o.m, "Tree depth");
    cmd->add_option("--f", o.f, "Tree fanout");
    cmd->add_option("--topology", o.topology_file, "Custom topology JSON file");
}

struct ConfigOpts {
    OptimizerConfig cfg;
    std::string ansatz = "auto";
};

void add_config_options(CLI::App* cmd, ConfigOpts& o) {
    cmd->add_option("--restarts", o.cfg.restarts, "Multistart restarts");
    cmd->add_option("--budget", o.cfg.eval_budget, "Objective evaluations per restart");
    cmd->add_option("--tolerance", o.cfg.tolerance, "Simplex convergence tolerance");
    cmd->add_option("--box", o.cfg.box_radius, "Displacement search box radius");
    cmd->add_option("--seed", o.cfg.seed, "Base RNG seed");
    cmd->add_option("--threads", o.cfg.threads, "Worker pool size (0 = logical cores)");
    cmd->add_option("--ansatz", o.ansatz,
                    "Search space: auto|full|symmetric_sources|real_only");
}

Ansatz parse_ansatz(const std::string& a) {
    if (a == "auto") return Ansatz::Auto;
    if (a == "full") return Ansatz::Full;
    if (a == "symmetric_sources") return Ansatz::SymmetricSources;
    if (a == "real_only") return Ansatz::RealOnly;
    throw StructuralError("unknown ansatz \"" + a + "\"");
}

std::vector<GaussianState> states_from_descriptors(
    const std::vector<std::string>& descriptors, size_t source_count) {
    std::vector<SourceDescriptor> ds;
    for (const auto& text : descriptors) ds.push_back(parse_source_descriptor(text));
    if (ds.size() != 1 && ds.size() != source_count)
        throw StructuralError("expected 1 or " + std::to_string(source_count)
                              + " --source descriptors");
    std::vector<GaussianState> states;
    for (size_t i = 0; i < source_count; ++i) {
        const SourceDescriptor& d = ds[ds.size() == 1 ? 0 : i];
        if (!d.has_r) throw StructuralError("source descriptor needs r= here");
        states.push_back(make_state(d, d.r));
    }
    return states;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty() || out_path == "-")
        std::cout << content;
    else
        write_text_file(out_path, content);
}

// ------------------------------------------------------------ subcommands

int run_eval(const TopologyOpts& topo_opts, const std::vector<std::string>& sources,
             const std::string& assignment_file, double s) {
    const ResolvedTopology rt = resolve_topology(topo_opts);
    const auto states = states_from_descriptors(sources, rt.topo.sources.size());
    const BellAssignment assignment =
        parse_assignment_json(json::parse(read_text_file(assignment_file)));
    if (assignment.size() != rt.topo.sources.size())
        throw StructuralError("assignment has " + std::to_string(assignment.size())
                              + " sources, topology has "
                              + std::to_string(rt.topo.sources.size()));
    const BellEvaluation ev =
        bell_value(rt.topo, rt.K, states, assignment, Smoothing(s));
    std::cout << evaluation_json(ev).dump() << "\n";
    return 0;
}

int run_sup(const TopologyOpts& topo_opts, const std::vector<std::string>& sources,
            double s, const ConfigOpts& conf, const std::string& out,
            const std::string& argmax_path) {
    const ResolvedTopology rt = resolve_topology(topo_opts);
    const auto states = states_from_descriptors(sources, rt.topo.sources.size());
    OptimizerConfig cfg = conf.cfg;
    cfg.ansatz = parse_ansatz(conf.ansatz);
    const SupremumResult res = supremum_b(rt.topo, rt.K, states, Smoothing(s), cfg);

    std::vector<SourceDescriptor> ds;
    for (const auto& text : sources) ds.push_back(parse_source_descriptor(text));
    SweepRow row;
    row.family = rt.family_label;
    row.params = rt.params_label;
    row.s = s;
    row.r1 = ds.front().r;
    row.r2 = ds.back().r;
    row.b = res.best.b_value;
    row.i_value = res.best.i_value;
    row.j_value = res.best.j_value;
    row.k = res.best.k;
    row.restarts = res.restarts_run;
    row.evals = res.evals_used;
    row.boundary_hit = res.boundary_hit;
    row.seed = cfg.seed;
    emit(out, render_csv({row}));
    if (!argmax_path.empty())
        write_text_file(argmax_path, assignment_json(res.argmax).dump(2) + "\n");
    return 0;
}

int run_sweep(const TopologyOpts& topo_opts, const std::vector<std::string>& sources,
              const std::string& s_list, const std::string& r_grid,
              const std::string& r2_grid, const ConfigOpts& conf,
              const std::string& out, const std::string& argmax_dir) {
    const ResolvedTopology rt = resolve_topology(topo_opts);
    if (sources.size() != 1)
        throw StructuralError("sweep expects exactly one --source descriptor");
    const SourceDescriptor d = parse_source_descriptor(sources[0]);

    SweepSpec spec;
    spec.topo = rt.topo;
    spec.K = rt.K;
    spec.family_label = rt.family_label;
    spec.params_label = rt.params_label;
    spec.kind = d.kind;
    spec.v1 = d.v1;
    spec.v2 = d.v2;
    spec.s_values = parse_grid(s_list);
    spec.r1_grid = parse_grid(r_grid);
    if (!r2_grid.empty()) spec.r2_grid = parse_grid(r2_grid);
    spec.config = conf.cfg;
    spec.config.ansatz = parse_ansatz(conf.ansatz);

    const std::vector<SweepRow> rows = sweep(spec);
    emit(out, render_csv(rows));
    if (!argmax_dir.empty()) {
        fs::create_directories(argmax_dir);
        for (size_t i = 0; i < rows.size(); ++i) {
            char name[32];
            std::snprintf(name, sizeof name, "cell_%04zu.json", i);
            write_text_file((fs::path(argmax_dir) / name).string(),
                            assignment_json(rows[i].argmax).dump(2) + "\n");
        }
    }
    return 0;
}

// Grids behind the published sweep figures. Axis ranges follow the plots;
// restart/budget defaults are modest because each figure is hundreds of
// cells, and can be raised from the command line.
int run_reproduce(const std::string& figure, const std::string& outdir,
                  ConfigOpts conf, bool conf_given) {
    if (!conf_given) {
        conf.cfg.restarts = 12;
        conf.cfg.eval_budget = 4000;
    }
    fs::create_directories(outdir);

    const std::vector<double> branch_pos{-0.5, -0.8};       // -1 < s <= 0
    const std::vector<double> branch_neg{-1.0, -1.5, -2.0}; // s <= -1
    const std::string r_fine = "0.05:3:0.05";

    auto base_spec = [&](const ResolvedTopology& rt, SourceKind kind) {
        SweepSpec spec;
        spec.topo = rt.topo;
        spec.K = rt.K;
        spec.family_label = rt.family_label;
        spec.params_label = rt.params_label;
        spec.kind = kind;
        if (kind == SourceKind::Sts) spec.v1 = spec.v2 = 1.2;
        spec.config = conf.cfg;
        spec.config.ansatz = parse_ansatz(conf.ansatz);
        return spec;
    };

    json manifest{{"figure", figure},
                  {"seed", conf.cfg.seed},
                  {"restarts", conf.cfg.restarts},
                  {"budget", conf.cfg.eval_budget},
                  {"ansatz", conf.ansatz},
                  {"outputs", json::array()}};
    auto write_rows = [&](const std::string& name, const std::vector<SweepRow>& rows) {
        const std::string path = (fs::path(outdir) / name).string();
        write_text_file(path, render_csv(rows));
        manifest["outputs"].push_back(name);
    };

    auto surface = [&](SourceKind kind) {
        // B over the (r1, r2) plane of a two-source swap chain, one CSV per s.
        const ResolvedTopology rt =
            resolve_topology(TopologyOpts{"chain", 3, 0, 0, ""});
        for (double s : {-0.5, -1.0, -2.0}) {
            SweepSpec spec = base_spec(rt, kind);
            spec.s_values = {s};
            spec.r1_grid = parse_grid("0.2:3:0.2");
            spec.r2_grid = spec.r1_grid;
            char name[48];
            std::snprintf(name, sizeof name, "%s_s%g.csv", figure.c_str(), -s);
            write_rows(name, sweep(spec));
        }
    };
    auto curves = [&](const std::string& family, int y, int m, int f,
                      SourceKind kind) {
        const ResolvedTopology rt = resolve_topology(TopologyOpts{family, y, m, f, ""});
        SweepSpec spec = base_spec(rt, kind);
        spec.r1_grid = parse_grid(r_fine);
        spec.s_values = branch_pos;
        write_rows(figure + "_upper_branch.csv", sweep(spec));
        spec.s_values = branch_neg;
        write_rows(figure + "_lower_branch.csv", sweep(spec));
    };

    if (figure == "fig2") {
        surface(SourceKind::Epr);
    } else if (figure == "fig3") {
        const ResolvedTopology rt = resolve_topology(TopologyOpts{"chain", 3, 0, 0, ""});
        SweepSpec spec = base_spec(rt, SourceKind::Epr);
        spec.s_values = {-1.0};
        spec.r1_grid = parse_grid(r_fine);
        spec.r2_grid = {0.1, 0.5, 1.0, 3.0, 5.0};
        write_rows("fig3.csv", sweep(spec));
    } else if (figure == "fig4") {
        surface(SourceKind::Sts);
    } else if (figure == "fig5") {
        curves("star", 6, 0, 0, SourceKind::Epr);
    } else if (figure == "fig6") {
        curves("star", 6, 0, 0, SourceKind::Sts);
    } else if (figure == "fig8") {
        curves("tree", 0, 3, 2, SourceKind::Epr);
    } else if (figure == "fig9") {
        curves("tree", 0, 3, 2, SourceKind::Sts);
    } else if (figure == "fig11") {
        curves("cycle", 5, 0, 0, SourceKind::Epr);
    } else if (figure == "fig12") {
        curves("cycle", 5, 0, 0, SourceKind::Sts);
    } else {
        throw StructuralError(
            "unknown figure id \"" + figure
            + "\"; valid: fig2 fig3 fig4 fig5 fig6 fig8 fig9 fig11 fig12");
    }
    write_text_file((fs::path(outdir) / (figure + "_manifest.json")).string(),
                    manifest.dump(2) + "\n");
    return 0;
}

// -------------------------------------------------------- validation suite

struct Suite {
    std::string name;
    double max_dev = 0.0;
    double tol = 0.0;
    bool pass = true;
    std::string note;
};

void track(Suite& s, double dev) {
    s.max_dev = std::max(s.max_dev, dev);
    s.pass = s.max_dev <= s.tol;
}

int run_validate(int cutoff, std::uint64_t seed, int samples) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ur(0.0, 1.5);
    std::uniform_real_distribution<double> upt(-1.5, 1.5);
    std::uniform_real_distribution<double> ubig(-2.5, 2.5);
    const std::vector<double> s_list{-0.2, -0.5, -1.0, -1.5, -2.0};
    std::vector<Suite> suites;

    { // closed forms against the truncated-Fock reference
        Suite su{"oracle_equivalence", 0.0, 1e-8, true, ""};
        try {
            for (int rep = 0; rep < 3; ++rep) {
                const double r = 0.2 + 0.4 * rep;
                const TruncatedDensity rho_e = epr_density(r, cutoff);
                const StsParams sp(1.0 + 0.2 * rep, 1.3, 0.3 + 0.3 * rep);
                const TruncatedDensity rho_s =
                    sts_density(sp.v1, sp.v2, sp.r, cutoff);
                for (int i = 0; i < samples / 3 + 1; ++i) {
                    const Complex a(upt(rng), upt(rng)), b(upt(rng), upt(rng));
                    const Smoothing s(s_list[i % s_list.size()]);
                    track(su, std::abs(q_oracle(rho_e, a, b, s) - q_epr(r, a, b, s)));
                    track(su, std::abs(q_oracle(rho_s, a, b, s) - q_sts(sp, a, b, s)));
                    track(su, std::abs(two_point_trace(rho_e, a, b, s)
                                       - two_point(epr_state(r), a, b, s)));
                    track(su, std::abs(two_point_trace(rho_s, a, b, s)
                                       - two_point(sts_state(sp), a, b, s)));
                }
            }
        } catch (const ResourceError& e) {
            su.pass = false;
            su.note = e.what();
        }
        suites.push_back(su);
    }

    { // cutoff convergence: halving the cutoff must not move the oracle
        Suite su{"cutoff_convergence", 0.0, 1e-9, true, ""};
        try {
            const TruncatedDensity lo = epr_density(0.8, cutoff / 2);
            const TruncatedDensity hi = epr_density(0.8, cutoff);
            for (const Complex a : {Complex(0.4, -0.3), Complex(1.1, 0.6)}) {
                const Smoothing s(-1.0);
                track(su, std::abs(q_oracle(lo, a, a, s) - q_oracle(hi, a, a, s)));
                track(su, std::abs(two_point_trace(lo, a, a, s)
                                   - two_point_trace(hi, a, a, s)));
            }
        } catch (const ResourceError& e) {
            su.pass = false;
            su.note = e.what();
        }
        suites.push_back(su);
    }

    { // joint normalization and marginal consistency by quadrature
        Suite norm{"normalization", 0.0, 1e-6, true, ""};
        const Smoothing s(-1.0);
        const double mass = integrate_plane(
            [&](double x1, double y1) {
                return integrate_plane(
                    [&](double x2, double y2) {
                        return q_epr(0.5, {x1, y1}, {x2, y2}, s);
                    },
                    6.0, 48);
            },
            6.0, 48);
        track(norm, std::abs(mass - 1.0));
        suites.push_back(norm);

        Suite marg{"marginal_consistency", 0.0, 1e-6, true, ""};
        const Complex a(0.3, 0.2);
        const double integrated = integrate_plane(
            [&](double x, double y) { return q_epr(0.5, a, {x, y}, s); }, 6.0);
        track(marg, std::abs(integrated - q_epr_marginal(0.5, a, s)));
        const StsParams sp(1.2, 1.4, 0.7);
        const double integrated_sts = integrate_plane(
            [&](double x, double y) { return q_sts(sp, {x, y}, a, s); }, 8.0);
        track(marg, std::abs(integrated_sts - q_sts_marginal(sp, a, s, Arm::Second)));
        suites.push_back(marg);
    }

    // Local bound on separable sources. Restricted to networks where every
    // independent party touches exactly one source: only there does the
    // per-source product form obey B <= 1 for all assignments (each factor
    // pair is then a CHSH combination and the Mahler inequality applies).
    // On chains of 4+ parties and on cycles, the product form exceeds 1 by a
    // fixed power of 2 even for separable sources; that gap is a property of
    // the formula itself and is reported by the acceptance suite instead.
    {
        Suite su{"local_bound", 0.0, 1e-9, true, ""};
        for (const double sv : {-0.5, -1.0, -2.0}) {
            const Smoothing s(sv);
            for (const auto& rt : {resolve_topology({"chain", 3, 0, 0, ""}),
                                   resolve_topology({"star", 4, 0, 0, ""}),
                                   resolve_topology({"tree", 0, 2, 3, ""})}) {
                for (const bool thermal : {false, true}) {
                    std::vector<GaussianState> states(
                        rt.topo.sources.size(),
                        thermal ? sts_state(StsParams(1.2, 1.2, 0.05)) : epr_state(0.0));
                    const BellEngine engine(rt.topo, rt.K, states, s);
                    for (int i = 0; i < 200; ++i) {
                        BellAssignment asg(states.size());
                        for (auto& d : asg)
                            d = {{ubig(rng), ubig(rng)}, {ubig(rng), ubig(rng)},
                                 {ubig(rng), ubig(rng)}, {ubig(rng), ubig(rng)}};
                        track(su, std::max(0.0, engine.evaluate(asg).b_value - 1.0));
                    }
                }
            }
        }
        suites.push_back(su);
    }

    { // the two correlator branches at their meeting point
        Suite su{"branch_continuity", 0.0, 1e-12, true, ""};
        const SourceQ q(epr_state(0.9), Smoothing(-1.0));
        for (int i = 0; i < 50; ++i) {
            const Complex a(upt(rng), upt(rng)), b(upt(rng), upt(rng));
            const double qj = q.joint(a, b);
            const double qm = q.marginal_first(a) + q.marginal_second(b);
            const double upper = M_PI * M_PI * 16.0 / 4.0 * qj
                                 - M_PI * 4.0 / 2.0 * qm + 1.0;
            const double lower = M_PI * M_PI * 4.0 * qj - 2.0 * M_PI * qm + 1.0;
            track(su, std::abs(upper - lower));
        }
        suites.push_back(su);
    }

    { // engine versus the transcribed family expressions
        Suite su{"theorem_regression", 0.0, 1e-12, true, ""};
        struct Case { ResolvedTopology rt; TheoremFamily tf; };
        const std::vector<Case> cases{
            {resolve_topology({"chain", 5, 0, 0, ""}), TheoremFamily::Chain},
            {resolve_topology({"star", 5, 0, 0, ""}), TheoremFamily::Star},
            {resolve_topology({"tree", 0, 2, 2, ""}), TheoremFamily::Tree},
            {resolve_topology({"cycle", 5, 0, 0, ""}), TheoremFamily::CycleOdd},
            {resolve_topology({"cycle", 6, 0, 0, ""}), TheoremFamily::CycleEven}};
        for (const auto& c : cases) {
            for (const double sv : {-0.5, -1.0, -2.0}) {
                const Smoothing s(sv);
                std::vector<GaussianState> states(c.rt.topo.sources.size(),
                                                  epr_state(0.7));
                for (int i = 0; i < 10; ++i) {
                    BellAssignment asg(states.size());
                    for (auto& d : asg)
                        d = {{upt(rng), upt(rng)}, {upt(rng), upt(rng)},
                             {upt(rng), upt(rng)}, {upt(rng), upt(rng)}};
                    const BellEvaluation e1 =
                        bell_value(c.rt.topo, c.rt.K, states, asg, s);
                    const BellEvaluation e2 = theorem_expression(
                        c.tf, c.rt.topo, c.rt.K, states, asg, s);
                    const double scale =
                        std::max({1.0, std::abs(e1.i_value), std::abs(e1.j_value)});
                    track(su, std::abs(e1.i_value - e2.i_value) / scale);
                    track(su, std::abs(e1.j_value - e2.j_value) / scale);
                }
            }
        }
        suites.push_back(su);
    }

    bool all_pass = true;
    for (const auto& su : suites) {
        all_pass = all_pass && su.pass;
        std::printf("%-22s %s  max deviation %.3e (tol %.0e)%s%s\n", su.name.c_str(),
                    su.pass ? "PASS" : "FAIL", su.max_dev, su.tol,
                    su.note.empty() ? "" : "  ", su.note.c_str());
    }
    std::printf("validate: %s\n", all_pass ? "all suites passed" : "FAILURES present");
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bell-functional computation and maximization for "
                 "continuous-variable quantum networks"};
    app.require_subcommand(1);

    TopologyOpts topo_opts;
    std::vector<std::string> sources;
    ConfigOpts conf;
    std::string assignment_file, out, argmax_path, s_list = "-1", r_grid, r2_grid;
    double s_single = -1.0;
    std::string figure, outdir = ".";
    int cutoff = 60, samples = 100;

    CLI::App* c_eval = app.add_subcommand("eval", "Evaluate B at an explicit assignment");
    add_topology_options(c_eval, topo_opts);
    c_eval->add_option("--source", sources, "Source state descriptor, e.g. epr:r=0.75")
        ->required();
    c_eval->add_option("--assignment", assignment_file, "Assignment JSON file")->required();
    c_eval->add_option("--s", s_single, "Quasiprobability order (s <= 0)");

    CLI::App* c_sup = app.add_subcommand("sup", "Maximize B over displacements");
    add_topology_options(c_sup, topo_opts);
    c_sup->add_option("--source", sources, "Source state descriptor")->required();
    c_sup->add_option("--s", s_single, "Quasiprobability order (s <= 0)");
    add_config_options(c_sup, conf);
    c_sup->add_option("--out", out, "CSV output path (default stdout)");
    c_sup->add_option("--save-argmax", argmax_path, "Write the argmax assignment JSON here");

    CLI::App* c_sweep = app.add_subcommand("sweep", "Supremum over an (s, r) grid");
    add_topology_options(c_sweep, topo_opts);
    c_sweep->add_option("--source", sources, "Source descriptor, r taken from the grid")
        ->required();
    c_sweep->add_option("--s", s_list, "s values: one number or comma list");
    c_sweep->add_option("--r", r_grid, "r grid: start:end:step or comma list")->required();
    c_sweep->add_option("--r2", r2_grid, "Second-source r grid (two-source topologies)");
    add_config_options(c_sweep, conf);
    c_sweep->add_option("--out", out, "CSV output path (default stdout)");
    c_sweep->add_option("--save-argmax", argmax_path, "Directory for per-cell argmax JSON");

    CLI::App* c_rep = app.add_subcommand("reproduce", "Emit the data behind a sweep figure");
    c_rep->add_option("--figure", figure, "fig2|fig3|fig4|fig5|fig6|fig8|fig9|fig11|fig12")
        ->required();
    c_rep->add_option("--outdir", outdir, "Output directory");
    add_config_options(c_rep, conf);

    CLI::App* c_val = app.add_subcommand("validate", "Run the cross-validation suites");
    std::uint64_t val_seed = 20240817;
    c_val->add_option("--cutoff", cutoff, "Fock cutoff for the reference computations");
    c_val->add_option("--seed", val_seed, "RNG seed for the sampled checks");
    c_val->add_option("--samples", samples, "Sample count per suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (c_eval->parsed())
            return run_eval(topo_opts, sources, assignment_file, s_single);
        if (c_sup->parsed())
            return run_sup(topo_opts, sources, s_single, conf, out, argmax_path);
        if (c_sweep->parsed())
            return run_sweep(topo_opts, sources, s_list, r_grid, r2_grid, conf, out,
                             argmax_path);
        if (c_rep->parsed()) {
            const bool conf_given = c_rep->count("--restarts") || c_rep->count("--budget");
            return run_reproduce(figure, outdir, conf, conf_given);
        }
        if (c_val->parsed()) return run_validate(cutoff, val_seed, samples);
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const StructuralError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const UnsupportedError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const ResourceError& e) {
        std::cerr << "resource/io error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}
