#include "cvnet/optimize.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <random>
#include <thread>

namespace cvnet {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

bool states_identical(const std::vector<GaussianState>& states) {
    for (size_t i = 1; i < states.size(); ++i)
        if (states[i].cov != states[0].cov) return false;
    return true;
}

Ansatz resolve_ansatz(Ansatz requested, const std::vector<GaussianState>& states) {
    if (requested != Ansatz::Auto) return requested;
    return states_identical(states) ? Ansatz::SymmetricSources : Ansatz::Full;
}

int dimension_for(Ansatz a, int source_count) {
    switch (a) {
        case Ansatz::Full: return 8 * source_count;
        case Ansatz::SymmetricSources: return 8;
        case Ansatz::RealOnly: return 4 * source_count;
        case Ansatz::Auto: break;
    }
    throw StructuralError("unresolved ansatz");
}

BellAssignment decode(Ansatz a, int source_count, const std::vector<double>& x) {
    BellAssignment out(source_count);
    switch (a) {
        case Ansatz::Full:
            for (int i = 0; i < source_count; ++i) {
                const double* p = x.data() + 8 * i;
                out[i] = {{p[0], p[1]}, {p[2], p[3]}, {p[4], p[5]}, {p[6], p[7]}};
            }
            break;
        case Ansatz::SymmetricSources: {
            const SourceDisplacements d{{x[0], x[1]}, {x[2], x[3]}, {x[4], x[5]}, {x[6], x[7]}};
            std::fill(out.begin(), out.end(), d);
            break;
        }
        case Ansatz::RealOnly:
            for (int i = 0; i < source_count; ++i) {
                const double* p = x.data() + 4 * i;
                out[i] = {{p[0], 0.0}, {p[1], 0.0}, {p[2], 0.0}, {p[3], 0.0}};
            }
            break;
        case Ansatz::Auto:
            throw StructuralError("unresolved ansatz");
    }
    return out;
}

struct Objective {
    const BellEngine& engine;
    Ansatz ansatz;
    double box;
    long evals = 0;

    // Coordinates are clamped into the box rather than penalized; the
    // objective is smooth there and the simplex stays meaningful.
    double operator()(std::vector<double>& x) {
        for (double& v : x) v = std::clamp(v, -box, box);
        ++evals;
        return engine.evaluate(decode(ansatz, engine.source_count(), x)).b_value;
    }
};

struct NmResult {
    std::vector<double> x;
    double f = -1.0;
};

// Nelder-Mead with the dimension-adaptive coefficients of Gao and Han;
// maximization via negation is avoided by phrasing everything as "larger is
// better".
NmResult nelder_mead(Objective& obj, std::vector<double> start, double init_step,
                     int budget, double tol) {
    const int n = static_cast<int>(start.size());
    const double alpha = 1.0;
    const double beta = 1.0 + 2.0 / n;
    const double gamma = 0.75 - 1.0 / (2.0 * n);
    const double delta = 1.0 - 1.0 / n;

    std::vector<std::vector<double>> pts(n + 1, start);
    std::vector<double> fs(n + 1);
    for (int i = 1; i <= n; ++i) pts[i][i - 1] += init_step;
    for (int i = 0; i <= n; ++i) fs[i] = obj(pts[i]);

    std::vector<int> order(n + 1);
    while (obj.evals < budget) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return fs[a] > fs[b]; });
        const int best = order[0], worst = order[n], second_worst = order[n - 1];

        if (fs[best] - fs[worst] < tol) break;

        std::vector<double> centroid(n, 0.0);
        for (int i = 0; i <= n; ++i)
            if (i != worst)
                for (int d = 0; d < n; ++d) centroid[d] += pts[i][d];
        for (double& c : centroid) c /= n;

        auto along = [&](double t) {
            std::vector<double> p(n);
            for (int d = 0; d < n; ++d)
                p[d] = centroid[d] + t * (centroid[d] - pts[worst][d]);
            return p;
        };

        std::vector<double> xr = along(alpha);
        const double fr = obj(xr);
        if (fr > fs[best]) {
            std::vector<double> xe = along(alpha * beta);
            const double fe = obj(xe);
            if (fe > fr) { pts[worst] = std::move(xe); fs[worst] = fe; }
            else { pts[worst] = std::move(xr); fs[worst] = fr; }
            continue;
        }
        if (fr > fs[second_worst]) {
            pts[worst] = std::move(xr);
            fs[worst] = fr;
            continue;
        }
        const bool outside = fr > fs[worst];
        std::vector<double> xc = along(outside ? alpha * gamma : -gamma);
        const double fc = obj(xc);
        if (fc > (outside ? fr : fs[worst])) {
            pts[worst] = std::move(xc);
            fs[worst] = fc;
            continue;
        }
        for (int i = 0; i <= n; ++i) {
            if (i == best) continue;
            for (int d = 0; d < n; ++d)
                pts[i][d] = pts[best][d] + delta * (pts[i][d] - pts[best][d]);
            fs[i] = obj(pts[i]);
            if (obj.evals >= budget) break;
        }
    }

    int best = 0;
    for (int i = 1; i <= n; ++i)
        if (fs[i] > fs[best]) best = i;
    return {pts[best], fs[best]};
}

} // namespace

SupremumResult supremum_b(const NetworkTopology& topo, const IndependentSet& K,
                          const std::vector<GaussianState>& states, Smoothing s,
                          const OptimizerConfig& config) {
    if (config.restarts < 1) throw DomainError("supremum_b: restarts must be >= 1");
    if (config.eval_budget < 1) throw DomainError("supremum_b: eval_budget must be >= 1");
    if (!(config.box_radius > 0.0)) throw DomainError("supremum_b: box_radius must be > 0");
    if (!(config.tolerance > 0.0)) throw DomainError("supremum_b: tolerance must be > 0");

    const BellEngine engine(topo, K, states, s);
    const Ansatz ansatz = resolve_ansatz(config.ansatz, states);
    const int dim = dimension_for(ansatz, engine.source_count());

    // Start-box scales cycle through full, mid, and tight; the objective has
    // its interesting structure near the origin but occasionally peaks out
    // wide, and the mix covers both without wasting the whole budget far out.
    static constexpr double kScales[] = {1.0, 0.4, 0.12};

    SupremumResult res;
    res.per_restart_best.resize(config.restarts);
    std::vector<std::vector<double>> winners(config.restarts);
    std::vector<long> evals_per(config.restarts, 0);

    auto run_restart = [&](int rs) {
        std::mt19937_64 rng(mix_seed(config.seed, static_cast<std::uint64_t>(rs)));
        const double scale = kScales[rs % 3] * config.box_radius;
        std::uniform_real_distribution<double> uni(-scale, scale);
        std::vector<double> start(dim);
        for (double& v : start) v = uni(rng);

        Objective obj{engine, ansatz, config.box_radius, 0};
        NmResult nm = nelder_mead(obj, std::move(start), 0.1 * config.box_radius,
                                  config.eval_budget, config.tolerance);
        res.per_restart_best[rs] = nm.f;
        winners[rs] = std::move(nm.x);
        evals_per[rs] = obj.evals;
    };

    // Restarts are independent and write to disjoint slots, so the result is
    // identical for any worker count.
    int workers = config.threads > 0
                      ? config.threads
                      : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::clamp(workers, 1, config.restarts);
    if (workers == 1) {
        for (int rs = 0; rs < config.restarts; ++rs) run_restart(rs);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (int rs = next.fetch_add(1); rs < config.restarts;
                     rs = next.fetch_add(1))
                    run_restart(rs);
            });
        for (auto& t : pool) t.join();
    }
    const long evals_total =
        std::accumulate(evals_per.begin(), evals_per.end(), 0L);

    int best_rs = 0;
    for (int rs = 1; rs < config.restarts; ++rs)
        if (res.per_restart_best[rs] > res.per_restart_best[best_rs]) best_rs = rs;

    std::vector<double>& bx = winners[best_rs];
    for (double& v : bx) v = std::clamp(v, -config.box_radius, config.box_radius);
    res.argmax = decode(ansatz, engine.source_count(), bx);
    res.best = engine.evaluate(res.argmax);
    res.restarts_run = config.restarts;
    res.evals_used = evals_total;
    for (double v : bx)
        if (std::abs(v) >= config.box_radius - 1e-9) res.boundary_hit = true;
    return res;
}

std::vector<SweepRow> sweep(const SweepSpec& spec) {
    if (spec.s_values.empty() || spec.r1_grid.empty())
        throw DomainError("sweep: empty grid");
    const bool two_param = !spec.r2_grid.empty();
    if (two_param && spec.topo.sources.size() != 2)
        throw StructuralError("sweep: r2 grid requires a two-source topology");

    auto make = [&](double r) {
        return spec.kind == SourceKind::Epr
                   ? epr_state(r)
                   : sts_state(StsParams(spec.v1, spec.v2, r));
    };

    std::vector<SweepRow> rows;
    std::uint64_t cell = 0;
    for (double sv : spec.s_values) {
        for (double r1 : spec.r1_grid) {
            const std::vector<double> inner =
                two_param ? spec.r2_grid : std::vector<double>{r1};
            for (double r2 : inner) {
                OptimizerConfig cfg = spec.config;
                cfg.seed = mix_seed(spec.config.seed, cell++);
                std::vector<GaussianState> states;
                if (two_param) {
                    states = {make(r1), make(r2)};
                } else {
                    states.assign(spec.topo.sources.size(), make(r1));
                }
                SupremumResult sup =
                    supremum_b(spec.topo, spec.K, states, Smoothing(sv), cfg);

                SweepRow row;
                row.family = spec.family_label;
                row.params = spec.params_label;
                row.s = sv;
                row.r1 = r1;
                row.r2 = r2;
                row.b = sup.best.b_value;
                row.i_value = sup.best.i_value;
                row.j_value = sup.best.j_value;
                row.k = sup.best.k;
                row.restarts = sup.restarts_run;
                row.evals = sup.evals_used;
                row.boundary_hit = sup.boundary_hit;
                row.seed = cfg.seed;
                row.argmax = std::move(sup.argmax);
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

} // namespace cvnet
