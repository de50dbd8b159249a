#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cvnet/bell.hpp"

using namespace cvnet;

namespace {

std::vector<GaussianState> replicate(const GaussianState& st, size_t n) {
    return std::vector<GaussianState>(n, st);
}

BellAssignment random_assignment(size_t sources, std::mt19937_64& gen, double half) {
    std::uniform_real_distribution<double> coord(-half, half);
    BellAssignment a(sources);
    for (auto& d : a) {
        d.a0 = Complex(coord(gen), coord(gen));
        d.a1 = Complex(coord(gen), coord(gen));
        d.b0 = Complex(coord(gen), coord(gen));
        d.b1 = Complex(coord(gen), coord(gen));
    }
    return a;
}

} // namespace

TEST_CASE("two point correlator limits") {
    const GaussianState vac = epr_state(0.0);
    CHECK(two_point(vac, 0.0, 0.0, Smoothing(-1.0)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(two_point(vac, 0.0, 0.0, Smoothing(-0.5)) == doctest::Approx(1.0).epsilon(1e-12));
    for (double r : {0.0, 0.5, 1.3, 2.0}) {
        CHECK(two_point(epr_state(r), 0.0, 0.0, Smoothing(-1.0))
              == doctest::Approx(1.0).epsilon(1e-12));
    }
    // Far displacements: the parity factors saturate, tp -> 1 at s = -1 and
    // tp -> s^2 on the upper branch.
    CHECK(two_point(vac, Complex(40, 0), Complex(-35, 10), Smoothing(-1.0))
          == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(two_point(vac, Complex(40, 0), Complex(-35, 10), Smoothing(-0.5))
          == doctest::Approx(0.25).epsilon(1e-9));
}

TEST_CASE("two point branch agreement and bounds") {
    std::mt19937_64 gen(21);
    std::uniform_real_distribution<double> coord(-2.5, 2.5);
    const GaussianState st = sts_state(StsParams(1.3, 1.1, 0.9));
    // Both closed-form branches evaluate the same operator at s = -1.
    for (int i = 0; i < 40; ++i) {
        const Complex a(coord(gen), coord(gen)), b(coord(gen), coord(gen));
        const double lower = two_point(st, a, b, Smoothing(-1.0));
        const double upper_limit = two_point(st, a, b, Smoothing(-1.0 + 1e-9));
        CHECK(lower == doctest::Approx(upper_limit).epsilon(1e-6));
        CHECK(std::abs(lower) <= 1.0 + 1e-12);
        CHECK(std::abs(two_point(st, a, b, Smoothing(-0.4))) <= 1.0 + 1e-12);
        // Swapping arms with swapped displacements on a symmetric state.
        const GaussianState sym = epr_state(0.7);
        CHECK(two_point(sym, a, b, Smoothing(-1.0))
              == doctest::Approx(two_point(sym, b, a, Smoothing(-1.0))).epsilon(1e-12));
    }
}

TEST_CASE("source factors") {
    const SourceQ q(epr_state(0.0), Smoothing(-1.0));
    SourceDisplacements zero;  // all displacements at the origin
    CHECK(source_factor(q, zero, PartyClass::InK, PartyClass::NotInK, Which::I)
          == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(source_factor(q, zero, PartyClass::InK, PartyClass::NotInK, Which::J)
          == doctest::Approx(0.0));
    CHECK(source_factor(q, zero, PartyClass::NotInK, PartyClass::InK, Which::I)
          == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(source_factor(q, zero, PartyClass::NotInK, PartyClass::NotInK, Which::I)
          == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(
        source_factor(q, zero, PartyClass::InK, PartyClass::InK, Which::I),
        StructuralError);

    // Orientation: the independent endpoint's two inputs are the ones combined.
    std::mt19937_64 gen(22);
    std::uniform_real_distribution<double> coord(-1.5, 1.5);
    const SourceQ qs(sts_state(StsParams(1.2, 1.4, 0.8)), Smoothing(-0.5));
    for (int i = 0; i < 10; ++i) {
        SourceDisplacements d;
        d.a0 = Complex(coord(gen), coord(gen));
        d.a1 = Complex(coord(gen), coord(gen));
        d.b0 = Complex(coord(gen), coord(gen));
        d.b1 = Complex(coord(gen), coord(gen));
        CHECK(source_factor(qs, d, PartyClass::InK, PartyClass::NotInK, Which::I)
              == doctest::Approx(two_point(qs, d.a0, d.b0) + two_point(qs, d.a1, d.b0))
                     .epsilon(1e-12));
        CHECK(source_factor(qs, d, PartyClass::NotInK, PartyClass::InK, Which::J)
              == doctest::Approx(two_point(qs, d.a1, d.b0) - two_point(qs, d.a1, d.b1))
                     .epsilon(1e-12));
        CHECK(source_factor(qs, d, PartyClass::NotInK, PartyClass::NotInK, Which::J)
              == doctest::Approx(two_point(qs, d.a1, d.b1)).epsilon(1e-12));
    }
}

TEST_CASE("bell value at the origin") {
    const NetworkTopology c3 = chain(3);
    const IndependentSet K = canonical_independent_set(c3);
    const BellAssignment zero(2);
    const BellEvaluation ev =
        bell_value(c3, K, replicate(epr_state(0.0), 2), zero, Smoothing(-1.0));
    CHECK(ev.k == 2);
    CHECK(ev.i_value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ev.j_value == doctest::Approx(0.0));
    CHECK(ev.b_value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("local bound on single-edge-independent networks") {
    // Networks where each independent party touches exactly one source satisfy
    // B <= 1 for separable sources at every assignment.
    std::mt19937_64 gen(23);
    const std::vector<GaussianState> seps = {epr_state(0.0),
                                             sts_state(StsParams(1.2, 1.2, 0.05))};
    for (const NetworkTopology& topo : {chain(3), star(4), tree(2, 3)}) {
        const IndependentSet K = canonical_independent_set(topo);
        for (const GaussianState& st : seps) {
            for (double s : {-0.5, -1.0, -2.0}) {
                const BellEngine engine(topo, K, replicate(st, topo.sources.size()),
                                        Smoothing(s));
                for (int i = 0; i < 100; ++i) {
                    const BellAssignment a =
                        random_assignment(topo.sources.size(), gen, 3.0);
                    CHECK(engine.evaluate(a).b_value <= 1.0 + 1e-9);
                }
            }
        }
    }
}

TEST_CASE("product form inflation on multi-edge independent parties") {
    // When an independent party sits on two sources, the per-source product
    // counts its input sum once per source; at the origin with vacuum sources
    // this pins B at 2^((z - k)/k) with z = number of sources having exactly
    // one independent endpoint. Regression-pins the normative behavior.
    const NetworkTopology cy5 = cycle(5);
    const BellEvaluation e5 = bell_value(cy5, canonical_independent_set(cy5),
                                         replicate(epr_state(0.0), 5),
                                         BellAssignment(5), Smoothing(-1.0));
    CHECK(e5.i_value == doctest::Approx(4.0).epsilon(1e-12));  // z = 4, k = 2
    CHECK(e5.b_value == doctest::Approx(2.0).epsilon(1e-12));

    const NetworkTopology c4 = chain(4);
    const BellEvaluation e4 = bell_value(c4, canonical_independent_set(c4),
                                         replicate(epr_state(0.0), 3),
                                         BellAssignment(3), Smoothing(-1.0));
    CHECK(e4.b_value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));  // z = 3, k = 2
}

TEST_CASE("engine matches the family expressions") {
    std::mt19937_64 gen(24);
    struct Case {
        NetworkTopology topo;
        TheoremFamily fam;
    };
    const std::vector<Case> cases = {
        {chain(5), TheoremFamily::Chain},       {star(5), TheoremFamily::Star},
        {tree(2, 2), TheoremFamily::Tree},      {cycle(5), TheoremFamily::CycleOdd},
        {cycle(6), TheoremFamily::CycleEven},
    };
    for (const Case& c : cases) {
        const IndependentSet K = canonical_independent_set(c.topo);
        std::vector<GaussianState> states;
        for (size_t j = 0; j < c.topo.sources.size(); ++j)
            states.push_back(j % 2 == 0 ? epr_state(0.6)
                                        : sts_state(StsParams(1.25, 1.05, 0.9)));
        for (double s : {-0.6, -1.4}) {
            for (int trial = 0; trial < 10; ++trial) {
                const BellAssignment a =
                    random_assignment(c.topo.sources.size(), gen, 1.5);
                const BellEvaluation lhs =
                    bell_value(c.topo, K, states, a, Smoothing(s));
                const BellEvaluation rhs =
                    theorem_expression(c.fam, c.topo, K, states, a, Smoothing(s));
                CHECK(lhs.i_value == doctest::Approx(rhs.i_value).epsilon(1e-12));
                CHECK(lhs.j_value == doctest::Approx(rhs.j_value).epsilon(1e-12));
                CHECK(lhs.b_value == doctest::Approx(rhs.b_value).epsilon(1e-12));
                // B is recomputable from (I, J, k).
                const double recomputed =
                    std::pow(std::abs(lhs.i_value), 1.0 / lhs.k)
                    + std::pow(std::abs(lhs.j_value), 1.0 / lhs.k);
                CHECK(lhs.b_value == doctest::Approx(recomputed).epsilon(1e-13));
            }
        }
    }
}

TEST_CASE("family expression structural checks") {
    const NetworkTopology c3 = chain(3);
    const IndependentSet K = canonical_independent_set(c3);
    const std::vector<GaussianState> states = replicate(epr_state(0.3), 2);
    const BellAssignment a(2);
    CHECK_THROWS_AS(theorem_expression(TheoremFamily::Star, c3, K, states, a,
                                       Smoothing(-1.0)),
                    StructuralError);
    const NetworkTopology cy6 = cycle(6);
    CHECK_THROWS_AS(theorem_expression(TheoremFamily::CycleOdd, cy6,
                                       canonical_independent_set(cy6),
                                       replicate(epr_state(0.3), 6),
                                       BellAssignment(6), Smoothing(-1.0)),
                    StructuralError);
    CHECK_THROWS_AS(theorem_expression(TheoremFamily::Chain, c3, K, states,
                                       BellAssignment(3), Smoothing(-1.0)),
                    StructuralError);
    CHECK_THROWS_AS(bell_value(c3, K, states, BellAssignment(3), Smoothing(-1.0)),
                    StructuralError);
}
