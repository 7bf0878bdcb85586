#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "su2ab/decide.hpp"
#include "su2ab/grid.hpp"
#include "su2ab/oracle.hpp"

#include <cmath>
#include <random>

using namespace su2ab;

namespace {

const SeifertPiece trefoil{2, 1, 3, 1};
const SeifertPiece d22{2, 1, 2, 1};

Quat eval(const std::vector<Quat>& images, const std::vector<int>& word) {
    Quat q;
    for (int g : word) q = q * (g > 0 ? images[g - 1] : images[-g - 1].conj());
    return q;
}

long double max_relator_error(const Presentation& p, const RepWitness& w) {
    long double e = 0;
    for (const auto& r : p.relators) e = std::max(e, distance(eval(w.images, r), Quat{}));
    return e;
}

std::optional<std::pair<GraphManifold, Verdict>> find_verdict(std::int64_t p_max, std::int64_t bound,
                                                               const std::function<bool(const GraphManifold&, const Verdict&)>& want) {
    const std::size_t n = grid_size(p_max, bound);
    for (std::size_t i = 0; i < n; ++i) {
        GraphManifold M = grid_manifold(i, p_max, bound);
        Verdict v = decide(M);
        if (want(M, v)) return std::make_pair(M, v);
    }
    return std::nullopt;
}

void check_assembled(const GraphManifold& M, const Verdict& v) {
    Presentation p = build_presentation(M);
    RepWitness w = assemble_witness(M, v);
    WitnessScores s = verify_witness(p, w);
    CHECK(s.residual < 1e-9);
    CHECK(s.irreducibility > 1e-3);
    CHECK(max_relator_error(p, w) < 1e-9);  // relators evaluated here, independently of the library
    CHECK(fiber_central(w));
    for (const Quat& q : w.images) CHECK(std::fabs(static_cast<double>(q.norm()) - 1) < 1e-12);
}

}  // namespace

TEST_CASE("presentation shape") {
    Presentation p = build_presentation({trefoil, trefoil, {0, 1, 1, 0}});
    CHECK(p.generators.size() == 6);
    CHECK(p.relators.size() == 10);
    CHECK(p.relators[0] == std::vector<int>{1, 1, 3});
    CHECK(p.relators[9] == std::vector<int>{3, -5, -4});

    // beta = 0: the second gluing relator has no mu2 letters
    Presentation q = build_presentation({trefoil, trefoil, {1, 0, 2, -1}});
    CHECK(q.relators[9] == std::vector<int>{3, 6});
    CHECK(q.relators[8] == std::vector<int>{1, 2, -6, -6, -5, -4});

    CHECK_THROWS_AS(validate(Presentation{{"x"}, {{2}}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(Presentation{{"x"}, {{}}}), std::invalid_argument);
}

TEST_CASE("abelianization torsion matches the homology order") {
    AbelianGroup g = cokernel(abelianization(build_presentation(motegi_manifold(2, 3, 2, 3))));
    CHECK(g.free_rank == 0);
    Integer order = 1;
    for (const auto& t : g.torsion) order *= t;
    CHECK(order == 35);

    AbelianGroup d = cokernel(abelianization(build_presentation({d22, d22, {0, 1, 1, 0}})));
    // After eliminating h1, h2 the relation block [[2,0,1,1],[0,2,1,1],[1,1,2,0],[1,1,0,2]] kills
    // (1,1,-1,-1), so b1 = 1.
    CHECK(d.free_rank == 1);
    CHECK(d.str() == "Z + Z/4");
}

TEST_CASE("witness from traces") {
    auto [A, B] = witness_from_traces(1, 1, 0);
    CHECK(std::fabs(static_cast<double>(A.trace()) - 1) < 1e-12);
    CHECK(std::fabs(static_cast<double>(B.trace()) - 1) < 1e-12);
    CHECK(std::fabs(static_cast<double>((A * B).trace())) < 1e-12);
    CHECK(distance(commutator(A, B), Quat{}) > 0.1);

    for (long double a : {-1.5L, -0.3L, 0.0L, 0.9L, 1.7L})
        for (long double b : {-1.2L, 0.4L, 1.9L}) {
            const long double r = std::sqrt((4 - a * a) * (4 - b * b)) / 2;
            for (long double s : {-0.99L, -0.5L, 0.0L, 0.5L, 0.99L}) {
                const long double c = a * b / 2 + s * r;
                auto [X, Y] = witness_from_traces(a, b, c);
                CHECK(std::fabs(static_cast<double>(X.trace() - a)) < 1e-12);
                CHECK(std::fabs(static_cast<double>(Y.trace() - b)) < 1e-12);
                CHECK(std::fabs(static_cast<double>((X * Y).trace() - c)) < 1e-12);
            }
        }

    // Midpoint gives the largest commutator; approaching an endpoint it degenerates.
    auto [M1, M2] = witness_from_traces(1, 1, 0.5L);
    auto [E1, E2] = witness_from_traces(1, 1, 2 - 1e-9L);
    auto [F1, F2] = witness_from_traces(1, 1, -1 + 1e-9L);
    const long double mid = distance(commutator(M1, M2), Quat{});
    CHECK(distance(commutator(E1, E2), Quat{}) < 1e-3);
    CHECK(distance(commutator(F1, F2), Quat{}) < 1e-3);
    CHECK(mid > distance(commutator(A, B), Quat{}));

    CHECK_THROWS_AS(witness_from_traces(1, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(witness_from_traces(1, 1, -1), std::invalid_argument);
    CHECK_THROWS_AS(witness_from_traces(2, 1, 0), std::invalid_argument);
}

TEST_CASE("verify_witness scores") {
    Presentation p = build_presentation({trefoil, trefoil, {0, 1, 1, 0}});
    RepWitness id{std::vector<Quat>(6, Quat{}), 0, 0};
    WitnessScores s = verify_witness(p, id);
    CHECK(s.residual == 0);
    CHECK(s.irreducibility == 0);

    GraphManifold M{d22, d22, {0, 1, 1, 0}};
    Presentation pm = build_presentation(M);
    RepWitness w = assemble_witness(M, decide(M));
    std::mt19937_64 rng(3);
    std::normal_distribution<double> noise(0, 1e-3);
    for (Quat& q : w.images) q = Quat{q.w + noise(rng), q.x + noise(rng), q.y + noise(rng), q.z + noise(rng)}.normalized();
    CHECK(verify_witness(pm, w).residual > 1e-6);
    CHECK_THROWS_AS(verify_witness(pm, RepWitness{{Quat{}}, 0, 0}), std::invalid_argument);
}

TEST_CASE("assembled witnesses: fixtures") {
    GraphManifold D{d22, d22, {0, 1, 1, 0}};
    Verdict vd = decide(D);
    REQUIRE(vd.nonempty);
    CHECK(vd.nonempty->first == SetTag::P1);
    CHECK(vd.nonempty->second == SetTag::P2);
    check_assembled(D, vd);
    RepWitness wd = assemble_witness(D, vd);
    CHECK(std::fabs(static_cast<double>(wd.images[2].w) + 1) < 1e-12);  // rho(h1) = -1
    CHECK(std::fabs(static_cast<double>(wd.images[5].w) + 1) < 1e-12);  // rho(h2) = -1

    auto ha = find_verdict(4, 2, [](const GraphManifold&, const Verdict& v) {
        return v.nonempty && v.nonempty->first == SetTag::H1 && v.nonempty->second == SetTag::A2;
    });
    REQUIRE(ha);
    check_assembled(ha->first, ha->second);

    auto b3 = find_verdict(4, 3, [](const GraphManifold& M, const Verdict& v) {
        return std::llabs(M.phi.beta) == 3 && v.nonempty && v.nonempty->first == SetTag::H1 &&
               v.nonempty->second == SetTag::H2;
    });
    REQUIRE(b3);
    check_assembled(b3->first, b3->second);

    CHECK_THROWS_AS(assemble_witness(motegi_manifold(2, 3, 2, 3), decide(motegi_manifold(2, 3, 2, 3))),
                    std::invalid_argument);
}

TEST_CASE("assembled witnesses on a grid slice") {
    const std::size_t n = grid_size(4, 2);
    int built = 0;
    for (std::size_t i = 0; i < n; i += 11) {
        GraphManifold M = grid_manifold(i, 4, 2);
        Verdict v = decide(M);
        if (v.su2_abelian) continue;
        RepWitness w = assemble_witness(M, v);
        CHECK(w.residual < 1e-9);
        CHECK(fiber_central(w));
        ++built;
    }
    CHECK(built > 100);
}

TEST_CASE("numeric search") {
    SolveOptions opt;
    opt.restarts = 50;
    opt.tol = 1e-10;
    Presentation pd = build_presentation({d22, d22, {0, 1, 1, 0}});
    auto w = solve_numeric(pd, opt);
    REQUIRE(w);
    WitnessScores s = verify_witness(pd, *w);
    CHECK(s.residual < 1e-10);
    CHECK(s.irreducibility > 1e-2);
    CHECK(fiber_central(*w));
    auto again = solve_numeric(pd, opt);
    REQUIRE(again);
    CHECK(again->residual == w->residual);  // deterministic in the seed

    opt.restarts = 200;
    CHECK_FALSE(solve_numeric(build_presentation(motegi_manifold(2, 3, 2, 3)), opt));

    // Trefoil exterior with a generator killed: the quotient is cyclic, so every representation is abelian.
    Presentation k{{"a", "b", "h"}, {{1, 1, 3}, {2, 2, 2, 3}, {1, 3, -1, -3}, {2, 3, -2, -3}, {1}}};
    opt.restarts = 50;
    CHECK_FALSE(solve_numeric(k, opt));
}
