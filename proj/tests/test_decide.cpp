#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "su2ab/decide.hpp"
#include "su2ab/gluing.hpp"
#include "su2ab/grid.hpp"
#include "su2ab/oracle.hpp"

#include <cstdlib>
#include <random>
#include <vector>

using namespace su2ab;

namespace {

const SeifertPiece trefoil{2, 1, 3, 1};
const SeifertPiece d22{2, 1, 2, 1};

// |det| of an integer square matrix by fraction-free elimination.
std::int64_t abs_det(std::vector<std::vector<std::int64_t>> m) {
    const std::size_t n = m.size();
    std::int64_t prev = 1, sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) { std::swap(m[piv], m[k]); sign = -sign; }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return std::llabs(sign * m[n - 1][n - 1]);
}

// |H_1(M)| from the abelianised relators over a1, b1, h1, a2, b2, h2 (0 when infinite).
std::int64_t h1_order_oracle(const GraphManifold& M) {
    const auto& [p1, q1, p2, q2] = M.m1;
    const auto& [p3, q3, p4, q4] = M.m2;
    const auto& f = M.phi;
    return abs_det({{p1, 0, q1, 0, 0, 0},
                    {0, p2, q2, 0, 0, 0},
                    {0, 0, 0, p3, 0, q3},
                    {0, 0, 0, 0, p4, q4},
                    {1, 1, 0, -f.alpha, -f.alpha, -f.gamma},
                    {0, 0, 1, -f.beta, -f.beta, -f.delta}});
}

std::vector<GluingMatrix> matrices_up_to(std::int64_t b) {
    std::vector<GluingMatrix> out;
    for (std::int64_t a = -b; a <= b; ++a)
        for (std::int64_t be = -b; be <= b; ++be)
            for (std::int64_t c = -b; c <= b; ++c)
                for (std::int64_t d = -b; d <= b; ++d)
                    if (a * d - be * c == -1) out.push_back({a, be, c, d});
    return out;
}

}  // namespace

TEST_CASE("condition A fixtures") {
    CHECK(condition_a({trefoil, d22, {0, 1, 1, 0}}));                  // g1 = 1
    CHECK_FALSE(condition_a({d22, d22, {0, 1, 1, 0}}));                // g = o = 2 on both sides
    CHECK(condition_a({SeifertPiece{2, 1, 4, 1}, d22, {0, 1, 1, 0}}));  // g1 = 2, o1 = 1
}

TEST_CASE("conditions B and C agree with their defining deltas") {
    int b_seen = 0, c_seen = 0;
    const std::size_t n = grid_size(5, 2);
    for (std::size_t i = 0; i < n; ++i) {
        GraphManifold M = normalize_order(grid_manifold(i, 5, 2));
        if (std::llabs(M.phi.beta) != 1) continue;
        KeyDeltas k = key_deltas(M);
        LongitudeData l1 = longitude(M.m1), l2 = longitude(M.m2);
        if (k.l2h1 == 1 && l2.o <= 2) {
            CHECK(condition_b(M));
            ++b_seen;
        }
        SeifertPiece s2 = sort_fibers(M.m2);
        if (k.l1h2 == 4 && s2.p1 == 2 && s2.p2 == 4 && l1.o == 1) {
            CHECK(condition_c(M));
            ++c_seen;
        }
    }
    CHECK(b_seen > 0);
    CHECK(c_seen > 0);
}

TEST_CASE("decide: fixtures") {
    // Meridian <-> fiber in the knot-meridian presentation; the same gluing read on
    // D(2/1,3/1) pieces is [[-1,1],[0,1]], while [[0,1],[1,0]] there is a different manifold.
    for (const GraphManifold& M : {motegi_manifold(2, 3, 2, 3), GraphManifold{trefoil, trefoil, {-1, 1, 0, 1}}}) {
        Verdict v = decide(M);
        CHECK(v.su2_abelian);
        CHECK(v.reason == Reason::all_conditions_hold);
        CHECK_FALSE(v.witness);
    }
    Verdict lit = decide({trefoil, trefoil, {0, 1, 1, 0}});
    CHECK_FALSE(lit.su2_abelian);
    CHECK(key_deltas({trefoil, trefoil, {0, 1, 1, 0}}).l2h1 == 5);

    for (const GluingMatrix& phi : matrices_up_to(5)) {
        Verdict w = decide({d22, d22, phi});
        CHECK_FALSE(w.su2_abelian);
        CHECK(w.witness.has_value());
    }

    const SeifertPiece m1{4, 1, 5, 4};
    for (GluingMatrix phi : {GluingMatrix{-1, 1, 1, 0}, GluingMatrix{-1, 1, -1, 2}}) {
        GraphManifold M{m1, d22, phi};
        CHECK(decide(M).su2_abelian);
        auto c = classify(M);
        REQUIRE(c);
        CHECK(c->id == 7);
    }
}

TEST_CASE("decide: beta reasons") {
    Verdict v0 = decide({trefoil, trefoil, {1, 0, 0, -1}});
    CHECK_FALSE(v0.su2_abelian);
    CHECK(v0.reason == Reason::beta_zero);
    Verdict v2 = decide({trefoil, trefoil, {1, 2, 1, 1}});
    CHECK_FALSE(v2.su2_abelian);
    CHECK(v2.reason == Reason::beta_not_one);
}

TEST_CASE("class-4 reference gluing [[0,1],[1,-2]] is not abelian, with a verified witness") {
    // Recorded deviation: this gluing has Delta(lambda1, h2) = 8 and an explicit irreducible
    // representation; the class-4 manifolds are checked by the acceptance run.
    GraphManifold M{SeifertPiece{2, 1, 4, 1}, SeifertPiece{3, 1, 3, 1}, {0, 1, 1, -2}};
    Verdict v = decide(M);
    CHECK_FALSE(v.su2_abelian);
    CHECK_FALSE(classify(M));
    RepWitness w = assemble_witness(M, v);
    WitnessScores s = verify_witness(build_presentation(M), w);
    CHECK(s.residual < 1e-9);
    CHECK(s.irreducibility > 1e-3);
}

TEST_CASE("classification: Motegi trefoils are class 7") {
    auto c = classify(motegi_manifold(2, 3, 2, 3));
    REQUIRE(c);
    CHECK(c->id == 7);
    auto c2 = classify({trefoil, trefoil, {-1, 1, 0, 1}});
    REQUIRE(c2);
    CHECK(c2->id == 7);
}

TEST_CASE("Motegi manifolds") {
    GraphManifold Y = motegi_manifold(2, 3, 2, 3);
    CHECK(check_motegi(Y));
    CHECK(decide(Y).su2_abelian);
    CHECK(h1_order_oracle(Y) == 35);  // pq rs - 1

    CHECK_FALSE(check_motegi({trefoil, trefoil, {1, 0, 0, -1}}));
    MotegiReport r = motegi_report({trefoil, trefoil, {1, 0, 0, -1}});
    CHECK(r.lambda1_meridian2 != 0);

    GraphManifold Y2 = motegi_manifold(2, 3, 2, 5);
    CHECK(check_motegi(Y2));
    CHECK(decide(Y2).su2_abelian);
    CHECK(h1_order_oracle(Y2) == 59);

    CHECK_THROWS_AS(check_motegi({d22, trefoil, {0, 1, 1, 0}}), InvalidPiece);
}

TEST_CASE("Motegi verdict matches decide for torus knot pieces") {
    std::vector<SeifertPiece> knots;
    for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 4}, {3, 5}}) knots.push_back(torus_knot_exterior(p, q));
    for (const auto& a : knots)
        for (const auto& b : knots)
            for (const GluingMatrix& phi : matrices_up_to(2)) {
                GraphManifold M{a, b, phi};
                CHECK(check_motegi(M) == decide(M).su2_abelian);
            }
}

TEST_CASE("congruences hold whenever beta = +-1") {
    const std::size_t n = grid_size(5, 2);
    for (std::size_t i = 0; i < n; i += 3) {
        GraphManifold M = grid_manifold(i, 5, 2);
        if (std::llabs(M.phi.beta) == 1) CHECK(check_congruences(M));
    }
}

TEST_CASE("classification totality and necessity of |beta| = 1") {
    const std::size_t n = grid_size(5, 2);
    int abelian = 0;
    for (std::size_t i = 0; i < n; ++i) {
        GraphManifold M = grid_manifold(i, 5, 2);
        Verdict v = decide(M);
        auto c = classify(M);
        CHECK(v.su2_abelian == c.has_value());
        if (!v.su2_abelian) continue;
        ++abelian;
        CHECK(std::llabs(M.phi.beta) == 1);
        CHECK((c->id >= 1 && c->id <= 7));
        CHECK(matching_rows(c->normalized).size() == 1);
        GraphManifold N = normalize_order(M);
        if (key_deltas(N).l1h2 == 0) CHECK(sort_fibers(N.m1).p1 == sort_fibers(N.m1).p2);
    }
    CHECK(abelian > 0);
}

TEST_CASE("verdict invariance under presentation shifts and swap") {
    std::mt19937_64 rng(7);
    const std::size_t n = grid_size(6, 3);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> shift(-3, 3), slot(1, 2), side(1, 2);
    for (int trial = 0; trial < 300; ++trial) {
        GraphManifold M = grid_manifold(pick(rng), 6, 3);
        const bool v = decide(M).su2_abelian;
        const int which = side(rng);
        const SeifertPiece& piece = which == 1 ? M.m1 : M.m2;
        GraphManifold T = transport_presentation(M, which, shift_presentation(piece, slot(rng), shift(rng)));
        CHECK(decide(T).su2_abelian == v);
        CHECK(decide(swap(M)).su2_abelian == v);
    }
}

TEST_CASE("verdict witnesses lie in the reported sets") {
    const std::size_t n = grid_size(4, 2);
    for (std::size_t i = 0; i < n; i += 5) {
        GraphManifold M = grid_manifold(i, 4, 2);
        Verdict v = decide(M);
        CHECK(v.su2_abelian != v.witness.has_value());
        CHECK(v.su2_abelian != v.nonempty.has_value());
    }
}
