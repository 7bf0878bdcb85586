#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "su2ab/decide.hpp"
#include "su2ab/gluing.hpp"
#include "su2ab/grid.hpp"

#include <random>

using namespace su2ab;

namespace {

const SeifertPiece trefoil{2, 1, 3, 1};

std::int64_t det2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) { return a * d - b * c; }

// Key intersection numbers straight from the matrix action on (mu, h) coordinates.
KeyDeltas deltas_oracle(const GraphManifold& M) {
    const auto& f = M.phi;
    LongitudeData l1 = longitude(M.m1), l2 = longitude(M.m2);
    const std::int64_t x1 = l1.mu_coef, y1 = l1.h_coef, x2 = l2.mu_coef, y2 = l2.h_coef;
    const std::int64_t fx = f.alpha * x1 + f.beta * y1, fy = f.gamma * x1 + f.delta * y1;  // phi(lambda1)
    KeyDeltas k;
    k.h1h2 = std::llabs(f.beta);
    k.l1h2 = std::llabs(fx);
    k.l2h1 = std::llabs(det2(x2, f.beta, y2, f.delta));
    k.l1l2 = std::llabs(det2(fx, x2, fy, y2));
    k.l2mu1 = std::llabs(det2(x2, f.alpha, y2, f.gamma));
    k.l1mu2 = std::llabs(x1 * f.gamma + y1 * f.delta);  // phi^-1(mu2) = (-delta, gamma) when det = -1
    return k;
}

}  // namespace

TEST_CASE("intersection numbers of slopes") {
    CHECK(std::llabs(delta({1, 0}, {0, 1})) == 1);
    CHECK(delta({3, 2}, {3, 2}) == 0);
    CHECK(std::llabs(delta({6, 5}, {0, 1})) == 6);
}

TEST_CASE("gluing validation") {
    CHECK_NOTHROW(validate(GraphManifold{trefoil, trefoil, {0, 1, 1, 0}}));
    CHECK_THROWS_AS(validate(GraphManifold{trefoil, trefoil, {1, 0, 0, 1}}), InvalidGluing);
    CHECK_THROWS_AS(validate(GraphManifold{trefoil, trefoil, {2, 1, 1, 1}}), InvalidGluing);
}

TEST_CASE("key deltas: fixtures") {
    KeyDeltas k = key_deltas({trefoil, trefoil, {0, 1, 1, 0}});
    CHECK(k.h1h2 == 1);
    CHECK(k.l1h2 == 5);
    CHECK(k.l2h1 == 5);
    const SeifertPiece m1{4, 1, 5, 4}, m2{2, 1, 2, 1};
    CHECK(key_deltas({m1, m2, {-1, 1, 1, 0}}).l1l2 == 19);
    CHECK(key_deltas({m1, m2, {-1, 1, -1, 2}}).l1l2 == 21);
}

TEST_CASE("key deltas agree with the matrix oracle") {
    const std::size_t n = grid_size(4, 2);
    for (std::size_t i = 0; i < n; i += 7) {
        GraphManifold M = grid_manifold(i, 4, 2);
        INFO(M.str());
        CHECK(key_deltas(M) == deltas_oracle(M));
    }
}

TEST_CASE("swap inverts the matrix") {
    GraphManifold M{trefoil, trefoil, {0, 1, 1, 0}};
    CHECK(swap(M).phi == M.phi);
    GraphManifold N{{2, 1, 4, 1}, {3, 1, 3, 2}, {-2, 1, 5, -2}};
    CHECK(swap(swap(N)) == N);
    KeyDeltas a = key_deltas(N), b = key_deltas(swap(N));
    CHECK(a.h1h2 == b.h1h2);
    CHECK(a.l1h2 == b.l2h1);
    CHECK(a.l2h1 == b.l1h2);
    CHECK(a.l1l2 == b.l1l2);
}

TEST_CASE("presentation transport preserves the gluing") {
    std::mt19937 rng(17);
    const std::size_t n = grid_size(5, 3);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> kk(-3, 3), side(1, 2), slot(1, 2);
    GraphManifold M{trefoil, trefoil, {0, 1, 1, 0}};
    CHECK(transport_presentation(M, 1, Represented{M.m1, Mat2{}}) == M);
    for (int t = 0; t < 500; ++t) {
        GraphManifold G = grid_manifold(pick(rng));
        const int s = side(rng);
        Represented r = shift_presentation(s == 1 ? G.m1 : G.m2, slot(rng), kk(rng));
        GraphManifold T = transport_presentation(G, s, r);
        CHECK(T.phi.det() == -1);
        // the mu-dependent numbers change with the section; the others are intrinsic
        KeyDeltas a = key_deltas(T), b = key_deltas(G);
        CHECK(a.h1h2 == b.h1h2);
        CHECK(a.l1h2 == b.l1h2);
        CHECK(a.l2h1 == b.l2h1);
        CHECK(a.l1l2 == b.l1l2);
        CHECK(a == deltas_oracle(T));
    }
}

TEST_CASE("building gluings with prescribed intersections") {
    CHECK_THROWS_AS(build_gluing(trefoil, trefoil, 0, 0), NoSuchGluing);
    GluingMatrix f = build_gluing(trefoil, trefoil, 1, 1);
    KeyDeltas k = key_deltas({trefoil, trefoil, f});
    CHECK(f.det() == -1);
    CHECK(k.h1h2 == 1);
    CHECK(k.l1h2 == 1);
    CHECK(k.l2h1 == 1);
    // only n = +-1 mod 6 is reachable for the trefoil
    CHECK_THROWS_AS(build_gluing(trefoil, trefoil, 2, 1), NoSuchGluing);

    // a class-1 instance: p1 = 2, q1 = 1, 2 q2 + p2 = 5 = o1 g1 mod 6, q3 + q4 = p3
    const SeifertPiece a{2, 1, 3, 1}, b{3, 1, 3, 2};
    GluingMatrix g = build_gluing(a, b, 1, 0);
    GraphManifold M{a, b, g};
    CHECK(decide(M).su2_abelian);
    auto c = classify(M);
    REQUIRE(c.has_value());
    CHECK(c->id == 1);
}

TEST_CASE("built gluings realise their targets") {
    const auto pieces = grid_pieces(5);
    int built = 0;
    for (const auto& a : pieces)
        for (const auto& b : pieces)
            for (std::int64_t n = -4; n <= 4; ++n)
                for (std::int64_t m = -4; m <= 4; m += 2) {
                    GluingMatrix f;
                    try {
                        f = build_gluing(a, b, n, m);
                    } catch (const NoSuchGluing&) {
                        continue;
                    }
                    ++built;
                    GraphManifold M{a, b, f};
                    KeyDeltas k = deltas_oracle(M);
                    CHECK(f.det() == -1);
                    CHECK(k.h1h2 == 1);
                    CHECK(k.l1h2 == std::llabs(n));
                    CHECK(k.l2h1 == std::llabs(m));
                    CHECK(check_congruences(M));
                }
    CHECK(built > 100);
}
