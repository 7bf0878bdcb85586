#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "su2ab/exact.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <set>

using namespace su2ab;

namespace {

double two_cos(double turn) { return 2.0 * std::cos(2.0 * M_PI * turn); }

CosValue cv(long n, long d) { return CosValue::from_rational(make_rational(n, d)); }

// Order of Z^n / (row lattice) for a square nonsingular matrix, by |det| (Bareiss).
long abs_det(std::vector<std::vector<long>> a) {
    const std::size_t n = a.size();
    long prev = 1, sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return std::labs(sign * a[n - 1][n - 1]);
}

}  // namespace

TEST_CASE("cos values: representatives and order") {
    CHECK(cv(0, 1).turn() == 0);
    CHECK(cv(1, 2).turn() == make_rational(1, 2));
    CHECK(cv(2, 3) == cv(1, 3));
    CHECK(cv(2, 3).value() == doctest::Approx(-1.0));
    CHECK(cv(-1, 5) == cv(1, 5));
    CHECK(cv(7, 5) == cv(2, 5));
    CHECK(cv(1, 3) < cv(1, 4));
    CHECK((cv(1, 6) <=> cv(1, 6)) == std::strong_ordering::equal);
    CHECK(cv(1, 2) < cv(0, 1));
}

TEST_CASE("cos values: order agrees with floating point") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> num(-200, 200), den(1, 60);
    for (int i = 0; i < 2000; ++i) {
        long n1 = num(rng), d1 = den(rng), n2 = num(rng), d2 = den(rng);
        double x = two_cos(double(n1) / d1), y = two_cos(double(n2) / d2);
        CosValue a = cv(n1, d1), b = cv(n2, d2);
        CHECK(a.value() == doctest::Approx(x).epsilon(1e-12));
        if (std::fabs(x - y) > 1e-9) CHECK((a < b) == (x < y));
        else CHECK(a == b);
    }
}

TEST_CASE("cos values: pretty forms") {
    CHECK(cv(0, 1).pretty() == "2");
    CHECK(cv(1, 4).pretty() == "0");
    CHECK(cv(1, 3).pretty() == "-1");
    CHECK(cv(1, 8).pretty() == "√2");
    CHECK(cv(3, 8).pretty() == "-√2");
}

TEST_CASE("interval unions") {
    CosInterval left{cv(1, 2), cv(1, 4)}, right{cv(1, 4), cv(0, 1)};
    CosIntervalSet split = interval_set_union({left, right});
    CHECK(split.size() == 2);
    CHECK_FALSE(split.contains(cv(1, 4)));
    CHECK(split.pretty() == "(-2,0) ∪ (0,2)");

    CosIntervalSet merged = interval_set_union({CosInterval{cv(1, 3), cv(1, 6)}, CosInterval{cv(1, 4), cv(0, 1)}});
    REQUIRE(merged.size() == 1);
    CHECK(merged.intervals()[0] == CosInterval{cv(1, 3), cv(0, 1)});
    CHECK(merged.pretty() == "(-1,2)");

    CHECK(interval_set_union(std::vector<CosInterval>{}).empty());
    CHECK(interval_set_union(std::vector<CosInterval>{}).pretty() == "∅");
}

TEST_CASE("interval unions agree with pointwise membership") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> t(0, 24);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<CosInterval> parts;
        for (int k = 0; k < 3; ++k) {
            CosValue a = cv(t(rng), 48), b = cv(t(rng), 48);
            if (a == b) continue;
            parts.push_back(a < b ? CosInterval{a, b} : CosInterval{b, a});
        }
        CosIntervalSet u = interval_set_union(parts);
        for (long k = 0; k <= 96; ++k) {
            CosValue x = cv(k, 192);
            bool any = false;
            for (const auto& p : parts) any = any || p.contains(x);
            CHECK(u.contains(x) == any);
        }
        for (std::size_t i = 1; i < u.size(); ++i) CHECK(u.intervals()[i - 1].hi <= u.intervals()[i].lo);
    }
}

TEST_CASE("smith normal form: small cases") {
    CHECK(snf(IntMatrix{{2, 0}, {0, 3}}) == std::vector<Integer>{1, 6});
    CHECK(snf(IntMatrix::identity(3)) == std::vector<Integer>{1, 1, 1});
    std::vector<Integer> f = snf(IntMatrix{{2, 0, 0, 1}, {0, 2, 0, 1}, {1, 1, 1, 0}});
    for (const auto& d : f) CHECK((d == 1 || d == 2));
    AbelianGroup g = cokernel(IntMatrix{{2, 0}, {0, 3}});
    CHECK(g.free_rank == 0);
    CHECK(g.torsion == std::vector<Integer>{6});
    CHECK(cokernel(IntMatrix{{2, 4}}).free_rank == 1);
    CHECK(cokernel(IntMatrix{{2, 4}}).torsion == std::vector<Integer>{2});
}

TEST_CASE("smith normal form: decomposition and determinant oracle") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> e(-6, 6);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + trial % 3;
        std::vector<std::vector<long>> a(n, std::vector<long>(n));
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = a[i][j] = e(rng);
        SnfDecomposition s = snf_decompose(m);
        CHECK(s.U * m * s.V == s.D);
        std::vector<Integer> f = snf(m);
        Integer prod = 1;
        for (std::size_t i = 0; i < n; ++i) {
            prod *= f[i];
            if (i + 1 < n && f[i] != 0) CHECK(f[i + 1] % f[i] == 0);
            CHECK(s.D(i, i) == f[i]);
        }
        CHECK(abs(prod) == abs_det(a));
    }
}

TEST_CASE("integer helpers") {
    CHECK(gcd64(12, -18) == 6);
    CHECK(mod64(-7, 5) == 3);
    std::int64_t x, y;
    CHECK(ext_gcd(35, 15, x, y) == 5);
    CHECK(35 * x + 15 * y == 5);
    CHECK(frac(make_rational(-1, 3)) == make_rational(2, 3));
    CHECK(Turn(7, 4) == Turn(3, 4));
    CHECK(Turn(1, 2).is_central());
    CHECK_FALSE(Turn(1, 3).is_central());
}
