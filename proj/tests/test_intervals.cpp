#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "su2ab/intervals.hpp"

#include <cmath>
#include <numeric>

using namespace su2ab;

namespace {

CosValue cv(long n, long d) { return CosValue::from_rational(make_rational(n, d)); }

double two_cos(double turn) { return 2.0 * std::cos(2.0 * M_PI * turn); }

// Eigenvalue turns of a non-central A with A^p = 1 (zero level) or A^p = -1 (pi level).
std::vector<double> turns(std::int64_t p, bool pi) {
    std::vector<double> out;
    for (std::int64_t k = 1; k < 2 * p; ++k) {
        if ((k % 2 == 1) != pi) continue;
        const double t = double(k) / double(2 * p);
        if (std::fabs(t - 0.5) > 1e-12) out.push_back(t);
    }
    return out;
}

// Traces of AB for Tr A = 2cos(2 pi t1), Tr B = 2cos(2 pi t2) fill the open interval between
// 2cos(2 pi (t1 + t2)) and 2cos(2 pi (t1 - t2)).
bool j_oracle(std::int64_t p1, std::int64_t p2, bool pi, double c) {
    for (double t1 : turns(p1, pi))
        for (double t2 : turns(p2, pi)) {
            double e1 = two_cos(t1 + t2), e2 = two_cos(t1 - t2);
            if (std::min(e1, e2) < c && c < std::max(e1, e2)) return true;
        }
    return false;
}

bool s_oracle(std::int64_t x, std::int64_t p1, std::int64_t p2) {
    auto allowed = [](std::int64_t k, std::int64_t p) { return (2 * k) % p != 0; };
    for (std::int64_t k1 = -80; k1 <= 80; ++k1) {
        if (!allowed(k1, p1)) continue;
        const std::int64_t rest = x - k1 * p2;
        if (rest % p1 != 0) continue;
        if (allowed(rest / p1, p2)) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("the interval I(a, b)") {
    auto i = interval_I(cv(1, 3), cv(1, 3));
    REQUIRE(i.has_value());
    CHECK(i->lo == cv(1, 3));
    CHECK(i->hi == cv(0, 1));
    CHECK_FALSE(interval_I(cv(0, 1), cv(1, 5)).has_value());
    CHECK_FALSE(interval_I(cv(1, 5), cv(1, 2)).has_value());
    auto z = interval_I(cv(1, 4), cv(1, 4));
    REQUIRE(z.has_value());
    CHECK(z->lo == cv(1, 2));
    CHECK(z->hi == cv(0, 1));
}

TEST_CASE("trace sets: fixtures") {
    CHECK(j_zero(3, 3).pretty() == "(-1,2)");
    CHECK(j_zero(2, 7).empty());
    CHECK(j_zero(4, 4).pretty() == "(-2,2)");
    CHECK(j_pi(2, 4).pretty() == "(-√2,√2)");
    CHECK(j_pi(2, 4).intervals()[0] == CosInterval{cv(3, 8), cv(1, 8)});
    CHECK(j_pi(4, 4).pretty() == "(-2,0) ∪ (0,2)");
    CHECK(j_pi(3, 3).pretty() == "(-1,2)");
    CHECK(j_set({3, 3, Parity::zero}) == j_zero(3, 3));
    CHECK(&j_zero_cached(5, 7) == &j_zero_cached(5, 7));
    CHECK(j_pi_cached(4, 4) == j_pi(4, 4));
}

TEST_CASE("trace sets agree with the numeric oracle") {
    for (std::int64_t p1 = 2; p1 <= 14; ++p1)
        for (std::int64_t p2 = p1; p2 <= 14; ++p2)
            for (bool pi : {false, true}) {
                const CosIntervalSet& J = pi ? j_pi_cached(p1, p2) : j_zero_cached(p1, p2);
                // sample turns r / 997: never an endpoint, whose denominators divide 2 p1 p2
                for (long r = 1; r < 499; r += 3) {
                    INFO(p1 << "," << p2 << (pi ? " pi " : " zero ") << r);
                    CHECK(J.contains(cv(r, 997)) == j_oracle(p1, p2, pi, two_cos(r / 997.0)));
                }
            }
}

TEST_CASE("trace sets: brute-force unions, connectedness and zero") {
    for (std::int64_t p1 = 2; p1 <= 40; ++p1)
        for (std::int64_t p2 = p1; p2 <= 40; ++p2) {
            CHECK(j_zero_bruteforce(p1, p2) == j_zero_cached(p1, p2));
            CHECK(j_pi_bruteforce(p1, p2) == j_pi_cached(p1, p2));
            CHECK(j_zero_cached(p1, p2).empty() == (p1 == 2));
            if (p1 >= 3) CHECK(j_zero_cached(p1, p2).size() == 1);
            if (p1 >= 3) CHECK(j_pi_cached(p1, p2).contains(cv(1, 4)) == !(p1 == 4 && p2 == 4));
            if (!(p1 == 4 && p2 == 4)) CHECK(j_pi_cached(p1, p2).size() == 1);
        }
}

TEST_CASE("J_pi(2, p) is symmetric and given by the widest odd k") {
    for (std::int64_t p = 2; p <= 40; ++p) {
        const CosIntervalSet& J = j_pi_cached(2, p);
        REQUIRE(J.size() == 1);
        const auto& iv = J.intervals()[0];
        CHECK(iv.lo.value() == doctest::Approx(-iv.hi.value()));
        double widest = 0;
        for (std::int64_t k = 1; k <= p; k += 2) widest = std::max(widest, std::fabs(std::sin(M_PI * k / p)));
        CHECK(iv.hi.value() == doctest::Approx(2 * widest));
        CHECK(supporting_angle(J) >= make_rational(1, 2) - make_rational(1, p));
    }
}

TEST_CASE("supporting angles") {
    CHECK(supporting_angle(CosInterval{cv(1, 2), cv(0, 1)}) == make_rational(1, 2));
    CHECK(supporting_angle(j_pi(2, 4)) == make_rational(1, 4));
    CHECK(supporting_angle(j_zero(5, 7)) >= make_rational(1, 3));
    for (std::int64_t p1 = 3; p1 <= 20; ++p1)
        for (std::int64_t p2 = p1; p2 <= 20; ++p2) CHECK(supporting_angle(j_zero_cached(p1, p2)) >= make_rational(1, 3));
    CHECK_THROWS(supporting_angle(j_pi(4, 4)));
    CHECK_THROWS(supporting_angle(j_zero(2, 5)));
}

TEST_CASE("the function S(n)") {
    CHECK(s_function(4) == 1);
    CHECK(s_function(7) == 2);
    CHECK(s_function(6) == 1);
}

TEST_CASE("the set S(p1, p2)") {
    CHECK(s_set_membership(3, 3, 3));
    CHECK_FALSE(s_set_membership(6, 3, 4));
    CHECK(s_set_membership(1, 3, 4));
    CHECK_FALSE(s_set_membership(4, 4, 4));
    CHECK(s_set_membership(8, 4, 4));
    CHECK_FALSE(s_set_membership(8, 4, 8));
    CHECK(s_set_membership(12, 4, 8));
    CHECK_THROWS_AS(s_set_membership(1, 2, 5), std::invalid_argument);
    for (std::int64_t p1 = 3; p1 <= 24; ++p1)
        for (std::int64_t p2 = p1; p2 <= 24; ++p2)
            for (std::int64_t x = -30; x <= 60; ++x) {
                INFO(x << " in S(" << p1 << "," << p2 << ")");
                CHECK(s_set_membership(x, p1, p2) == s_oracle(x, p1, p2));
                CHECK(s_set_membership_bruteforce(x, p1, p2) == s_oracle(x, p1, p2));
            }
}
