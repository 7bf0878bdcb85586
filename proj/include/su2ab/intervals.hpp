#pragma once

#include "su2ab/exact.hpp"

#include <optional>

namespace su2ab {

using TraceInterval = CosInterval;

enum class Parity { zero, pi };

struct JSpec {
    std::int64_t p1 = 2, p2 = 2;
    Parity parity = Parity::zero;
};

// I(a, b) with a = 2cos(2 pi t1), b = 2cos(2 pi t2): traces of AB for A, B of traces a, b.
std::optional<TraceInterval> interval_I(const CosValue& a, const CosValue& b);

CosIntervalSet j_zero(std::int64_t p1, std::int64_t p2);
CosIntervalSet j_pi(std::int64_t p1, std::int64_t p2);
CosIntervalSet j_set(const JSpec& s);

// Memoised versions; the references stay valid for the life of the process.
const CosIntervalSet& j_zero_cached(std::int64_t p1, std::int64_t p2);
const CosIntervalSet& j_pi_cached(std::int64_t p1, std::int64_t p2);

// Direct unions of all I(k1/p1, k2/p2) (resp. odd k over 2p), used as oracles.
CosIntervalSet j_zero_bruteforce(std::int64_t p1, std::int64_t p2);
CosIntervalSet j_pi_bruteforce(std::int64_t p1, std::int64_t p2);

std::int64_t s_function(std::int64_t n);

// x in S(p1, p2) = {k1 p2 + k2 p1 : k_i not in (p_i/2)Z}: Z minus half-multiples (g = 1),
// 2Z minus multiples (g = 2), gZ (g >= 3) except that g = 4 is checked exactly.
bool s_set_membership(std::int64_t x, std::int64_t p1, std::int64_t p2);
bool s_set_membership_bruteforce(std::int64_t x, std::int64_t p1, std::int64_t p2, std::int64_t bound = 50);

// Angle (in turns, within [0, 1/2]) supporting a single interval.
Rational supporting_angle(const CosIntervalSet& s);
Rational supporting_angle(const CosInterval& iv);

}  // namespace su2ab
