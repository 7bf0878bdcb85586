#include "su2ab/intervals.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace su2ab {

std::optional<TraceInterval> interval_I(const CosValue& a, const CosValue& b) {
    const Rational& t1 = a.turn();
    const Rational& t2 = b.turn();
    const Rational half(1, 2);
    if (t1 == 0 || t1 == half || t2 == 0 || t2 == half) return std::nullopt;
    CosValue lo = CosValue::from_rational(t1 + t2);
    CosValue hi = CosValue::from_rational(t1 - t2);
    return TraceInterval{lo, hi};
}

namespace {

void require_orders(std::int64_t p1, std::int64_t p2) {
    if (p1 < 2 || p2 < 2) throw std::invalid_argument("fiber orders must be >= 2");
}

bool in_half_multiple(std::int64_t k, std::int64_t p) { return mod64(2 * k, p) == 0; }

}  // namespace

bool s_set_membership(std::int64_t x, std::int64_t p1, std::int64_t p2) {
    if (p1 > p2) std::swap(p1, p2);
    if (p1 < 3) throw std::invalid_argument("S(p1,p2) is described for 3 <= p1 <= p2");
    std::int64_t g = gcd64(p1, p2);
    if (g == 1) return !in_half_multiple(x, p1) && !in_half_multiple(x, p2);
    if (g == 2) return x % 2 == 0 && x % p1 != 0 && x % p2 != 0;
    if (x % g != 0) return false;
    if (g != 4) return true;
    // gZ over-counts when g = 4 (e.g. 4 is not in S(4,4)); the conditions are p1-periodic in k1
    for (std::int64_t k1 = 0; k1 < p1; ++k1) {
        if (in_half_multiple(k1, p1)) continue;
        const std::int64_t r = x - k1 * p2;
        if (r % p1 == 0 && !in_half_multiple(r / p1, p2)) return true;
    }
    return false;
}

bool s_set_membership_bruteforce(std::int64_t x, std::int64_t p1, std::int64_t p2, std::int64_t bound) {
    for (std::int64_t k1 = -bound; k1 <= bound; ++k1) {
        if (in_half_multiple(k1, p1)) continue;
        std::int64_t r = x - k1 * p2;
        if (r % p1 != 0) continue;
        std::int64_t k2 = r / p1;
        if (!in_half_multiple(k2, p2)) return true;
    }
    return false;
}

CosIntervalSet j_zero(std::int64_t p1, std::int64_t p2) {
    require_orders(p1, p2);
    if (p1 > p2) std::swap(p1, p2);
    if (p1 == 2) return {};
    const std::int64_t n = p1 * p2;
    bool found = false;
    CosValue lo, hi;
    for (std::int64_t x = 0; x <= n; ++x) {
        if (!s_set_membership(x, p1, p2)) continue;
        CosValue c = CosValue::from_rational(make_rational(x, n));
        if (!found) {
            lo = hi = c;
            found = true;
        } else {
            if (c < lo) lo = c;
            if (hi < c) hi = c;
        }
    }
    if (!found || !(lo < hi)) return {};
    return interval_set_union({CosInterval{lo, hi}});
}

CosIntervalSet j_pi(std::int64_t p1, std::int64_t p2) {
    require_orders(p1, p2);
    if (p1 > p2) std::swap(p1, p2);
    std::vector<CosInterval> parts;
    for (std::int64_t k1 = 1; k1 <= 2 * p1; k1 += 2)
        for (std::int64_t k2 = 1; k2 <= 2 * p2; k2 += 2) {
            auto iv = interval_I(CosValue::from_rational(make_rational(k1, 2 * p1)),
                                 CosValue::from_rational(make_rational(k2, 2 * p2)));
            if (iv) parts.push_back(*iv);
        }
    return interval_set_union(std::move(parts));
}

CosIntervalSet j_set(const JSpec& s) { return s.parity == Parity::zero ? j_zero(s.p1, s.p2) : j_pi(s.p1, s.p2); }

CosIntervalSet j_zero_bruteforce(std::int64_t p1, std::int64_t p2) {
    require_orders(p1, p2);
    std::vector<CosInterval> parts;
    for (std::int64_t k1 = 0; k1 < p1; ++k1)
        for (std::int64_t k2 = 0; k2 < p2; ++k2) {
            auto iv = interval_I(CosValue::from_rational(make_rational(k1, p1)),
                                 CosValue::from_rational(make_rational(k2, p2)));
            if (iv) parts.push_back(*iv);
        }
    return interval_set_union(std::move(parts));
}

CosIntervalSet j_pi_bruteforce(std::int64_t p1, std::int64_t p2) {
    require_orders(p1, p2);
    std::vector<CosInterval> parts;
    // every residue of (2k+1)/(2p) mod 1, both signs
    for (std::int64_t k1 = -2 * p1; k1 < 2 * p1; ++k1) {
        if (k1 % 2 == 0) continue;
        for (std::int64_t k2 = -2 * p2; k2 < 2 * p2; ++k2) {
            if (k2 % 2 == 0) continue;
            auto iv = interval_I(CosValue::from_rational(make_rational(k1, 2 * p1)),
                                 CosValue::from_rational(make_rational(k2, 2 * p2)));
            if (iv) parts.push_back(*iv);
        }
    }
    return interval_set_union(std::move(parts));
}

namespace {

struct JCache {
    std::mutex mu;
    std::map<std::tuple<std::int64_t, std::int64_t, int>, CosIntervalSet> sets;
};

JCache& cache() {
    static JCache c;
    return c;
}

const CosIntervalSet& cached(std::int64_t p1, std::int64_t p2, Parity parity) {
    if (p1 > p2) std::swap(p1, p2);
    auto key = std::make_tuple(p1, p2, parity == Parity::zero ? 0 : 1);
    JCache& c = cache();
    std::lock_guard<std::mutex> lock(c.mu);
    auto it = c.sets.find(key);
    if (it == c.sets.end())
        it = c.sets.emplace(key, parity == Parity::zero ? j_zero(p1, p2) : j_pi(p1, p2)).first;
    return it->second;
}

}  // namespace

const CosIntervalSet& j_zero_cached(std::int64_t p1, std::int64_t p2) { return cached(p1, p2, Parity::zero); }
const CosIntervalSet& j_pi_cached(std::int64_t p1, std::int64_t p2) { return cached(p1, p2, Parity::pi); }

std::int64_t s_function(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("S(n) needs n >= 2");
    static constexpr std::int64_t x[4] = {0, -1, -2, 1};
    return (n + x[n % 4]) / 4;
}

Rational supporting_angle(const CosInterval& iv) {
    Rational d = iv.lo.turn() - iv.hi.turn();
    return d < 0 ? Rational(-d) : d;
}

Rational supporting_angle(const CosIntervalSet& s) {
    if (s.size() != 1) throw std::invalid_argument("supporting angle needs a single interval");
    return supporting_angle(s.intervals().front());
}

}  // namespace su2ab
