#include "su2ab/repsets.hpp"

#include <algorithm>
#include <map>

namespace su2ab {

bool SSet::contains(const CosValue& v) const { return std::binary_search(values.begin(), values.end(), v); }

bool SSet::intersects(const SSet& o) const {
    for (const auto& v : values)
        if (o.contains(v)) return true;
    return false;
}

namespace {

void finish(SSet& s) {
    std::sort(s.values.begin(), s.values.end());
    s.values.erase(std::unique(s.values.begin(), s.values.end()), s.values.end());
}

GraphManifold odd_positive(const GraphManifold& M) {
    GraphManifold N{sort_fibers(M.m1), sort_fibers(M.m2), M.phi};
    N = transport_presentation(N, 1, make_q_odd(N.m1));
    N = transport_presentation(N, 2, make_q_odd(N.m2));
    if (N.phi.beta < 0) N.phi = N.phi.negated();
    return N;
}

Rational q(std::int64_t n, std::int64_t d) { return make_rational(n, d); }

}  // namespace

SSets s_sets(const GraphManifold& M) {
    validate(M);
    const std::int64_t ab = M.phi.beta < 0 ? -M.phi.beta : M.phi.beta;
    if (ab < 3) throw std::invalid_argument("S-sets are defined for |beta| >= 3");
    SSets out;
    out.normalized = odd_positive(M);
    const GraphManifold& N = out.normalized;
    const std::int64_t b = N.phi.beta, a = N.phi.alpha, g = N.phi.gamma, d = N.phi.delta;
    const CosIntervalSet& J0a = j_zero_cached(N.m1.p1, N.m1.p2);
    const CosIntervalSet& J0b = j_zero_cached(N.m2.p1, N.m2.p2);
    const CosIntervalSet& Jpa = j_pi_cached(N.m1.p1, N.m1.p2);
    const CosIntervalSet& Jpb = j_pi_cached(N.m2.p1, N.m2.p2);
    const Rational half_g = q(g, 2);

    for (std::int64_t k = 1; k <= b; ++k) {
        if (J0a.contains(CosValue::from_rational(q(k, b)))) {
            out.s[0].values.push_back(CosValue::from_rational(q(k, b)));
            out.s[0].ks.push_back(k);
        }
        if (J0b.contains(CosValue::from_rational(q(k, b)))) {
            out.s[1].values.push_back(CosValue::from_rational(q(a * k, b)));
            out.s[1].ks.push_back(k);
        }
    }
    for (std::int64_t k = 1; k <= 2 * b - 1; k += 2)
        if (J0a.contains(CosValue::from_rational(q(k, 2 * b)))) {
            out.s[2].values.push_back(CosValue::from_rational(q(k, 2 * b) - half_g));
            out.s[2].ks.push_back(k);
        }
    for (std::int64_t k = 1; k <= b; ++k) {
        Rational t4 = q(2 * k - d, 2 * b);
        if (Jpb.contains(CosValue::from_rational(t4))) {
            out.s[3].values.push_back(CosValue::from_rational(Rational(a) * t4));
            out.s[3].ks.push_back(k);
        }
        Rational t5 = q(2 * k + a + 1, 2 * b);
        if (Jpa.contains(CosValue::from_rational(t5))) {
            out.s[4].values.push_back(CosValue::from_rational(t5 - half_g));
            out.s[4].ks.push_back(k);
        }
        Rational t6 = q(2 * k + d + 1, 2 * b);
        if (Jpb.contains(CosValue::from_rational(t6))) {
            out.s[5].values.push_back(CosValue::from_rational(Rational(a) * t6));
            out.s[5].ks.push_back(k);
        }
    }
    for (auto& s : out.s) finish(s);
    return out;
}

// ------------------------------------------------------------------ sweeps

namespace {

using Mask = std::uint64_t;

struct Residues {
    std::int64_t R;  // 2 beta
    std::int64_t fold(std::int64_t r) const {
        r = mod64(r, R);
        return std::min(r, R - r);
    }
};

// bit r (0 <= r < 2 beta) set iff 2cos(2 pi r / (2 beta)) lies in J
Mask membership_mask(const CosIntervalSet& J, std::int64_t R) {
    Mask m = 0;
    for (std::int64_t r = 0; r < R; ++r)
        if (J.contains(CosValue::from_rational(make_rational(r, R)))) m |= Mask(1) << r;
    return m;
}

bool bit(Mask m, std::int64_t r) { return (m >> r) & 1; }

struct Ctx {
    std::int64_t beta;
    Residues res;
};

// values mask of {fold(mult * r + add) : r in membership, r = start + step * k}
Mask value_mask(const Ctx& c, Mask membership, std::int64_t start, std::int64_t step, std::int64_t count,
                std::int64_t mult, std::int64_t add) {
    Mask v = 0;
    for (std::int64_t k = 0; k < count; ++k) {
        std::int64_t r = mod64(start + step * k, c.res.R);
        if (bit(membership, r)) v |= Mask(1) << c.res.fold(mult * r + add);
    }
    return v;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
    std::int64_t x, y;
    ext_gcd(mod64(a, m), m, x, y);
    return mod64(x, m);
}

GraphManifold sweep_manifold(const SweepCounterexample& t) {
    return {{t.p1, 1, t.p2, 1}, {t.p3, 1, t.p4, 1}, {t.alpha, t.beta, t.gamma, t.delta}};
}

bool crosscheck(const SweepCounterexample& t, bool mask_nonempty, int pair_index) {
    SSets s = s_sets(sweep_manifold(t));
    bool exact = s.s[2 * pair_index].intersects(s.s[2 * pair_index + 1]);
    Turn l1(pair_index == 2 ? 1 : 0, 2), l2(pair_index == 0 ? 0 : 1, 2);
    bool levels = h_levels_intersect(s.normalized, l1, l2);
    return exact == mask_nonempty && levels == mask_nonempty;
}

bool any_level_pair_meets(const SweepCounterexample& t) {
    SSets s = s_sets(sweep_manifold(t));
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            if (h_levels_intersect(s.normalized, Turn(a, 2), Turn(b, 2))) return true;
    return false;
}

}  // namespace

SweepReport sweep_algorithms(const SweepBounds& bounds) {
    SweepReport rep;
    {
        GraphManifold M{{3, 1, 3, 1}, {3, 1, 3, 1}, {1, 3, 0, -1}};
        rep.sanity_333_empty = s_sets(M).s[0].values.empty();
    }
    long tick = 0;
    auto maybe_check = [&](SweepCounterexample& t, bool nonempty, int which) {
        if (!nonempty) {
            // every reported counterexample is confirmed exactly, whatever the stride
            t.exact_confirmed = crosscheck(t, nonempty, which);
            t.other_level_meets = any_level_pair_meets(t);
            ++rep.crosschecked;
            rep.counterexamples.push_back(t);
            return;
        }
        if (bounds.crosscheck_stride <= 0 || (tick++ % bounds.crosscheck_stride) != 0) return;
        ++rep.crosschecked;
        if (!crosscheck(t, nonempty, which))
            throw PathDisagreement("sweep masks disagree with exact S-sets at beta=" + std::to_string(t.beta));
    };

    // Algorithm 1: p1, p3 >= 3, H_{1,0} n H_{2,0}
    for (std::int64_t beta = 3; beta <= bounds.alg12_beta_max; ++beta) {
        Ctx c{beta, {2 * beta}};
        std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
        for (std::int64_t p1 = 3; p1 <= 2 * beta; ++p1)
            for (std::int64_t p2 = p1; p2 <= 2 * beta; ++p2) pairs.emplace_back(p1, p2);
        std::vector<Mask> mem(pairs.size()), s1(pairs.size());
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            mem[i] = membership_mask(j_zero_cached(pairs[i].first, pairs[i].second), c.res.R);
            s1[i] = value_mask(c, mem[i], 2, 2, beta, 1, 0);
        }
        for (std::int64_t alpha = 1; alpha <= beta; ++alpha) {
            if (gcd64(alpha, beta) != 1) continue;
            std::int64_t delta = mod64(-inverse_mod(alpha, beta), beta);
            std::int64_t gamma = (alpha * delta + 1) / beta;
            std::vector<Mask> s2(pairs.size());
            for (std::size_t i = 0; i < pairs.size(); ++i) s2[i] = value_mask(c, mem[i], 2, 2, beta, alpha, 0);
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                if (beta == 3 && pairs[i] == std::make_pair<std::int64_t, std::int64_t>(3, 3)) continue;
                for (std::size_t j = 0; j < pairs.size(); ++j) {
                    if (beta == 3 && pairs[j] == std::make_pair<std::int64_t, std::int64_t>(3, 3)) continue;
                    ++rep.checked[0];
                    bool ok = (s1[i] & s2[j]) != 0;
                    SweepCounterexample t{1, beta, alpha, gamma, delta, pairs[i].first, pairs[i].second,
                                          pairs[j].first, pairs[j].second};
                    maybe_check(t, ok, 0);
                }
            }
        }
    }

    // Algorithm 2: p1 >= 3, p3 = 2, H_{1,0} n H_{2,pi}
    for (std::int64_t beta = 3; beta <= bounds.alg12_beta_max; ++beta) {
        Ctx c{beta, {2 * beta}};
        std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
        for (std::int64_t p1 = 3; p1 <= 2 * beta; ++p1)
            for (std::int64_t p2 = p1; p2 <= 2 * beta; ++p2) pairs.emplace_back(p1, p2);
        std::vector<Mask> mem0(pairs.size());
        for (std::size_t i = 0; i < pairs.size(); ++i)
            mem0[i] = membership_mask(j_zero_cached(pairs[i].first, pairs[i].second), c.res.R);
        std::vector<std::int64_t> p4s;
        for (std::int64_t p4 = 2; p4 <= beta; ++p4) p4s.push_back(p4);
        std::vector<Mask> mempi(p4s.size());
        for (std::size_t j = 0; j < p4s.size(); ++j) mempi[j] = membership_mask(j_pi_cached(2, p4s[j]), c.res.R);

        for (std::int64_t alpha = 1; alpha <= beta; ++alpha) {
            if (gcd64(alpha, beta) != 1) continue;
            std::int64_t d0 = mod64(-inverse_mod(alpha, beta), beta);
            for (std::int64_t delta : {d0, d0 + beta}) {
                std::int64_t gamma = (alpha * delta + 1) / beta;
                std::vector<Mask> s3(pairs.size()), s4(p4s.size());
                for (std::size_t i = 0; i < pairs.size(); ++i)
                    s3[i] = value_mask(c, mem0[i], 1, 2, beta, 1, -gamma * beta);
                for (std::size_t j = 0; j < p4s.size(); ++j)
                    s4[j] = value_mask(c, mempi[j], 2 - delta, 2, beta, alpha, 0);
                for (std::size_t i = 0; i < pairs.size(); ++i) {
                    if (beta == 3 && pairs[i] == std::make_pair<std::int64_t, std::int64_t>(3, 3)) continue;
                    for (std::size_t j = 0; j < p4s.size(); ++j) {
                        if (beta == 4 && p4s[j] == 4) continue;
                        ++rep.checked[1];
                        bool ok = (s3[i] & s4[j]) != 0;
                        SweepCounterexample t{2, beta, alpha, gamma, delta, pairs[i].first, pairs[i].second, 2, p4s[j]};
                            maybe_check(t, ok, 1);
                    }
                }
            }
        }
    }

    // Algorithm 3: p1 = p3 = 2, H_{1,pi} n H_{2,pi}
    for (std::int64_t beta = 3; beta <= bounds.alg3_beta_max; ++beta) {
        Ctx c{beta, {2 * beta}};
        std::vector<std::int64_t> ps;
        for (std::int64_t p = 2; p <= beta; ++p) ps.push_back(p);
        std::vector<Mask> mempi(ps.size());
        for (std::size_t j = 0; j < ps.size(); ++j) mempi[j] = membership_mask(j_pi_cached(2, ps[j]), c.res.R);
        for (std::int64_t alpha = 1; alpha <= beta; ++alpha) {
            if (gcd64(alpha, beta) != 1) continue;
            std::int64_t d0 = mod64(-inverse_mod(alpha, beta), beta);
            for (std::int64_t delta : {d0, d0 + beta}) {
                std::int64_t gamma = (alpha * delta + 1) / beta;
                std::vector<Mask> s5(ps.size()), s6(ps.size());
                for (std::size_t j = 0; j < ps.size(); ++j) {
                    s5[j] = value_mask(c, mempi[j], 2 + alpha + 1, 2, beta, 1, -gamma * beta);
                    s6[j] = value_mask(c, mempi[j], 2 + delta + 1, 2, beta, alpha, 0);
                }
                for (std::size_t i = 0; i < ps.size(); ++i) {
                    if (beta == 4 && ps[i] == 4) continue;
                    for (std::size_t j = 0; j < ps.size(); ++j) {
                        if (beta == 4 && ps[j] == 4) continue;
                        ++rep.checked[2];
                        bool ok = (s5[i] & s6[j]) != 0;
                        SweepCounterexample t{3, beta, alpha, gamma, delta, 2, ps[i], 2, ps[j]};
                            maybe_check(t, ok, 2);
                    }
                }
            }
        }
    }
    return rep;
}

}  // namespace su2ab
