#include "su2ab/decide.hpp"

#include <algorithm>
#include <set>

namespace su2ab {

std::string to_string(Reason r) {
    switch (r) {
        case Reason::beta_zero: return "beta_zero";
        case Reason::beta_not_one: return "beta_not_one";
        case Reason::condition_A_fail: return "condition_A_fail";
        case Reason::condition_B_fail: return "condition_B_fail";
        case Reason::condition_C_fail: return "condition_C_fail";
        case Reason::all_conditions_hold: return "all_conditions_hold";
    }
    return "?";
}

GraphManifold normalize_order(const GraphManifold& M, bool* swapped) {
    validate(M);
    GraphManifold N{sort_fibers(M.m1), sort_fibers(M.m2), M.phi};
    bool sw = longitude(N.m1).g > longitude(N.m2).g;
    if (sw) N = swap(N);
    if (swapped) *swapped = sw;
    return N;
}

bool condition_a(const GraphManifold& Min) {
    GraphManifold M{sort_fibers(Min.m1), sort_fibers(Min.m2), Min.phi};
    LongitudeData L1 = longitude(M.m1), L2 = longitude(M.m2);
    KeyDeltas k = key_deltas(M);
    return L1.g == 1 || (L1.g == 2 && L1.o == 1) || (L2.g == 2 && L2.o == 1) ||
           (L1.g == 2 && L2.o % 2 == 1 && k.l2h1 % 2 == 0);
}

bool condition_b(const GraphManifold& Min) {
    GraphManifold M{sort_fibers(Min.m1), sort_fibers(Min.m2), Min.phi};
    const std::int64_t o2 = longitude(M.m2).o, d = key_deltas(M).l2h1, p1 = M.m1.p1, p2 = M.m1.p2;
    return (d == 0 && p1 == 2 && o2 % 2 == 1) || (d == 1 && o2 <= 2) || (d == 4 && p1 == 2 && p2 == 4 && o2 == 1);
}

bool condition_c(const GraphManifold& Min) {
    GraphManifold M{sort_fibers(Min.m1), sort_fibers(Min.m2), Min.phi};
    KeyDeltas k = key_deltas(M);
    const std::int64_t o1 = longitude(M.m1).o, d = k.l1h2, p3 = M.m2.p1, p4 = M.m2.p2;
    return (d == 1 && o1 <= 2) || (d == 2 && p3 == 4 && p4 == 4 && o1 == 1) ||
           (d == 3 && p3 == 3 && p4 == 3 && o1 == 1 && k.l1l2 % 2 == 0) ||
           (d == 4 && p3 == 2 && p4 == 4 && o1 == 1);
}

Verdict decide_conditions(const GraphManifold& M) {
    Verdict v;
    GraphManifold N = normalize_order(M, &v.swapped);
    v.deltas = key_deltas(N);
    if (N.phi.beta == 0)
        v.reason = Reason::beta_zero;
    else if (v.deltas.h1h2 != 1)
        v.reason = Reason::beta_not_one;
    else if (!condition_a(N))
        v.reason = Reason::condition_A_fail;
    else if (!condition_b(N))
        v.reason = Reason::condition_B_fail;
    else if (!condition_c(N))
        v.reason = Reason::condition_C_fail;
    else
        v.reason = Reason::all_conditions_hold;
    v.su2_abelian = v.reason == Reason::all_conditions_hold;
    return v;
}

Verdict decide_emptiness(const GraphManifold& M) {
    Verdict v;
    GraphManifold N = normalize_order(M, &v.swapped);
    v.deltas = key_deltas(N);
    v.reason = Reason::all_conditions_hold;

    const std::int64_t ab = M.phi.beta < 0 ? -M.phi.beta : M.phi.beta;
    const bool edge = ab >= 3 && (is_edge_triple(N.m1.p1, N.m1.p2, ab) || is_edge_triple(N.m2.p1, N.m2.p2, ab));

    std::optional<TorusPoint> hit;
    if (M.phi.beta != 0) {
        Emptiness e = h1h2_empty(M);
        v.h1h2_lemma_exception = e.lemma_exception;
        if (!e.empty) {
            v.nonempty = {SetTag::H1, SetTag::H2};
            hit = e.witness;
        }
    } else if ((hit = find_h1h2(M))) {
        v.nonempty = {SetTag::H1, SetTag::H2};
    }
    if (!v.nonempty) {
        Emptiness e = h1a2_empty(M);
        if (!e.empty) {
            v.nonempty = {SetTag::H1, SetTag::A2};
            hit = e.witness;
        }
    }
    if (!v.nonempty) {
        Emptiness e = a1h2_empty(M);
        if (!e.empty) {
            v.nonempty = {SetTag::A1, SetTag::H2};
            hit = e.witness;
        }
    }
    if (!v.nonempty) {
        Emptiness e = p1p2_empty(M);
        if (!e.empty) {
            v.nonempty = {SetTag::P1, SetTag::P2};
            hit = e.witness;
        }
    }
    v.witness = hit;
    v.su2_abelian = !v.nonempty.has_value();
    if (edge && v.su2_abelian)
        throw DecisionError("edge-case lemma says not abelian but every intersection is empty for " + M.str());
    return v;
}

Verdict decide(const GraphManifold& M) {
    Verdict c = decide_conditions(M);
    Verdict e = decide_emptiness(M);
    if (c.su2_abelian != e.su2_abelian)
        throw DecisionError("decision paths disagree for " + M.str() + ": conditions say " +
                            (c.su2_abelian ? "abelian" : "not abelian") + " (" + to_string(c.reason) +
                            "), intersections say " + (e.su2_abelian ? "abelian" : "not abelian"));
    c.nonempty = e.nonempty;
    c.witness = e.witness;
    c.h1h2_lemma_exception = e.h1h2_lemma_exception;
    return c;
}

// ------------------------------------------------------------ classification

namespace {

GraphManifold normalize_side(const GraphManifold& M, int which) {
    const SeifertPiece& s = which == 1 ? M.m1 : M.m2;
    return transport_presentation(M, which, normalize_q(s));
}

bool cong(std::int64_t lhs, std::int64_t rhs, std::int64_t mod) {
    // lhs = +-rhs (mod mod)
    return mod64(lhs - rhs, mod) == 0 || mod64(lhs + rhs, mod) == 0;
}

}  // namespace

GraphManifold normalize_q_both(const GraphManifold& M) {
    validate(M);
    GraphManifold N{sort_fibers(M.m1), sort_fibers(M.m2), M.phi};
    N = normalize_side(normalize_side(N, 1), 2);
    return {sort_fibers(N.m1), sort_fibers(N.m2), N.phi};
}

std::vector<int> matching_rows(const GraphManifold& N) {
    std::vector<int> rows;
    const auto& [p1, q1, p2, q2] = N.m1;
    const auto& [p3, q3, p4, q4] = N.m2;
    LongitudeData L1 = longitude(N.m1), L2 = longitude(N.m2);
    KeyDeltas k = key_deltas(N);
    const std::int64_t D1 = k.l2h1, D2 = k.l1h2;
    const std::int64_t o1 = L1.o, o2 = L2.o, g1 = L1.g, g2 = L2.g;
    const std::int64_t e1 = p1 * q2 + p2 * q1, e2 = p3 * q4 + p4 * q3;

    if (p1 == 2 && q1 == 1 && p3 == p4 && q3 + q4 == p3 && p3 % 2 == 1 && D1 == 0 && D2 == 1 &&
        cong(2 * q2 + p2, o1 * g1, 2 * p2))
        rows.push_back(1);
    if (p1 == 2 && q1 == 1 && p3 == 3 && q3 == 1 && p4 == 3 && q4 == 2 && o1 == 1 && D1 == 0 && D2 == 3 &&
        cong(2 * q2 + p2, 3 * g1, 2 * p2))
        rows.push_back(2);
    if (p1 == 2 && q1 == 1 && p2 == 4 && o2 == 1 && D1 == 4 && D2 == 1 && cong(e2, 4 * g2, p3 * p4))
        rows.push_back(3);
    if (p1 == 2 && q1 == 1 && p2 == 4 && p3 == 3 && p4 == 3 && q3 == q4 && D1 == 4 && D2 == 3) rows.push_back(4);
    if (p3 == 3 && p4 == 3 && q3 == q4 && (p1 * p2) % 2 == 1 && cong(e1, 3, p1 * p2) && g1 == 1 && D1 == 1 &&
        D2 == 3)
        rows.push_back(5);
    if (p3 == 4 && p4 == 4 && q3 == q4 && o1 == 1 && g1 <= 2 && cong(e1, 2 * g1, p1 * p2) && D1 == 1 && D2 == 2)
        rows.push_back(6);
    if (condition_a(N) && o1 <= 2 && o2 <= 2 && cong(e1, o1 * g1, p1 * p2) && cong(e2, o2 * g2, p3 * p4) &&
        D1 == 1 && D2 == 1)
        rows.push_back(7);
    return rows;
}

std::optional<ClassId> classify(const GraphManifold& M) {
    Verdict v = decide(M);
    GraphManifold N = normalize_q_both(M);
    // Both orientations are tried: the table is stated for g1 <= g2, but row 3 is only reached
    // "up to switching" the pieces, which can invert the order of g1 and g2.
    std::vector<std::pair<GraphManifold, bool>> orientations;
    const std::int64_t g1 = longitude(N.m1).g, g2 = longitude(N.m2).g;
    if (g1 <= g2) {
        orientations.push_back({N, false});
        orientations.push_back({normalize_q_both(swap(N)), true});
    } else {
        orientations.push_back({normalize_q_both(swap(N)), true});
        orientations.push_back({N, false});
    }

    std::set<int> ids;
    std::optional<ClassId> found;
    for (const auto& [O, sw] : orientations) {
        if (O.phi.beta != 1 && O.phi.beta != -1) continue;
        const bool ordered = longitude(O.m1).g <= longitude(O.m2).g;
        for (int r : matching_rows(O)) {
            if (!ordered && r != 3) continue;
            ids.insert(r);
            if (!found) {
                ClassId c;
                c.id = r;
                c.swapped = sw;
                c.normalized = O;
                LongitudeData L1 = longitude(O.m1), L2 = longitude(O.m2);
                KeyDeltas k = key_deltas(O);
                c.bindings = {{"p1", O.m1.p1}, {"q1", O.m1.q1}, {"p2", O.m1.p2}, {"q2", O.m1.q2},
                              {"p3", O.m2.p1}, {"q3", O.m2.q1}, {"p4", O.m2.p2}, {"q4", O.m2.q2},
                              {"g1", L1.g},    {"o1", L1.o},    {"g2", L2.g},    {"o2", L2.o},
                              {"Delta1", k.l2h1}, {"Delta2", k.l1h2}};
                found = c;
            }
        }
    }
    if (!v.su2_abelian) {
        if (!ids.empty())
            throw ClassificationError("not abelian but matches table row " + std::to_string(*ids.begin()) + ": " +
                                      M.str());
        return std::nullopt;
    }
    if (ids.size() != 1) {
        std::string list;
        for (int i : ids) list += (list.empty() ? "" : ",") + std::to_string(i);
        throw ClassificationError("abelian manifold matches rows {" + list + "} (exactly one expected): " + M.str());
    }
    return found;
}

bool check_congruences(const GraphManifold& M) {
    validate(M);
    LongitudeData L1 = longitude(M.m1), L2 = longitude(M.m2);
    KeyDeltas k = key_deltas(M);
    const auto& a = M.m1;
    const auto& b = M.m2;
    return cong(a.p1 * a.q2 + a.p2 * a.q1, L1.o * L1.g * k.l1h2, a.p1 * a.p2) &&
           cong(b.p1 * b.q2 + b.p2 * b.q1, L2.o * L2.g * k.l2h1, b.p1 * b.p2);
}

MotegiReport motegi_report(const GraphManifold& M) {
    validate(M);
    if (!is_torus_knot_exterior(M.m1) || !is_torus_knot_exterior(M.m2))
        throw InvalidPiece("both pieces must be torus knot exteriors: " + M.str());
    BoundarySlope m1 = knot_meridian(M.m1), m2 = knot_meridian(M.m2);
    BoundarySlope l1 = longitude_slope(M.m1), l2 = longitude_slope(M.m2);
    const BoundarySlope h1{0, 1}, h2{0, 1};
    MotegiReport r;
    r.meridian1_h2 = delta(push_forward(M.phi, m1), h2);
    r.meridian2_h1 = delta(pull_back(M.phi, m2), h1);
    r.lambda1_meridian2 = delta(push_forward(M.phi, l1), m2);
    r.lambda2_meridian1 = delta(pull_back(M.phi, l2), m1);
    r.abelian = r.meridian1_h2 == 0 && r.meridian2_h1 == 0;
    return r;
}

bool check_motegi(const GraphManifold& M) { return motegi_report(M).abelian; }

GraphManifold motegi_manifold(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
    auto knot_presented = [](std::int64_t a, std::int64_t b) {
        SeifertPiece e = torus_knot_exterior(a, b);
        std::int64_t sum = e.p1 * e.q2 + e.p2 * e.q1;
        std::int64_t k = (-1 - sum) / (e.p1 * e.p2);
        return shift_presentation(e, 1, k).piece;
    };
    return {knot_presented(p, q), knot_presented(r, s), {0, 1, 1, 0}};
}

}  // namespace su2ab
