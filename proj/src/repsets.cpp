#include "su2ab/repsets.hpp"

#include <algorithm>
#include <functional>

namespace su2ab {

std::string to_string(SetTag t) {
    switch (t) {
        case SetTag::A1: return "A1";
        case SetTag::H1: return "H1";
        case SetTag::P1: return "P1";
        case SetTag::A2: return "A2";
        case SetTag::H2: return "H2";
        case SetTag::P2: return "P2";
    }
    return "?";
}

TorusPoint transport_point(const BasisChange& c, const TorusPoint& e) {
    return {e.theta.times(c.a) + e.psi.times(c.c), e.theta.times(c.b) + e.psi.times(c.d)};
}

TorusPoint to_side1(const GluingMatrix& f, const TorusPoint& e) {
    return {e.theta.times(f.alpha) + e.psi.times(f.gamma), e.theta.times(f.beta) + e.psi.times(f.delta)};
}

TorusPoint to_side2(const GluingMatrix& f, const TorusPoint& e) {
    return {e.theta.times(-f.delta) + e.psi.times(f.gamma), e.theta.times(f.beta) + e.psi.times(-f.alpha)};
}

bool a_membership(const SeifertPiece& piece, const TorusPoint& eta) {
    LongitudeData L = longitude(piece);
    Turn v = eta.theta.times(L.mu_coef) + eta.psi.times(L.h_coef);
    return v.times(L.o).is_zero();
}

namespace {

const Rational kHalf(1, 2);

struct OddForm {
    SeifertPiece piece;  // fibers sorted, q's odd
    std::int64_t shift;  // theta_odd = theta - shift * psi
};

OddForm odd_form(const SeifertPiece& piece) {
    Represented r = make_q_odd(sort_fibers(piece));
    // change = [[1,0],[-k,1]]
    return {r.piece, -r.change.c};
}

const CosIntervalSet& level_set(const SeifertPiece& odd, bool pi_level) {
    return pi_level ? j_pi_cached(odd.p1, odd.p2) : j_zero_cached(odd.p1, odd.p2);
}

}  // namespace

bool h_membership(const SeifertPiece& piece, const TorusPoint& eta) {
    const Rational& psi = eta.psi.value();
    if (psi != 0 && psi != kHalf) return false;
    OddForm f = odd_form(piece);
    Turn theta = eta.theta - eta.psi.times(f.shift);
    return level_set(f.piece, psi == kHalf).contains(cos_value(theta));
}

std::vector<AbelianExtension> abelian_extensions(const SeifertPiece& piece, const TorusPoint& eta) {
    validate(piece);
    std::vector<AbelianExtension> out;
    // p1 x + q1 psi = 0, p2 y + q2 psi = 0, x + y = theta (mod 1)
    for (std::int64_t j = 0; j < piece.p1; ++j) {
        Turn x(Rational(Rational(j) - Rational(piece.q1) * eta.psi.value()) / Rational(piece.p1));
        Turn y = eta.theta - x;
        if (y.times(piece.p2) + eta.psi.times(piece.q2) == Turn()) out.push_back({x, y});
    }
    return out;
}

bool p_membership_enumerated(const SeifertPiece& piece, const TorusPoint& eta) {
    if (!eta.theta.is_central() || !eta.psi.is_central())
        throw std::invalid_argument("P-membership is defined for central boundary representations");
    for (const auto& e : abelian_extensions(piece, eta))
        if (!e.x.is_central() || !e.y.is_central()) return true;
    return false;
}

bool p_membership(const SeifertPiece& piece, const TorusPoint& eta) {
    if (!eta.theta.is_central() || !eta.psi.is_central())
        throw std::invalid_argument("P-membership is defined for central boundary representations");
    if (!a_membership(piece, eta)) return false;
    LongitudeData L = longitude(piece);
    if (L.g == 1) return false;
    if (L.g == 2) return L.o == 2 && eta.psi.value() == kHalf;
    return true;
}

bool is_edge_triple(std::int64_t p1, std::int64_t p2, std::int64_t b) {
    return (p1 == 2 && p2 == 4 && b == 4) || (p1 == 3 && p2 == 3 && b == 3);
}

// ---------------------------------------------------------------- predicates

namespace {

GraphManifold sorted(const GraphManifold& M) { return {sort_fibers(M.m1), sort_fibers(M.m2), M.phi}; }

}  // namespace

bool p1p2_predicate(const GraphManifold& Min) {
    GraphManifold M = sorted(Min);
    LongitudeData L1 = longitude(M.m1), L2 = longitude(M.m2);
    if (L1.g > L2.g) return p1p2_predicate(swap(M));
    KeyDeltas k = key_deltas(M);
    return L1.g == 1 || (L1.g == 2 && L1.o == 1) || (L2.g == 2 && L2.o == 1) ||
           (L1.g == 2 && L2.o % 2 == 1 && k.l2h1 % 2 == 0);
}

bool h1a2_predicate(const GraphManifold& Min) {
    GraphManifold M = sorted(Min);
    LongitudeData L2 = longitude(M.m2);
    KeyDeltas k = key_deltas(M);
    const auto p1 = M.m1.p1, p2 = M.m1.p2, o2 = L2.o, d = k.l2h1;
    const bool even12 = k.l1l2 % 2 == 0;
    return (d == 0 && p1 == 2 && o2 % 2 == 1) || (d == 1 && o2 <= 2) ||
           (d == 1 && o2 == 3 && p1 == 3 && p2 == 3 && even12) || (d == 2 && p1 == 4 && p2 == 4 && o2 == 1) ||
           (d == 3 && p1 == 3 && p2 == 3 && o2 == 1 && even12) || (d == 4 && p1 == 2 && p2 == 4 && o2 == 1);
}

bool a1h2_predicate(const GraphManifold& M) { return h1a2_predicate(swap(M)); }

std::optional<bool> h1h2_predicate(const GraphManifold& Min) {
    GraphManifold M = sorted(Min);
    std::int64_t b = M.phi.beta < 0 ? -M.phi.beta : M.phi.beta;
    if (b == 0) return std::nullopt;
    if (is_edge_triple(M.m1.p1, M.m1.p2, b) || is_edge_triple(M.m2.p1, M.m2.p2, b)) return std::nullopt;
    const auto p1 = M.m1.p1, p2 = M.m1.p2, p3 = M.m2.p1, p4 = M.m2.p2;
    return b == 1 || (b == 2 && p1 == 2 && p3 == 2) || (b == 2 && p1 == 4 && p2 == 4 && p3 == 4 && p4 == 4);
}

// -------------------------------------------------------------- enumerations

namespace {

// Candidate turns where H-membership on a psi-level of `piece` may switch, in the piece's
// own coordinates.
void add_level_breaks(const SeifertPiece& piece, const Turn& psi, std::vector<Rational>& out,
                      const std::function<Rational(const Rational&)>& to_line) {
    OddForm f = odd_form(piece);
    const CosIntervalSet& J = level_set(f.piece, psi.value() == kHalf);
    Rational shift = Rational(f.shift) * psi.value();
    for (const auto& iv : J.intervals())
        for (const Rational* t : {&iv.lo.turn(), &iv.hi.turn()}) {
            out.push_back(to_line(frac(*t + shift)));
            out.push_back(to_line(frac(-*t + shift)));
        }
}

// Searches a circle parametrised by a turn for a point satisfying `pred`; `breaks` must
// contain every point where pred can change value (pred true only on open arcs).
std::optional<Turn> search_circle(std::vector<Rational> breaks, const std::function<bool(const Turn&)>& pred) {
    for (auto& b : breaks) b = frac(b);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    if (breaks.empty()) {
        Turn t(1, 4);
        if (pred(t)) return t;
        return std::nullopt;
    }
    for (std::size_t i = 0; i < breaks.size(); ++i) {
        Rational a = breaks[i];
        Rational b = (i + 1 < breaks.size()) ? breaks[i + 1] : breaks[0] + 1;
        Turn mid(Rational((a + b) / 2));
        if (pred(mid)) return mid;
    }
    return std::nullopt;
}

}  // namespace

std::optional<TorusPoint> find_p1p2(const GraphManifold& M) {
    validate(M);
    for (int i = 0; i < 4; ++i) {
        TorusPoint e1{Turn(i / 2, 2), Turn(i % 2, 2)};
        if (!p_membership_enumerated(M.m1, e1)) continue;
        if (p_membership_enumerated(M.m2, to_side2(M.phi, e1))) return e1;
    }
    return std::nullopt;
}

std::optional<TorusPoint> find_h1a2(const GraphManifold& M) {
    validate(M);
    const auto& f = M.phi;
    LongitudeData L2 = longitude(M.m2);
    const std::int64_t m2 = L2.mu_coef, n2 = L2.h_coef, o2 = L2.o;
    // o2 (m2 theta2 + n2 psi2) = c theta1 + d psi1 in side-1 coordinates
    const std::int64_t c = o2 * (f.beta * n2 - f.delta * m2);
    const std::int64_t d = o2 * (f.gamma * m2 - f.alpha * n2);
    for (int lv = 0; lv < 2; ++lv) {
        Turn psi1(lv, 2);
        Turn rhs = -psi1.times(d);
        if (c == 0) {
            if (!rhs.is_zero()) continue;
            std::vector<Rational> breaks;
            add_level_breaks(M.m1, psi1, breaks, [](const Rational& t) { return t; });
            auto hit = search_circle(breaks, [&](const Turn& th) { return h_membership(M.m1, {th, psi1}); });
            if (hit) return TorusPoint{*hit, psi1};
            continue;
        }
        const std::int64_t ac = c < 0 ? -c : c;
        for (std::int64_t j = 0; j < ac; ++j) {
            Turn th(Rational(rhs.value() + j) / Rational(c));
            TorusPoint e{th, psi1};
            if (h_membership(M.m1, e)) return e;
        }
    }
    return std::nullopt;
}

std::optional<TorusPoint> find_a1h2(const GraphManifold& M) {
    auto hit = find_h1a2(swap(M));
    if (!hit) return std::nullopt;
    // side 1 of swap(M) is side 2 of M
    return to_side1(M.phi, *hit);
}

std::optional<TorusPoint> find_h1h2(const GraphManifold& M) {
    validate(M);
    const auto& f = M.phi;
    for (int l1 = 0; l1 < 2; ++l1)
        for (int l2 = 0; l2 < 2; ++l2) {
            Turn psi1(l1, 2), psi2(l2, 2);
            if (f.beta != 0) {
                const std::int64_t ab = f.beta < 0 ? -f.beta : f.beta;
                Turn base = psi1 - psi2.times(f.delta);
                for (std::int64_t j = 0; j < ab; ++j) {
                    Turn th2(Rational(base.value() + j) / Rational(f.beta));
                    TorusPoint e2{th2, psi2};
                    TorusPoint e1 = to_side1(f, e2);
                    if (e1.psi != psi1) throw std::logic_error("level transport failed");
                    if (h_membership(M.m1, e1) && h_membership(M.m2, e2)) return e1;
                }
            } else {
                // psi1 = delta psi2 and theta2 = -delta theta1 + gamma psi1 (delta = +-1)
                if (psi2.times(f.delta) != psi1) continue;
                auto theta2_of = [&](const Rational& t1) {
                    return Rational(Rational(-f.delta) * t1 + Rational(f.gamma) * psi1.value());
                };
                auto theta1_of = [&](const Rational& t2) {
                    // inverse of theta2_of
                    return Rational(Rational(-f.delta) * (t2 - Rational(f.gamma) * psi1.value()));
                };
                std::vector<Rational> breaks;
                add_level_breaks(M.m1, psi1, breaks, [](const Rational& t) { return t; });
                add_level_breaks(M.m2, psi2, breaks, theta1_of);
                auto hit = search_circle(breaks, [&](const Turn& th1) {
                    return h_membership(M.m1, {th1, psi1}) && h_membership(M.m2, {Turn(theta2_of(th1.value())), psi2});
                });
                if (hit) return TorusPoint{*hit, psi1};
            }
        }
    return std::nullopt;
}

bool h_levels_intersect(const GraphManifold& M, const Turn& psi1, const Turn& psi2) {
    const auto& f = M.phi;
    if (f.beta == 0) throw std::invalid_argument("level intersections need beta != 0");
    const std::int64_t ab = f.beta < 0 ? -f.beta : f.beta;
    Turn base = psi1 - psi2.times(f.delta);
    for (std::int64_t j = 0; j < ab; ++j) {
        TorusPoint e2{Turn(Rational(base.value() + j) / Rational(f.beta)), psi2};
        if (h_membership(M.m1, to_side1(f, e2)) && h_membership(M.m2, e2)) return true;
    }
    return false;
}

namespace {

Emptiness combine(bool predicate, bool predicate_applicable, const std::optional<TorusPoint>& hit,
                  const char* what, const GraphManifold& M) {
    Emptiness e;
    e.enumerated = !hit.has_value();
    e.predicate_applicable = predicate_applicable;
    e.predicate = predicate_applicable ? predicate : e.enumerated;
    e.empty = e.enumerated;
    e.witness = hit;
    if (predicate_applicable && e.predicate != e.enumerated)
        throw PathDisagreement(std::string(what) + ": case analysis says " + (e.predicate ? "empty" : "nonempty") +
                               ", enumeration says " + (e.enumerated ? "empty" : "nonempty") + " for " + M.str());
    return e;
}

}  // namespace

Emptiness p1p2_empty(const GraphManifold& M) { return combine(p1p2_predicate(M), true, find_p1p2(M), "P1nP2", M); }
Emptiness h1a2_empty(const GraphManifold& M) { return combine(h1a2_predicate(M), true, find_h1a2(M), "H1nA2", M); }
Emptiness a1h2_empty(const GraphManifold& M) { return combine(a1h2_predicate(M), true, find_a1h2(M), "A1nH2", M); }

Emptiness h1h2_empty(const GraphManifold& M) {
    auto pred = h1h2_predicate(M);
    auto hit = find_h1h2(M);
    const std::int64_t b = M.phi.beta < 0 ? -M.phi.beta : M.phi.beta;
    if (pred && !*pred && !hit && b >= 3) {
        Emptiness e = combine(true, false, hit, "H1nH2", M);
        e.predicate = false;
        e.predicate_applicable = true;
        e.lemma_exception = true;
        return e;
    }
    return combine(pred.value_or(true), pred.has_value(), hit, "H1nH2", M);
}

}  // namespace su2ab
