#include "su2ab/gluing.hpp"

#include <cstdlib>
#include <sstream>

namespace su2ab {

std::string GluingMatrix::str() const {
    std::ostringstream os;
    os << "[[" << alpha << "," << beta << "],[" << gamma << "," << delta << "]]";
    return os.str();
}

std::string GraphManifold::str() const { return m1.str() + " u_" + phi.str() + " " + m2.str(); }

void validate(const GraphManifold& M) {
    validate(M.m1);
    validate(M.m2);
    if (M.phi.det() != -1)
        throw InvalidGluing("gluing matrix must have determinant -1, got " + std::to_string(M.phi.det()));
}

std::int64_t delta(const BoundarySlope& s1, const BoundarySlope& s2) {
    std::int64_t d = s1.mu * s2.h - s2.mu * s1.h;
    return d < 0 ? -d : d;
}

BoundarySlope push_forward(const GluingMatrix& phi, const BoundarySlope& s1) { return phi.mat() * s1; }

BoundarySlope pull_back(const GluingMatrix& phi, const BoundarySlope& s2) {
    return phi.inverse().mat() * s2;
}

BoundarySlope longitude_slope(const SeifertPiece& s) {
    LongitudeData L = longitude(s);
    return {L.mu_coef, L.h_coef};
}

KeyDeltas key_deltas(const GraphManifold& M) {
    validate(M);
    const auto& f = M.phi;
    LongitudeData L1 = longitude(M.m1), L2 = longitude(M.m2);
    BoundarySlope l1{L1.mu_coef, L1.h_coef}, l2{L2.mu_coef, L2.h_coef};

    KeyDeltas k;
    k.h1h2 = f.beta < 0 ? -f.beta : f.beta;

    // closed forms, checked against the transported determinants below
    std::int64_t e1 = M.m1.p1 * M.m1.q2 + M.m1.p2 * M.m1.q1;
    std::int64_t e2 = M.m2.p1 * M.m2.q2 + M.m2.p2 * M.m2.q1;
    std::int64_t num1 = f.alpha * M.m1.p1 * M.m1.p2 + f.beta * e1;
    std::int64_t num2 = f.delta * M.m2.p1 * M.m2.p2 - f.beta * e2;
    if (num1 % (L1.o * L1.g) != 0 || num2 % (L2.o * L2.g) != 0)
        throw std::logic_error("inexact division in key_deltas for " + M.str());
    k.l1h2 = std::abs(num1 / (L1.o * L1.g));
    k.l2h1 = std::abs(num2 / (L2.o * L2.g));

    BoundarySlope fl1 = push_forward(f, l1);
    BoundarySlope pl2 = pull_back(f, l2);
    if (delta(fl1, {0, 1}) != k.l1h2 || delta(pl2, {0, 1}) != k.l2h1)
        throw std::logic_error("key_deltas closed form disagrees with transport for " + M.str());
    k.l1l2 = delta(fl1, l2);
    k.l2mu1 = delta(pl2, {1, 0});
    k.l1mu2 = delta(fl1, {1, 0});
    return k;
}

GraphManifold swap(const GraphManifold& M) { return {M.m2, M.m1, M.phi.inverse()}; }

GraphManifold transport_presentation(const GraphManifold& M, int which, const Represented& change) {
    GraphManifold out = M;
    if (which == 1) {
        out.m1 = change.piece;
        out.phi = GluingMatrix::from(M.phi.mat() * change.change);
    } else if (which == 2) {
        out.m2 = change.piece;
        out.phi = GluingMatrix::from(change.change.inverse() * M.phi.mat());
    } else {
        throw std::invalid_argument("side must be 1 or 2");
    }
    return out;
}

namespace {

// o g n = k p p' + e, for n or -n; returns k.
bool solve_side(const SeifertPiece& s, std::int64_t n, std::int64_t& k) {
    LongitudeData L = longitude(s);
    std::int64_t pp = s.p1 * s.p2;
    std::int64_t e = s.p1 * s.q2 + s.p2 * s.q1;
    for (std::int64_t sign : {1, -1}) {
        std::int64_t lhs = L.o * L.g * sign * n - e;
        if (lhs % pp == 0) {
            k = lhs / pp;
            return true;
        }
        if (n == 0) break;
    }
    return false;
}

}  // namespace

GluingMatrix build_gluing(const SeifertPiece& m1, const SeifertPiece& m2, std::int64_t n,
                          std::int64_t m) {
    std::int64_t k1 = 0, k2 = 0;
    if (!solve_side(m1, n, k1))
        throw NoSuchGluing("no such gluing: side 1 congruence o1 g1 n = p1 q2 + p2 q1 (mod p1 p2) "
                           "has no solution for " + m1.str() + ", n = " + std::to_string(n));
    if (!solve_side(m2, m, k2))
        throw NoSuchGluing("no such gluing: side 2 congruence o2 g2 m = p3 q4 + p4 q3 (mod p3 p4) "
                           "has no solution for " + m2.str() + ", m = " + std::to_string(m));
    GluingMatrix phi{-k1, -1, k1 * k2 - 1, k2};
    KeyDeltas kd = key_deltas({m1, m2, phi});
    std::int64_t an = n < 0 ? -n : n, am = m < 0 ? -m : m;
    if (kd.h1h2 != 1 || kd.l1h2 != an || kd.l2h1 != am)
        throw std::logic_error("build_gluing produced inconsistent deltas");
    return phi;
}

}  // namespace su2ab
