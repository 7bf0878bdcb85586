#include "su2ab/seifert.hpp"

#include <sstream>

namespace su2ab {

std::string SeifertPiece::str() const {
    std::ostringstream os;
    os << "D2(" << p1 << "/" << q1 << ", " << p2 << "/" << q2 << ")";
    return os.str();
}

void validate(const SeifertPiece& s) {
    if (s.p1 < 2 || s.p2 < 2) throw InvalidPiece("fiber orders must be >= 2: " + s.str());
    if (gcd64(s.p1, s.q1) != 1 || gcd64(s.p2, s.q2) != 1)
        throw InvalidPiece("Seifert invariants must be coprime: " + s.str());
    if (s.p1 > 1'000'000 || s.p2 > 1'000'000 || s.q1 > 1'000'000'000 || s.q1 < -1'000'000'000 ||
        s.q2 > 1'000'000'000 || s.q2 < -1'000'000'000)
        throw InvalidPiece("Seifert invariants out of supported range: " + s.str());
}

Mat2 Mat2::inverse() const {
    std::int64_t dt = det();
    if (dt != 1 && dt != -1) throw std::invalid_argument("matrix is not unimodular");
    return {d * dt, -b * dt, -c * dt, a * dt};
}

LongitudeData longitude(const SeifertPiece& s) {
    validate(s);
    LongitudeData L;
    L.g = gcd64(s.p1, s.p2);
    std::int64_t m = s.p1 * s.p2 / L.g;
    std::int64_t n = (s.p1 * s.q2 + s.p2 * s.q1) / L.g;
    L.o = gcd64(m, n);
    L.mu_coef = m / L.o;
    L.h_coef = n / L.o;
    return L;
}

AbelianGroup homology(const SeifertPiece& s) {
    validate(s);
    // generators a, b, h
    IntMatrix rel{{(long)s.p1, 0, (long)s.q1}, {0, (long)s.p2, (long)s.q2}};
    return cokernel(rel);
}

Represented shift_presentation(const SeifertPiece& s, int slot, std::int64_t k) {
    validate(s);
    Represented r{s, BasisChange{1, 0, -k, 1}};
    if (slot == 1)
        r.piece.q1 += k * s.p1;
    else if (slot == 2)
        r.piece.q2 += k * s.p2;
    else
        throw std::invalid_argument("slot must be 1 or 2");
    return r;
}

namespace {

Represented compose(const Represented& first, const Represented& second) {
    return {second.piece, first.change * second.change};
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

Represented normalize_q(const SeifertPiece& s) {
    Represented r = shift_presentation(s, 1, -floor_div(s.q1, s.p1));
    return compose(r, shift_presentation(r.piece, 2, -floor_div(r.piece.q2, r.piece.p2)));
}

Represented make_q_odd(const SeifertPiece& s) {
    validate(s);
    Represented r{s, BasisChange{}};
    for (int slot = 1; slot <= 2; ++slot) {
        std::int64_t p = slot == 1 ? r.piece.p1 : r.piece.p2;
        std::int64_t q = slot == 1 ? r.piece.q1 : r.piece.q2;
        if (q % 2 == 0) {
            std::int64_t k = (q + p > 0 && q + p < 2 * p) ? 1 : -1;
            r = compose(r, shift_presentation(r.piece, slot, k));
        }
    }
    return r;
}

SeifertPiece swap_fibers(const SeifertPiece& s) { return {s.p2, s.q2, s.p1, s.q1}; }

SeifertPiece sort_fibers(const SeifertPiece& s) { return s.p1 <= s.p2 ? s : swap_fibers(s); }

SeifertPiece torus_knot_exterior(std::int64_t p, std::int64_t q) {
    if (p < 2 || q < 2) throw InvalidPiece("torus knot parameters must be >= 2");
    if (gcd64(p, q) != 1) throw InvalidPiece("torus knot parameters must be coprime");
    // p q2 + q q1 = -1 with 0 < q1 < p, 0 < q2 < q
    std::int64_t x, y;
    ext_gcd(q, p, x, y);  // q x + p y = 1
    std::int64_t q1 = mod64(-x, p);
    std::int64_t q2 = mod64(-y, q);
    SeifertPiece s{p, q1, q, q2};
    validate(s);
    return s;
}

bool is_torus_knot_exterior(const SeifertPiece& s) {
    validate(s);
    if (gcd64(s.p1, s.p2) != 1) return false;
    std::int64_t m = s.p1 * s.p2;
    std::int64_t e = mod64(s.p1 * s.q2 + s.p2 * s.q1, m);
    return e == 1 || e == m - 1;
}

BoundarySlope knot_meridian(const SeifertPiece& s) {
    if (!is_torus_knot_exterior(s)) throw InvalidPiece("not a torus knot exterior: " + s.str());
    std::int64_t m = s.p1 * s.p2;
    std::int64_t e = s.p1 * s.q2 + s.p2 * s.q1;
    std::int64_t r = mod64(e, m);
    // e + k m = +1 or -1
    std::int64_t target = (r == 1) ? 1 : -1;
    std::int64_t k = (target - e) / m;
    return {1, -k};
}

}  // namespace su2ab
