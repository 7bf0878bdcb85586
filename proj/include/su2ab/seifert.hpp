#pragma once

#include "su2ab/exact.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace su2ab {

class InvalidPiece : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// D^2(p1/q1, p2/q2): pi_1 = <a, b, h | a^p1 h^q1, b^p2 h^q2, [a,h], [b,h]>, mu = ab.
struct SeifertPiece {
    std::int64_t p1 = 2, q1 = 1, p2 = 2, q2 = 1;

    friend bool operator==(const SeifertPiece&, const SeifertPiece&) = default;
    std::string str() const;
};

void validate(const SeifertPiece& s);

// lambda = mu_coef * mu + h_coef * h, of order o in H_1; g = gcd(p1, p2).
struct LongitudeData {
    std::int64_t g = 1, o = 1, mu_coef = 0, h_coef = 0;
    friend bool operator==(const LongitudeData&, const LongitudeData&) = default;
};

LongitudeData longitude(const SeifertPiece& s);

// Coordinates in the ordered basis {mu, h} of the current presentation.
struct BoundarySlope {
    std::int64_t mu = 0, h = 0;
    friend bool operator==(const BoundarySlope&, const BoundarySlope&) = default;
};

// 2x2 integer matrix [[a, b], [c, d]] acting on column vectors.
struct Mat2 {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    std::int64_t det() const { return a * d - b * c; }
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    BoundarySlope operator*(const BoundarySlope& v) const {
        return {a * v.mu + b * v.h, c * v.mu + d * v.h};
    }
    Mat2 inverse() const;  // requires det = +-1
    Mat2 transpose() const { return {a, c, b, d}; }
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

// A presentation change: the columns are the new (mu', h') written in the old basis.
using BasisChange = Mat2;

struct Represented {
    SeifertPiece piece;
    BasisChange change;
};

AbelianGroup homology(const SeifertPiece& s);

// q_slot -> q_slot + k p_slot; mu' = mu - k h, h' = h.
Represented shift_presentation(const SeifertPiece& s, int slot, std::int64_t k);
Represented normalize_q(const SeifertPiece& s);
Represented make_q_odd(const SeifertPiece& s);

// Exchanges the two exceptional fibers (a' = b, b' = b^-1 a b); mu and h are unchanged.
SeifertPiece swap_fibers(const SeifertPiece& s);
// Orders the fibers so that p1 <= p2 (ties broken by q after normalisation is not attempted).
SeifertPiece sort_fibers(const SeifertPiece& s);

// Exterior of the (p, q) torus knot with p q2 + q q1 = -1 (mod pq), 0 < q_i < p_i.
SeifertPiece torus_knot_exterior(std::int64_t p, std::int64_t q);

// True when the rational longitude is null-homologous with H_1 = Z, i.e. a knot exterior
// in S^3 among these pieces: g = 1 and p1 q2 + p2 q1 = +-1 (mod p1 p2).
bool is_torus_knot_exterior(const SeifertPiece& s);

// The knot meridian: the unique slope m = mu - k h (in the given presentation) with
// p1 q2 + p2 q1 + k p1 p2 = +-1.
BoundarySlope knot_meridian(const SeifertPiece& s);

}  // namespace su2ab
