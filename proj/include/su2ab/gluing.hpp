#pragma once

#include "su2ab/seifert.hpp"

#include <stdexcept>
#include <string>

namespace su2ab {

class InvalidGluing : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NoSuchGluing : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// phi(mu1) = alpha mu2 + gamma h2, phi(h1) = beta mu2 + delta h2; written [[alpha, beta], [gamma, delta]].
struct GluingMatrix {
    std::int64_t alpha = 0, beta = 1, gamma = 1, delta = 0;

    Mat2 mat() const { return {alpha, beta, gamma, delta}; }
    static GluingMatrix from(const Mat2& m) { return {m.a, m.b, m.c, m.d}; }
    std::int64_t det() const { return alpha * delta - beta * gamma; }
    GluingMatrix inverse() const { return {-delta, beta, gamma, -alpha}; }
    GluingMatrix negated() const { return {-alpha, -beta, -gamma, -delta}; }
    std::string str() const;
    friend bool operator==(const GluingMatrix&, const GluingMatrix&) = default;
};

struct GraphManifold {
    SeifertPiece m1, m2;
    GluingMatrix phi;

    std::string str() const;
    friend bool operator==(const GraphManifold&, const GraphManifold&) = default;
};

void validate(const GraphManifold& M);

std::int64_t delta(const BoundarySlope& s1, const BoundarySlope& s2);

struct KeyDeltas {
    std::int64_t h1h2 = 0;  // Delta(h1, h2) = |beta|
    std::int64_t l1h2 = 0;  // Delta(lambda_M1, h2)
    std::int64_t l2h1 = 0;  // Delta(lambda_M2, h1)
    std::int64_t l1l2 = 0;  // Delta(lambda_M1, lambda_M2)
    std::int64_t l2mu1 = 0; // Delta(lambda_M2, mu1)
    std::int64_t l1mu2 = 0; // Delta(lambda_M1, mu2)
    friend bool operator==(const KeyDeltas&, const KeyDeltas&) = default;
};

KeyDeltas key_deltas(const GraphManifold& M);

// Image of a side-1 slope in side-2 coordinates, and the pull-back of a side-2 slope.
BoundarySlope push_forward(const GluingMatrix& phi, const BoundarySlope& s1);
BoundarySlope pull_back(const GluingMatrix& phi, const BoundarySlope& s2);

BoundarySlope longitude_slope(const SeifertPiece& s);

GraphManifold swap(const GraphManifold& M);

// Re-present one side; `change` comes from shift_presentation / normalize_q / make_q_odd.
GraphManifold transport_presentation(const GraphManifold& M, int which, const Represented& change);

// Gluing with Delta(h1,h2) = 1, Delta(lambda_M1,h2) = |n| and Delta(lambda_M2,h1) = |m|.
GluingMatrix build_gluing(const SeifertPiece& m1, const SeifertPiece& m2, std::int64_t n,
                          std::int64_t m);

}  // namespace su2ab
