#pragma once

#include "su2ab/repsets.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace su2ab {

enum class Reason {
    beta_zero,
    beta_not_one,
    condition_A_fail,
    condition_B_fail,
    condition_C_fail,
    all_conditions_hold,
};
std::string to_string(Reason r);

struct Verdict {
    bool su2_abelian = false;
    Reason reason = Reason::beta_zero;  // first failing item of the conditions path
    // Emptiness path: the first nonempty intersection and a common point (side-1 coordinates of
    // the input manifold). Present exactly when not abelian.
    std::optional<std::pair<SetTag, SetTag>> nonempty;
    std::optional<TorusPoint> witness;
    KeyDeltas deltas;       // of the normalised manifold (fibers sorted, g1 <= g2)
    bool swapped = false;   // normalisation exchanged the two pieces
    bool h1h2_lemma_exception = false;  // see Emptiness::lemma_exception
};

class DecisionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Fibers sorted and pieces ordered so that g1 <= g2.
GraphManifold normalize_order(const GraphManifold& M, bool* swapped = nullptr);

// Conditions on a manifold with g1 <= g2 (fibers are sorted internally).
bool condition_a(const GraphManifold& M);
bool condition_b(const GraphManifold& M);
bool condition_c(const GraphManifold& M);

// Conditions path only: |beta| = 1 and A, B, C.
Verdict decide_conditions(const GraphManifold& M);
// Emptiness path only: the four intersections by enumeration (predicates cross-checked).
Verdict decide_emptiness(const GraphManifold& M);
// Both paths; throws DecisionError if they disagree.
Verdict decide(const GraphManifold& M);

struct ClassId {
    int id = 0;
    std::map<std::string, std::int64_t> bindings;  // p_i, q_i, o_i, g_i, Delta_1, Delta_2
    bool swapped = false;                          // matched after exchanging the pieces
    GraphManifold normalized;                      // 0 < q_i < p_i, fibers sorted, as matched
};

class ClassificationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// All table rows matched by a manifold already normalised (0 < q < p, sorted, g1 <= g2).
std::vector<int> matching_rows(const GraphManifold& normalized);
// nullopt iff not abelian; throws ClassificationError when the rows and the verdict disagree.
std::optional<ClassId> classify(const GraphManifold& M);
// Presentation with 0 < q_i < p_i on both sides and sorted fibers.
GraphManifold normalize_q_both(const GraphManifold& M);

bool check_congruences(const GraphManifold& M);

struct MotegiReport {
    bool abelian = false;              // knot meridian of each side is disjoint from the other's fiber
    std::int64_t meridian1_h2 = 0;     // Delta(m_1, h_2)
    std::int64_t meridian2_h1 = 0;     // Delta(m_2, h_1)
    std::int64_t lambda1_meridian2 = 0;
    std::int64_t lambda2_meridian1 = 0;
};
MotegiReport motegi_report(const GraphManifold& M);
bool check_motegi(const GraphManifold& M);

// The Motegi gluing of two torus knot exteriors (meridian <-> fiber both ways), each piece
// presented with p q2 + q q1 = -1 exactly.
GraphManifold motegi_manifold(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s);

}  // namespace su2ab
