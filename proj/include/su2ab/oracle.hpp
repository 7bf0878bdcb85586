#pragma once

#include "su2ab/decide.hpp"
#include "su2ab/quaternion.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace su2ab {

// Relators are words of signed 1-based generator indices; -i is the inverse of generator i.
struct Presentation {
    std::vector<std::string> generators;
    std::vector<std::vector<int>> relators;
};

void validate(const Presentation& p);

// Generators a1, b1, h1, a2, b2, h2; the four relators of each piece and the two gluing relators
// a1 b1 = (a2 b2)^alpha h2^gamma, h1 = (a2 b2)^beta h2^delta.
Presentation build_presentation(const GraphManifold& M);

// Exponent-sum matrix: one row per relator, one column per generator.
IntMatrix abelianization(const Presentation& p);

struct RepWitness {
    std::vector<Quat> images;  // one unit quaternion per generator
    double residual = 0;        // root-sum-square of |word - 1| over relators
    double irreducibility = 0;  // max over generator pairs of |[g, h] - 1|
};

struct WitnessScores {
    long double residual = 0, irreducibility = 0;
};

// Recomputes both scores from the images in extended precision.
WitnessScores verify_witness(const Presentation& p, const RepWitness& w);

// |Tr rho(h_i)| = 2 within tol for at least one fiber (generators 3 and 6).
bool fiber_central(const RepWitness& w, double tol = 1e-6);

class WitnessError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A, B in SU(2) with Tr A = a, Tr B = b, Tr AB = c and AB != BA; c strictly inside I(a, b).
std::pair<Quat, Quat> witness_from_traces(long double a, long double b, long double c);

// Explicit irreducible representation for a "not abelian" verdict, built from the nonempty
// intersection it reports. Throws WitnessError if the result fails verification.
RepWitness assemble_witness(const GraphManifold& M, const Verdict& v);

struct SolveOptions {
    int restarts = 50;
    double tol = 1e-10;
    std::uint64_t seed = 0x5eed5eedULL;
    int max_iterations = 400;
    double irreducibility_threshold = 1e-2;
};

// Random-restart Levenberg-Marquardt over products of unit quaternions. Deterministic in the
// seed; absent means no witness was found, not that none exists.
std::optional<RepWitness> solve_numeric(const Presentation& p, const SolveOptions& opt = {});

}  // namespace su2ab
