#pragma once

#include "su2ab/gluing.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace su2ab {

// Pieces with 2 <= p_i <= p_max, 0 < q_i < p_i, gcd(p_i, q_i) = 1, fibers listed once
// (ordered so that (p1, q1) <= (p2, q2)).
std::vector<SeifertPiece> grid_pieces(std::int64_t p_max = 6);

// det = -1 matrices with all entries in [-bound, bound].
std::vector<GluingMatrix> grid_matrices(std::int64_t bound = 3);

// Visits every manifold of grid_pieces x grid_pieces x grid_matrices; the index is the
// position in that product order.
std::size_t grid_size(std::int64_t p_max = 6, std::int64_t bound = 3);
GraphManifold grid_manifold(std::size_t index, std::int64_t p_max = 6, std::int64_t bound = 3);

// Runs fn(i) for i in [0, n) on all hardware threads.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace su2ab
