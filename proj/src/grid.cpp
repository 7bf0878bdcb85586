#include "su2ab/grid.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace su2ab {

std::vector<SeifertPiece> grid_pieces(std::int64_t p_max) {
    std::vector<std::pair<std::int64_t, std::int64_t>> fibers;
    for (std::int64_t p = 2; p <= p_max; ++p)
        for (std::int64_t q = 1; q < p; ++q)
            if (gcd64(p, q) == 1) fibers.emplace_back(p, q);
    std::vector<SeifertPiece> out;
    for (std::size_t i = 0; i < fibers.size(); ++i)
        for (std::size_t j = i; j < fibers.size(); ++j)
            out.push_back({fibers[i].first, fibers[i].second, fibers[j].first, fibers[j].second});
    return out;
}

std::vector<GluingMatrix> grid_matrices(std::int64_t bound) {
    std::vector<GluingMatrix> out;
    for (std::int64_t a = -bound; a <= bound; ++a)
        for (std::int64_t b = -bound; b <= bound; ++b)
            for (std::int64_t c = -bound; c <= bound; ++c)
                for (std::int64_t d = -bound; d <= bound; ++d)
                    if (a * d - b * c == -1) out.push_back({a, b, c, d});
    return out;
}

namespace {

struct GridCache {
    std::int64_t p_max = -1, bound = -1;
    std::vector<SeifertPiece> pieces;
    std::vector<GluingMatrix> matrices;
};

const GridCache& cache(std::int64_t p_max, std::int64_t bound) {
    static std::mutex mu;
    static GridCache c;
    std::lock_guard<std::mutex> lock(mu);
    if (c.p_max != p_max || c.bound != bound) {
        c.p_max = p_max;
        c.bound = bound;
        c.pieces = grid_pieces(p_max);
        c.matrices = grid_matrices(bound);
    }
    return c;
}

}  // namespace

std::size_t grid_size(std::int64_t p_max, std::int64_t bound) {
    const GridCache& c = cache(p_max, bound);
    return c.pieces.size() * c.pieces.size() * c.matrices.size();
}

GraphManifold grid_manifold(std::size_t index, std::int64_t p_max, std::int64_t bound) {
    const GridCache& c = cache(p_max, bound);
    const std::size_t nm = c.matrices.size(), np = c.pieces.size();
    const std::size_t k = index % nm, j = (index / nm) % np, i = index / (nm * np);
    return {c.pieces.at(i), c.pieces.at(j), c.matrices[k]};
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    if (threads == 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < n;) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!error) error = std::current_exception();
                    next = n;
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace su2ab
