#include "su2ab/oracle.hpp"

#include <Eigen/Dense>

#include <random>

namespace su2ab {

namespace {

using Q = BasicQuat<double>;

Q evaluate(const std::vector<int>& word, const std::vector<Q>& img) {
    Q r;
    for (int g : word) r = r * (g > 0 ? img[g - 1] : img[-g - 1].conj());
    return r;
}

std::vector<Q> unpack(const Eigen::VectorXd& x) {
    std::vector<Q> img(x.size() / 4);
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = Q{x[4 * i], x[4 * i + 1], x[4 * i + 2], x[4 * i + 3]};
    return img;
}

void project(Eigen::VectorXd& x) {
    for (Eigen::Index i = 0; i < x.size(); i += 4) x.segment<4>(i).normalize();
}

Eigen::VectorXd residuals(const Presentation& p, const Eigen::VectorXd& x) {
    std::vector<Q> img = unpack(x);
    Eigen::VectorXd r(4 * p.relators.size());
    for (std::size_t k = 0; k < p.relators.size(); ++k) {
        Q w = evaluate(p.relators[k], img) - Q{};
        r.segment<4>(4 * k) << w.w, w.x, w.y, w.z;
    }
    return r;
}

}  // namespace

std::optional<RepWitness> solve_numeric(const Presentation& p, const SolveOptions& opt) {
    validate(p);
    if (!(opt.tol > 0)) throw std::invalid_argument("tolerance must be positive");
    const Eigen::Index n = 4 * static_cast<Eigen::Index>(p.generators.size());
    std::mt19937_64 rng(opt.seed);
    std::normal_distribution<double> normal(0.0, 1.0);

    for (int restart = 0; restart < opt.restarts; ++restart) {
        Eigen::VectorXd x(n);
        for (Eigen::Index i = 0; i < n; ++i) x[i] = normal(rng);
        project(x);
        Eigen::VectorXd r = residuals(p, x);
        double cost = r.squaredNorm();
        double lambda = 1e-3;
        for (int it = 0; it < opt.max_iterations && std::sqrt(cost) >= opt.tol; ++it) {
            // forward-difference Jacobian
            Eigen::MatrixXd J(r.size(), n);
            const double h = 1e-7;
            for (Eigen::Index j = 0; j < n; ++j) {
                Eigen::VectorXd xp = x;
                xp[j] += h;
                J.col(j) = (residuals(p, xp) - r) / h;
            }
            Eigen::MatrixXd A = J.transpose() * J;
            Eigen::VectorXd g = J.transpose() * r;
            bool accepted = false;
            for (int tries = 0; tries < 12 && !accepted; ++tries) {
                Eigen::MatrixXd Ad = A;
                Ad.diagonal().array() += lambda * (1.0 + A.diagonal().array());
                Eigen::VectorXd step = Ad.ldlt().solve(-g);
                Eigen::VectorXd xn = x + step;
                project(xn);
                Eigen::VectorXd rn = residuals(p, xn);
                double cn = rn.squaredNorm();
                if (cn < cost) {  // only non-increasing steps are accepted
                    x = xn;
                    r = rn;
                    cost = cn;
                    lambda = std::max(lambda / 3, 1e-12);
                    accepted = true;
                } else {
                    lambda *= 4;
                }
            }
            if (!accepted) break;
        }
        if (std::sqrt(cost) >= opt.tol) continue;
        RepWitness w;
        for (const Q& q : unpack(x)) w.images.push_back(q.as<long double>());
        WitnessScores s = verify_witness(p, w);
        w.residual = static_cast<double>(s.residual);
        w.irreducibility = static_cast<double>(s.irreducibility);
        if (w.residual < opt.tol && w.irreducibility > opt.irreducibility_threshold) return w;
    }
    return std::nullopt;
}

}  // namespace su2ab
