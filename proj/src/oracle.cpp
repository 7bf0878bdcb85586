#include "su2ab/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace su2ab {

void validate(const Presentation& p) {
    const int n = static_cast<int>(p.generators.size());
    for (const auto& r : p.relators) {
        if (r.empty()) throw std::invalid_argument("empty relator");
        for (int g : r)
            if (g == 0 || g > n || g < -n) throw std::invalid_argument("relator letter out of range");
    }
}

namespace {

using Word = std::vector<int>;

Word power(const Word& w, std::int64_t e) {
    Word out;
    Word base = w;
    if (e < 0) {
        std::reverse(base.begin(), base.end());
        for (int& g : base) g = -g;
        e = -e;
    }
    for (std::int64_t i = 0; i < e; ++i) out.insert(out.end(), base.begin(), base.end());
    return out;
}

Word cat(std::initializer_list<Word> parts) {
    Word out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

Word inverse(const Word& w) { return power(w, -1); }

}  // namespace

Presentation build_presentation(const GraphManifold& M) {
    validate(M);
    Presentation p;
    p.generators = {"a1", "b1", "h1", "a2", "b2", "h2"};
    auto side = [&](const SeifertPiece& s, int a, int b, int h) {
        p.relators.push_back(cat({power({a}, s.p1), power({h}, s.q1)}));
        p.relators.push_back(cat({power({b}, s.p2), power({h}, s.q2)}));
        p.relators.push_back({a, h, -a, -h});
        p.relators.push_back({b, h, -b, -h});
    };
    side(M.m1, 1, 2, 3);
    side(M.m2, 4, 5, 6);
    const auto& f = M.phi;
    Word mu2{4, 5};
    // a1 b1 ((a2 b2)^alpha h2^gamma)^-1
    p.relators.push_back(cat({{1, 2}, inverse(cat({power(mu2, f.alpha), power({6}, f.gamma)}))}));
    // h1 ((a2 b2)^beta h2^delta)^-1
    p.relators.push_back(cat({{3}, inverse(cat({power(mu2, f.beta), power({6}, f.delta)}))}));
    for (auto& r : p.relators)
        if (r.empty()) throw std::logic_error("trivial relator");
    return p;
}

IntMatrix abelianization(const Presentation& p) {
    validate(p);
    IntMatrix m(p.relators.size(), p.generators.size());
    for (std::size_t i = 0; i < p.relators.size(); ++i)
        for (int g : p.relators[i]) m(i, std::abs(g) - 1) += g > 0 ? 1 : -1;
    return m;
}

namespace {

template <class T>
BasicQuat<T> evaluate(const std::vector<int>& word, const std::vector<BasicQuat<T>>& img) {
    BasicQuat<T> r;
    for (int g : word) r = r * (g > 0 ? img[g - 1] : img[-g - 1].conj());
    return r;
}

template <class T>
T residual_of(const Presentation& p, const std::vector<BasicQuat<T>>& img) {
    T s = 0;
    for (const auto& r : p.relators) s += (evaluate(r, img) - BasicQuat<T>{}).norm2();
    return std::sqrt(s);
}

template <class T>
T irreducibility_of(const std::vector<BasicQuat<T>>& img) {
    T best = 0;
    for (std::size_t i = 0; i < img.size(); ++i)
        for (std::size_t j = i + 1; j < img.size(); ++j)
            best = std::max(best, distance(commutator(img[i], img[j]), BasicQuat<T>{}));
    return best;
}

}  // namespace

WitnessScores verify_witness(const Presentation& p, const RepWitness& w) {
    validate(p);
    if (w.images.size() != p.generators.size()) throw std::invalid_argument("witness has wrong number of images");
    return {residual_of(p, w.images), irreducibility_of(w.images)};
}

bool fiber_central(const RepWitness& w, double tol) {
    if (w.images.size() < 6) return false;
    auto central = [&](const Quat& q) { return std::abs(std::abs(q.trace()) - 2) <= tol; };
    return central(w.images[2]) || central(w.images[5]);
}

std::pair<Quat, Quat> witness_from_traces(long double a, long double b, long double c) {
    if (!(a > -2 && a < 2 && b > -2 && b < 2)) throw std::invalid_argument("traces must lie in (-2, 2)");
    const long double sa = std::sqrt(1 - a * a / 4), sb = std::sqrt(1 - b * b / 4);
    const long double t = 0.5L + (2 * c - a * b) / (2 * std::sqrt((4 - a * a) * (4 - b * b)));
    if (!(t > 0 && t < 1)) throw std::invalid_argument("trace c is not inside I(a, b)");
    // A = u (diagonal), B has diagonal alpha(t) = (1-t) v + t conj(v) and a real off-diagonal entry
    const long double im = (1 - 2 * t) * sb;
    const long double off = std::sqrt(std::max(0.0L, 1 - b * b / 4 - im * im));
    Quat A{a / 2, sa, 0, 0};
    Quat B{b / 2, im, off, 0};
    return {A, B};
}

// ------------------------------------------------------------ assembly

namespace {

struct SideImages {
    Quat a, b, h;
};

long double two_cos(const Turn& t) {
    // exact folding before the floating evaluation keeps the angle small
    return 2 * std::cos(2 * M_PIl * static_cast<long double>(cos_value(t).turn().get_d()));
}

// Turns t with p t + q psi = 0 (mod 1), excluding central ones.
std::vector<Turn> fiber_turns(std::int64_t p, std::int64_t q, const Turn& psi) {
    std::vector<Turn> out;
    for (std::int64_t j = 0; j < p; ++j) {
        Turn t(Rational(Rational(j) - Rational(q) * psi.value()) / Rational(p));
        if (!t.is_central()) out.push_back(t);
    }
    return out;
}

Quat target_mu(const Turn& theta) { return Quat::from_turn(static_cast<long double>(theta.value().get_d())); }

// Irreducible images of a piece restricting to eta (psi central, eta in H).
std::optional<SideImages> h_side(const SeifertPiece& s, const TorusPoint& eta) {
    if (!eta.psi.is_central() || eta.theta.is_central()) return std::nullopt;
    const CosValue c = cos_value(eta.theta);
    const long double cd = two_cos(eta.theta);
    std::optional<std::pair<Turn, Turn>> best;
    long double best_margin = -1;
    for (const Turn& ta : fiber_turns(s.p1, s.q1, eta.psi))
        for (const Turn& tb : fiber_turns(s.p2, s.q2, eta.psi)) {
            auto I = interval_I(cos_value(ta), cos_value(tb));
            if (!I || !I->contains(c)) continue;
            long double margin = std::min(cd - I->lo.value(), I->hi.value() - cd);
            if (margin > best_margin) {
                best_margin = margin;
                best = {ta, tb};
            }
        }
    if (!best) return std::nullopt;
    auto [A, B] = witness_from_traces(two_cos(best->first), two_cos(best->second), cd);
    // A and B use the folded eigenvalue turns; both signs satisfy the power relations since h = +-1.
    Quat AB = A * B;
    Quat target = target_mu(eta.theta);
    Quat u{0, AB.x, AB.y, AB.z}, v{0, target.x, target.y, target.z};
    if (u.norm() < 1e-15L || v.norm() < 1e-15L) return std::nullopt;
    Quat r = rotation_between(u.normalized(), v.normalized());
    SideImages out;
    out.a = r * A * r.conj();
    out.b = r * B * r.conj();
    out.h = eta.psi.is_zero() ? Quat{1, 0, 0, 0} : Quat{-1, 0, 0, 0};
    return out;
}

std::optional<SideImages> abelian_side(const SeifertPiece& s, const TorusPoint& eta, bool need_noncentral) {
    for (const auto& e : abelian_extensions(s, eta)) {
        if (need_noncentral && e.x.is_central() && e.y.is_central()) continue;
        return SideImages{Quat::from_turn(e.x.value().get_d()), Quat::from_turn(e.y.value().get_d()),
                          Quat::from_turn(eta.psi.value().get_d())};
    }
    return std::nullopt;
}

SideImages conjugated(const SideImages& s, const Quat& z) {
    return {z * s.a * z.conj(), z * s.b * z.conj(), z * s.h * z.conj()};
}

}  // namespace

RepWitness assemble_witness(const GraphManifold& M, const Verdict& v) {
    if (v.su2_abelian || !v.nonempty || !v.witness)
        throw std::invalid_argument("assemble_witness needs a not-abelian verdict with a witness point");
    const TorusPoint e1 = *v.witness;
    const TorusPoint e2 = to_side2(M.phi, e1);
    std::optional<SideImages> s1, s2;
    const auto [t1, t2] = *v.nonempty;
    if (t1 == SetTag::H1) s1 = h_side(M.m1, e1);
    if (t1 == SetTag::A1) s1 = abelian_side(M.m1, e1, false);
    if (t1 == SetTag::P1) s1 = abelian_side(M.m1, e1, true);
    if (t2 == SetTag::H2) s2 = h_side(M.m2, e2);
    if (t2 == SetTag::A2) s2 = abelian_side(M.m2, e2, false);
    if (t2 == SetTag::P2) {
        s2 = abelian_side(M.m2, e2, true);
        if (s2) s2 = conjugated(*s2, Quat{1, 0, 1, 0}.normalized());
    }
    if (!s1 || !s2)
        throw WitnessError("could not build side images for " + to_string(t1) + "n" + to_string(t2) + " at " +
                           e1.str() + " on " + M.str());
    RepWitness w;
    w.images = {s1->a, s1->b, s1->h, s2->a, s2->b, s2->h};
    Presentation p = build_presentation(M);
    WitnessScores sc = verify_witness(p, w);
    w.residual = static_cast<double>(sc.residual);
    w.irreducibility = static_cast<double>(sc.irreducibility);
    if (!(sc.residual < 1e-9L) || !(sc.irreducibility > 1e-3L))
        throw WitnessError("witness verification failed for " + M.str() + ": residual " +
                           std::to_string(w.residual) + ", irreducibility " + std::to_string(w.irreducibility));
    return w;
}

}  // namespace su2ab
