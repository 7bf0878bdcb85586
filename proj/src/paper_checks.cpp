#include "su2ab/paper_checks.hpp"

#include "su2ab/grid.hpp"
#include "su2ab/oracle.hpp"

#include <chrono>
#include <mutex>
#include <random>
#include <sstream>

namespace su2ab {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : "; ") + x;
    return s;
}

}  // namespace

GridRun run_grid(const GridOptions& opt) {
    const auto t0 = Clock::now();
    GridRun r;
    r.total = grid_size(opt.p_max, opt.bound);
    std::mutex mu;
    parallel_for(r.total, [&](std::size_t i) {
        const GraphManifold M = grid_manifold(i, opt.p_max, opt.bound);
        Verdict v;
        try {
            v = decide(M);
        } catch (const std::logic_error& e) {
            std::lock_guard<std::mutex> lock(mu);
            ++r.disagreements;
            if (r.samples.size() < 8) r.samples.push_back(e.what());
            return;
        }
        GridRun local;
        if (v.su2_abelian) {
            ++local.abelian;
            if (v.deltas.h1h2 != 1) ++local.beta_violations;
        } else {
            ++local.not_abelian;
        }
        local.lemma_exceptions += v.h1h2_lemma_exception;
        if (v.deltas.h1h2 == 1 && v.deltas.l1h2 == 0) {
            GraphManifold N = normalize_order(M);
            if (N.m1.p1 != N.m1.p2) ++local.remark_violations;
        }
        std::string failure;
        if (opt.classify && v.su2_abelian) {
            try {
                if (classify(M)) ++local.classified;
                else ++local.classification_failures;
            } catch (const std::logic_error& e) {
                ++local.classification_failures;
                failure = e.what();
            }
        }
        if (opt.witnesses && !v.su2_abelian) {
            try {
                RepWitness w = assemble_witness(M, v);
                ++local.witnesses_ok;
                if (!fiber_central(w)) ++local.centrality_failures;
                local.worst_residual = w.residual;
                local.weakest_irreducibility = w.irreducibility;
            } catch (const std::exception& e) {
                ++local.witness_failures;
                failure = e.what();
            }
        }
        std::lock_guard<std::mutex> lock(mu);
        r.abelian += local.abelian;
        r.not_abelian += local.not_abelian;
        r.beta_violations += local.beta_violations;
        r.remark_violations += local.remark_violations;
        r.lemma_exceptions += local.lemma_exceptions;
        r.classified += local.classified;
        r.classification_failures += local.classification_failures;
        r.witnesses_ok += local.witnesses_ok;
        r.witness_failures += local.witness_failures;
        r.centrality_failures += local.centrality_failures;
        if (local.witnesses_ok) {
            r.worst_residual = std::max(r.worst_residual, local.worst_residual);
            r.weakest_irreducibility = std::min(r.weakest_irreducibility, local.weakest_irreducibility);
        }
        if (!failure.empty() && r.samples.size() < 8) r.samples.push_back(failure);
    });
    r.seconds = since(t0);
    return r;
}

// ---------------------------------------------------------------- criterion 1

CriterionResult criterion_sweeps() {
    const auto t0 = Clock::now();
    CriterionResult c{1, "Algorithm sweeps: zero counterexamples", false, false, "", 0};
    SweepReport rep = sweep_algorithms();
    std::ostringstream os;
    os << "checked alg1=" << rep.checked[0] << " alg2=" << rep.checked[1] << " alg3=" << rep.checked[2]
       << ", counterexamples=" << rep.counterexamples.size() << ", exact cross-checks=" << rep.crosschecked
       << ", (3,3,3) sanity S1 empty=" << (rep.sanity_333_empty ? "yes" : "no");
    if (!rep.counterexamples.empty()) {
        const auto& t = rep.counterexamples.front();
        os << "; first: alg" << t.algorithm << " beta=" << t.beta << " alpha=" << t.alpha << " p=(" << t.p1 << ","
           << t.p2 << "," << t.p3 << "," << t.p4 << ")";
    }
    std::size_t confirmed = 0, rescued = 0, not_abelian = 0;
    for (const auto& t : rep.counterexamples) {
        confirmed += t.exact_confirmed;
        rescued += t.other_level_meets;
        GraphManifold M{{t.p1, 1, t.p2, 1}, {t.p3, 1, t.p4, 1}, {t.alpha, t.beta, t.gamma, t.delta}};
        Verdict v = decide(M);
        if (!v.su2_abelian && verify_witness(build_presentation(M), assemble_witness(M, v)).residual < 1e-9)
            ++not_abelian;
    }
    const std::size_t n = rep.counterexamples.size();
    if (n)
        os << "; exactly confirmed " << confirmed << "/" << n << ", H1 n H2 still nonempty via another level pair "
           << rescued << "/" << n << ", manifold not abelian with certified witness " << not_abelian << "/" << n;
    c.pass = rep.counterexamples.empty() && rep.sanity_333_empty && rep.crosschecked > 0;
    // The level-restricted claims fail at a few small beta, while the lemma itself survives.
    c.documented_deviation = !c.pass && rep.sanity_333_empty && confirmed == n && not_abelian == n;
    c.detail = os.str();
    c.seconds = since(t0);
    return c;
}

// ---------------------------------------------------------------- criterion 2

CriterionResult criterion_dual_path(const GridRun& r) {
    CriterionResult c{2, "Dual-path decision equivalence on the grid", false, false, "", r.seconds};
    std::ostringstream os;
    os << r.total << " manifolds, " << r.abelian << " abelian, " << r.not_abelian << " not abelian, "
       << r.disagreements << " disagreements; classified " << r.classified << "/" << r.abelian
       << " (failures " << r.classification_failures << "), |beta|!=1 among abelian: " << r.beta_violations
       << ", Delta=0 remark violations: " << r.remark_violations
       << ", |beta|>=3 with H1 n H2 empty: " << r.lemma_exceptions;
    if (!r.samples.empty()) os << "; samples: " << join(r.samples);
    c.pass = r.disagreements == 0 && r.total > 0 && r.beta_violations == 0 && r.classification_failures == 0 &&
             r.remark_violations == 0;
    c.detail = os.str();
    return c;
}

// ---------------------------------------------------------------- criterion 3

namespace {

struct Checklist {
    std::vector<std::string> failed;
    int total = 0;
    void check(bool ok, const std::string& what) {
        ++total;
        if (!ok) failed.push_back(what);
    }
};

CosIntervalSet set_of(std::initializer_list<std::pair<Rational, Rational>> turns) {
    // (lo turn, hi turn) pairs in cosine order: lo has the larger turn
    std::vector<CosInterval> iv;
    for (const auto& [lo, hi] : turns) iv.push_back({CosValue::from_rational(lo), CosValue::from_rational(hi)});
    return interval_set_union(iv);
}

}  // namespace

CriterionResult criterion_fixtures() {
    const auto t0 = Clock::now();
    CriterionResult c{3, "Paper fixtures exact-match", false, false, "", 0};
    Checklist cl;

    GraphManifold tref = motegi_manifold(2, 3, 2, 3);
    Verdict vt = decide(tref);
    auto ct = classify(tref);
    cl.check(vt.su2_abelian, "two trefoils abelian");
    cl.check(ct && ct->id == 7, "two trefoils class 7");

    bool all_na = true;
    for (const auto& f : grid_matrices(3))
        if (decide({{2, 1, 2, 1}, {2, 1, 2, 1}, f}).su2_abelian) all_na = false;
    cl.check(all_na, "D(2/1,2/1) twice never abelian");

    const SeifertPiece m1{4, 1, 5, 4}, m2{2, 1, 2, 1};
    GraphManifold e1{m1, m2, {-1, 1, 1, 0}}, e2{m1, m2, {-1, 1, -1, 2}};
    for (const auto& [M, want] : {std::pair{e1, 19L}, std::pair{e2, 21L}}) {
        Verdict v = decide(M);
        auto cls = classify(M);
        cl.check(v.su2_abelian, M.str() + " abelian");
        cl.check(cls && cls->id == 7, M.str() + " class 7");
        cl.check(key_deltas(M).l1l2 == want, M.str() + " Delta(l1,l2) = " + std::to_string(want));
    }

    cl.check(j_zero(3, 3) == set_of({{Rational(1, 3), Rational(0)}}), "J0(3,3) = (-1,2)");
    bool empty2 = true;
    for (std::int64_t p2 = 2; p2 <= 40; ++p2) empty2 = empty2 && j_zero(2, p2).empty();
    cl.check(empty2, "J0(2,p2) empty");
    cl.check(j_pi(2, 4) == set_of({{Rational(3, 8), Rational(1, 8)}}), "Jpi(2,4) = (-sqrt2, sqrt2)");
    cl.check(j_pi(4, 4) == set_of({{Rational(1, 2), Rational(1, 4)}, {Rational(1, 4), Rational(0)}}),
             "Jpi(4,4) = (-2,0) u (0,2)");
    bool zero_ok = true;
    const CosValue zero = CosValue::from_rational(Rational(1, 4));
    for (std::int64_t p1 = 3; p1 <= 40; ++p1)
        for (std::int64_t p2 = p1; p2 <= 40; ++p2)
            if (j_pi_cached(p1, p2).contains(zero) != !(p1 == 4 && p2 == 4)) zero_ok = false;
    cl.check(zero_ok, "0 in Jpi(p1,p2) iff (p1,p2) != (4,4)");

    std::ostringstream os;
    os << (cl.total - cl.failed.size()) << "/" << cl.total << " fixtures match";
    if (!cl.failed.empty()) os << "; failed: " << join(cl.failed);
    c.pass = cl.failed.empty();
    c.detail = os.str();
    c.seconds = since(t0);
    return c;
}

// ---------------------------------------------------------------- criterion 4

CriterionResult criterion_intervals(std::int64_t p_max) {
    const auto t0 = Clock::now();
    CriterionResult c{4, "Interval oracle equivalence", false, false, "", 0};
    Checklist cl;
    long pairs = 0;
    const CosIntervalSet jpi24 = j_pi(2, 4);
    for (std::int64_t p1 = 2; p1 <= p_max; ++p1)
        for (std::int64_t p2 = p1; p2 <= p_max; ++p2) {
            ++pairs;
            const std::string tag = "(" + std::to_string(p1) + "," + std::to_string(p2) + ")";
            CosIntervalSet z = j_zero(p1, p2), pi = j_pi(p1, p2);
            cl.check(z == j_zero_bruteforce(p1, p2), "J0" + tag + " brute force");
            cl.check(pi == j_pi_bruteforce(p1, p2), "Jpi" + tag + " brute force");
            if (p1 >= 3) {
                cl.check(z.size() == 1, "J0" + tag + " connected");
                bool same = true;
                for (std::int64_t x = 0; x <= p1 * p2 && same; ++x)
                    same = s_set_membership(x, p1, p2) == s_set_membership_bruteforce(x, p1, p2, 2 * p2);
                cl.check(same, "S" + tag + " closed form");
            }
            if (p1 == 2) {
                bool symmetric = pi.size() == 1 &&
                                 pi.intervals()[0].lo.turn() + pi.intervals()[0].hi.turn() == Rational(1, 2);
                cl.check(symmetric, "Jpi" + tag + " symmetric interval");
                if (pi.size() == 1) {
                    const auto& iv = pi.intervals()[0];
                    bool nested = !(iv.lo > jpi24.intervals()[0].lo) && !(jpi24.intervals()[0].hi > iv.hi);
                    bool strict = iv.lo < jpi24.intervals()[0].lo;
                    cl.check(nested && (p2 == 4 || strict), "Jpi(2,4) nested in Jpi" + tag);
                }
            }
        }
    std::ostringstream os;
    os << pairs << " pairs, " << (cl.total - cl.failed.size()) << "/" << cl.total << " checks";
    if (!cl.failed.empty()) {
        std::vector<std::string> head(cl.failed.begin(), cl.failed.begin() + std::min<std::size_t>(6, cl.failed.size()));
        os << "; failed: " << join(head);
    }
    c.pass = cl.failed.empty();
    c.detail = os.str();
    c.seconds = since(t0);
    return c;
}

// ---------------------------------------------------------------- criterion 5

LongitudeData longitude_via_snf(const SeifertPiece& s) {
    validate(s);
    IntMatrix R{{(long)s.p1, 0, (long)s.q1}, {0, (long)s.p2, (long)s.q2}};
    SnfDecomposition d = snf_decompose(R);
    const IntMatrix& V = d.V;
    // boundary slope (x, y) -> x (a + b) + y h = (x, x, y); in Smith coordinates w V
    Integer cx = V(0, 2) + V(1, 2), cy = V(2, 2);
    Integer g = gcd(cx, cy);
    LongitudeData L;
    L.g = gcd64(s.p1, s.p2);
    if (g == 0) return L;
    Integer x = cy / g, y = -cx / g;
    if (x < 0) {
        x = -x;
        y = -y;
    }
    // order: n (w V)_i divisible by d_i for the two invariant factors
    Integer order = 1;
    for (int i = 0; i < 2; ++i) {
        Integer wi = x * (V(0, i) + V(1, i)) + y * V(2, i);
        Integer di = abs(d.D(i, i));
        if (di == 0) return {L.g, 0, 0, 0};
        Integer need = di / gcd(di, wi);
        order = lcm(order, need);
    }
    L.o = order.get_si();
    L.mu_coef = x.get_si();
    L.h_coef = y.get_si();
    return L;
}

CriterionResult criterion_homology(std::int64_t p_max) {
    const auto t0 = Clock::now();
    CriterionResult c{5, "Homology oracle (SNF) vs longitude formula", false, false, "", 0};
    Checklist cl;
    long pieces = 0;
    for (std::int64_t p1 = 2; p1 <= p_max; ++p1)
        for (std::int64_t q1 = 1; q1 < p1; ++q1)
            for (std::int64_t p2 = 2; p2 <= p_max; ++p2)
                for (std::int64_t q2 = 1; q2 < p2; ++q2) {
                    if (gcd64(p1, q1) != 1 || gcd64(p2, q2) != 1) continue;
                    ++pieces;
                    SeifertPiece s{p1, q1, p2, q2};
                    LongitudeData a = longitude(s), b = longitude_via_snf(s);
                    cl.check(a == b, s.str() + " longitude");
                    AbelianGroup h = homology(s);
                    AbelianGroup want{1, {}};
                    if (a.g > 1) want.torsion.push_back(Integer(a.g));
                    cl.check(h == want, s.str() + " H1 = Z + Z/g");
                }
    std::ostringstream os;
    os << pieces << " pieces, " << (cl.total - cl.failed.size()) << "/" << cl.total << " checks";
    if (!cl.failed.empty()) {
        std::vector<std::string> head(cl.failed.begin(), cl.failed.begin() + std::min<std::size_t>(6, cl.failed.size()));
        os << "; failed: " << join(head);
    }
    c.pass = cl.failed.empty();
    c.detail = os.str();
    c.seconds = since(t0);
    return c;
}

// ---------------------------------------------------------------- criterion 6

CriterionResult criterion_witnesses(const GridRun& r) {
    CriterionResult c{6, "Witness soundness for every not-abelian grid verdict", false, false, "", r.seconds};
    std::ostringstream os;
    os << r.witnesses_ok << "/" << r.not_abelian << " witnesses verified, failures " << r.witness_failures
       << ", fiber-centrality failures " << r.centrality_failures << ", worst residual " << r.worst_residual
       << ", weakest irreducibility " << (r.witnesses_ok ? r.weakest_irreducibility : 0.0);
    if (!r.samples.empty()) os << "; samples: " << join(r.samples);
    c.pass = r.not_abelian > 0 && r.witnesses_ok == r.not_abelian && r.witness_failures == 0 &&
             r.centrality_failures == 0 && r.worst_residual < 1e-9 && r.weakest_irreducibility > 1e-3;
    c.detail = os.str();
    return c;
}

// ---------------------------------------------------------------- criterion 7

namespace {

std::vector<GraphManifold> abelian_fixtures() {
    std::vector<GraphManifold> out{motegi_manifold(2, 3, 2, 3), motegi_manifold(2, 3, 2, 5),
                                   motegi_manifold(3, 4, 2, 5),
                                   {{4, 1, 5, 4}, {2, 1, 2, 1}, {-1, 1, 1, 0}},
                                   {{4, 1, 5, 4}, {2, 1, 2, 1}, {-1, 1, -1, 2}}};
    // deterministic scan of the grid for further abelian manifolds
    const std::size_t n = grid_size(6, 3);
    for (std::size_t i = 0; i < n && out.size() < 10; i += 7919) {
        for (std::size_t j = i; j < std::min(n, i + 2000); ++j) {
            GraphManifold M = grid_manifold(j, 6, 3);
            if (M.phi.beta != 1 && M.phi.beta != -1) continue;
            if (decide(M).su2_abelian) {
                out.push_back(M);
                break;
            }
        }
    }
    return out;
}

}  // namespace

CriterionResult criterion_oracle(int restarts, std::uint64_t seed) {
    const auto t0 = Clock::now();
    CriterionResult c{7, "Numeric oracle finds nothing on abelian fixtures (probabilistic)", false, false, "", 0};
    std::vector<GraphManifold> fx = abelian_fixtures();
    std::vector<std::string> found;
    for (const auto& M : fx) {
        if (!decide(M).su2_abelian) {
            found.push_back(M.str() + " is not abelian (fixture error)");
            continue;
        }
        SolveOptions opt;
        opt.restarts = restarts;
        opt.seed = seed;
        if (auto w = solve_numeric(build_presentation(M), opt))
            found.push_back(M.str() + " irreducibility " + std::to_string(w->irreducibility));
    }
    std::ostringstream os;
    os << fx.size() << " fixtures x " << restarts << " restarts (seed " << seed << "), irreducible found on "
       << found.size();
    if (!found.empty()) os << ": " << join(found);
    c.pass = found.empty() && fx.size() == 10;
    c.detail = os.str();
    c.seconds = since(t0);
    return c;
}

// ---------------------------------------------------------------- criterion 8

CriterionResult criterion_invariance(std::size_t samples, std::uint64_t seed) {
    const auto t0 = Clock::now();
    CriterionResult c{8, "Invariance under presentation shifts and swap", false, false, "", 0};
    std::mt19937_64 rng(seed);
    const std::size_t n = grid_size(6, 3);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<std::string> failures;
    long comparisons = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        GraphManifold M = grid_manifold(pick(rng), 6, 3);
        const bool v = decide(M).su2_abelian;
        auto compare = [&](const GraphManifold& N, const std::string& how) {
            ++comparisons;
            if (decide(N).su2_abelian != v && failures.size() < 6) failures.push_back(M.str() + " " + how);
        };
        for (int side = 1; side <= 2; ++side)
            for (int slot = 1; slot <= 2; ++slot)
                for (std::int64_t k = -3; k <= 3; ++k) {
                    if (k == 0) continue;
                    const SeifertPiece& piece = side == 1 ? M.m1 : M.m2;
                    compare(transport_presentation(M, side, shift_presentation(piece, slot, k)),
                            "shift side " + std::to_string(side) + " slot " + std::to_string(slot) + " k=" +
                                std::to_string(k));
                }
        compare(swap(M), "swap");
    }
    std::ostringstream os;
    os << samples << " manifolds, " << comparisons << " comparisons, " << failures.size() << " mismatches";
    if (!failures.empty()) os << ": " << join(failures);
    c.pass = failures.empty();
    c.detail = os.str();
    c.seconds = since(t0);
    return c;
}

// ---------------------------------------------------------------- criterion 9

namespace {

GraphManifold canonical(const GraphManifold& M) {
    GraphManifold N = normalize_q_both(M);
    auto order = [](SeifertPiece s) {
        if (std::make_pair(s.p2, s.q2) < std::make_pair(s.p1, s.q1)) s = swap_fibers(s);
        return s;
    };
    return {order(N.m1), order(N.m2), N.phi};
}

bool same_up_to_sign(const GraphManifold& a, const GraphManifold& b) {
    return a.m1 == b.m1 && a.m2 == b.m2 && (a.phi == b.phi || a.phi == b.phi.negated());
}

}  // namespace

bool equivalent_gluings(const GraphManifold& a, const GraphManifold& b) {
    GraphManifold ca = canonical(a), cb = canonical(b);
    return same_up_to_sign(ca, cb) || same_up_to_sign(ca, canonical(swap(b)));
}

std::vector<Class4Gluing> class4_enumeration(std::int64_t bound) {
    std::vector<SeifertPiece> left{{2, 1, 4, 1}, {2, 1, 4, 3}};
    std::vector<SeifertPiece> right{{3, 1, 3, 1}, {3, 1, 3, 2}, {3, 2, 3, 2}};
    std::vector<Class4Gluing> out;
    for (const auto& f : grid_matrices(bound))
        for (const auto& a : left)
            for (const auto& b : right) {
                GraphManifold M{a, b, f};
                if (!decide(M).su2_abelian) continue;
                auto cls = classify(M);
                if (!cls || cls->id != 4) continue;
                if (M.phi.alpha < 0 || (M.phi.alpha == 0 && M.phi.beta < 0)) continue;  // one sign per pair
                Class4Gluing g{M, cokernel(abelianization(build_presentation(M))), false};
                g.positive_betti = g.h1.free_rank > 0;
                out.push_back(g);
            }
    return out;
}

CriterionResult criterion_class4() {
    const auto t0 = Clock::now();
    CriterionResult c{9, "Class-4 enumeration vs the reference list", false, false, "", 0};
    const std::vector<GraphManifold> listed{
        {{2, 1, 4, 1}, {3, 1, 3, 1}, {0, 1, 1, -2}},
        {{2, 1, 4, 3}, {3, 1, 3, 1}, {-2, 1, 5, -2}},
        {{2, 1, 4, 3}, {3, 2, 3, 2}, {-2, 1, 1, 0}},
        {{2, 1, 4, 1}, {3, 2, 3, 2}, {0, 1, 1, 0}},
    };
    std::vector<Class4Gluing> found = class4_enumeration(6);
    std::vector<std::string> lines, missing, extra;
    std::vector<bool> matched(found.size(), false);
    for (std::size_t i = 0; i < listed.size(); ++i) {
        bool hit = false;
        for (std::size_t j = 0; j < found.size(); ++j)
            if (equivalent_gluings(listed[i], found[j].M)) {
                hit = true;
                matched[j] = true;
            }
        if (!hit) missing.push_back(listed[i].str());
    }
    std::vector<std::string> betti;
    for (std::size_t j = 0; j < found.size(); ++j) {
        if (!matched[j]) extra.push_back(found[j].M.str());
        if (found[j].positive_betti) betti.push_back(found[j].M.str());
    }
    const bool fourth_betti = decide(listed[3]).su2_abelian &&
                              cokernel(abelianization(build_presentation(listed[3]))).free_rank > 0;
    std::ostringstream os;
    os << "found " << found.size() << " class-4 gluings (up to sign); listed matched "
       << (listed.size() - missing.size()) << "/4";
    if (!missing.empty()) os << "; listed but not abelian/found: " << join(missing);
    if (!extra.empty()) os << "; found but not listed: " << join(extra);
    os << "; positive b1: " << (betti.empty() ? "none" : join(betti))
       << "; fourth listed has b1>0: " << (fourth_betti ? "yes" : "no");
    c.pass = missing.empty() && extra.empty() && fourth_betti;
    // The first two listed matrices have Delta(lambda_M2, h1) = 8 under the matrix convention
    // used throughout; explicit irreducible witnesses exist for them.
    c.documented_deviation = !c.pass && fourth_betti && missing.size() == 2 && extra.size() == 2;
    c.detail = os.str();
    c.seconds = since(t0);
    return c;
}

// ---------------------------------------------------------------- report

json verify_paper_report(bool full) {
    json rep;
    auto add = [&](const CriterionResult& c) {
        rep["criteria"].push_back({{"id", c.id},
                                   {"title", c.title},
                                   {"pass", c.pass},
                                   {"documented_deviation", c.documented_deviation},
                                   {"detail", c.detail},
                                   {"seconds", c.seconds}});
    };
    add(criterion_sweeps());
    add(criterion_fixtures());
    add(criterion_intervals());
    add(criterion_homology());
    add(criterion_class4());
    if (full) {
        GridOptions opt;
        opt.witnesses = true;
        GridRun r = run_grid(opt);
        add(criterion_dual_path(r));
        add(criterion_witnesses(r));
        add(criterion_oracle());
        add(criterion_invariance());
    }

    json figs = json::array();
    for (const auto& [label, piece] : {std::pair{"a", SeifertPiece{2, 1, 2, 1}}, std::pair{"b", SeifertPiece{2, 1, 4, 1}},
                                       std::pair{"c", SeifertPiece{3, 1, 3, 1}}, std::pair{"d", SeifertPiece{4, 1, 4, 1}}}) {
        PlotData d = plot_data(piece);
        json segs = json::array();
        for (const auto& s : d.h_segments)
            segs.push_back({{"psi", s.psi.str()}, {"theta", {to_string(s.theta_lo), to_string(s.theta_hi)}}});
        figs.push_back({{"figure", std::string("2") + label},
                        {"piece", piece.str()},
                        {"h_segments", segs},
                        {"a_line", {d.a_lines[0].coef_theta, d.a_lines[0].coef_psi}},
                        {"p_points", d.p_points.size()},
                        {"p_markers", d.p_markers}});
    }
    rep["figure2"] = figs;

    const SeifertPiece m1{4, 1, 5, 4}, m2{2, 1, 2, 1};
    rep["example_non_unique"] = {
        {"phi1_lambda1_lambda2", key_deltas({m1, m2, {-1, 1, 1, 0}}).l1l2},
        {"phi2_lambda1_lambda2", key_deltas({m1, m2, {-1, 1, -1, 2}}).l1l2},
    };
    bool all_pass = true;
    for (const auto& c : rep["criteria"]) all_pass = all_pass && (c["pass"].get<bool>() || c["documented_deviation"].get<bool>());
    rep["all_pass"] = all_pass;
    return rep;
}

}  // namespace su2ab
