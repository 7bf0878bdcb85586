#include "su2ab/repsets.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace su2ab {

namespace {

void add_arc(std::vector<HSegment>& out, const Turn& psi, const Rational& lo, const Rational& hi,
             const Rational& shift) {
    // arc (lo, hi) with 0 <= lo < hi <= 1, rotated by shift and split at the wrap point
    Rational a = lo + shift, b = hi + shift;
    Rational base = frac(a);
    Rational k = a - base;
    a -= k;
    b -= k;
    if (b <= 1) {
        out.push_back({psi, a, b});
    } else {
        out.push_back({psi, a, Rational(1)});
        out.push_back({psi, Rational(0), Rational(b - 1)});
    }
}

}  // namespace

std::vector<HSegment> h_segments(const SeifertPiece& piece) {
    validate(piece);
    Represented r = make_q_odd(sort_fibers(piece));
    const std::int64_t shift = -r.change.c;  // theta = theta_odd + shift * psi
    std::vector<HSegment> out;
    for (int lv = 0; lv < 2; ++lv) {
        Turn psi(lv, 2);
        const CosIntervalSet& J = lv ? j_pi_cached(r.piece.p1, r.piece.p2) : j_zero_cached(r.piece.p1, r.piece.p2);
        Rational s = frac(Rational(shift) * psi.value());
        for (const auto& iv : J.intervals()) {
            const Rational& t_lo = iv.lo.turn();  // larger turn
            const Rational& t_hi = iv.hi.turn();
            add_arc(out, psi, t_hi, t_lo, s);
            add_arc(out, psi, Rational(1 - t_lo), Rational(1 - t_hi), s);
        }
    }
    return out;
}

std::size_t count_markers(const std::vector<TorusPoint>& pts) {
    std::size_t n = 0;
    for (const auto& p : pts) n += (p.theta.is_zero() ? 2 : 1) * (p.psi.is_zero() ? 2 : 1);
    return n;
}

namespace {

void fill_piece(const SeifertPiece& piece, std::vector<HSegment>& h, std::vector<ALine>& a,
                std::vector<TorusPoint>& p) {
    h = h_segments(piece);
    LongitudeData L = longitude(piece);
    a.push_back({L.o * L.mu_coef, L.o * L.h_coef});
    for (int i = 0; i < 4; ++i) {
        TorusPoint e{Turn(i / 2, 2), Turn(i % 2, 2)};
        if (p_membership(piece, e)) p.push_back(e);
    }
}

}  // namespace

PlotData plot_data(const SeifertPiece& piece) {
    PlotData d;
    d.piece = piece;
    fill_piece(piece, d.h_segments, d.a_lines, d.p_points);
    d.p_markers = count_markers(d.p_points);
    return d;
}

PlotData plot_data(const GraphManifold& M) {
    validate(M);
    PlotData d = plot_data(M.m1);
    d.overlay_phi = M.phi;
    std::vector<ALine> a2;
    std::vector<TorusPoint> p2;
    fill_piece(M.m2, d.overlay_h, a2, p2);
    const auto& f = M.phi;
    for (const auto& l : a2)
        d.overlay_a.push_back({f.beta * l.coef_psi - f.delta * l.coef_theta, f.gamma * l.coef_theta - f.alpha * l.coef_psi});
    for (const auto& e : p2) d.overlay_p.push_back(to_side1(f, e));
    return d;
}

// ------------------------------------------------------------------ SVG

namespace {

constexpr double kSize = 800, kMargin = 70, kSide = kSize - 2 * kMargin;

double sx(double theta) { return kMargin + theta * kSide; }
double sy(double psi) { return kSize - kMargin - psi * kSide; }

void line(std::ostream& os, double x0, double y0, double x1, double y1, const char* color, double width,
          const char* extra = "") {
    os << "<line x1=\"" << sx(x0) << "\" y1=\"" << sy(y0) << "\" x2=\"" << sx(x1) << "\" y2=\"" << sy(y1)
       << "\" stroke=\"" << color << "\" stroke-width=\"" << width << "\"" << extra << "/>\n";
}

// Segments of {a theta + b psi in Z} inside the unit square.
void lattice_lines(std::ostream& os, const ALine& l, const char* color, const char* extra) {
    const double a = double(l.coef_theta), b = double(l.coef_psi);
    if (a == 0 && b == 0) {
        os << "<rect x=\"" << sx(0) << "\" y=\"" << sy(1) << "\" width=\"" << kSide << "\" height=\"" << kSide
           << "\" fill=\"" << color << "\" fill-opacity=\"0.15\"/>\n";
        return;
    }
    const long K = std::labs(l.coef_theta) + std::labs(l.coef_psi);
    for (long k = -K; k <= K; ++k) {
        std::vector<std::pair<double, double>> pts;
        auto push = [&](double t, double p) {
            if (t < -1e-12 || t > 1 + 1e-12 || p < -1e-12 || p > 1 + 1e-12) return;
            for (auto& q : pts)
                if (std::abs(q.first - t) < 1e-12 && std::abs(q.second - p) < 1e-12) return;
            pts.emplace_back(t, p);
        };
        if (b != 0) {
            push(0, k / b);
            push(1, (k - a) / b);
        }
        if (a != 0) {
            push(k / a, 0);
            push((k - b) / a, 1);
        }
        if (pts.size() >= 2) line(os, pts[0].first, pts[0].second, pts[1].first, pts[1].second, color, 2, extra);
    }
}

void marker(std::ostream& os, double t, double p, const char* color, bool hollow) {
    for (double dt : {0.0, 1.0})
        for (double dp : {0.0, 1.0}) {
            double x = t + dt, y = p + dp;
            if (x > 1 || y > 1) continue;
            os << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"7\" fill=\""
               << (hollow ? "none" : color) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        }
}

std::string pi_label(int k) {
    switch (k) {
        case 0: return "0";
        case 1: return "\xCF\x80/2";
        case 2: return "\xCF\x80";
        case 3: return "3\xCF\x80/2";
        default: return "2\xCF\x80";
    }
}

}  // namespace

std::string plot_svg(const PlotData& d, const std::string& title) {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n"
       << "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
    os << "<text x=\"400\" y=\"35\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"20\">"
       << (title.empty() ? d.piece.str() : title) << "</text>\n";
    os << "<rect x=\"" << sx(0) << "\" y=\"" << sy(1) << "\" width=\"" << kSide << "\" height=\"" << kSide
       << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    for (int k = 0; k <= 4; ++k) {
        double t = k / 4.0;
        line(os, t, 0, t, 1, "#dddddd", 1);
        line(os, 0, t, 1, t, "#dddddd", 1);
        os << "<text x=\"" << sx(t) << "\" y=\"" << sy(0) + 25 << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">"
           << pi_label(k) << "</text>\n";
        os << "<text x=\"" << sx(0) - 12 << "\" y=\"" << sy(t) + 5 << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"16\">"
           << pi_label(k) << "</text>\n";
    }
    os << "<text x=\"400\" y=\"" << kSize - 15 << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"18\">\xCE\xB8</text>\n"
       << "<text x=\"20\" y=\"400\" font-family=\"sans-serif\" font-size=\"18\">\xCF\x88</text>\n";

    for (const auto& l : d.a_lines) lattice_lines(os, l, "#1f77b4", "");
    for (const auto& s : d.h_segments) {
        double p = s.psi.to_double();
        for (double y : (p == 0 ? std::vector<double>{0.0, 1.0} : std::vector<double>{p}))
            line(os, s.theta_lo.get_d(), y, s.theta_hi.get_d(), y, "#ff7f0e", 5);
    }
    if (d.overlay_phi) {
        const auto& f = *d.overlay_phi;
        for (const auto& l : d.overlay_a) lattice_lines(os, l, "#17becf", " stroke-dasharray=\"8,5\"");
        // side-2 H segments are slanted in side-1 coordinates; draw them as wrapped polylines
        for (const auto& s : d.overlay_h) {
            const int steps = 400;
            double lo = s.theta_lo.get_d(), hi = s.theta_hi.get_d(), psi2 = s.psi.to_double();
            double px = 0, py = 0;
            for (int i = 0; i <= steps; ++i) {
                double t2 = lo + (hi - lo) * (i + 0.5 * (i == 0) - 0.5 * (i == steps)) / steps;
                double t1 = f.alpha * t2 + f.gamma * psi2, p1 = f.beta * t2 + f.delta * psi2;
                t1 -= std::floor(t1);
                p1 -= std::floor(p1);
                if (i > 0 && std::abs(t1 - px) < 0.5 && std::abs(p1 - py) < 0.5)
                    line(os, px, py, t1, p1, "#ff7f0e", 3, " stroke-dasharray=\"6,4\"");
                px = t1;
                py = p1;
            }
        }
        for (const auto& p : d.overlay_p) marker(os, p.theta.to_double(), p.psi.to_double(), "#9b1c1c", true);
    }
    for (const auto& p : d.p_points) marker(os, p.theta.to_double(), p.psi.to_double(), "#d62728", false);
    os << "</svg>\n";
    return os.str();
}

}  // namespace su2ab
