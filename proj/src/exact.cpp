#include "su2ab/exact.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace su2ab {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational frac(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    Rational out = r - Rational(q);
    return out;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Turn::Turn(const Rational& r) : v_(frac(r)) {}

Turn::Turn(long num, long den) : v_(frac(make_rational(num, den))) {}

bool Turn::is_central() const { return v_ == 0 || v_ == Rational(1, 2); }

std::strong_ordering operator<=>(const Turn& a, const Turn& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

CosValue CosValue::from_turn(const Turn& t) {
    CosValue c;
    const Rational& v = t.value();
    Rational w = 1 - v;
    c.t_ = (v <= w) ? v : w;
    return c;
}

double CosValue::value() const { return 2.0 * std::cos(2.0 * std::numbers::pi * t_.get_d()); }

std::string CosValue::str() const { return "2cos(2pi*" + t_.get_str() + ")"; }

std::string CosValue::pretty() const {
    static const std::pair<Rational, const char*> named[] = {
        {Rational(0), "2"},           {Rational(1, 12), "\u221a3"}, {Rational(1, 8), "\u221a2"},
        {Rational(1, 6), "1"},        {Rational(1, 4), "0"},         {Rational(1, 3), "-1"},
        {Rational(3, 8), "-\u221a2"}, {Rational(5, 12), "-\u221a3"}, {Rational(1, 2), "-2"},
    };
    for (const auto& [t, name] : named)
        if (t_ == t) return name;
    return str();
}

std::strong_ordering operator<=>(const CosValue& a, const CosValue& b) {
    // cosine decreases on [0, 1/2]
    int c = cmp(b.t_, a.t_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

CosValue cos_value(const Turn& t) { return CosValue::from_turn(t); }

std::strong_ordering cos_compare(const CosValue& a, const CosValue& b) { return a <=> b; }

bool CosIntervalSet::contains(const CosValue& x) const {
    // intervals are sorted and disjoint; a linear scan is fine for the sizes used here
    for (const auto& iv : iv_) {
        if (x <= iv.lo) return false;
        if (x < iv.hi) return true;
    }
    return false;
}

std::string CosIntervalSet::str() const {
    if (iv_.empty()) return "{}";
    std::ostringstream os;
    for (std::size_t i = 0; i < iv_.size(); ++i) {
        if (i) os << " u ";
        os << "(" << iv_[i].lo.str() << ", " << iv_[i].hi.str() << ")";
    }
    return os.str();
}

std::string CosIntervalSet::pretty() const {
    if (iv_.empty()) return "\u2205";
    std::string out;
    for (std::size_t i = 0; i < iv_.size(); ++i) {
        if (i) out += " \u222a ";
        out += "(" + iv_[i].lo.pretty() + "," + iv_[i].hi.pretty() + ")";
    }
    return out;
}

CosIntervalSet interval_set_union(std::vector<CosInterval> parts) {
    std::erase_if(parts, [](const CosInterval& iv) { return !(iv.lo < iv.hi); });
    std::sort(parts.begin(), parts.end(),
              [](const CosInterval& a, const CosInterval& b) { return a.lo < b.lo; });
    CosIntervalSet out;
    for (const auto& iv : parts) {
        if (!out.iv_.empty() && iv.lo < out.iv_.back().hi) {
            if (out.iv_.back().hi < iv.hi) out.iv_.back().hi = iv.hi;
        } else {
            out.iv_.push_back(iv);
        }
    }
    return out;
}

CosIntervalSet interval_set_union(const CosIntervalSet& a, const CosIntervalSet& b) {
    std::vector<CosInterval> all = a.intervals();
    all.insert(all.end(), b.intervals().begin(), b.intervals().end());
    return interval_set_union(std::move(all));
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix");
        for (long v : r) a_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if ((*this)(i, k) == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += (*this)(i, k) * o(k, j);
        }
    return r;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row a -= f * row b
void row_axpy(IntMatrix& m, std::size_t a, std::size_t b, const Integer& f) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) -= f * m(b, j);
}
void col_axpy(IntMatrix& m, std::size_t a, std::size_t b, const Integer& f) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, a) -= f * m(i, b);
}

}  // namespace

SnfDecomposition snf_decompose(const IntMatrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    SnfDecomposition s{IntMatrix::identity(R), m, IntMatrix::identity(C)};
    IntMatrix& D = s.D;
    const std::size_t n = std::min(R, C);
    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block becomes the pivot
            bool found = false;
            std::size_t pi = t, pj = t;
            Integer best;
            for (std::size_t i = t; i < R; ++i)
                for (std::size_t j = t; j < C; ++j)
                    if (D(i, j) != 0 && (!found || abs(D(i, j)) < best)) {
                        found = true;
                        best = abs(D(i, j));
                        pi = i;
                        pj = j;
                    }
            if (!found) return s;
            swap_rows(D, t, pi);
            swap_rows(s.U, t, pi);
            swap_cols(D, t, pj);
            swap_cols(s.V, t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < R; ++i) {
                if (D(i, t) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
                row_axpy(D, i, t, q);
                row_axpy(s.U, i, t, q);
                if (D(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < C; ++j) {
                if (D(t, j) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
                col_axpy(D, j, t, q);
                col_axpy(s.V, j, t, q);
                if (D(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // divisibility: fold a violating row into the pivot row and retry
            bool divides = true;
            for (std::size_t i = t + 1; i < R && divides; ++i)
                for (std::size_t j = t + 1; j < C; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        row_axpy(D, t, i, Integer(-1));
                        row_axpy(s.U, t, i, Integer(-1));
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (D(t, t) < 0) {
            row_axpy(D, t, t, Integer(2));  // negate row t
            row_axpy(s.U, t, t, Integer(2));
        }
    }
    return s;
}

std::vector<Integer> snf(const IntMatrix& m) {
    SnfDecomposition s = snf_decompose(m);
    std::vector<Integer> d;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) d.push_back(s.D(i, i));
    return d;
}

AbelianGroup cokernel(const IntMatrix& relations) {
    AbelianGroup g;
    std::vector<Integer> d = snf(relations);
    long rank = 0;
    for (const auto& x : d) {
        if (x != 0) ++rank;
        if (x > 1) g.torsion.push_back(x);
    }
    g.free_rank = static_cast<long>(relations.cols()) - rank;
    return g;
}

std::string AbelianGroup::str() const {
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
        os << "Z";
        if (free_rank > 1) os << "^" << free_rank;
        first = false;
    }
    for (const auto& t : torsion) {
        if (!first) os << " + ";
        os << "Z/" << t.get_str();
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t mod64(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
    std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    x = old_s;
    y = old_t;
    return old_r;
}

}  // namespace su2ab
