#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace su2ab {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Fractional part in [0, 1).
Rational frac(const Rational& r);

std::string to_string(const Rational& r);

// An angle measured in full revolutions, kept reduced mod 1.
class Turn {
public:
    Turn() = default;
    explicit Turn(const Rational& r);
    Turn(long num, long den);

    const Rational& value() const { return v_; }

    Turn operator+(const Turn& o) const { return Turn(v_ + o.v_); }
    Turn operator-(const Turn& o) const { return Turn(v_ - o.v_); }
    Turn operator-() const { return Turn(-v_); }
    Turn times(long k) const { return Turn(v_ * k); }
    Turn times(const Integer& k) const { return Turn(v_ * Rational(k)); }

    bool is_zero() const { return v_ == 0; }
    bool is_central() const;  // 0 or 1/2
    double to_double() const { return v_.get_d(); }
    std::string str() const { return to_string(v_); }

    friend bool operator==(const Turn& a, const Turn& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Turn& a, const Turn& b);

private:
    Rational v_{0};
};

// Exact representative of 2cos(2*pi*t): the turn folded into [0, 1/2].
// Values compare in the reverse order of their turns.
class CosValue {
public:
    CosValue() = default;
    static CosValue from_turn(const Turn& t);
    static CosValue from_rational(const Rational& r) { return from_turn(Turn(r)); }

    const Rational& turn() const { return t_; }
    double value() const;  // 2cos(2 pi t)
    std::string str() const;
    // Closed form for the common angles (2, sqrt2, -1, ...), str() otherwise.
    std::string pretty() const;

    friend bool operator==(const CosValue& a, const CosValue& b) { return a.t_ == b.t_; }
    friend std::strong_ordering operator<=>(const CosValue& a, const CosValue& b);

private:
    Rational t_{0};
};

CosValue cos_value(const Turn& t);
std::strong_ordering cos_compare(const CosValue& a, const CosValue& b);

// Open interval (lo, hi) in the cosine order.
struct CosInterval {
    CosValue lo;
    CosValue hi;

    bool contains(const CosValue& x) const { return lo < x && x < hi; }
    friend bool operator==(const CosInterval&, const CosInterval&) = default;
};

class CosIntervalSet {
public:
    CosIntervalSet() = default;

    const std::vector<CosInterval>& intervals() const { return iv_; }
    bool empty() const { return iv_.empty(); }
    std::size_t size() const { return iv_.size(); }
    bool contains(const CosValue& x) const;
    std::string str() const;
    std::string pretty() const;  // e.g. "(-2,0) ∪ (0,2)"

    friend bool operator==(const CosIntervalSet&, const CosIntervalSet&) = default;
    friend CosIntervalSet interval_set_union(std::vector<CosInterval> parts);

private:
    std::vector<CosInterval> iv_;
};

// Union of open intervals. Intervals touching at a single endpoint stay apart.
CosIntervalSet interval_set_union(std::vector<CosInterval> parts);
CosIntervalSet interval_set_union(const CosIntervalSet& a, const CosIntervalSet& b);

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Integer& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    static IntMatrix identity(std::size_t n);
    IntMatrix operator*(const IntMatrix& o) const;
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Integer> a_;
};

// Invariant factors d1 | d2 | ... of length min(rows, cols); zeros last.
std::vector<Integer> snf(const IntMatrix& m);

// U * m * V = D with U, V unimodular and D diagonal in Smith form.
struct SnfDecomposition {
    IntMatrix U, D, V;
};
SnfDecomposition snf_decompose(const IntMatrix& m);

// Cokernel of Z^rows -> Z^cols, i.e. generators are columns and each row is a relation.
struct AbelianGroup {
    long free_rank = 0;
    std::vector<Integer> torsion;  // nontrivial invariant factors, > 1

    std::string str() const;
    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};
AbelianGroup cokernel(const IntMatrix& relations);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t mod64(std::int64_t a, std::int64_t m);  // result in [0, m)
// Returns g = gcd(a, b) and x, y with a x + b y = g.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y);

}  // namespace su2ab
