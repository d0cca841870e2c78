#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace octa {

using Rational = mpq_class;

/// Exact element of Q(sqrt 2), stored as a + b*sqrt(2) with rational a, b.
///
/// All arithmetic is exact; sign and comparison are decided without
/// floating point. Values are immutable in spirit: every operation
/// returns a fresh value and no method mutates through const access.
class QuadVal {
  public:
    QuadVal() : a_(0), b_(0) {}
    QuadVal(long v) : a_(v), b_(0) {} // NOLINT(google-explicit-constructor)
    QuadVal(Rational a) : a_(std::move(a)), b_(0) { a_.canonicalize(); } // NOLINT
    QuadVal(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
        a_.canonicalize();
        b_.canonicalize();
    }

    /// a + b*sqrt(2) from four integers: a = an/ad, b = bn/bd.
    static QuadVal make(long an, long ad, long bn, long bd) {
        return QuadVal(Rational(an, ad), Rational(bn, bd));
    }
    /// The element sqrt(2).
    static QuadVal sqrt2() { return QuadVal(Rational(0), Rational(1)); }

    const Rational& ratpart() const { return a_; }
    const Rational& radpart() const { return b_; }
    bool is_rational() const { return sgn(b_) == 0; }
    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

    QuadVal operator-() const { return QuadVal(-a_, -b_); }
    QuadVal operator+(const QuadVal& o) const { return QuadVal(a_ + o.a_, b_ + o.b_); }
    QuadVal operator-(const QuadVal& o) const { return QuadVal(a_ - o.a_, b_ - o.b_); }
    QuadVal operator*(const QuadVal& o) const {
        // (a + b r)(c + d r) = (ac + 2bd) + (ad + bc) r
        return QuadVal(a_ * o.a_ + 2 * b_ * o.b_, a_ * o.b_ + b_ * o.a_);
    }
    QuadVal operator/(const QuadVal& o) const;

    QuadVal& operator+=(const QuadVal& o) { return *this = *this + o; }
    QuadVal& operator-=(const QuadVal& o) { return *this = *this - o; }
    QuadVal& operator*=(const QuadVal& o) { return *this = *this * o; }
    QuadVal& operator/=(const QuadVal& o) { return *this = *this / o; }

    bool operator==(const QuadVal& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const QuadVal& o) const { return !(*this == o); }
    bool operator<(const QuadVal& o) const { return (*this - o).sign() < 0; }
    bool operator>(const QuadVal& o) const { return (*this - o).sign() > 0; }
    bool operator<=(const QuadVal& o) const { return (*this - o).sign() <= 0; }
    bool operator>=(const QuadVal& o) const { return (*this - o).sign() >= 0; }

    /// Exact sign of the real value a + b*sqrt(2), in {-1, 0, +1}.
    int sign() const;

    /// Galois conjugate a - b*sqrt(2).
    QuadVal conj() const { return QuadVal(a_, -b_); }

    /// Field norm a^2 - 2 b^2 (a rational).
    Rational norm() const { return a_ * a_ - 2 * b_ * b_; }

    /// Double approximation (not part of any exact predicate).
    double approx() const;

    /// Exact floor as an integer (value assumed to fit in long).
    long floor() const;

    /// Canonical text form "a/b+c/d*r2"; parsing inverts it exactly.
    std::string str() const;
    static QuadVal parse(const std::string& text);

  private:
    Rational a_, b_;
};

std::ostream& operator<<(std::ostream& os, const QuadVal& v);

inline QuadVal operator*(long k, const QuadVal& v) { return QuadVal(k) * v; }

} // namespace octa
