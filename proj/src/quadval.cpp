#include "octa/quadval.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "octa/errors.hpp"

namespace octa {

QuadVal QuadVal::operator/(const QuadVal& o) const {
    if (o.is_zero()) throw Error("QuadVal: division by zero");
    // 1/(c + d r) = (c - d r)/(c^2 - 2 d^2)
    Rational n = o.norm();
    QuadVal inv(o.a_ / n, -o.b_ / n);
    return *this * inv;
}

int QuadVal::sign() const {
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 with 2 b^2. a + b r > 0 with a > 0, b < 0
    // iff a^2 > 2 b^2; with a < 0, b > 0 iff a^2 < 2 b^2.
    int c = cmp(a_ * a_, 2 * b_ * b_);
    if (c == 0) return 0; // impossible: sqrt(2) irrational, kept for safety
    return (c > 0) ? sa : sb;
}

double QuadVal::approx() const {
    // 128-bit intermediate keeps the final double rounding honest for the
    // magnitudes the library works at.
    mpf_class acc(0, 128);
    mpf_class t(0, 128);
    mpf_set_q(acc.get_mpf_t(), a_.get_mpq_t());
    mpf_set_q(t.get_mpf_t(), b_.get_mpq_t());
    mpf_class r2(0, 128);
    mpf_sqrt_ui(r2.get_mpf_t(), 2);
    acc += t * r2;
    return acc.get_d();
}

long QuadVal::floor() const {
    if (is_rational()) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a_.get_num().get_mpz_t(), a_.get_den().get_mpz_t());
        if (!q.fits_slong_p()) throw Error("QuadVal::floor: out of range");
        return q.get_si();
    }
    long m = static_cast<long>(std::floor(approx()));
    // Exact correction of the floating estimate.
    while ((*this - QuadVal(m)).sign() < 0) --m;
    while ((*this - QuadVal(m + 1)).sign() >= 0) ++m;
    return m;
}

std::string QuadVal::str() const {
    std::ostringstream os;
    os << a_.get_num() << "/" << a_.get_den();
    if (sgn(b_) >= 0)
        os << "+" << b_.get_num() << "/" << b_.get_den() << "*r2";
    else
        os << "-" << -b_.get_num() << "/" << b_.get_den() << "*r2";
    return os.str();
}

namespace {

Rational parse_rat(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational in QuadVal literal");
    try {
        Rational r;
        if (s.find('/') == std::string::npos)
            r = Rational(s + "/1");
        else
            r = Rational(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational '" + s + "' in QuadVal literal");
    }
}

} // namespace

QuadVal QuadVal::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty QuadVal literal");

    // Split at the sign that separates the rational part from the r2 part.
    // Either part may be absent: "3/2", "-5", "1/2*r2", "3-1/2*r2".
    size_t star = s.find("*r2");
    if (star == std::string::npos) {
        if (s.find("r2") != std::string::npos) throw ParseError("expected '*r2' in '" + text + "'");
        return QuadVal(parse_rat(s));
    }
    std::string head = s.substr(0, star);
    if (star + 3 != s.size()) throw ParseError("trailing junk in '" + text + "'");
    // Find the split sign: last '+' or '-' not at position 0 and not after '/'.
    size_t split = std::string::npos;
    for (size_t i = head.size(); i-- > 1;) {
        if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/' && head[i - 1] != '+' &&
            head[i - 1] != '-') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) return QuadVal(Rational(0), parse_rat(head));
    Rational a = parse_rat(head.substr(0, split));
    std::string btxt = head.substr(split + 1);
    Rational b = parse_rat(btxt);
    if (head[split] == '-') b = -b;
    return QuadVal(a, b);
}

std::ostream& operator<<(std::ostream& os, const QuadVal& v) { return os << v.str(); }

} // namespace octa
