#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>

namespace betti {

// Arbitrary-precision integer.
using Int = mpz_class;

// Exact rational number, always held in canonical form: reduced to lowest
// terms with a strictly positive denominator.  Every operation preserves
// canonicity, so structural equality is value equality.  All quantities in
// this library (pi values, decomposition coefficients, bound functions,
// polynomial coefficients) live in this type; there is no floating point.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long value) : v_(value) {}  // NOLINT: implicit by design, ints embed
    Rat(const Int& value) : v_(value) {}
    Rat(const Int& num, const Int& den);
    Rat(long num, long den);

    // Parses the canonical fraction syntax: optional leading '-', digits,
    // optionally followed by '/' and a positive integer.  Anything else
    // (including a zero denominator) throws std::invalid_argument.
    static Rat parse(const std::string& text);

    Int numerator() const { return v_.get_num(); }
    Int denominator() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // Canonical string: "p/q", with "/q" omitted when q = 1.
    std::string to_string() const { return v_.get_str(); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    friend Rat abs(const Rat& r) { return Rat(mpq_class(abs(r.v_))); }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
        return os << r.to_string();
    }

private:
    explicit Rat(const mpq_class& v) : v_(v) {}

    mpq_class v_;
};

// Exact binomial coefficient C(n, k); zero when k < 0 or k > n.
Int binomial(long n, long k);

// base^exp for a nonnegative exponent, with 0^0 = 1.
Int ipow(const Int& base, long exp);

// Greatest common divisor / least common multiple, both nonnegative.
Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

// gcd extended to rationals: the largest positive rational dividing both
// arguments to integers, i.e. gcd(p/q, r/s) = gcd(p,r)/lcm(q,s).  Returns 0
// only when both arguments are 0.
Rat rat_gcd(const Rat& a, const Rat& b);

// Renders r rounded to `places` decimal digits under round-half-away-from-
// zero, then trims trailing zeros (and a trailing point), matching the
// displays "2.1", "2.33", "2" used throughout the computation tables.
std::string decimal_display(const Rat& r, int places = 2);

}  // namespace betti
