#pragma once

#include "betti/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace betti {

// A degree sequence: strictly increasing integers 0 = d_0 < d_1 < ... < d_n
// with n >= 1.  This is the combinatorial backbone of a pure free
// resolution: position i carries the degree of the i-th syzygy module.
// Sequences not starting at 0 are rejected rather than shifted, so user
// errors surface instead of being silently normalized.
class DegreeSequence {
public:
    explicit DegreeSequence(std::vector<long> degrees);

    long n() const { return static_cast<long>(d_.size()) - 1; }
    long operator[](long i) const { return d_.at(static_cast<std::size_t>(i)); }
    const std::vector<long>& degrees() const { return d_; }

    // reg(D) = d_n - n: the index of the bottom row of the displayed diagram.
    long regularity() const { return d_.back() - n(); }

    // The shift vector (d_1 - 1, ..., d_n - n).  Strict increase of the
    // degrees makes it non-decreasing, which is what the enumeration walks.
    std::vector<long> shift_vector() const;

    std::string to_string() const;  // "{0,2,3,5}"

    // Lexicographic on the degree vector; identical to lexicographic order
    // of the shift vector, since the two differ by a fixed per-position
    // offset.
    friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;

private:
    std::vector<long> d_;
};

std::ostream& operator<<(std::ostream& os, const DegreeSequence& D);

// Shape of a degree sequence around position i, the five-parameter view
// (a, b, e, n, i) used by the bound function F:
//   a = d_1, b = d_i - a - i + 1, e = d_n - d_i - n + i.
// Consistency: d_n = a + b + e + n - 1 and reg(D) = a + b + e - 1, so b + e
// does not depend on i.
struct ShapeParams {
    long a = 0;
    long b = 0;
    long e = 0;
    long n = 0;
    long i = 0;

    friend bool operator==(const ShapeParams&, const ShapeParams&) = default;
};

// pi_i(D) = (d_1 ... d_n) / prod_{j != i} |d_i - d_j|, the normalized Betti
// number forced by the Herzog-Kuehl equations; pi_0 = 1.  Computed as a
// product of exact fractions d_j / |d_i - d_j| over j in [1, n] \ {i},
// reducing after every multiplication to keep intermediates small.
Rat pi(const DegreeSequence& D, long i);

// Sum of pi_i(D) over i = 0..n; the quantity bounded below by 2^n + 2^(n-1).
Rat sum_pi(const DegreeSequence& D);

// The truncation D^i: head pushed up against the linear strand ending at
// d_i, tail pulled down against d_n,
//   D^i = {0, a, a+1, ..., a+(i-2), d_i, d_n-(n-i-1), ..., d_n}.
// Same length, same first degree a and last degree d_n, entry i unchanged.
// Minimizes pi_i among sequences comparable to D (domination lemma).
DegreeSequence truncate(const DegreeSequence& D, long i);

// Shape parameters of D at position i (requires 1 <= i <= n).
ShapeParams shape_params(const DegreeSequence& D, long i);

// The k-th Herzog-Kuehl moment sum_{i=0}^n (-1)^i d_i^k pi_i(D), with the
// convention 0^0 = 1.  Identically zero for 0 <= k <= n-1; kept as a test
// oracle for the pi values.
Rat hk_moment(const DegreeSequence& D, long k);

}  // namespace betti
