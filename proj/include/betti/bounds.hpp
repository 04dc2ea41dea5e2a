#pragma once

#include "betti/degree_sequence.hpp"
#include "betti/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace betti {

// The bound function F(a,b,e,n,i): the value of pi_i(D^i) divided by
// binomial(n,i) for any degree sequence whose shape parameters at i are
// (a,b,e,n,i).  Evaluated directly as the product of three groupings of
// exact fractions,
//
//   prod_{t=0}^{i-2} (a+t)/(b+1+t)              (empty when i = 1)
//   prod_{t=1}^{R}   (n+t)/(i+t),  R = a+b+e-1
//   prod_{t=1}^{e}   t/(n-i+t)                  (empty when e = 0)
//
// with no simplification shortcuts: the definition is the normative object.
// Domain: a >= 2, b >= 0, e >= 0, n >= 3, 1 <= i <= n.
Rat F(long a, long b, long e, long n, long i);
Rat F(const ShapeParams& p);

// G(b,e,i) = F(b+e+1, b, e, 2i-1, i): the bound at the minimal admissible a
// and n for position i.  Domain: b,e >= 0 with b+e >= 1, i >= 2.
Rat G(long b, long e, long i);

// G1(e,n) = F(e+1, 0, e, n, 1): the i = 1 specialization (b is forced to 0
// at i = 1, and the regularity cap forces a = e+1).  Domain: e >= 1, n >= 3.
// For e = 1 the value has the closed form (n+1)(n+2)/(6n).
Rat G1(long e, long n);

// The monotonicity/threshold lemmas checked on integer grids.
enum class LemmaId { Fa, Fn, Fbe0, Gi, Gbe2, G1e, G1n9 };

std::string lemma_name(LemmaId id);
LemmaId lemma_from_string(const std::string& name);
std::vector<LemmaId> all_lemmas();

// Inclusive grid bounds for the lemma checks.  The i index of the F-lemmas
// ranges over [1, n] at each grid point; (Gi) walks its own index up to
// i_hi; (G1n9) scans n in [3, g1_n_hi].
struct LemmaGrid {
    long a_lo = 2, a_hi = 8;
    long b_lo = 0, b_hi = 5;
    long e_lo = 0, e_hi = 5;
    long n_lo = 3, n_hi = 12;
    long i_hi = 12;
    long g1_n_hi = 50;
};

struct LemmaViolation {
    long a = 0, b = 0, e = 0, n = 0, i = 0;
    Rat lhs, rhs;  // the two sides of the failed comparison

    std::string to_string() const;
};

struct LemmaReport {
    LemmaId id;
    long points_checked = 0;
    std::vector<LemmaViolation> violations;

    bool passed() const { return violations.empty(); }
};

// Exhaustively checks one lemma over the grid.  Every comparison is exact.
// Each lemma's hypothesis filter is applied unless `filtered` is false; the
// unfiltered mode exists to demonstrate that the hypotheses are necessary
// (e.g. (Gbe2) without the b >= 2 or e >= 2 hypothesis records the genuine
// violation G(1,1,2) = 7/4 < 2).
LemmaReport check_lemma(LemmaId id, const LemmaGrid& grid = {}, bool filtered = true);

// The sharpness example for (Fn): F is not monotone in n once the hypothesis
// b+e <= a-1 is dropped.  Returns (F(2,0,2,5,3), F(2,0,2,6,3)) and throws if
// the first does not strictly exceed the second.
std::pair<Rat, Rat> fn_sharpness();

// One row of the computation table: an exactly evaluated bound value with
// its two-decimal display and its >= 2 flag.  Rows with asserted == false
// are informational only (G(1,1,2) genuinely sits below 2; the case
// analysis routes around it).
struct ComputationEntry {
    std::string label;
    Rat value;
    std::string display;
    bool at_least_two = false;
    bool asserted = true;
};

// Every value named in the numbered computations, exactly: G(1,0,3),
// G(0,1,3), G(1,1,3); F(3,1,1,4,2), F(2,1,0,4,2), F(2,0,1,7,2);
// F(3,1,1,6,2), G1(2,6); the eight values F(3,b,e,6,i) for i in 1..4 and
// (b,e) in {(1,0),(0,1)}; plus the informational G(1,1,2) row.
std::vector<ComputationEntry> computation_table();

}  // namespace betti
