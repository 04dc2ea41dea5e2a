#pragma once

#include "betti/degree_sequence.hpp"

#include <functional>
#include <vector>

namespace betti {

// The enumeration domain for desk-scale verification: degree sequences of
// length n in [n_lo, n_hi] satisfying min_d1 <= d_1 <= max_d1 and
// reg(D) <= 2*d_1 - 2 (or <= 2*d_1 - 3 when strengthened).  The regularity
// cap bounds d_n by n + 2*d_1 - 2, so each (n, d_1) block is finite.
//
// min_d1 defaults to 2, the theorems' hypothesis.  Lowering it to 1 is the
// negative-control mode: it admits the linear sequence {0,1,...,n}, whose
// pi-sum is only 2^n, demonstrating that the d_1 >= 2 hypothesis matters.
struct EnumSpec {
    long n_lo = 3;
    long n_hi = 3;
    long max_d1 = 8;
    long min_d1 = 2;
    bool strengthened = false;
};

// Streams every sequence in the domain exactly once.  For each n the order
// is lexicographic in the shift vector (d_1 - 1, ..., d_n - n), which is
// non-decreasing for any degree sequence; blocks are emitted in increasing
// n.  Deterministic.
void enumerate(const EnumSpec& spec, const std::function<void(const DegreeSequence&)>& fn);

std::vector<DegreeSequence> enumerate_all(const EnumSpec& spec);

}  // namespace betti
