#pragma once

#include "betti/enumerate.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace betti {

enum class TheoremId { total_bound, half_double, erman_bound, special_cases };

std::string to_string(TheoremId id);

// One failed (or observed) comparison: the bound's two sides at a concrete
// sequence, with the column index when the bound is per-index (i = -1 for
// the total bound).
struct BoundViolation {
    DegreeSequence D;
    long i = -1;
    Rat lhs, rhs;

    std::string to_string() const;
};

struct VerifyReport {
    TheoremId theorem = TheoremId::total_bound;
    EnumSpec spec;
    long checked = 0;     // sequences checked = enumerated - excluded
    long equalities = 0;  // comparisons met with equality (several bounds are tight)
    std::vector<BoundViolation> violations;
    std::vector<DegreeSequence> excluded;

    bool passed() const { return violations.empty(); }
};

// Total bound: sum_pi(D) >= 2^n + 2^(n-1) for every enumerated D.
VerifyReport verify_total_bound(const EnumSpec& spec, int workers = 1);

// Doubled first half: pi_i(D) >= 2*binomial(n,i) for 1 <= i <= ceil(n/2),
// skipping (and reporting under `excluded`) the short families for
// n in {6,7,8}.  Requires n_lo >= 6.
VerifyReport verify_half_double(const EnumSpec& spec, int workers = 1);

// Erman-style bound: pi_i(D) >= binomial(n,i) for all 0 <= i <= n.
VerifyReport verify_erman_bound(const EnumSpec& spec, int workers = 1);

// The exclusion families of the doubled bound: n in {6,7,8} and either
// d_1 = 2 with regularity 2, or d_1 = 3 with regularity 3.  Equivalent, in
// shape-parameter terms, to a in {2,3} with b+e = 1.
bool half_double_excluded(const DegreeSequence& D);

// The 36 excluded sequences themselves, checked against the total bound.
struct SpecialCasesReport {
    std::vector<DegreeSequence> sequences;               // all 36, enumeration order
    std::map<std::pair<long, long>, long> family_counts; // (n, d_1) -> count
    VerifyReport total;                                  // total bound over the 36
    std::vector<BoundViolation> half_observations;       // pi_i < 2*C(n,i), reported only
};

SpecialCasesReport special_cases();

}  // namespace betti
