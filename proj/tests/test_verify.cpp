#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "betti/verify.hpp"

using namespace betti;

TEST_CASE("total bound on a small block, against a direct loop") {
    EnumSpec spec;
    spec.n_lo = 3;
    spec.n_hi = 5;
    spec.max_d1 = 4;

    // Direct oracle loop, no sharding, no report plumbing.
    long checked = 0, equalities = 0, violations = 0;
    enumerate(spec, [&](const DegreeSequence& D) {
        const Rat lhs = sum_pi(D);
        const Int target = ipow(2, D.n()) + ipow(2, D.n() - 1);
        const Rat rhs = Rat(target);
        ++checked;
        if (lhs < rhs) ++violations;
        if (lhs == rhs) ++equalities;
    });

    const VerifyReport report = verify_total_bound(spec);
    CHECK(report.checked == checked);
    CHECK(report.equalities == equalities);
    CHECK(static_cast<long>(report.violations.size()) == violations);
    CHECK(report.passed());
    CHECK(violations == 0);
    CHECK(equalities > 0);  // e.g. {0,2,3,5} and {0,2,4,5} both give exactly 12
}

TEST_CASE("parallel runs reproduce the sequential report exactly") {
    EnumSpec spec;
    spec.n_lo = 3;
    spec.n_hi = 6;
    spec.max_d1 = 5;
    const VerifyReport sequential = verify_total_bound(spec, 1);
    for (const int workers : {2, 3, 7}) {
        const VerifyReport parallel = verify_total_bound(spec, workers);
        CHECK(parallel.checked == sequential.checked);
        CHECK(parallel.equalities == sequential.equalities);
        CHECK(parallel.violations.size() == sequential.violations.size());
        CHECK(parallel.excluded.size() == sequential.excluded.size());
    }
    CHECK_THROWS_AS(verify_total_bound(spec, 0), std::invalid_argument);
}

TEST_CASE("negative control: dropping d1 >= 2 produces a genuine violation") {
    EnumSpec spec;
    spec.n_lo = spec.n_hi = 3;
    spec.min_d1 = 1;
    spec.max_d1 = 1;
    const VerifyReport report = verify_total_bound(spec);
    CHECK(!report.passed());
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].D == DegreeSequence({0, 1, 2, 3}));
    CHECK(report.violations[0].lhs == Rat(8));
    CHECK(report.violations[0].rhs == Rat(12));
    CHECK(report.violations[0].i == -1);
    CHECK(report.violations[0].to_string() == "D={0,1,2,3}: 8 < 12");
}

TEST_CASE("exclusion predicate matches the two families") {
    CHECK(half_double_excluded(DegreeSequence({0, 2, 3, 5, 6, 7, 8})));       // n=6, d1=2, reg=2
    CHECK(half_double_excluded(DegreeSequence({0, 3, 4, 5, 6, 8, 9})));       // n=6, d1=3, reg=3
    CHECK(!half_double_excluded(DegreeSequence({0, 2, 3, 4, 5, 6, 7})));      // reg=1
    CHECK(!half_double_excluded(DegreeSequence({0, 2, 3, 5})));               // n=3
    CHECK(!half_double_excluded(DegreeSequence({0, 4, 5, 6, 7, 8, 13})));     // d1=4
    CHECK(half_double_excluded(DegreeSequence({0, 2, 4, 5, 6, 7, 8, 9, 10})));  // n=8 family
    // n = 9 is past the special range even with the right shape.
    CHECK(!half_double_excluded(DegreeSequence({0, 2, 4, 5, 6, 7, 8, 9, 10, 11})));
}

TEST_CASE("half-double requires the length range to start at 6") {
    EnumSpec spec;
    spec.n_lo = 3;
    spec.n_hi = 6;
    CHECK_THROWS_AS(verify_half_double(spec), std::invalid_argument);
}

TEST_CASE("half-double on one length, observations match a direct loop") {
    EnumSpec spec;
    spec.n_lo = spec.n_hi = 6;
    spec.max_d1 = 4;

    long checked = 0, excluded = 0, violations = 0;
    enumerate(spec, [&](const DegreeSequence& D) {
        if (half_double_excluded(D)) {
            ++excluded;
            return;
        }
        ++checked;
        for (long i = 1; i <= (D.n() + 1) / 2; ++i)
            if (pi(D, i) < Rat(Int(2 * binomial(D.n(), i)))) ++violations;
    });

    const VerifyReport report = verify_half_double(spec, 3);
    CHECK(report.checked == checked);
    CHECK(static_cast<long>(report.excluded.size()) == excluded);
    CHECK(static_cast<long>(report.violations.size()) == violations);
    CHECK(report.passed());
    CHECK(excluded == 10);  // both n = 6 families: 5 + 5 sequences
}

TEST_CASE("erman bound on a small block") {
    EnumSpec spec;
    spec.n_lo = 3;
    spec.n_hi = 6;
    spec.max_d1 = 5;
    const VerifyReport report = verify_erman_bound(spec, 2);
    CHECK(report.passed());
    CHECK(report.checked > 0);
    // pi_0 = 1 = C(n,0) holds with equality everywhere, so the equality
    // counter is at least the number of sequences.
    CHECK(report.equalities >= report.checked);
}

TEST_CASE("the 36 special cases") {
    const SpecialCasesReport report = special_cases();

    REQUIRE(report.sequences.size() == 36);
    CHECK(report.total.checked == 36);
    CHECK(report.total.passed());  // every one satisfies the total bound

    // Family sizes 5/5, 6/6, 7/7 across (n, d1).
    REQUIRE(report.family_counts.size() == 6);
    CHECK(report.family_counts.at({6, 2}) == 5);
    CHECK(report.family_counts.at({6, 3}) == 5);
    CHECK(report.family_counts.at({7, 2}) == 6);
    CHECK(report.family_counts.at({7, 3}) == 6);
    CHECK(report.family_counts.at({8, 2}) == 7);
    CHECK(report.family_counts.at({8, 3}) == 7);

    for (const auto& D : report.sequences) CHECK(half_double_excluded(D));

    // Exactly four (D, i) pairs sit below the doubled binomial; this is why
    // the families are excluded rather than handled by the general argument.
    REQUIRE(report.half_observations.size() == 4);

    CHECK(report.half_observations[0].D == DegreeSequence({0, 2, 3, 5, 6, 7, 8}));
    CHECK(report.half_observations[0].i == 2);
    CHECK(report.half_observations[0].lhs == Rat(28));
    CHECK(report.half_observations[0].rhs == Rat(30));

    CHECK(report.half_observations[1].D == DegreeSequence({0, 2, 4, 5, 6, 7, 8}));
    CHECK(report.half_observations[1].i == 1);
    CHECK(report.half_observations[1].lhs == Rat(28, 3));
    CHECK(report.half_observations[1].rhs == Rat(12));

    CHECK(report.half_observations[2].D == DegreeSequence({0, 2, 4, 5, 6, 7, 8, 9}));
    CHECK(report.half_observations[2].i == 1);
    CHECK(report.half_observations[2].lhs == Rat(12));
    CHECK(report.half_observations[2].rhs == Rat(14));

    CHECK(report.half_observations[3].D == DegreeSequence({0, 2, 4, 5, 6, 7, 8, 9, 10}));
    CHECK(report.half_observations[3].i == 1);
    CHECK(report.half_observations[3].lhs == Rat(15));
    CHECK(report.half_observations[3].rhs == Rat(16));
}

TEST_CASE("theorem names") {
    CHECK(to_string(TheoremId::total_bound) == "total_bound");
    CHECK(to_string(TheoremId::half_double) == "half_double");
    CHECK(to_string(TheoremId::erman_bound) == "erman_bound");
    CHECK(to_string(TheoremId::special_cases) == "special_cases");
}
