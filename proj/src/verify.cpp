#include "betti/verify.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace betti {

std::string to_string(TheoremId id) {
    switch (id) {
        case TheoremId::total_bound: return "total_bound";
        case TheoremId::half_double: return "half_double";
        case TheoremId::erman_bound: return "erman_bound";
        case TheoremId::special_cases: return "special_cases";
    }
    return "unknown";
}

std::string BoundViolation::to_string() const {
    std::string out = "D=" + D.to_string();
    if (i >= 0) out += " i=" + std::to_string(i);
    out += ": " + lhs.to_string() + " < " + rhs.to_string();
    return out;
}

bool half_double_excluded(const DegreeSequence& D) {
    const long n = D.n();
    if (n < 6 || n > 8) return false;
    const long d1 = D[1];
    const long reg = D.regularity();
    return (d1 == 2 && reg == 2) || (d1 == 3 && reg == 3);
}

namespace {

Rat total_bound_target(long n) {
    // 2^n + 2^(n-1)
    Int target = Int(1) << static_cast<unsigned long>(n);
    target += Int(1) << static_cast<unsigned long>(n - 1);
    return Rat(target);
}

struct Shard {
    long checked = 0;
    long equalities = 0;
    std::vector<BoundViolation> violations;
    std::vector<DegreeSequence> excluded;
};

bool sequence_order(const DegreeSequence& a, const DegreeSequence& b) {
    if (a.n() != b.n()) return a.n() < b.n();
    return a.degrees() < b.degrees();
}

// Runs `check` over every enumerated sequence, partitioned by stride across
// workers, then merges the shards into one report sorted in enumeration
// order (increasing n, then shift-vector order) so the output is identical
// for every worker count.
template <typename CheckFn>
VerifyReport run_checks(TheoremId theorem, const EnumSpec& spec, int workers, bool exclude,
                        CheckFn check) {
    if (workers < 1) throw std::invalid_argument("verify: worker count must be positive");
    const std::vector<DegreeSequence> sequences = enumerate_all(spec);

    const auto process = [&](const DegreeSequence& D, Shard& shard) {
        if (exclude && half_double_excluded(D)) {
            shard.excluded.push_back(D);
            return;
        }
        ++shard.checked;
        check(D, shard);
    };

    std::vector<Shard> shards(static_cast<std::size_t>(workers));
    if (workers == 1) {
        for (const auto& D : sequences) process(D, shards[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w]() {
                for (std::size_t k = static_cast<std::size_t>(w); k < sequences.size();
                     k += static_cast<std::size_t>(workers))
                    process(sequences[k], shards[static_cast<std::size_t>(w)]);
            });
        for (auto& t : pool) t.join();
    }

    VerifyReport report;
    report.theorem = theorem;
    report.spec = spec;
    for (auto& shard : shards) {
        report.checked += shard.checked;
        report.equalities += shard.equalities;
        std::move(shard.violations.begin(), shard.violations.end(),
                  std::back_inserter(report.violations));
        std::move(shard.excluded.begin(), shard.excluded.end(),
                  std::back_inserter(report.excluded));
    }
    std::sort(report.violations.begin(), report.violations.end(),
              [](const BoundViolation& a, const BoundViolation& b) {
                  if (a.D != b.D) return sequence_order(a.D, b.D);
                  return a.i < b.i;
              });
    std::sort(report.excluded.begin(), report.excluded.end(), sequence_order);
    return report;
}

}  // namespace

VerifyReport verify_total_bound(const EnumSpec& spec, int workers) {
    return run_checks(TheoremId::total_bound, spec, workers, /*exclude=*/false,
                      [](const DegreeSequence& D, Shard& shard) {
                          const Rat lhs = sum_pi(D);
                          const Rat rhs = total_bound_target(D.n());
                          if (lhs < rhs)
                              shard.violations.push_back(BoundViolation{D, -1, lhs, rhs});
                          else if (lhs == rhs)
                              ++shard.equalities;
                      });
}

VerifyReport verify_half_double(const EnumSpec& spec, int workers) {
    if (spec.n_lo < 6)
        throw std::invalid_argument("verify_half_double: requires n >= 6");
    return run_checks(TheoremId::half_double, spec, workers, /*exclude=*/true,
                      [](const DegreeSequence& D, Shard& shard) {
                          const long n = D.n();
                          for (long i = 1; i <= (n + 1) / 2; ++i) {
                              const Rat lhs = pi(D, i);
                              const Rat rhs = Rat(Int(2 * binomial(n, i)));
                              if (lhs < rhs)
                                  shard.violations.push_back(BoundViolation{D, i, lhs, rhs});
                              else if (lhs == rhs)
                                  ++shard.equalities;
                          }
                      });
}

VerifyReport verify_erman_bound(const EnumSpec& spec, int workers) {
    return run_checks(TheoremId::erman_bound, spec, workers, /*exclude=*/false,
                      [](const DegreeSequence& D, Shard& shard) {
                          const long n = D.n();
                          for (long i = 0; i <= n; ++i) {
                              const Rat lhs = pi(D, i);
                              const Rat rhs = Rat(binomial(n, i));
                              if (lhs < rhs)
                                  shard.violations.push_back(BoundViolation{D, i, lhs, rhs});
                              else if (lhs == rhs)
                                  ++shard.equalities;
                          }
                      });
}

SpecialCasesReport special_cases() {
    SpecialCasesReport report;
    // d_1 <= 3 suffices: the families have d_1 in {2,3}, and the regularity
    // caps 2*d_1 - 2 admit reg = d_1 for both.
    for (long n = 6; n <= 8; ++n) {
        EnumSpec spec;
        spec.n_lo = spec.n_hi = n;
        spec.min_d1 = 2;
        spec.max_d1 = 3;
        for (const auto& D : enumerate_all(spec)) {
            if (!half_double_excluded(D)) continue;
            report.sequences.push_back(D);
            ++report.family_counts[{n, D[1]}];
        }
    }

    report.total.theorem = TheoremId::special_cases;
    report.total.spec = EnumSpec{6, 8, 3, 2, false};
    for (const auto& D : report.sequences) {
        ++report.total.checked;
        const Rat lhs = sum_pi(D);
        const Rat rhs = total_bound_target(D.n());
        if (lhs < rhs)
            report.total.violations.push_back(BoundViolation{D, -1, lhs, rhs});
        else if (lhs == rhs)
            ++report.total.equalities;

        const long n = D.n();
        for (long i = 1; i <= (n + 1) / 2; ++i) {
            const Rat value = pi(D, i);
            const Rat doubled = Rat(Int(2 * binomial(n, i)));
            if (value < doubled)
                report.half_observations.push_back(BoundViolation{D, i, value, doubled});
        }
    }
    return report;
}

}  // namespace betti
