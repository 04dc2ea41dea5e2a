#pragma once

#include "betti/diagram.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace betti {

// Outcome classification for the greedy cone decomposition.  A diagram that
// is a nonnegative rational combination of pure diagrams decomposes cleanly
// (ok); otherwise the first offending column is reported.
enum class ConeStatus {
    ok,
    not_in_cone,      // minimal degrees of the leading columns fail to increase
    invalid_diagram,  // no usable top chain at all (e.g. column 0 lacks (0,0))
};

std::string to_string(ConeStatus status);

struct Summand {
    Rat lambda;              // strictly positive coefficient
    DegreeSequence degrees;  // the pure diagram it multiplies
};

// An ordered sum  Sigma lambda_D * B(D), in the order the greedy elimination
// produced it: each top chain dominates its predecessor columnwise, with a
// vanished trailing column counting as an infinite degree, so no sequence
// repeats.  For a complete decomposition the lambdas add up to the source
// diagram's beta_0.
struct Decomposition {
    std::vector<Summand> summands;
    Rat source_beta0;

    Rat lambda_sum() const;
};

// Result of reading the top degree sequence off a diagram: d_i = min degree
// present in column i, over the maximal initial run 0..p of nonempty
// columns.  Fails when that chain does not strictly increase from 0.
struct TopSequence {
    ConeStatus status = ConeStatus::ok;
    std::vector<long> degrees;  // populated when status == ok
    long failing_column = -1;   // populated otherwise
    std::string message;
};

TopSequence top_degree_sequence(const BettiDiagram& B);

// Greedy decomposition: repeatedly take D = top_degree_sequence(B), peel off
// lambda = min_i B[(i, d_i)] / pi_i(D), and subtract lambda * B(D).  The
// minimizing entry cancels exactly, so each round deletes at least one entry
// and the loop terminates within entry_count() rounds.  On failure the
// partial decomposition and the residual diagram are returned alongside the
// offending column.
struct DecomposeResult {
    ConeStatus status = ConeStatus::ok;
    Decomposition decomposition;  // complete iff status == ok
    BettiDiagram residual;        // nonempty iff status != ok
    long failing_column = -1;
    std::string message;

    bool ok() const { return status == ConeStatus::ok; }
};

DecomposeResult greedy_decompose(const BettiDiagram& B);

// Exact inverse of a successful decomposition: Sigma lambda * B(D) with each
// pure diagram placed at keys (i, d_i).
BettiDiagram recompose(const Decomposition& dec);

// Purity test: returns (multiplier, D) iff every column holds exactly one
// entry, the degrees strictly increase from 0, and the values are
// proportional to pi(D) with one common positive ratio.
std::optional<std::pair<Rat, DegreeSequence>> is_pure(const BettiDiagram& B);

// Length sanity against a caller-supplied codimension c: every summand of a
// genuine module diagram has length (number of columns) in [c+1, n+1].  The
// greedy algorithm cannot infer c, so breaches are warnings, not errors.
std::vector<std::string> codim_warnings(const Decomposition& dec, long codim);

}  // namespace betti
