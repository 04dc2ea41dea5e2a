#include "betti/decompose.hpp"

#include <stdexcept>

namespace betti {

std::string to_string(ConeStatus status) {
    switch (status) {
        case ConeStatus::ok: return "ok";
        case ConeStatus::not_in_cone: return "not_in_cone";
        case ConeStatus::invalid_diagram: return "invalid_diagram";
    }
    return "unknown";
}

Rat Decomposition::lambda_sum() const {
    Rat total = 0;
    for (const auto& s : summands) total += s.lambda;
    return total;
}

TopSequence top_degree_sequence(const BettiDiagram& B) {
    TopSequence top;
    if (B.empty()) {
        top.status = ConeStatus::invalid_diagram;
        top.failing_column = 0;
        top.message = "diagram is empty";
        return top;
    }
    const auto d0 = B.column_min_degree(0);
    if (!d0 || *d0 != 0) {
        top.status = ConeStatus::invalid_diagram;
        top.failing_column = 0;
        top.message = "column 0 does not start at internal degree 0";
        return top;
    }
    std::vector<long> degrees{0};
    for (long i = 1; B.column_nonempty(i); ++i) {
        const long di = *B.column_min_degree(i);
        if (di <= degrees.back()) {
            top.status = ConeStatus::not_in_cone;
            top.failing_column = i;
            top.message = "minimal degree " + std::to_string(di) + " in column " +
                          std::to_string(i) + " does not exceed " +
                          std::to_string(degrees.back()) + " in column " + std::to_string(i - 1);
            return top;
        }
        degrees.push_back(di);
    }
    if (degrees.size() < 2) {
        // Only column 0 is reachable; degree sequences have n >= 1, so there
        // is no pure diagram to peel off.
        top.status = ConeStatus::invalid_diagram;
        top.failing_column = 0;
        top.message = "no column beyond 0 is nonempty; top chain has length 0";
        return top;
    }
    top.degrees = std::move(degrees);
    return top;
}

DecomposeResult greedy_decompose(const BettiDiagram& B) {
    DecomposeResult result;
    result.decomposition.source_beta0 = B.get(0, 0);
    BettiDiagram residual = B;

    while (!residual.empty()) {
        const TopSequence top = top_degree_sequence(residual);
        if (top.status != ConeStatus::ok) {
            result.status = top.status;
            result.failing_column = top.failing_column;
            result.message = top.message;
            result.residual = std::move(residual);
            return result;
        }
        const DegreeSequence D(top.degrees);
        const PureDiagram pure = pure_diagram(D);

        // lambda = min_i residual[(i, d_i)] / pi_i(D); the minimizing entry
        // is subtracted to exactly zero below.
        Rat lambda = residual.get(0, D[0]);  // pi_0 = 1
        for (long i = 1; i <= D.n(); ++i) {
            const Rat ratio = residual.get(i, D[i]) / pure.entries[static_cast<std::size_t>(i)];
            if (ratio < lambda) lambda = ratio;
        }
        for (long i = 0; i <= D.n(); ++i)
            residual.add(i, D[i], -(lambda * pure.entries[static_cast<std::size_t>(i)]));
        result.decomposition.summands.push_back(Summand{lambda, D});
    }
    return result;
}

BettiDiagram recompose(const Decomposition& dec) {
    BettiDiagram B;
    for (const auto& s : dec.summands) {
        if (s.lambda.sign() <= 0)
            throw std::invalid_argument("recompose: nonpositive lambda " + s.lambda.to_string());
        const PureDiagram pure = pure_diagram(s.degrees, s.lambda);
        for (long i = 0; i <= s.degrees.n(); ++i)
            B.add(i, s.degrees[i], pure.entries[static_cast<std::size_t>(i)]);
    }
    return B;
}

std::optional<std::pair<Rat, DegreeSequence>> is_pure(const BettiDiagram& B) {
    if (B.empty()) return std::nullopt;
    const TopSequence top = top_degree_sequence(B);
    if (top.status != ConeStatus::ok) return std::nullopt;
    // Every entry must lie on the top chain: one entry per column, no gaps.
    if (B.entry_count() != top.degrees.size()) return std::nullopt;
    if (B.max_column() != static_cast<long>(top.degrees.size()) - 1) return std::nullopt;

    const DegreeSequence D(top.degrees);
    const Rat multiplier = B.get(0, 0);  // pi_0 = 1 forces the ratio
    for (long i = 1; i <= D.n(); ++i)
        if (B.get(i, D[i]) != multiplier * pi(D, i)) return std::nullopt;
    return std::make_pair(multiplier, D);
}

std::vector<std::string> codim_warnings(const Decomposition& dec, long codim) {
    std::vector<std::string> warnings;
    long max_n = 0;
    for (const auto& s : dec.summands) max_n = std::max(max_n, s.degrees.n());
    for (const auto& s : dec.summands) {
        const long length = s.degrees.n() + 1;  // number of columns spanned
        if (length < codim + 1 || length > max_n + 1)
            warnings.push_back("summand " + s.degrees.to_string() + " has length " +
                               std::to_string(length) + " outside [" + std::to_string(codim + 1) +
                               ", " + std::to_string(max_n + 1) + "] for codimension " +
                               std::to_string(codim));
    }
    return warnings;
}

}  // namespace betti
