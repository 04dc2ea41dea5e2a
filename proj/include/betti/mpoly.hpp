#pragma once

#include "betti/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace betti {

// Graded-lexicographic order on exponent vectors: total degree first, then
// lexicographic position by position.  This is the canonical term order for
// storage, comparison and display.
struct GradedLexLess {
    bool operator()(const std::vector<unsigned>& lhs, const std::vector<unsigned>& rhs) const;
};

// Sparse multivariate polynomial with exact rational coefficients over a
// fixed, ordered list of named variables.  Zero coefficients are never
// stored, and terms are kept in graded-lexicographic order, so structural
// equality is value equality and every rendering is canonical.
class MPoly {
public:
    using Exponents = std::vector<unsigned>;
    using TermMap = std::map<Exponents, Rat, GradedLexLess>;

    MPoly() = default;  // zero polynomial over no variables
    explicit MPoly(std::vector<std::string> vars);

    static MPoly constant(std::vector<std::string> vars, const Rat& c);
    static MPoly variable(std::vector<std::string> vars, std::size_t index);

    const std::vector<std::string>& variables() const { return vars_; }
    std::size_t variable_count() const { return vars_.size(); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Total degree; -1 for the zero polynomial.
    long total_degree() const;
    long degree_in(std::size_t var) const;

    Rat coefficient(const Exponents& exps) const;  // 0 when absent
    Rat constant_term() const;

    // Adds c * x^exps into the polynomial (the building block for literals).
    void add_term(const Exponents& exps, const Rat& c);

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const Rat& c);

    friend MPoly operator+(MPoly a, const MPoly& b) { a += b; return a; }
    friend MPoly operator-(MPoly a, const MPoly& b) { a -= b; return a; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly p, const Rat& c) { p *= c; return p; }
    friend MPoly operator*(const Rat& c, MPoly p) { p *= c; return p; }

    friend bool operator==(const MPoly&, const MPoly&) = default;

    MPoly pow(unsigned k) const;

    // Replaces variable `var` by `replacement` (same variable list); the
    // substituted slot simply becomes unused unless reintroduced.
    MPoly substitute(std::size_t var, const MPoly& replacement) const;

    // Exact evaluation at a full point, one coordinate per variable.
    Rat evaluate(const std::vector<Rat>& point) const;

    // Exact division: returns the quotient iff divisor divides *this with a
    // zero remainder; std::nullopt otherwise.  Division by the zero
    // polynomial is an argument error.
    std::optional<MPoly> exact_divide(const MPoly& divisor) const;

    // The positive rational c such that (1/c) * this has integer coefficients
    // with no common factor; 0 for the zero polynomial.
    Rat content() const;

    // Canonical rendering, highest term first: "2*a^2*x - 5*x*y - 5".
    std::string to_string() const;

private:
    void require_same_variables(const MPoly& o) const;

    std::vector<std::string> vars_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MPoly& p);

}  // namespace betti
