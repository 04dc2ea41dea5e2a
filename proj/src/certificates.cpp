#include "betti/certificates.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace betti {

namespace {

std::vector<std::string> variable_names(int n) {
    switch (n) {
        case 3: return {"a", "x", "y"};
        case 4: return {"a", "x", "y", "z"};
        case 5: return {"a", "x", "y", "z", "w"};
        default:
            throw std::invalid_argument(
                "symbolic certificates are provided for n = 3, 4, 5 only (got n = " +
                std::to_string(n) + ")");
    }
}

// d_0 = 0, d_1 = a, d_k = d_{k-1} + jump_{k-1} + 1 for k >= 2.
std::vector<MPoly> degree_polynomials(const std::vector<std::string>& vars, int n) {
    std::vector<MPoly> d;
    d.push_back(MPoly(vars));  // zero
    MPoly current = MPoly::variable(vars, 0);
    d.push_back(current);
    for (int k = 2; k <= n; ++k) {
        current = current + MPoly::variable(vars, static_cast<std::size_t>(k - 1)) +
                  MPoly::constant(vars, Rat(1));
        d.push_back(current);
    }
    return d;
}

bool all_coefficients_nonnegative(const MPoly& p) {
    for (const auto& [exps, coeff] : p.terms()) {
        (void)exps;
        if (coeff.sign() < 0) return false;
    }
    return true;
}

// Every monomial that involves the first variable has a nonnegative
// coefficient; increasing that variable on the nonnegative orthant can then
// only increase the value.
bool monotone_in_first_variable(const MPoly& p) {
    for (const auto& [exps, coeff] : p.terms()) {
        if (exps[0] > 0 && coeff.sign() < 0) return false;
    }
    return true;
}

// Monomials violating a sign condition, rendered for a step detail.
std::string negative_terms_summary(const MPoly& p, bool skip_constant) {
    std::ostringstream out;
    int shown = 0;
    for (const auto& [exps, coeff] : p.terms()) {
        bool is_constant = true;
        for (unsigned e : exps)
            if (e != 0) is_constant = false;
        if (skip_constant && is_constant) continue;
        if (coeff.sign() >= 0) continue;
        if (shown > 0) out << ", ";
        if (shown == 10) {
            out << "...";
            break;
        }
        MPoly single(p.variables());
        std::vector<unsigned> key = exps;
        single.add_term(key, coeff);
        out << single.to_string();
        ++shown;
    }
    return out.str();
}

std::vector<Rat> sample_point(std::size_t count) {
    // a = 2, every jump = 1: interior to the admissible domain.
    std::vector<Rat> point(count, Rat(1));
    point[0] = Rat(2);
    return point;
}

struct Reduction {
    MPoly reduced;
    std::vector<MPoly> peeled;
    Rat content = Rat(1);
};

// numerator - target * prod(factors), then strip every denominator factor
// that divides exactly (to full multiplicity) and the integer content.  Each
// stripped object is strictly positive on the admissible domain, so the sign
// of the result there equals the sign of the cleared polynomial.
Reduction clear_and_reduce(const RatFun& f, long target) {
    MPoly prod = MPoly::constant(f.numerator.variables(), Rat(1));
    for (const MPoly& factor : f.denominator_factors) prod = prod * factor;
    MPoly cleared = f.numerator - Rat(target) * prod;

    Reduction red;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const MPoly& factor : f.denominator_factors) {
            while (true) {
                auto quotient = cleared.exact_divide(factor);
                if (!quotient) break;
                cleared = std::move(*quotient);
                red.peeled.push_back(factor);
                changed = true;
            }
        }
    }
    red.content = cleared.content();
    if (red.content.sign() > 0 && red.content != Rat(1))
        cleared *= Rat(1) / red.content;
    red.reduced = std::move(cleared);
    return red;
}

void add_step(CertificateReport& rep, std::string name, bool passed, std::string detail) {
    rep.steps.push_back(CertificateStep{std::move(name), passed, std::move(detail)});
}

bool all_steps_passed(const CertificateReport& rep) {
    for (const auto& s : rep.steps)
        if (!s.passed) return false;
    return true;
}

// Substitute the minimal admissible first coordinate, a = (sum of jumps) + 1,
// and normalize away any integer content picked up by the substitution.
MPoly substitute_minimal_a(const MPoly& p, Rat& content_out) {
    const auto& vars = p.variables();
    MPoly minimal = MPoly::constant(vars, Rat(1));
    for (std::size_t v = 1; v < vars.size(); ++v) minimal = minimal + MPoly::variable(vars, v);
    MPoly substituted = p.substitute(0, minimal);
    content_out = substituted.content();
    if (content_out.sign() > 0 && content_out != Rat(1))
        substituted *= Rat(1) / content_out;
    return substituted;
}

// Value at the j-th jump unit vector (first coordinate, already substituted
// away, is set to 0).
Rat unit_value(const MPoly& p, std::size_t j) {
    std::vector<Rat> point(p.variable_count(), Rat(0));
    point[j] = Rat(1);
    return p.evaluate(point);
}

void record_lattice_data(CertificateReport& rep) {
    rep.constant_value = rep.substituted.constant_term();
    rep.unit_values.clear();
    for (std::size_t j = 1; j < rep.substituted.variable_count(); ++j)
        rep.unit_values.push_back(unit_value(rep.substituted, j));
}

// Shared step 1: clear denominators, peel, normalize; sanity-check that
// every peeled factor is genuinely positive where it matters.
void run_reduction_step(CertificateReport& rep, const RatFun& f, long target) {
    Reduction red = clear_and_reduce(f, target);
    rep.reduced = red.reduced;
    rep.peeled_factors = red.peeled;
    rep.removed_content = red.content;

    bool factors_positive = true;
    std::vector<Rat> sample = sample_point(f.numerator.variable_count());
    for (const MPoly& factor : red.peeled) {
        if (!all_coefficients_nonnegative(factor) || factor.evaluate(sample).sign() <= 0)
            factors_positive = false;
    }
    bool ok = factors_positive && red.content.sign() > 0 && !red.reduced.is_zero();

    std::ostringstream detail;
    detail << "peeled " << red.peeled.size() << " positive factor(s) and content "
           << red.content.to_string() << "; reduced polynomial has degree "
           << red.reduced.total_degree() << " with " << red.reduced.term_count()
           << " term(s)";
    add_step(rep, "clear-denominators", ok, detail.str());
}

void run_monotonicity_step(CertificateReport& rep) {
    bool mono = monotone_in_first_variable(rep.reduced);
    std::string detail =
        mono ? "every monomial involving a has a nonnegative coefficient; the value can "
               "only grow as a increases, so a = (sum of jumps) + 1 is the worst case"
             : "negative a-terms: " + negative_terms_summary(rep.reduced, false);
    add_step(rep, "monotone-in-a", mono, detail);
}

// Step 4 shared by n = 4 and n = 5: with all non-constant coefficients
// nonnegative, the polynomial is coordinatewise nondecreasing on the
// nonnegative orthant, so its minimum over nonzero lattice points is
// attained at a unit vector.
void run_lattice_step(CertificateReport& rep) {
    record_lattice_data(rep);
    bool signs_ok = true;
    for (const auto& [exps, coeff] : rep.substituted.terms()) {
        bool is_constant = true;
        for (unsigned e : exps)
            if (e != 0) is_constant = false;
        if (!is_constant && coeff.sign() < 0) signs_ok = false;
    }

    std::ostringstream detail;
    bool ok = false;
    if (signs_ok) {
        bool units_ok = true;
        detail << "unit-vector values";
        for (std::size_t j = 0; j < rep.unit_values.size(); ++j) {
            detail << (j == 0 ? " " : ", ") << rep.unit_values[j].to_string();
            if (rep.unit_values[j].sign() < 0) units_ok = false;
        }
        detail << "; constant term " << rep.constant_value.to_string()
               << " (origin excluded: at least one degree gap exceeds 1)";
        ok = units_ok;
    } else {
        // Without the coefficient signs the unit-vector argument is
        // unavailable; fall back to sweeping a box large enough that every
        // axis has already overtaken the constant term.
        long box = 1;
        const Rat bar = abs(rep.substituted.constant_term());
        const std::size_t jumps = rep.substituted.variable_count() - 1;
        while (true) {
            bool big_enough = true;
            for (std::size_t j = 1; j <= jumps; ++j) {
                std::vector<Rat> point(rep.substituted.variable_count(), Rat(0));
                point[j] = Rat(box);
                if (rep.substituted.evaluate(point) < bar) big_enough = false;
            }
            if (big_enough || box > 64) break;
            ++box;
        }
        bool box_ok = true;
        std::vector<long> idx(jumps, 0);
        while (true) {
            bool at_origin = true;
            for (long v : idx)
                if (v != 0) at_origin = false;
            if (!at_origin) {
                std::vector<Rat> point(rep.substituted.variable_count(), Rat(0));
                for (std::size_t j = 0; j < jumps; ++j) point[j + 1] = Rat(idx[j]);
                if (rep.substituted.evaluate(point).sign() < 0) box_ok = false;
            }
            std::size_t pos = 0;
            while (pos < jumps && idx[pos] == box) idx[pos++] = 0;
            if (pos == jumps) break;
            ++idx[pos];
        }
        detail << "negative non-constant terms (" << negative_terms_summary(rep.substituted, true)
               << "); swept the box [0," << box << "]^" << jumps << " instead";
        ok = box_ok;
    }
    add_step(rep, "lattice-nonneg", ok, detail.str());
}

// --- transcribed polynomials -------------------------------------------------
//
// These are the source text's displayed polynomials, entered verbatim so the
// machine expansion can be compared against them.  Where they disagree, the
// expansion wins and the discrepancy is recorded as a transcription note.

MPoly transcribed_quadratic_n3(const std::vector<std::string>& vars) {
    // a^2 + ax + ay + 2a - 5xy - 5x - 5y - 5
    MPoly p(vars);
    auto put = [&](unsigned ea, unsigned ex, unsigned ey, long c) {
        std::vector<unsigned> key{ea, ex, ey};
        p.add_term(key, Rat(c));
    };
    put(2, 0, 0, 1);
    put(1, 1, 0, 1);
    put(1, 0, 1, 1);
    put(1, 0, 0, 2);
    put(0, 1, 1, -5);
    put(0, 1, 0, -5);
    put(0, 0, 1, -5);
    put(0, 0, 0, -5);
    return p;
}

MPoly transcribed_substituted_n3(const std::vector<std::string>& vars) {
    // 2x^2 + 2y^2 - 2xy - 2, as displayed
    MPoly p(vars);
    auto put = [&](unsigned ex, unsigned ey, long c) {
        std::vector<unsigned> key{0, ex, ey};
        p.add_term(key, Rat(c));
    };
    put(2, 0, 2);
    put(0, 2, 2);
    put(1, 1, -2);
    put(0, 0, -2);
    return p;
}

MPoly rewriting_identity_n3(const std::vector<std::string>& vars) {
    // (x - y)^2 + x^2 + y^2 + xy - 2
    MPoly x = MPoly::variable(vars, 1);
    MPoly y = MPoly::variable(vars, 2);
    MPoly diff = x - y;
    return diff * diff + x * x + y * y + x * y - MPoly::constant(vars, Rat(2));
}

MPoly transcribed_quartic_n4(const std::vector<std::string>& vars) {
    MPoly p(vars);
    auto put = [&](unsigned ex, unsigned ey, unsigned ez, long c) {
        std::vector<unsigned> key{0, ex, ey, ez};
        p.add_term(key, Rat(c));
    };
    put(4, 0, 0, 2);
    put(3, 1, 0, 5);
    put(2, 2, 0, 4);
    put(1, 3, 0, 1);
    put(3, 0, 1, 7);
    put(2, 1, 1, 9);
    put(1, 2, 1, 4);
    put(0, 3, 1, 2);
    put(2, 0, 2, 9);
    put(1, 1, 2, 8);
    put(0, 2, 2, 5);
    put(1, 0, 3, 5);
    put(0, 1, 3, 4);
    put(0, 0, 4, 1);
    put(3, 0, 0, 12);
    put(2, 1, 0, 19);
    put(1, 2, 0, 10);
    put(0, 3, 0, 3);
    put(2, 0, 1, 27);
    put(1, 1, 1, 15);
    put(0, 2, 1, 12);
    put(1, 0, 2, 23);
    put(0, 1, 2, 17);
    put(0, 0, 3, 8);
    put(2, 0, 0, 22);
    put(1, 1, 0, 13);
    put(0, 2, 0, 9);
    put(1, 0, 1, 23);
    put(0, 1, 1, 12);
    put(0, 0, 2, 17);
    put(1, 0, 0, 6);
    put(0, 0, 1, 4);
    put(0, 0, 0, -6);
    return p;
}

// Monomial-by-monomial diff of two polynomials over the same variables.
std::string coefficient_diff(const MPoly& computed, const MPoly& target) {
    std::ostringstream out;
    int shown = 0;
    auto describe = [&](const std::vector<unsigned>& exps, const Rat& got, const Rat& want) {
        if (shown > 0) out << "; ";
        if (shown == 10) {
            out << "...";
            return;
        }
        MPoly single(computed.variables());
        std::vector<unsigned> key = exps;
        single.add_term(key, Rat(1));
        out << single.to_string() << ": computed " << got.to_string() << ", transcribed "
            << want.to_string();
        ++shown;
    };
    for (const auto& [exps, coeff] : computed.terms()) {
        Rat want = target.coefficient(exps);
        if (coeff != want) describe(exps, coeff, want);
    }
    for (const auto& [exps, coeff] : target.terms()) {
        if (computed.coefficient(exps) == Rat(0)) describe(exps, Rat(0), coeff);
    }
    return out.str();
}

}  // namespace

RatFun symbolic_sum_pi(int n) {
    std::vector<std::string> vars = variable_names(n);
    std::vector<MPoly> d = degree_polynomials(vars, n);

    RatFun f;
    f.numerator = MPoly(vars);
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k <= n; ++k) f.denominator_factors.push_back(d[k] - d[j]);

    // pi_i = prod_j d_j / prod_{j != i} |d_i - d_j|; over the common
    // denominator the i-th summand keeps every pairwise difference except
    // those touching i.  Signs cancel: i contributes (n - i) reversed
    // factors in the denominator and the overall diagram sign is (+) for
    // the sum of absolute values, so each numerator term is a plain product.
    for (int i = 0; i <= n; ++i) {
        MPoly term = MPoly::constant(vars, Rat(1));
        for (int j = 1; j <= n; ++j) term = term * d[j];
        for (int j = 0; j < n; ++j)
            for (int k = j + 1; k <= n; ++k)
                if (j != i && k != i) term = term * (d[k] - d[j]);
        f.numerator = f.numerator + term;
    }
    return f;
}

Rat evaluate(const RatFun& f, const std::vector<Rat>& point) {
    Rat value = f.numerator.evaluate(point);
    for (const MPoly& factor : f.denominator_factors) value /= factor.evaluate(point);
    return value;
}

CertificateReport certificate_n3() {
    CertificateReport rep;
    rep.n = 3;
    const RatFun f = symbolic_sum_pi(3);
    const auto& vars = f.numerator.variables();

    // Step 1: the reduced polynomial must be the known quadratic, and the
    // full cleared numerator must be that quadratic times a positive
    // cofactor (so the inequality for n = 3 is exactly quadratic >= 0).
    run_reduction_step(rep, f, 12);
    const MPoly quadratic = transcribed_quadratic_n3(vars);
    bool matches = (rep.reduced == quadratic);
    rep.steps.back().passed = rep.steps.back().passed && matches;
    if (!matches)
        rep.steps.back().detail += "; reduced polynomial differs from the expected quadratic: " +
                                   rep.reduced.to_string();

    // Step 2: substitute the minimal a = x + y + 1.  The substitution is
    // justified by monotonicity: every monomial involving a has a
    // nonnegative coefficient, so the quadratic only grows with a.
    const bool mono = monotone_in_first_variable(rep.reduced);
    rep.substituted = substitute_minimal_a(rep.reduced, rep.substitution_content);
    record_lattice_data(rep);
    const MPoly displayed = transcribed_substituted_n3(vars);
    if (rep.substituted != displayed) {
        rep.notes.push_back(
            "transcription: the displayed substituted quadratic reads 2x^2 + 2y^2 - 2xy - 2 "
            "but the exact expansion is " +
            rep.substituted.to_string() +
            "; the expansion agrees with the rewriting identity below and is the one used");
    }
    add_step(rep, "substitute-min-a", mono,
             mono ? "every a-term has a nonnegative coefficient, so a = x + y + 1 is the "
                    "worst case; there the quadratic becomes " +
                        rep.substituted.to_string()
                  : "negative a-terms: " + negative_terms_summary(rep.reduced, false));

    // Step 3: the rewriting into visibly nonnegative-for-(x,y)>=1 pieces.
    const MPoly rewritten = rewriting_identity_n3(vars);
    bool identity_ok = (rep.substituted == rewritten);
    add_step(rep, "rewriting-identity", identity_ok,
             identity_ok ? "substituted quadratic equals (x - y)^2 + x^2 + y^2 + xy - 2"
                         : "rewriting mismatch: " + coefficient_diff(rep.substituted, rewritten));

    // Step 4: the two case branches.
    //   x = y = 0 (pure-power case): the quadratic restricts to a^2 + 2a - 5,
    //   which after a -> t + 2 has nonnegative coefficients, hence is
    //   nonnegative for all a >= 2.
    MPoly zero_poly(vars);
    MPoly on_axis = rep.reduced.substitute(1, zero_poly).substitute(2, zero_poly);
    MPoly shifted = on_axis.substitute(
        0, MPoly::variable(vars, 0) + MPoly::constant(vars, Rat(2)));
    std::vector<Rat> at_min(vars.size(), Rat(0));
    at_min[0] = Rat(2);
    Rat axis_min = on_axis.evaluate(at_min);
    bool axis_ok = all_coefficients_nonnegative(shifted) && axis_min.sign() >= 0;

    //   x + y >= 1: doubling the substituted quadratic dominates a positive
    //   multiple of x^2 + y^2, so it is nonnegative once x^2 + y^2 >= 2;
    //   the two remaining lattice points are the unit vectors, checked
    //   directly (both give 0).
    MPoly x = MPoly::variable(vars, 1);
    MPoly y = MPoly::variable(vars, 2);
    MPoly diff = x - y;
    MPoly dominated = MPoly::constant(vars, Rat(3)) * (x * x + y * y) + diff * diff -
                      MPoly::constant(vars, Rat(4));
    bool domination_ok = (Rat(2) * rep.substituted == dominated);
    bool units_ok = true;
    for (const Rat& v : rep.unit_values)
        if (v.sign() < 0) units_ok = false;

    std::ostringstream detail;
    detail << "axis branch: quadratic restricts to " << on_axis.to_string() << " with value "
           << axis_min.to_string() << " at a = 2; jump branch: twice the substituted "
           << "quadratic equals 3(x^2 + y^2) + (x - y)^2 - 4, and the unit vectors give ";
    for (std::size_t j = 0; j < rep.unit_values.size(); ++j)
        detail << (j == 0 ? "" : ", ") << rep.unit_values[j].to_string();
    add_step(rep, "branch-nonnegativity", axis_ok && domination_ok && units_ok, detail.str());

    rep.certified = all_steps_passed(rep);
    return rep;
}

CertificateReport certificate_n4() {
    CertificateReport rep;
    rep.n = 4;
    const RatFun f = symbolic_sum_pi(4);
    const auto& vars = f.numerator.variables();

    run_reduction_step(rep, f, 24);
    run_monotonicity_step(rep);

    // Substitute a = x + y + z + 1 and compare, coefficient for coefficient,
    // with the transcribed quartic.
    rep.substituted = substitute_minimal_a(rep.reduced, rep.substitution_content);
    const MPoly quartic = transcribed_quartic_n4(vars);
    bool matches = (rep.substituted == quartic);
    std::ostringstream detail;
    if (matches) {
        detail << "substituted polynomial matches the transcribed quartic ("
               << rep.substituted.term_count() << " terms";
        if (rep.substitution_content != Rat(1))
            detail << ", after removing integer content " << rep.substitution_content.to_string();
        detail << ")";
    } else {
        detail << "coefficient mismatches: " << coefficient_diff(rep.substituted, quartic);
    }
    add_step(rep, "substitute-compare", matches, detail.str());

    run_lattice_step(rep);
    rep.certified = all_steps_passed(rep);
    return rep;
}

CertificateReport certificate_n5() {
    CertificateReport rep;
    rep.n = 5;
    const RatFun f = symbolic_sum_pi(5);

    run_reduction_step(rep, f, 48);
    run_monotonicity_step(rep);

    rep.substituted = substitute_minimal_a(rep.reduced, rep.substitution_content);
    std::ostringstream detail;
    detail << "at a = x + y + z + w + 1 the reduced polynomial has degree "
           << rep.substituted.total_degree() << " with " << rep.substituted.term_count()
           << " terms and constant term " << rep.substituted.constant_term().to_string();
    if (rep.substitution_content != Rat(1))
        detail << " (integer content " << rep.substitution_content.to_string() << " removed)";
    add_step(rep, "substitute-expand", true, detail.str());

    run_lattice_step(rep);
    rep.certified = all_steps_passed(rep);
    return rep;
}

CertificateReport certificate(int n) {
    switch (n) {
        case 3: return certificate_n3();
        case 4: return certificate_n4();
        case 5: return certificate_n5();
        default:
            throw std::invalid_argument(
                "no certificate available for n = " + std::to_string(n) +
                " (supported: 3, 4, 5)");
    }
}

}  // namespace betti
