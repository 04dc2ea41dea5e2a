#pragma once

#include "betti/mpoly.hpp"

#include <string>
#include <vector>

namespace betti {

// An exact rational function kept as a numerator over a list of factors
// known to be strictly positive on the admissible domain (a >= 2, all jump
// variables >= 0).  For the symbolic pi-sum the factors are exactly the
// pairwise differences d_k - d_j for j < k — which include the d_k
// themselves, since d_0 = 0.
struct RatFun {
    MPoly numerator;
    std::vector<MPoly> denominator_factors;
};

// Sum_{i=0}^{n} pi_i as a rational function of the reparametrized degrees
//   d = {0, a, a+x+1, a+x+y+2, ...}          (one jump variable per gap)
// over the common denominator prod (d_k - d_j).  Supported for n in {3,4,5}
// with variables (a,x,y), (a,x,y,z), (a,x,y,z,w).
RatFun symbolic_sum_pi(int n);

Rat evaluate(const RatFun& f, const std::vector<Rat>& point);

struct CertificateStep {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Full record of one polynomial-inequality certificate: the named steps in
// order, transcription notes (places where the source text's displayed
// polynomial differs from the exact expansion — the expansion is always the
// trusted object), and the intermediate polynomials for inspection.
struct CertificateReport {
    int n = 0;
    bool certified = false;
    std::vector<CertificateStep> steps;
    std::vector<std::string> notes;

    MPoly reduced;                    // cleared numerator, positive factors and content removed
    std::vector<MPoly> peeled_factors;
    Rat removed_content = 1;          // integer content stripped before substitution
    MPoly substituted;                // reduced at the minimal admissible a, content-normalized
    Rat substitution_content = 1;     // integer content stripped after substitution
    std::vector<Rat> unit_values;     // substituted polynomial at each jump unit vector
    Rat constant_value = 0;           // substituted polynomial at the origin
};

// The inequality sum pi_i >= 2^n + 2^(n-1), certified mechanically in four
// steps each:
//   n = 3: clear-denominators (the reduced polynomial must equal the known
//          quadratic), substitute-min-a (justified by monotonicity in a),
//          rewriting-identity, branch-nonnegativity.
//   n = 4: clear-denominators, monotone-in-a, substitute-compare (expansion
//          against the transcribed quartic, coefficient for coefficient),
//          lattice-nonneg.
//   n = 5: clear-denominators, monotone-in-a, substitute-expand,
//          lattice-nonneg.
CertificateReport certificate_n3();
CertificateReport certificate_n4();
CertificateReport certificate_n5();

// Dispatch; n outside {3,4,5} is an argument error.
CertificateReport certificate(int n);

}  // namespace betti
