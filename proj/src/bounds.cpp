#include "betti/bounds.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace betti {

namespace {

void require_F_domain(long a, long b, long e, long n, long i) {
    if (a < 2 || b < 0 || e < 0 || n < 3 || i < 1 || i > n) {
        std::ostringstream os;
        os << "F: parameters (a=" << a << ", b=" << b << ", e=" << e << ", n=" << n
           << ", i=" << i << ") outside domain a>=2, b>=0, e>=0, n>=3, 1<=i<=n";
        throw std::invalid_argument(os.str());
    }
}

}  // namespace

Rat F(long a, long b, long e, long n, long i) {
    require_F_domain(a, b, e, n, i);
    Rat value = 1;
    for (long t = 0; t <= i - 2; ++t) value *= Rat(a + t, b + 1 + t);
    const long R = a + b + e - 1;
    for (long t = 1; t <= R; ++t) value *= Rat(n + t, i + t);
    for (long t = 1; t <= e; ++t) value *= Rat(t, n - i + t);
    return value;
}

Rat F(const ShapeParams& p) { return F(p.a, p.b, p.e, p.n, p.i); }

Rat G(long b, long e, long i) {
    if (b < 0 || e < 0 || b + e < 1 || i < 2) {
        std::ostringstream os;
        os << "G: parameters (b=" << b << ", e=" << e << ", i=" << i
           << ") outside domain b,e>=0, b+e>=1, i>=2";
        throw std::invalid_argument(os.str());
    }
    return F(b + e + 1, b, e, 2 * i - 1, i);
}

Rat G1(long e, long n) {
    if (e < 1 || n < 3) {
        std::ostringstream os;
        os << "G1: parameters (e=" << e << ", n=" << n << ") outside domain e>=1, n>=3";
        throw std::invalid_argument(os.str());
    }
    return F(e + 1, 0, e, n, 1);
}

std::string lemma_name(LemmaId id) {
    switch (id) {
        case LemmaId::Fa: return "Fa";
        case LemmaId::Fn: return "Fn";
        case LemmaId::Fbe0: return "Fbe0";
        case LemmaId::Gi: return "Gi";
        case LemmaId::Gbe2: return "Gbe2";
        case LemmaId::G1e: return "G1e";
        case LemmaId::G1n9: return "G1n9";
    }
    return "unknown";
}

LemmaId lemma_from_string(const std::string& name) {
    for (const LemmaId id : all_lemmas())
        if (lemma_name(id) == name) return id;
    throw std::invalid_argument("unknown lemma '" + name + "'");
}

std::vector<LemmaId> all_lemmas() {
    return {LemmaId::Fa,   LemmaId::Fn,  LemmaId::Fbe0, LemmaId::Gi,
            LemmaId::Gbe2, LemmaId::G1e, LemmaId::G1n9};
}

std::string LemmaViolation::to_string() const {
    std::ostringstream os;
    os << "(a=" << a << ", b=" << b << ", e=" << e << ", n=" << n << ", i=" << i
       << "): " << lhs.to_string() << " vs " << rhs.to_string();
    return os.str();
}

namespace {

using Visitor = void (*)(const LemmaGrid&, bool, LemmaReport&);

void record(LemmaReport& report, long a, long b, long e, long n, long i, const Rat& lhs,
            const Rat& rhs, bool ok) {
    ++report.points_checked;
    if (!ok) report.violations.push_back(LemmaViolation{a, b, e, n, i, lhs, rhs});
}

// (Fa): F(a+1,b,e,n,i) >= F(a,b,e,n,i) on the whole domain.
void check_Fa(const LemmaGrid& g, bool, LemmaReport& report) {
    for (long a = g.a_lo; a < g.a_hi; ++a)
        for (long b = g.b_lo; b <= g.b_hi; ++b)
            for (long e = g.e_lo; e <= g.e_hi; ++e)
                for (long n = g.n_lo; n <= g.n_hi; ++n)
                    for (long i = 1; i <= n; ++i) {
                        const Rat hi = F(a + 1, b, e, n, i);
                        const Rat lo = F(a, b, e, n, i);
                        record(report, a, b, e, n, i, hi, lo, hi >= lo);
                    }
}

// (Fn): F(a,b,e,n+1,i) >= F(a,b,e,n,i), under n >= 2i-1 and b+e <= a-1.
// Without the hypothesis the inequality genuinely fails (see fn_sharpness).
void check_Fn(const LemmaGrid& g, bool filtered, LemmaReport& report) {
    for (long a = g.a_lo; a <= g.a_hi; ++a)
        for (long b = g.b_lo; b <= g.b_hi; ++b)
            for (long e = g.e_lo; e <= g.e_hi; ++e)
                for (long n = g.n_lo; n < g.n_hi; ++n)
                    for (long i = 1; i <= n; ++i) {
                        if (filtered && (n < 2 * i - 1 || b + e > a - 1)) continue;
                        const Rat hi = F(a, b, e, n + 1, i);
                        const Rat lo = F(a, b, e, n, i);
                        record(report, a, b, e, n, i, hi, lo, hi >= lo);
                    }
}

// (Fbe0): F(a,0,0,n,i) >= 2 for every a >= 2, n >= 3, 1 <= i <= n.
void check_Fbe0(const LemmaGrid& g, bool, LemmaReport& report) {
    for (long a = g.a_lo; a <= g.a_hi; ++a)
        for (long n = g.n_lo; n <= g.n_hi; ++n)
            for (long i = 1; i <= n; ++i) {
                const Rat value = F(a, 0, 0, n, i);
                record(report, a, 0, 0, n, i, value, Rat(2), value >= 2);
            }
}

// (Gi): G(b,e,i+1) >= G(b,e,i) for b+e >= 1, i >= 2.
void check_Gi(const LemmaGrid& g, bool, LemmaReport& report) {
    for (long b = g.b_lo; b <= g.b_hi; ++b)
        for (long e = g.e_lo; e <= g.e_hi; ++e) {
            if (b + e < 1) continue;
            for (long i = 2; i < g.i_hi; ++i) {
                const Rat hi = G(b, e, i + 1);
                const Rat lo = G(b, e, i);
                record(report, 0, b, e, 0, i, hi, lo, hi >= lo);
            }
        }
}

// (Gbe2): G(b,e,2) >= 2 whenever b >= 2 or e >= 2.  The unfiltered mode
// keeps every domain point b+e >= 1 and so records the genuine failure at
// b = e = 1 (and at b+e = 1), which is exactly why the case analysis treats
// those shapes separately.
void check_Gbe2(const LemmaGrid& g, bool filtered, LemmaReport& report) {
    for (long b = g.b_lo; b <= g.b_hi; ++b)
        for (long e = g.e_lo; e <= g.e_hi; ++e) {
            if (b + e < 1) continue;
            if (filtered && b < 2 && e < 2) continue;
            const Rat value = G(b, e, 2);
            record(report, 0, b, e, 0, 2, value, Rat(2), value >= 2);
        }
}

// (G1e): G1(e+1,n) >= G1(e,n) for e >= 1, n >= 3.
void check_G1e(const LemmaGrid& g, bool, LemmaReport& report) {
    for (long e = std::max(g.e_lo, 1L); e < g.e_hi; ++e)
        for (long n = g.n_lo; n <= g.n_hi; ++n) {
            const Rat hi = G1(e + 1, n);
            const Rat lo = G1(e, n);
            record(report, 0, 0, e, n, 1, hi, lo, hi >= lo);
        }
}

// (G1n9): G1(1,n) >= 2 exactly when n^2 - 9n + 2 >= 0; on integers that
// threshold is n >= 9.  Checked as an equivalence, both directions.
void check_G1n9(const LemmaGrid& g, bool, LemmaReport& report) {
    for (long n = 3; n <= g.g1_n_hi; ++n) {
        const Rat value = G1(1, n);
        const bool bound_holds = value >= 2;
        const bool threshold_holds = n * n - 9 * n + 2 >= 0;
        record(report, 0, 0, 1, n, 1, value, Rat(2), bound_holds == threshold_holds);
    }
}

}  // namespace

LemmaReport check_lemma(LemmaId id, const LemmaGrid& grid, bool filtered) {
    LemmaReport report;
    report.id = id;
    switch (id) {
        case LemmaId::Fa: check_Fa(grid, filtered, report); break;
        case LemmaId::Fn: check_Fn(grid, filtered, report); break;
        case LemmaId::Fbe0: check_Fbe0(grid, filtered, report); break;
        case LemmaId::Gi: check_Gi(grid, filtered, report); break;
        case LemmaId::Gbe2: check_Gbe2(grid, filtered, report); break;
        case LemmaId::G1e: check_G1e(grid, filtered, report); break;
        case LemmaId::G1n9: check_G1n9(grid, filtered, report); break;
    }
    return report;
}

std::pair<Rat, Rat> fn_sharpness() {
    const Rat five = F(2, 0, 2, 5, 3);
    const Rat six = F(2, 0, 2, 6, 3);
    if (!(five > six))
        throw std::logic_error("fn_sharpness: expected F(2,0,2,5,3) > F(2,0,2,6,3)");
    return {five, six};
}

std::vector<ComputationEntry> computation_table() {
    std::vector<ComputationEntry> table;
    const auto push = [&table](std::string label, const Rat& value, bool asserted = true) {
        table.push_back(ComputationEntry{std::move(label), value, decimal_display(value),
                                         value >= 2, asserted});
    };
    push("G(1,0,3)", G(1, 0, 3));
    push("G(0,1,3)", G(0, 1, 3));
    push("G(1,1,3)", G(1, 1, 3));
    push("F(3,1,1,4,2)", F(3, 1, 1, 4, 2));
    push("F(2,1,0,4,2)", F(2, 1, 0, 4, 2));
    push("F(2,0,1,7,2)", F(2, 0, 1, 7, 2));
    push("F(3,1,1,6,2)", F(3, 1, 1, 6, 2));
    push("G^1(2,6)", G1(2, 6));
    for (const auto& [b, e] : std::vector<std::pair<long, long>>{{1, 0}, {0, 1}})
        for (long i = 1; i <= 4; ++i) {
            std::ostringstream label;
            label << "F(3," << b << ',' << e << ",6," << i << ')';
            push(label.str(), F(3, b, e, 6, i));
        }
    // Informational: the one corner the flowchart must route around.
    push("G(1,1,2)", G(1, 1, 2), /*asserted=*/false);
    return table;
}

}  // namespace betti
