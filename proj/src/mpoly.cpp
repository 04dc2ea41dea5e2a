#include "betti/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace betti {

bool GradedLexLess::operator()(const std::vector<unsigned>& lhs,
                               const std::vector<unsigned>& rhs) const {
    const unsigned long ld = std::accumulate(lhs.begin(), lhs.end(), 0UL);
    const unsigned long rd = std::accumulate(rhs.begin(), rhs.end(), 0UL);
    if (ld != rd) return ld < rd;
    return lhs < rhs;
}

MPoly::MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

MPoly MPoly::constant(std::vector<std::string> vars, const Rat& c) {
    MPoly p(std::move(vars));
    p.add_term(Exponents(p.variable_count(), 0), c);
    return p;
}

MPoly MPoly::variable(std::vector<std::string> vars, std::size_t index) {
    MPoly p(std::move(vars));
    if (index >= p.variable_count())
        throw std::invalid_argument("mpoly: variable index out of range");
    Exponents exps(p.variable_count(), 0);
    exps[index] = 1;
    p.add_term(exps, Rat(1));
    return p;
}

long MPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const Exponents& lead = terms_.rbegin()->first;
    return static_cast<long>(std::accumulate(lead.begin(), lead.end(), 0UL));
}

long MPoly::degree_in(std::size_t var) const {
    if (var >= vars_.size()) throw std::invalid_argument("mpoly: variable index out of range");
    long deg = -1;
    for (const auto& [exps, coeff] : terms_)
        deg = std::max(deg, static_cast<long>(exps[var]));
    return deg;
}

Rat MPoly::coefficient(const Exponents& exps) const {
    const auto it = terms_.find(exps);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat MPoly::constant_term() const { return coefficient(Exponents(vars_.size(), 0)); }

void MPoly::add_term(const Exponents& exps, const Rat& c) {
    if (exps.size() != vars_.size())
        throw std::invalid_argument("mpoly: exponent vector has wrong length");
    if (c == 0) return;
    const auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MPoly::require_same_variables(const MPoly& o) const {
    if (vars_ != o.vars_)
        throw std::invalid_argument("mpoly: operands have different variable lists");
}

MPoly MPoly::operator-() const {
    MPoly out(vars_);
    for (const auto& [exps, coeff] : terms_) out.terms_.emplace(exps, -coeff);
    return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    require_same_variables(o);
    for (const auto& [exps, coeff] : o.terms_) add_term(exps, coeff);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    require_same_variables(o);
    for (const auto& [exps, coeff] : o.terms_) add_term(exps, -coeff);
    return *this;
}

MPoly& MPoly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [exps, coeff] : terms_) coeff *= c;
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    a.require_same_variables(b);
    MPoly out(a.vars_);
    MPoly::Exponents exps(a.variable_count(), 0);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t v = 0; v < exps.size(); ++v) exps[v] = ea[v] + eb[v];
            out.add_term(exps, ca * cb);
        }
    return out;
}

MPoly MPoly::pow(unsigned k) const {
    MPoly result = MPoly::constant(vars_, Rat(1));
    MPoly base = *this;
    while (k > 0) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

MPoly MPoly::substitute(std::size_t var, const MPoly& replacement) const {
    if (var >= vars_.size()) throw std::invalid_argument("mpoly: variable index out of range");
    require_same_variables(replacement);
    // Cache replacement^k for the exponents that actually occur.
    std::vector<MPoly> powers{MPoly::constant(vars_, Rat(1))};
    MPoly out(vars_);
    for (const auto& [exps, coeff] : terms_) {
        while (powers.size() <= exps[var]) powers.push_back(powers.back() * replacement);
        Exponents reduced = exps;
        reduced[var] = 0;
        MPoly term(vars_);
        term.add_term(reduced, coeff);
        out += term * powers[exps[var]];
    }
    return out;
}

Rat MPoly::evaluate(const std::vector<Rat>& point) const {
    if (point.size() != vars_.size())
        throw std::invalid_argument("mpoly: evaluation point has wrong arity");
    // Power tables per variable, up to the degree that actually occurs.
    std::vector<std::vector<Rat>> powers(vars_.size());
    for (std::size_t v = 0; v < vars_.size(); ++v) {
        const long deg = std::max(degree_in(v), 0L);
        powers[v].reserve(static_cast<std::size_t>(deg) + 1);
        powers[v].push_back(Rat(1));
        for (long k = 1; k <= deg; ++k) powers[v].push_back(powers[v].back() * point[v]);
    }
    Rat total = 0;
    for (const auto& [exps, coeff] : terms_) {
        Rat term = coeff;
        for (std::size_t v = 0; v < exps.size(); ++v)
            if (exps[v] > 0) term *= powers[v][exps[v]];
        total += term;
    }
    return total;
}

std::optional<MPoly> MPoly::exact_divide(const MPoly& divisor) const {
    require_same_variables(divisor);
    if (divisor.is_zero()) throw std::invalid_argument("mpoly: division by zero polynomial");
    MPoly quotient(vars_);
    MPoly remainder = *this;
    const auto& [lead_exps, lead_coeff] = *divisor.terms_.rbegin();
    while (!remainder.is_zero()) {
        const auto& [rem_exps, rem_coeff] = *remainder.terms_.rbegin();
        // The leading term must be divisible at every step, or the division
        // cannot be exact (the offending term would survive as remainder).
        Exponents diff(rem_exps.size());
        for (std::size_t v = 0; v < diff.size(); ++v) {
            if (rem_exps[v] < lead_exps[v]) return std::nullopt;
            diff[v] = rem_exps[v] - lead_exps[v];
        }
        MPoly factor(vars_);
        factor.add_term(diff, rem_coeff / lead_coeff);
        quotient += factor;
        remainder -= factor * divisor;
    }
    return quotient;
}

Rat MPoly::content() const {
    Rat g = 0;
    for (const auto& [exps, coeff] : terms_) g = rat_gcd(g, coeff);
    return g;
}

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [exps, coeff] = *it;
        const Rat magnitude = abs(coeff);
        if (first) {
            if (coeff.sign() < 0) os << '-';
            first = false;
        } else {
            os << (coeff.sign() < 0 ? " - " : " + ");
        }
        const bool is_constant_term =
            std::all_of(exps.begin(), exps.end(), [](unsigned e) { return e == 0; });
        bool printed_coeff = false;
        if (magnitude != 1 || is_constant_term) {
            os << magnitude.to_string();
            printed_coeff = true;
        }
        for (std::size_t v = 0; v < exps.size(); ++v) {
            if (exps[v] == 0) continue;
            if (printed_coeff) os << '*';
            os << vars_[v];
            if (exps[v] > 1) os << '^' << exps[v];
            printed_coeff = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.to_string(); }

}  // namespace betti
