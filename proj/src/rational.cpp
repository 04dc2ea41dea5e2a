#include "betti/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace betti {

namespace {

void require_nonzero_denominator(const Int& den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
}

}  // namespace

Rat::Rat(const Int& num, const Int& den) {
    require_nonzero_denominator(den);
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat::Rat(long num, long den) : Rat(Int(num), Int(den)) {}

Rat& Rat::operator/=(const Rat& o) {
    if (o.v_ == 0) throw std::invalid_argument("rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::parse(const std::string& text) {
    const auto malformed = [&text]() {
        return std::invalid_argument("rational: malformed value '" + text + "'");
    };
    std::size_t pos = 0;
    if (pos < text.size() && text[pos] == '-') ++pos;
    std::size_t num_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == num_start) throw malformed();
    if (pos == text.size()) return Rat(Int(text));
    if (text[pos] != '/') throw malformed();
    ++pos;
    std::size_t den_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == den_start || pos != text.size()) throw malformed();
    Int num(text.substr(0, den_start - 1));
    Int den(text.substr(den_start));
    require_nonzero_denominator(den);
    return Rat(num, den);
}

Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return result;
}

Int ipow(const Int& base, long exp) {
    if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
    Int result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
    return result;
}

Int gcd(const Int& a, const Int& b) {
    Int result;
    mpz_gcd(result.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return result;
}

Int lcm(const Int& a, const Int& b) {
    Int result;
    mpz_lcm(result.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return result;
}

Rat rat_gcd(const Rat& a, const Rat& b) {
    if (a == 0) return abs(b);
    if (b == 0) return abs(a);
    return Rat(gcd(a.numerator(), b.numerator()), lcm(a.denominator(), b.denominator()));
}

std::string decimal_display(const Rat& r, int places) {
    if (places < 0) throw std::invalid_argument("decimal_display: negative places");
    Int num = abs(r.numerator());
    const Int den = r.denominator();
    const Int scaled = num * ipow(Int(10), places);
    Int q = scaled / den;
    const Int rem = scaled % den;
    if (2 * rem >= den) ++q;  // round half away from zero (sign handled below)

    std::string digits = q.get_str();
    if (digits.size() <= static_cast<std::size_t>(places))
        digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    std::string integral = digits.substr(0, digits.size() - places);
    std::string fractional = digits.substr(digits.size() - places);
    while (!fractional.empty() && fractional.back() == '0') fractional.pop_back();

    std::string out;
    if (r.sign() < 0 && q != 0) out += '-';
    out += integral;
    if (!fractional.empty()) {
        out += '.';
        out += fractional;
    }
    return out;
}

}  // namespace betti
