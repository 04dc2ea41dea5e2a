#include "betti/degree_sequence.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace betti {

DegreeSequence::DegreeSequence(std::vector<long> degrees) : d_(std::move(degrees)) {
    if (d_.size() < 2)
        throw std::invalid_argument("degree sequence: need at least two entries (n >= 1)");
    if (d_[0] != 0)
        throw std::invalid_argument("degree sequence: entry 0 must be 0, got " +
                                    std::to_string(d_[0]));
    for (std::size_t k = 1; k < d_.size(); ++k) {
        if (d_[k] <= d_[k - 1])
            throw std::invalid_argument(
                "degree sequence: entry " + std::to_string(k) + " (value " +
                std::to_string(d_[k]) + ") does not exceed entry " + std::to_string(k - 1) +
                " (value " + std::to_string(d_[k - 1]) + ")");
    }
}

std::vector<long> DegreeSequence::shift_vector() const {
    std::vector<long> s;
    s.reserve(d_.size() - 1);
    for (std::size_t k = 1; k < d_.size(); ++k)
        s.push_back(d_[k] - static_cast<long>(k));
    return s;
}

std::string DegreeSequence::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t k = 0; k < d_.size(); ++k) {
        if (k > 0) os << ',';
        os << d_[k];
    }
    os << '}';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const DegreeSequence& D) {
    return os << D.to_string();
}

Rat pi(const DegreeSequence& D, long i) {
    const long n = D.n();
    if (i < 0 || i > n)
        throw std::invalid_argument("pi: index " + std::to_string(i) + " out of range [0, " +
                                    std::to_string(n) + "]");
    // The factor d_i / |d_i - d_0| = d_i / d_i contributed by j = 0 cancels
    // against the numerator's d_i, so the product runs over j in [1,n]\{i}.
    // For i = 0 every factor is d_j / d_j, giving pi_0 = 1.
    Rat result = 1;
    for (long j = 1; j <= n; ++j) {
        if (j == i) continue;
        result *= Rat(D[j], std::labs(D[i] - D[j]));
    }
    return result;
}

Rat sum_pi(const DegreeSequence& D) {
    Rat total = 0;
    for (long i = 0; i <= D.n(); ++i) total += pi(D, i);
    return total;
}

DegreeSequence truncate(const DegreeSequence& D, long i) {
    const long n = D.n();
    if (i < 1 || i > n)
        throw std::invalid_argument("truncate: index " + std::to_string(i) +
                                    " out of range [1, " + std::to_string(n) + "]");
    const long a = D[1];
    std::vector<long> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    out.push_back(0);
    for (long t = 0; t <= i - 2; ++t) out.push_back(a + t);  // head: a, a+1, ..., a+(i-2)
    out.push_back(D[i]);
    for (long k = i + 1; k <= n; ++k) out.push_back(D[n] - (n - k));  // tail ends at d_n
    return DegreeSequence(std::move(out));
}

ShapeParams shape_params(const DegreeSequence& D, long i) {
    const long n = D.n();
    if (i < 1 || i > n)
        throw std::invalid_argument("shape_params: index " + std::to_string(i) +
                                    " out of range [1, " + std::to_string(n) + "]");
    const long a = D[1];
    return ShapeParams{a, D[i] - a - i + 1, D[n] - D[i] - n + i, n, i};
}

Rat hk_moment(const DegreeSequence& D, long k) {
    const long n = D.n();
    if (k < 0 || k > n - 1)
        throw std::invalid_argument("hk_moment: order " + std::to_string(k) +
                                    " out of range [0, " + std::to_string(n - 1) + "]");
    Rat total = 0;
    for (long i = 0; i <= n; ++i) {
        const Rat term = Rat(ipow(Int(D[i]), k)) * pi(D, i);
        total += (i % 2 == 0) ? term : -term;
    }
    return total;
}

}  // namespace betti
