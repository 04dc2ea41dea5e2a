#include "betti/enumerate.hpp"

#include <stdexcept>
#include <string>

namespace betti {

namespace {

void validate(const EnumSpec& spec) {
    if (spec.n_lo < 3)
        throw std::invalid_argument("enumerate: length n must be at least 3, got " +
                                    std::to_string(spec.n_lo));
    if (spec.n_hi < spec.n_lo)
        throw std::invalid_argument("enumerate: empty length range");
    if (spec.min_d1 < 1)
        throw std::invalid_argument("enumerate: min_d1 must be at least 1");
    if (spec.max_d1 < spec.min_d1)
        throw std::invalid_argument("enumerate: max_d1 below min_d1");
}

// Extends a non-decreasing shift vector one position at a time; every full
// vector of length n is a sequence d_k = shift_k + k.
void extend(std::vector<long>& shifts, long n, long cap,
            const std::function<void(const DegreeSequence&)>& fn) {
    if (static_cast<long>(shifts.size()) == n) {
        std::vector<long> degrees{0};
        degrees.reserve(static_cast<std::size_t>(n) + 1);
        for (std::size_t k = 0; k < shifts.size(); ++k)
            degrees.push_back(shifts[k] + static_cast<long>(k) + 1);
        fn(DegreeSequence(std::move(degrees)));
        return;
    }
    for (long s = shifts.back(); s <= cap; ++s) {
        shifts.push_back(s);
        extend(shifts, n, cap, fn);
        shifts.pop_back();
    }
}

}  // namespace

void enumerate(const EnumSpec& spec, const std::function<void(const DegreeSequence&)>& fn) {
    validate(spec);
    const long slack = spec.strengthened ? 3 : 2;
    for (long n = spec.n_lo; n <= spec.n_hi; ++n) {
        for (long d1 = spec.min_d1; d1 <= spec.max_d1; ++d1) {
            const long cap = 2 * d1 - slack;  // reg(D) = final shift <= cap
            std::vector<long> shifts{d1 - 1};
            if (shifts.back() > cap) continue;
            extend(shifts, n, cap, fn);
        }
    }
}

std::vector<DegreeSequence> enumerate_all(const EnumSpec& spec) {
    std::vector<DegreeSequence> out;
    enumerate(spec, [&out](const DegreeSequence& D) { out.push_back(D); });
    return out;
}

}  // namespace betti
