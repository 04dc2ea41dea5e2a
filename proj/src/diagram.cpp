#include "betti/diagram.hpp"

#include <limits>
#include <stdexcept>

namespace betti {

void BettiDiagram::set(long i, long j, const Rat& value) {
    if (i < 0)
        throw std::invalid_argument("diagram: homological index " + std::to_string(i) +
                                    " is negative");
    if (value.sign() < 0)
        throw std::invalid_argument("diagram: entry (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") would be negative");
    if (value.sign() == 0) {
        entries_.erase(Key{i, j});
        return;
    }
    entries_[Key{i, j}] = value;
}

void BettiDiagram::add(long i, long j, const Rat& delta) {
    set(i, j, get(i, j) + delta);
}

Rat BettiDiagram::get(long i, long j) const {
    const auto it = entries_.find(Key{i, j});
    return it == entries_.end() ? Rat(0) : it->second;
}

long BettiDiagram::max_column() const {
    if (entries_.empty()) throw std::invalid_argument("diagram: empty, no max column");
    return entries_.rbegin()->first.first;
}

bool BettiDiagram::column_nonempty(long i) const {
    const auto it = entries_.lower_bound(Key{i, std::numeric_limits<long>::min()});
    return it != entries_.end() && it->first.first == i;
}

std::optional<long> BettiDiagram::column_min_degree(long i) const {
    const auto it = entries_.lower_bound(Key{i, std::numeric_limits<long>::min()});
    if (it == entries_.end() || it->first.first != i) return std::nullopt;
    return it->first.second;
}

BettiDiagram PureDiagram::to_betti_diagram() const {
    BettiDiagram B;
    for (long i = 0; i <= degrees.n(); ++i)
        B.set(i, degrees[i], entries[static_cast<std::size_t>(i)]);
    return B;
}

PureDiagram pure_diagram(const DegreeSequence& D, const Rat& multiplier) {
    if (multiplier.sign() <= 0)
        throw std::invalid_argument("pure_diagram: multiplier must be positive, got " +
                                    multiplier.to_string());
    std::vector<Rat> entries;
    entries.reserve(static_cast<std::size_t>(D.n()) + 1);
    for (long i = 0; i <= D.n(); ++i) entries.push_back(multiplier * pi(D, i));
    return PureDiagram{D, multiplier, std::move(entries)};
}

}  // namespace betti
