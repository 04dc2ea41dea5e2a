#pragma once

#include "betti/degree_sequence.hpp"
#include "betti/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace betti {

// A sparse Betti diagram: finite map (homological index i, internal degree
// j) -> strictly positive rational.  Zero is represented by absence; writing
// a zero removes the key.  Keys are ordered column-major, so iteration (and
// every derived output) is deterministic.
//
// The internal degree j is the stored key; the familiar tabular display puts
// beta_{i,j} in column i and row j - i, which is a formatting concern only.
class BettiDiagram {
public:
    using Key = std::pair<long, long>;  // (i, j)

    BettiDiagram() = default;

    // Sets entry (i, j) to `value`: positive stores, zero erases, negative
    // throws (diagram entries are ranks scaled by positive rationals).
    void set(long i, long j, const Rat& value);

    // Adds `delta` to entry (i, j) with the same sign discipline on the
    // result; exact zeros are removed immediately.
    void add(long i, long j, const Rat& delta);

    Rat get(long i, long j) const;
    bool has(long i, long j) const { return entries_.count(Key{i, j}) > 0; }

    const std::map<Key, Rat>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t entry_count() const { return entries_.size(); }

    // Largest column index present; requires a nonempty diagram.
    long max_column() const;

    bool column_nonempty(long i) const;

    // Smallest internal degree present in column i, if any.
    std::optional<long> column_min_degree(long i) const;

    friend bool operator==(const BettiDiagram&, const BettiDiagram&) = default;

private:
    std::map<Key, Rat> entries_;
};

// A positive multiple of the normalized pure diagram B(D): entry i equals
// multiplier * pi_i(D), placed at column i, internal degree d_i.  Entry 0
// equals the multiplier itself since pi_0 = 1.
struct PureDiagram {
    DegreeSequence degrees;
    Rat multiplier;
    std::vector<Rat> entries;  // size n + 1

    BettiDiagram to_betti_diagram() const;
};

// Builds multiplier * B(D); multiplier must be strictly positive.
PureDiagram pure_diagram(const DegreeSequence& D, const Rat& multiplier = Rat(1));

}  // namespace betti
