#pragma once

#include "betti/decompose.hpp"
#include "betti/diagram.hpp"

#include <string>

namespace betti {

// On-disk JSON shape for a diagram:
//   { "entries": [ { "i": 0, "j": 0, "value": "1" }, ... ], "codim": 3 }
// Values are exact rationals written as strings ("5", "7/3"); plain JSON
// integers are also accepted on input.  "codim" is optional metadata used
// only for sanity warnings.
struct DiagramFile {
    BettiDiagram diagram;
    long codim = -1;  // -1 when absent
};

DiagramFile diagram_from_json(const std::string& text);
std::string diagram_to_json(const BettiDiagram& diagram, long codim = -1);

// JSON shape for a decomposition:
//   { "beta0": "1", "summands": [ { "lambda": "2/5", "degrees": [0,2,3,5] } ] }
std::string decomposition_to_json(const Decomposition& dec);
Decomposition decomposition_from_json(const std::string& text);

// Plain-text rendering in the usual Betti-table layout: one column per
// homological index i, one row per twist j - i, "." for absent entries.
std::string render_diagram_rows(const BettiDiagram& diagram);

}  // namespace betti
