#include "betti/io.hpp"

#include "json.hpp"

#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace betti {

namespace {

using json = nlohmann::ordered_json;

json parse_or_throw(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
}

long require_integer(const json& value, const char* what) {
    if (!value.is_number_integer())
        throw std::invalid_argument(std::string(what) + " must be an integer");
    return value.get<long>();
}

Rat parse_value(const json& value, const char* what) {
    if (value.is_number_integer()) return Rat(Int(std::to_string(value.get<long long>())));
    if (value.is_string()) return Rat::parse(value.get<std::string>());
    throw std::invalid_argument(std::string(what) +
                                " must be an integer or a rational string like \"7/3\"");
}

}  // namespace

DiagramFile diagram_from_json(const std::string& text) {
    json doc = parse_or_throw(text);
    if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array())
        throw std::invalid_argument("diagram JSON must be an object with an \"entries\" array");

    DiagramFile file;
    std::set<std::pair<long, long>> seen;
    for (const json& entry : doc["entries"]) {
        if (!entry.is_object() || !entry.contains("i") || !entry.contains("j") ||
            !entry.contains("value"))
            throw std::invalid_argument(
                "each diagram entry must be an object with \"i\", \"j\" and \"value\"");
        long i = require_integer(entry["i"], "entry field \"i\"");
        long j = require_integer(entry["j"], "entry field \"j\"");
        if (!seen.insert({i, j}).second)
            throw std::invalid_argument("duplicate diagram entry at (i, j) = (" +
                                        std::to_string(i) + ", " + std::to_string(j) + ")");
        file.diagram.set(i, j, parse_value(entry["value"], "entry field \"value\""));
    }
    if (doc.contains("codim")) file.codim = require_integer(doc["codim"], "\"codim\"");
    return file;
}

std::string diagram_to_json(const BettiDiagram& diagram, long codim) {
    json doc = json::object();
    doc["entries"] = json::array();
    for (const auto& [key, value] : diagram.entries()) {
        json entry = json::object();
        entry["i"] = key.first;
        entry["j"] = key.second;
        entry["value"] = value.to_string();
        doc["entries"].push_back(std::move(entry));
    }
    if (codim >= 0) doc["codim"] = codim;
    return doc.dump(2) + "\n";
}

std::string decomposition_to_json(const Decomposition& dec) {
    json doc = json::object();
    doc["beta0"] = dec.source_beta0.to_string();
    doc["summands"] = json::array();
    for (const Summand& s : dec.summands) {
        json entry = json::object();
        entry["lambda"] = s.lambda.to_string();
        entry["degrees"] = json::array();
        for (long d : s.degrees.degrees()) entry["degrees"].push_back(d);
        doc["summands"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

Decomposition decomposition_from_json(const std::string& text) {
    json doc = parse_or_throw(text);
    if (!doc.is_object() || !doc.contains("beta0") || !doc.contains("summands") ||
        !doc["summands"].is_array())
        throw std::invalid_argument(
            "decomposition JSON must be an object with \"beta0\" and a \"summands\" array");

    Decomposition dec;
    dec.source_beta0 = parse_value(doc["beta0"], "\"beta0\"");
    for (const json& entry : doc["summands"]) {
        if (!entry.is_object() || !entry.contains("lambda") || !entry.contains("degrees") ||
            !entry["degrees"].is_array())
            throw std::invalid_argument(
                "each summand must be an object with \"lambda\" and a \"degrees\" array");
        Summand s{parse_value(entry["lambda"], "\"lambda\""), DegreeSequence([&] {
                      std::vector<long> degrees;
                      for (const json& d : entry["degrees"])
                          degrees.push_back(require_integer(d, "degree"));
                      return degrees;
                  }())};
        if (s.lambda.sign() <= 0)
            throw std::invalid_argument("summand coefficient must be positive, got " +
                                        s.lambda.to_string());
        dec.summands.push_back(std::move(s));
    }
    return dec;
}

std::string render_diagram_rows(const BettiDiagram& diagram) {
    if (diagram.empty()) return "(empty diagram)\n";

    long max_col = diagram.max_column();
    long row_lo = std::numeric_limits<long>::max();
    long row_hi = std::numeric_limits<long>::min();
    for (const auto& [key, value] : diagram.entries()) {
        (void)value;
        long row = key.second - key.first;
        row_lo = std::min(row_lo, row);
        row_hi = std::max(row_hi, row);
    }

    auto cell = [&](long row, long col) -> std::string {
        Rat v = diagram.get(col, row + col);
        return v == Rat(0) ? "." : v.to_string();
    };

    std::vector<std::string> labels;
    std::size_t label_width = 0;
    for (long row = row_lo; row <= row_hi; ++row) {
        labels.push_back(std::to_string(row) + ":");
        label_width = std::max(label_width, labels.back().size());
    }

    std::vector<std::size_t> widths(static_cast<std::size_t>(max_col) + 1);
    for (long col = 0; col <= max_col; ++col) {
        std::size_t w = std::to_string(col).size();
        for (long row = row_lo; row <= row_hi; ++row)
            w = std::max(w, cell(row, col).size());
        widths[static_cast<std::size_t>(col)] = w;
    }

    auto pad_left = [](const std::string& s, std::size_t width) {
        return std::string(width - s.size(), ' ') + s;
    };

    std::ostringstream out;
    out << std::string(label_width, ' ');
    for (long col = 0; col <= max_col; ++col)
        out << "  " << pad_left(std::to_string(col), widths[static_cast<std::size_t>(col)]);
    out << "\n";
    for (long row = row_lo; row <= row_hi; ++row) {
        out << pad_left(labels[static_cast<std::size_t>(row - row_lo)], label_width);
        for (long col = 0; col <= max_col; ++col)
            out << "  " << pad_left(cell(row, col), widths[static_cast<std::size_t>(col)]);
        out << "\n";
    }
    return out.str();
}

}  // namespace betti
