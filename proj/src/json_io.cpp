#include "wba/json_io.hpp"

#include <cstddef>
#include <string>
#include <vector>

#include "wba/errors.hpp"
#include "wba/partition.hpp"

namespace wba {

namespace {

const Json& expect_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw SerializationError(std::string("missing field: ") + key);
    return j.at(key);
}

int expect_int(const Json& j, const char* what) {
    if (!j.is_number_integer())
        throw SerializationError(std::string("expected an integer for ") + what);
    return j.get<int>();
}

long expect_long(const Json& j, const char* what) {
    if (!j.is_number_integer())
        throw SerializationError(std::string("expected an integer for ") + what);
    return j.get<long>();
}

std::vector<std::pair<int, int>> int_pairs_from(const Json& j, const char* what) {
    if (!j.is_array())
        throw SerializationError(std::string("expected an array for ") + what);
    std::vector<std::pair<int, int>> out;
    out.reserve(j.size());
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 2)
            throw SerializationError(std::string("expected [a, b] entries in ") + what);
        out.emplace_back(expect_int(entry[0], what), expect_int(entry[1], what));
    }
    return out;
}

void expect_schema(const Json& j) {
    if (j.contains("schema") && !(j.at("schema").is_number_integer() && j.at("schema") == 1))
        throw SerializationError("unsupported schema version");
}

// Splits on a single character; empty segments are kept so callers can
// reject them with a precise message.
std::vector<std::string> split_on(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == sep) {
            parts.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    return parts;
}

int parse_nonneg_int(const std::string& text, const char* what) {
    if (text.empty() || text.size() > 9)
        throw SerializationError(std::string("malformed integer for ") + what + ": '" + text + "'");
    long value = 0;
    for (char c : text) {
        if (c < '0' || c > '9')
            throw SerializationError(std::string("malformed integer for ") + what + ": '" + text +
                                     "'");
        value = value * 10 + (c - '0');
    }
    return static_cast<int>(value);
}

std::string quoted(const std::string& text) { return "\"" + text + "\""; }

} // namespace

Json laurent_to_json(const Laurent& f) {
    Json arr = Json::array();
    for (const auto& [e, c] : f.terms()) {
        Json pair = Json::array();
        pair.push_back(e);
        pair.push_back(rational_to_string(c));
        arr.push_back(std::move(pair));
    }
    return arr;
}

Laurent laurent_from_json(const Json& j) {
    if (!j.is_array()) throw SerializationError("expected an array of [exponent, coeff] pairs");
    Laurent f;
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 2 || !entry[1].is_string())
            throw SerializationError("expected [exponent, \"num/den\"] entries");
        long e = expect_long(entry[0], "exponent");
        f += Laurent::delta_power(e, rational_from_string(entry[1].get<std::string>()));
    }
    return f;
}

Json diagram_to_json(const WalledDiagram& d) {
    Json j;
    j["r"] = d.r;
    j["s"] = d.s;
    Json pairs = Json::array();
    for (const auto& [a, b] : d.pairs) {
        Json pair = Json::array();
        pair.push_back(a);
        pair.push_back(b);
        pairs.push_back(std::move(pair));
    }
    j["pairs"] = std::move(pairs);
    return j;
}

WalledDiagram diagram_from_json(const Json& j) {
    int r = expect_int(expect_field(j, "r"), "r");
    int s = expect_int(expect_field(j, "s"), "s");
    return validate(r, s, int_pairs_from(expect_field(j, "pairs"), "pairs"));
}

Json element_to_json(const AlgebraElement& x) {
    Json j;
    j["schema"] = 1;
    j["r"] = x.r;
    j["s"] = x.s;
    Json terms = Json::array();
    for (const auto& [d, c] : x.terms) {
        Json term;
        term["pairs"] = diagram_to_json(d)["pairs"];
        term["coeff"] = laurent_to_json(c);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

AlgebraElement element_from_json(const Json& j) {
    expect_schema(j);
    int r = expect_int(expect_field(j, "r"), "r");
    int s = expect_int(expect_field(j, "s"), "s");
    const Json& terms = expect_field(j, "terms");
    if (!terms.is_array()) throw SerializationError("expected an array for terms");
    AlgebraElement x = algebra_zero(r, s);
    for (const auto& term : terms) {
        WalledDiagram d = validate(r, s, int_pairs_from(expect_field(term, "pairs"), "pairs"));
        Laurent c = laurent_from_json(expect_field(term, "coeff"));
        x = add(x, to_element(d, c));
    }
    return x;
}

Json half_to_json(const HalfDiagram& v) {
    Json j;
    j["r"] = v.r;
    j["s"] = v.s;
    Json arcs = Json::array();
    for (const auto& [a, b] : v.arcs) {
        Json arc = Json::array();
        arc.push_back(a);
        arc.push_back(b);
        arcs.push_back(std::move(arc));
    }
    j["arcs"] = std::move(arcs);
    return j;
}

HalfDiagram half_from_json(const Json& j) {
    int r = expect_int(expect_field(j, "r"), "r");
    int s = expect_int(expect_field(j, "s"), "s");
    return validate_half(r, s, int_pairs_from(expect_field(j, "arcs"), "arcs"));
}

Json partition_to_json(const Partition& p) {
    Json arr = Json::array();
    for (int part : p) arr.push_back(part);
    return arr;
}

Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw SerializationError("expected an integer array for a partition");
    Partition p;
    p.reserve(j.size());
    for (const auto& entry : j) p.push_back(expect_int(entry, "partition part"));
    if (!is_partition(p)) throw SerializationError("parts must be positive and weakly decreasing");
    return p;
}

Json cell_to_json(const CellLabel& c) {
    Json j;
    j["l"] = c.l;
    j["lamL"] = partition_to_json(c.lamL);
    j["lamR"] = partition_to_json(c.lamR);
    return j;
}

CellLabel cell_from_json(const Json& j) {
    CellLabel c;
    c.l = expect_int(expect_field(j, "l"), "l");
    if (c.l < 0) throw SerializationError("l must be nonnegative");
    c.lamL = partition_from_json(expect_field(j, "lamL"));
    c.lamR = partition_from_json(expect_field(j, "lamR"));
    return c;
}

Json shape_to_json(const SplitShape& sh) {
    Json j;
    j["r1"] = sh.r1;
    j["s1"] = sh.s1;
    j["r2"] = sh.r2;
    j["s2"] = sh.s2;
    return j;
}

SplitShape shape_from_json(const Json& j) {
    SplitShape sh;
    sh.r1 = expect_int(expect_field(j, "r1"), "r1");
    sh.s1 = expect_int(expect_field(j, "s1"), "s1");
    sh.r2 = expect_int(expect_field(j, "r2"), "r2");
    sh.s2 = expect_int(expect_field(j, "s2"), "s2");
    if (sh.r1 < 0 || sh.s1 < 0 || sh.r2 < 0 || sh.s2 < 0)
        throw SerializationError("split shape entries must be nonnegative");
    return sh;
}

std::string partition_to_text(const Partition& p) {
    if (p.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p[i]);
    }
    return out;
}

Partition parse_partition(const std::string& text) {
    if (text == "0") return {};
    if (text.empty()) throw SerializationError("empty partition literal");
    Partition p;
    for (const std::string& part : split_on(text, ','))
        p.push_back(parse_nonneg_int(part, "partition part"));
    if (!is_partition(p))
        throw SerializationError("parts must be positive and weakly decreasing: '" + text + "'");
    return p;
}

std::string cell_to_text(const CellLabel& c) {
    return partition_to_text(c.lamL) + ";" + partition_to_text(c.lamR) +
           ";l=" + std::to_string(c.l);
}

CellLabel parse_cell(const std::string& text) {
    std::vector<std::string> parts = split_on(text, ';');
    if (parts.size() != 3 || parts[2].rfind("l=", 0) != 0)
        throw SerializationError("expected \"lamL;lamR;l=K\": '" + text + "'");
    CellLabel c;
    c.lamL = parse_partition(parts[0]);
    c.lamR = parse_partition(parts[1]);
    c.l = parse_nonneg_int(parts[2].substr(2), "arc count");
    return c;
}

std::string shape_to_text(const SplitShape& sh) {
    return std::to_string(sh.r1) + "," + std::to_string(sh.s1) + "|" + std::to_string(sh.r2) +
           "," + std::to_string(sh.s2);
}

SplitShape parse_shape(const std::string& text) {
    std::vector<std::string> sides = split_on(text, '|');
    if (sides.size() != 2) throw SerializationError("expected \"r1,s1|r2,s2\": '" + text + "'");
    std::vector<std::string> left = split_on(sides[0], ',');
    std::vector<std::string> right = split_on(sides[1], ',');
    if (left.size() != 2 || right.size() != 2)
        throw SerializationError("expected \"r1,s1|r2,s2\": '" + text + "'");
    SplitShape sh;
    sh.r1 = parse_nonneg_int(left[0], "r1");
    sh.s1 = parse_nonneg_int(left[1], "s1");
    sh.r2 = parse_nonneg_int(right[0], "r2");
    sh.s2 = parse_nonneg_int(right[1], "s2");
    return sh;
}

std::string diagram_to_text(const WalledDiagram& d) {
    std::string out;
    for (const auto& [a, b] : d.pairs)
        out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    return out;
}

Json restriction_report(const SplitShape& sh, const CellLabel& cell,
                        const std::vector<RestrictionTerm>& terms) {
    Json j;
    j["schema"] = 1;
    j["shape"] = shape_to_json(sh);
    j["cell"] = cell_to_json(cell);
    Json list = Json::array();
    for (const auto& term : terms) {
        Json entry;
        entry["cell1"] = cell_to_json(term.cell1);
        entry["cell2"] = cell_to_json(term.cell2);
        entry["mult"] = term.mult;
        list.push_back(std::move(entry));
    }
    j["terms"] = std::move(list);
    return j;
}

Json structure_report(const SplitShape& sh, const CellLabel& nu1, const CellLabel& nu2,
                      const GrothClass& result) {
    Json j;
    j["schema"] = 1;
    j["shape"] = shape_to_json(sh);
    j["nu1"] = cell_to_json(nu1);
    j["nu2"] = cell_to_json(nu2);
    Json list = Json::array();
    for (const auto& [cell, coeff] : result) {
        Json entry;
        entry["cell"] = cell_to_json(cell);
        entry["coeff"] = coeff;
        list.push_back(std::move(entry));
    }
    j["result"] = std::move(list);
    return j;
}

std::string structure_to_csv(const GrothClass& result) {
    std::string out = "l,lamL,lamR,coeff\n";
    for (const auto& [cell, coeff] : result) {
        out += std::to_string(cell.l) + "," + quoted(partition_to_text(cell.lamL)) + "," +
               quoted(partition_to_text(cell.lamR)) + "," + std::to_string(coeff) + "\n";
    }
    return out;
}

std::string restriction_to_csv(const std::vector<RestrictionTerm>& terms) {
    std::string out = "l1,lamL1,lamR1,l2,lamL2,lamR2,mult\n";
    for (const auto& term : terms) {
        out += std::to_string(term.cell1.l) + "," + quoted(partition_to_text(term.cell1.lamL)) +
               "," + quoted(partition_to_text(term.cell1.lamR)) + "," +
               std::to_string(term.cell2.l) + "," + quoted(partition_to_text(term.cell2.lamL)) +
               "," + quoted(partition_to_text(term.cell2.lamR)) + "," +
               std::to_string(term.mult) + "\n";
    }
    return out;
}

std::string element_to_csv(const AlgebraElement& x) {
    std::string out = "coeff,pairs\n";
    for (const auto& [d, c] : x.terms)
        out += quoted(c.to_string()) + "," + quoted(diagram_to_text(d)) + "\n";
    return out;
}

std::string element_to_pretty(const AlgebraElement& x) {
    if (x.is_zero()) return "0\n";
    std::string out;
    for (const auto& [d, c] : x.terms)
        out += "[" + c.to_string() + "] " + diagram_to_text(d) + "\n";
    return out;
}

std::string restriction_to_pretty(const SplitShape& sh, const CellLabel& cell,
                                  const std::vector<RestrictionTerm>& terms) {
    std::string out = "shape: " + shape_to_text(sh) + "\ncell: " + cell_to_text(cell) + "\nterms:\n";
    if (terms.empty()) return out + "  (none)\n";
    for (const auto& term : terms)
        out += "  " + std::to_string(term.mult) + " * (" + cell_to_text(term.cell1) + ") x (" +
               cell_to_text(term.cell2) + ")\n";
    return out;
}

std::string structure_to_pretty(const SplitShape& sh, const CellLabel& nu1, const CellLabel& nu2,
                                const GrothClass& result) {
    std::string out = "shape: " + shape_to_text(sh) + "\nnu1: " + cell_to_text(nu1) +
                      "\nnu2: " + cell_to_text(nu2) + "\nresult:\n";
    if (result.empty()) return out + "  (none)\n";
    for (const auto& [cell, coeff] : result)
        out += "  " + std::to_string(coeff) + " * (" + cell_to_text(cell) + ")\n";
    return out;
}

} // namespace wba
