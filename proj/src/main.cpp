// Command line front end: exact computations in walled diagram algebras.
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.
// Output is deterministic byte for byte for a fixed command line.
#include <CLI11.hpp>

#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "wba/branching.hpp"
#include "wba/diagram.hpp"
#include "wba/embedding.hpp"
#include "wba/errors.hpp"
#include "wba/grothendieck.hpp"
#include "wba/half_diagram.hpp"
#include "wba/json_io.hpp"
#include "wba/verify.hpp"

namespace {

using namespace wba;

struct GlobalOpts {
    std::string format = "pretty";
    std::string delta0 = "104729";
    int max_size = 8;
    unsigned long long seed = 2024;
    std::string output;
};

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(g.output, std::ios::binary | std::ios::trunc);
    if (!out) throw SerializationError("cannot open output file: " + g.output);
    out << text;
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

std::string csv_quote(const std::string& text) {
    std::string out = "\"";
    for (char c : text) {
        if (c == '"')
            out += "\"\"";
        else
            out += c;
    }
    return out + "\"";
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SerializationError("cannot open input file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw SerializationError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

// multiply accepts either a full element document or a bare diagram
AlgebraElement element_from_file(const std::string& path) {
    const Json j = read_json_file(path);
    if (j.is_object() && j.contains("pairs")) return to_element(diagram_from_json(j));
    return element_from_json(j);
}

void guard_size(int total, int max_size, const std::string& what) {
    if (total > max_size)
        throw BoundExceeded(what + " is limited to r + s <= " + std::to_string(max_size) +
                            " (got " + std::to_string(total) + ")");
}

void cmd_dim(const GlobalOpts& g, int r, int s, int l, const std::string& cell_text) {
    guard_size(r + s, g.max_size, "dimension query");
    Json j;
    j["schema"] = 1;
    j["r"] = r;
    j["s"] = s;
    unsigned long long value = 0;
    std::string query = "algebra";
    if (l >= 0) {
        value = half_dim(r, s, l);
        j["l"] = l;
        query = "l=" + std::to_string(l);
    } else if (!cell_text.empty()) {
        const CellLabel cell = parse_cell(cell_text);
        require_cell(r, s, cell);
        value = cell_dim(r, s, cell);
        j["cell"] = cell_to_json(cell);
        query = cell_to_text(cell);
    } else {
        value = basis_count(r, s);
    }
    j["dim"] = value;
    if (g.format == "json")
        emit(g, render_json(j));
    else if (g.format == "csv")
        emit(g, "r,s,query,dim\n" + std::to_string(r) + "," + std::to_string(s) + "," +
                    csv_quote(query) + "," + std::to_string(value) + "\n");
    else
        emit(g, std::to_string(value) + "\n");
}

void cmd_multiply(const GlobalOpts& g, const std::string& fx, const std::string& fy) {
    const AlgebraElement a = element_from_file(fx);
    const AlgebraElement b = element_from_file(fy);
    guard_size(a.r + a.s, g.max_size, "multiplication");
    guard_size(b.r + b.s, g.max_size, "multiplication");
    const AlgebraElement prod = multiply(a, b);
    if (g.format == "json")
        emit(g, render_json(element_to_json(prod)));
    else if (g.format == "csv")
        emit(g, element_to_csv(prod));
    else
        emit(g, element_to_pretty(prod));
}

void cmd_twist(const GlobalOpts& g, const std::string& f1, const std::string& f2) {
    const WalledDiagram d1 = diagram_from_json(read_json_file(f1));
    const WalledDiagram d2 = diagram_from_json(read_json_file(f2));
    guard_size(d1.n() + d2.n(), g.max_size, "twisted tensor");
    const WalledDiagram t = twisted_tensor(d1, d2);
    if (g.format == "json")
        emit(g, render_json(diagram_to_json(t)));
    else if (g.format == "csv")
        emit(g, "r,s,pairs\n" + std::to_string(t.r) + "," + std::to_string(t.s) + "," +
                    csv_quote(diagram_to_text(t)) + "\n");
    else
        emit(g, diagram_to_text(t) + "\n");
}

void cmd_restrict(const GlobalOpts& g, const std::string& shape_text,
                  const std::string& cell_text) {
    const SplitShape sh = parse_shape(shape_text);
    const CellLabel cell = parse_cell(cell_text);
    guard_size(sh.r() + sh.s(), g.max_size, "restriction");
    require_cell(sh.r(), sh.s(), cell);
    const std::vector<RestrictionTerm> terms = restriction_terms(sh, cell);
    if (g.format == "json")
        emit(g, render_json(restriction_report(sh, cell, terms)));
    else if (g.format == "csv")
        emit(g, restriction_to_csv(terms));
    else
        emit(g, restriction_to_pretty(sh, cell, terms));
}

void cmd_structure(const GlobalOpts& g, const std::string& shape_text, const std::string& nu1_text,
                   const std::string& nu2_text) {
    const SplitShape sh = parse_shape(shape_text);
    const CellLabel nu1 = parse_cell(nu1_text);
    const CellLabel nu2 = parse_cell(nu2_text);
    require_cell(sh.r1, sh.s1, nu1);
    require_cell(sh.r2, sh.s2, nu2);
    guard_size(sh.r() + sh.s(), g.max_size, "structure constants");
    const GrothClass result = structure_constants(nu1, nu2);
    if (g.format == "json")
        emit(g, render_json(structure_report(sh, nu1, nu2, result)));
    else if (g.format == "csv")
        emit(g, structure_to_csv(result));
    else
        emit(g, structure_to_pretty(sh, nu1, nu2, result));
}

int cmd_verify(const GlobalOpts& g, const std::string& level) {
    VerifyOptions opt;
    opt.full = (level == "full");
    opt.delta0 = rational_from_string(g.delta0);
    opt.seed = g.seed;
    const std::vector<CheckResult> results = run_verification(opt);
    int failed = 0;
    for (const CheckResult& res : results)
        if (!res.pass) ++failed;

    if (g.format == "json") {
        Json j;
        j["schema"] = 1;
        j["level"] = level;
        j["pass"] = (failed == 0);
        Json list = Json::array();
        for (const CheckResult& res : results) {
            Json entry;
            entry["name"] = res.name;
            entry["pass"] = res.pass;
            entry["detail"] = res.detail;
            list.push_back(std::move(entry));
        }
        j["results"] = std::move(list);
        emit(g, render_json(j));
    } else if (g.format == "csv") {
        std::string out = "name,pass,detail\n";
        for (const CheckResult& res : results)
            out += res.name + "," + (res.pass ? "true" : "false") + "," + csv_quote(res.detail) +
                   "\n";
        emit(g, out);
    } else {
        std::string out;
        for (const CheckResult& res : results)
            out += std::string(res.pass ? "PASS" : "FAIL") + " " + res.name + ": " + res.detail +
                   "\n";
        out += (failed == 0) ? "all suites passed\n"
                             : std::to_string(failed) + " suite(s) failed\n";
        emit(g, out);
    }
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in walled diagram algebras"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    app.add_option("--delta0", g.delta0, "numeric parameter value, num or num/den");
    app.add_option("--max-size", g.max_size, "bound on r + s for enumerations")
        ->check(CLI::Range(0, 8));
    app.add_option("--seed", g.seed, "seed for randomized suites");
    app.add_option("--output", g.output, "write output to a file instead of stdout");

    int dim_r = 0, dim_s = 0, dim_l = -1;
    std::string dim_cell;
    CLI::App* dim = app.add_subcommand(
        "dim", "dimension of the diagram algebra, an arc layer, or a cell module");
    dim->fallthrough();
    dim->add_option("--r", dim_r, "top row size left of the wall")->required();
    dim->add_option("--s", dim_s, "top row size right of the wall")->required();
    CLI::Option* opt_l = dim->add_option("--l", dim_l, "count half diagrams with l arcs");
    CLI::Option* opt_cell = dim->add_option("--cell", dim_cell, "cell label lamL;lamR;l=K");
    opt_l->excludes(opt_cell);
    opt_cell->excludes(opt_l);

    std::string mul_x, mul_y;
    CLI::App* mul = app.add_subcommand("multiply", "product of two element JSON files");
    mul->fallthrough();
    mul->add_option("x", mul_x, "left factor JSON file")->required()->check(CLI::ExistingFile);
    mul->add_option("y", mul_y, "right factor JSON file")->required()->check(CLI::ExistingFile);

    std::string twist_a, twist_b;
    CLI::App* twist =
        app.add_subcommand("twist", "interleaved tensor product of two diagram JSON files");
    twist->fallthrough();
    twist->add_option("d1", twist_a, "first diagram JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    twist->add_option("d2", twist_b, "second diagram JSON file")
        ->required()
        ->check(CLI::ExistingFile);

    std::string res_shape, res_cell;
    CLI::App* res = app.add_subcommand("restrict", "cell module filtration along a split");
    res->fallthrough();
    res->add_option("--shape", res_shape, "split shape r1,s1|r2,s2")->required();
    res->add_option("--cell", res_cell, "cell label lamL;lamR;l=K")->required();

    std::string sc_shape, sc_nu1, sc_nu2;
    CLI::App* sc = app.add_subcommand("structure-constants",
                                      "product of two simple classes in the tower ring");
    sc->fallthrough();
    sc->add_option("--shape", sc_shape, "split shape r1,s1|r2,s2")->required();
    sc->add_option("--nu1", sc_nu1, "first class, lamL;lamR;l=K")->required();
    sc->add_option("--nu2", sc_nu2, "second class, lamL;lamR;l=K")->required();

    std::string level = "quick";
    CLI::App* verify = app.add_subcommand("verify", "run the invariant suites");
    verify->fallthrough();
    verify->add_option("--level", level, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}));

    int exit_code = 0;
    dim->callback([&] { cmd_dim(g, dim_r, dim_s, dim_l, dim_cell); });
    mul->callback([&] { cmd_multiply(g, mul_x, mul_y); });
    twist->callback([&] { cmd_twist(g, twist_a, twist_b); });
    res->callback([&] { cmd_restrict(g, res_shape, res_cell); });
    sc->callback([&] { cmd_structure(g, sc_shape, sc_nu1, sc_nu2); });
    verify->callback([&] { exit_code = cmd_verify(g, level); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
