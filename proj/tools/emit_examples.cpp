// Writes sample input documents for the command line walkthrough.
// Usage: emit_examples [directory]   (default: sample_data)
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "wba/diagram.hpp"
#include "wba/json_io.hpp"

int main(int argc, char** argv) {
    using namespace wba;
    const std::filesystem::path dir = (argc > 1) ? argv[1] : "sample_data";
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        std::cerr << "cannot create " << dir.string() << ": " << ec.message() << "\n";
        return 2;
    }

    const auto write = [&](const std::string& name, const Json& j) {
        const std::filesystem::path path = dir / name;
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out << j.dump(2) << "\n";
        std::cout << path.string() << "\n";
    };

    // identity and the wall-crossing arc element of the (1, 1) algebra
    write("identity_11.json", element_to_json(algebra_one(1, 1)));
    write("arc_11.json", element_to_json(to_element(validate(1, 1, {{1, 2}, {-1, -2}}))));

    // the same two diagrams as bare documents, usable with twist
    write("identity_11_diagram.json", diagram_to_json(identity_diagram(1, 1)));
    write("arc_11_diagram.json", diagram_to_json(validate(1, 1, {{1, 2}, {-1, -2}})));

    // a (3, 5) pair whose product closes one loop
    write("big_d1.json", diagram_to_json(validate(3, 5, {{1, -2},
                                                         {2, 6},
                                                         {3, 7},
                                                         {4, -8},
                                                         {5, -7},
                                                         {8, -4},
                                                         {-1, -5},
                                                         {-3, -6}})));
    write("big_d2.json", diagram_to_json(validate(3, 5, {{1, 6},
                                                         {2, -1},
                                                         {3, 5},
                                                         {4, -5},
                                                         {7, -4},
                                                         {8, -8},
                                                         {-2, -6},
                                                         {-3, -7}})));
    return 0;
}
