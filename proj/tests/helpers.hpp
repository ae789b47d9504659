#pragma once

// Shared fixture access for the test binaries. FIXTURES_DIR is injected by
// the build so the tests run from any working directory.

#include <string>
#include <vector>

#include "strucnet/graph_io.hpp"

namespace testutil {

inline std::string fixture_path(const std::string& name) {
    return std::string(FIXTURES_DIR) + "/" + name + ".json";
}

inline strucnet::StructureGraph fixture(const std::string& name) {
    return strucnet::load_graph_file(fixture_path(name));
}

// Every graph fixture in the repository (the three *system* fixtures for
// the solvable command are not graphs and are listed separately).
inline const std::vector<std::string>& graph_fixture_names() {
    static const std::vector<std::string> names = {
        "fig1",  "fig2",  "fig3a", "fig3b", "fig5a", "fig5b", "fig5c",
        "fig5d", "fig5e", "fig6a", "fig7a", "fig7b", "example2",
    };
    return names;
}

}  // namespace testutil
