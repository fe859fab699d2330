#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "walkmetric/extension.hpp"
#include "walkmetric/rational.hpp"

namespace walkmetric {

/// The bundled 10-vertex reference example: graph, six named walks, the
/// partially known evaluation on the vertices visited by the first three
/// walks, the pipeline parameters, and the expected classification table.
/// `repro-paper` re-derives everything from the graph and walks and checks
/// it against these expectations; the same text ships as files under data/
/// and a test pins the two copies together.
struct ReferenceExample {
    std::string graph_text;
    std::string walks_text;
    std::string evaluation_text;

    std::vector<std::string> reference_names;  // rows of the known set
    std::vector<std::string> candidate_names;  // walks to classify

    Rational ratio;
    Rational alpha;
    AnchorPolicy anchors;
    std::string base_vertex;
    std::string target_vertex;

    /// expected_exact[c][r] = proximity of candidate c to reference r.
    std::array<std::array<Rational, 3>, 3> expected_exact;
    std::array<std::array<std::string, 3>, 3> expected_rendered;  // 3 decimals
    /// candidate name -> assigned reference name.
    std::vector<std::pair<std::string, std::string>> expected_assignments;

    /// Known evaluation values in vertex order.
    std::vector<std::pair<std::string, Rational>> expected_known_values;
};

const ReferenceExample& reference_example();

}  // namespace walkmetric
