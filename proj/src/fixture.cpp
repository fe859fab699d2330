#include "walkmetric/fixture.hpp"

namespace walkmetric {

namespace {

ReferenceExample build() {
    ReferenceExample ex;
    ex.graph_text =
        "# 10-vertex reference graph\n"
        "v1 v2\n"
        "v1 v3\n"
        "v2 v4\n"
        "v3 v4\n"
        "v2 v5\n"
        "v4 v6\n"
        "v4 v9\n"
        "v5 v9\n"
        "v6 v8\n"
        "v5 v7\n"
        "v7 v9\n"
        "v3 v8\n"
        "v6 v10\n"
        "v9 v10\n"
        "v8 v10\n";
    ex.walks_text =
        "# explored walks\n"
        "w1: v1 v2 v5 v9 v10\n"
        "w2: v1 v3 v4 v9 v10\n"
        "w3: v1 v3 v8 v10\n"
        "# walks to classify\n"
        "w4: v1 v2 v5 v7 v9 v10\n"
        "w5: v1 v3 v4 v6 v10\n"
        "w6: v1 v3 v8 v6 v10\n";
    ex.evaluation_text =
        "base v1\n"
        "v1 0\n"
        "v2 0\n"
        "v3 -1\n"
        "v4 -1\n"
        "v5 -1\n"
        "v8 -2\n"
        "v9 -2\n"
        "v10 -3\n";
    ex.reference_names = {"w1", "w2", "w3"};
    ex.candidate_names = {"w4", "w5", "w6"};
    ex.ratio = Rational(1, 2);
    ex.alpha = Rational(1, 2);
    ex.anchors = AnchorPolicy::minus({"v10"});
    ex.base_vertex = "v1";
    ex.target_vertex = "v10";
    ex.expected_exact = {{
        {Rational(1, 16), Rational(5, 16), Rational(1, 2)},
        {Rational(9, 32), Rational(1, 32), Rational(7, 32)},
        {Rational(13, 32), Rational(5, 32), Rational(3, 32)},
    }};
    ex.expected_rendered = {{
        {"0.062", "0.312", "0.500"},
        {"0.281", "0.031", "0.219"},
        {"0.406", "0.156", "0.094"},
    }};
    ex.expected_assignments = {{"w4", "w1"}, {"w5", "w2"}, {"w6", "w3"}};
    ex.expected_known_values = {
        {"v1", Rational(0)},  {"v2", Rational(0)},  {"v3", Rational(-1)}, {"v4", Rational(-1)},
        {"v5", Rational(-1)}, {"v8", Rational(-2)}, {"v9", Rational(-2)}, {"v10", Rational(-3)},
    };
    return ex;
}

}  // namespace

const ReferenceExample& reference_example() {
    static const ReferenceExample instance = build();
    return instance;
}

}  // namespace walkmetric
