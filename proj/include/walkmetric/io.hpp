#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "walkmetric/evaluation.hpp"
#include "walkmetric/extension.hpp"
#include "walkmetric/graph.hpp"
#include "walkmetric/proximity.hpp"
#include "walkmetric/walk.hpp"

namespace walkmetric {

std::string read_file(const std::string& path);

/// Named walks in file order. Lines are `<name>: <v_1> ... <v_k>`; the last
/// listed vertex is the tail. `#` comments and blank lines are allowed.
class WalkSet {
public:
    static WalkSet parse(std::string_view text, const Graph& g);

    const std::vector<std::string>& names() const { return names_; }
    const std::vector<Walk>& walks() const { return walks_; }
    /// Throws UnknownWalkError.
    const Walk& by_name(const std::string& name) const;
    std::size_t size() const { return walks_.size(); }

private:
    std::vector<std::string> names_;
    std::vector<Walk> walks_;
};

/// Evaluation file: a `base <vertex>` header line, then `<vertex> <rational>`
/// lines (rationals as p/q, integers, or exact decimals). The result is
/// partial; it is total exactly when every graph vertex appears.
PartialEvaluation parse_evaluation(std::string_view text, GraphPtr g);

/// Requires the known set to cover the whole graph.
Evaluation to_total(const PartialEvaluation& p);

std::string evaluation_text(const Evaluation& phi);
std::string evaluation_text(const PartialEvaluation& p);

/// Model file: JSON with the scheme, the evaluation (inline values or a
/// `file` reference relative to `base_dir`), the weight sequence, and the
/// bound; all rationals are strings, so exactness survives serialization.
std::string model_json(const ProximityModel& model);
ProximityModel model_from_json(std::string_view text, GraphPtr g, const std::string& base_dir);

}  // namespace walkmetric
