#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "walkmetric/evaluation.hpp"
#include "walkmetric/graph.hpp"
#include "walkmetric/rational.hpp"

namespace walkmetric {

/// An evaluation known only on a vertex subset (the base vertex included,
/// with value zero). The restricted Lipschitz norm — the largest
/// |value(u) - value(v)| / d(u, v) over known pairs — is computed once at
/// construction; it is the smallest constant any extension can preserve.
class PartialEvaluation {
public:
    static PartialEvaluation make(GraphPtr graph, const std::string& base_vertex,
                                  const std::map<std::string, Rational>& values);

    const Graph& graph() const { return *graph_; }
    const GraphPtr& graph_ptr() const { return graph_; }
    int base_vertex() const { return base_; }

    bool knows(int vertex) const;
    const Rational& at(int vertex) const;
    /// Sorted vertex indices of the known set.
    const std::vector<int>& domain() const { return domain_; }
    const Rational& restricted_norm() const { return norm_; }

    /// Copy with the listed vertices removed from the known set. The base
    /// vertex cannot be removed and every listed vertex must be known.
    PartialEvaluation without(const std::vector<std::string>& targets) const;

private:
    PartialEvaluation(GraphPtr graph, int base_vertex, std::map<int, Rational> values);

    GraphPtr graph_;
    int base_;
    std::map<int, Rational> values_;
    std::vector<int> domain_;
    Rational norm_;
};

/// Largest K-Lipschitz extension value at v: max over known y of
/// value(y) - K * d(v, y). Requires K at least the restricted norm.
Rational mcshane_value(const PartialEvaluation& p, int vertex, const Rational& lip_constant);

/// Smallest K-Lipschitz extension value at v: min over known y of
/// value(y) + K * d(v, y).
Rational whitney_value(const PartialEvaluation& p, int vertex, const Rational& lip_constant);

/// The blend alpha * mcshane + (1 - alpha) * whitney at every vertex.
/// Agrees with the known values and is K-Lipschitz. alpha = 1 is pure
/// McShane, alpha = 0 pure Whitney. K defaults to the restricted norm.
Evaluation extend(const PartialEvaluation& p, const Rational& alpha,
                  const Rational& lip_constant);
Evaluation extend(const PartialEvaluation& p, const Rational& alpha);

/// Which known vertices anchor the extension formulas at unknown vertices.
struct AnchorPolicy {
    static AnchorPolicy all() { return AnchorPolicy{true, {}}; }
    static AnchorPolicy minus(std::vector<std::string> targets) {
        return AnchorPolicy{false, std::move(targets)};
    }
    /// "all" or "minus:<v,...>".
    static AnchorPolicy parse(std::string_view text);
    std::string to_string() const;

    bool use_all = true;
    std::vector<std::string> targets;
};

/// Extension under an anchor policy: known vertices always keep their
/// values; unknown vertices take the blended formulas computed over the
/// known set minus the policy's targets. With the `all` policy this is
/// exactly extend(). Excluding anchors can break the K-Lipschitz bound at
/// the excluded vertices, which is the point of keeping their known values.
Evaluation extend_with_anchors(const PartialEvaluation& p, const AnchorPolicy& policy,
                               const Rational& alpha,
                               const std::optional<Rational>& lip_constant = {});

}  // namespace walkmetric
