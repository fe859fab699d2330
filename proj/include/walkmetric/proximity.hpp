#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "walkmetric/evaluation.hpp"
#include "walkmetric/extension.hpp"
#include "walkmetric/graph.hpp"
#include "walkmetric/index_set.hpp"
#include "walkmetric/rational.hpp"
#include "walkmetric/walk.hpp"
#include "walkmetric/weight_scheme.hpp"

namespace walkmetric {

/// Non-negative per-index coefficients in canonical prefix+tail form
/// (trailing prefix entries equal to the tail value are trimmed). The
/// supremum max(prefix, tail) is the natural bound for the model it feeds.
class WeightSequence {
public:
    WeightSequence(std::vector<Rational> prefix, Rational tail_value);
    static WeightSequence constant(const Rational& value) { return WeightSequence({}, value); }

    const Rational& at(std::size_t i) const {
        return i <= prefix_.size() ? prefix_[i - 1] : tail_;
    }
    std::size_t horizon() const { return prefix_.size(); }
    const Rational& tail_value() const { return tail_; }
    const std::vector<Rational>& prefix() const { return prefix_; }
    Rational sup() const;

    friend bool operator==(const WeightSequence&, const WeightSequence&) = default;

private:
    std::vector<Rational> prefix_;
    Rational tail_;
};

/// Canonical proximity between walks:
///   P(a, b, A) = sum over i in A of weight(i) * s(i) * |phi(a(i)) - phi(b(i))|
/// for a weight scheme, an evaluation phi, coefficients s, and a bound K
/// that dominates every s(i). For each index set this is a pseudometric on
/// walks, additive over disjoint sets, and dominated by
/// ||phi||_Lip * K * (restricted walk distance).
class ProximityModel {
public:
    ProximityModel(WeightScheme scheme, Evaluation evaluation, WeightSequence weights,
                   std::optional<Rational> bound = {});

    const WeightScheme& scheme() const { return scheme_; }
    const Evaluation& evaluation() const { return evaluation_; }
    const WeightSequence& weights() const { return weights_; }
    const Rational& bound() const { return bound_; }

    Rational proximity(const VertexSeq& a, const VertexSeq& b, const IndexSet& set) const;

private:
    WeightScheme scheme_;
    Evaluation evaluation_;
    WeightSequence weights_;
    Rational bound_;
};

/// Inverts the canonical form on singletons:
///   s(i) = P({i}) / (weight(i) * |phi(a(i)) - phi(b(i))|)
/// for i = 1..horizon, with s(i) = 0 whenever the denominator vanishes (in
/// which case the data must report P({i}) = 0). `singletons` must hold every
/// index 1..horizon.
WeightSequence recover_weights(const std::map<std::size_t, Rational>& singletons,
                               const Evaluation& phi, const WeightScheme& scheme,
                               const VertexSeq& a, const VertexSeq& b, std::size_t horizon,
                               const Rational& tail_value = Rational(0));

/// Per-index arithmetic mean of the sequences (prefixes padded with their
/// tail values); the tail value is the mean of the tail values.
WeightSequence average_weights(const std::vector<WeightSequence>& sequences);

/// Evaluates a known proximity on the singleton {index} for a pair of
/// reference walks, identified by their positions in the reference list.
using SingletonOracle =
    std::function<Rational(std::size_t ref_a, std::size_t ref_b, std::size_t index)>;

struct PipelineConfig {
    WeightScheme scheme;
    Rational alpha;
    AnchorPolicy anchors = AnchorPolicy::all();
    std::optional<Rational> lip_constant = {};
    /// Indices 1..recovery_horizon are sampled from the oracle; 0 means one
    /// past the longest reference prefix.
    std::size_t recovery_horizon = 0;
};

/// The averaging pipeline: extend the partially known evaluation under the
/// anchor policy, recover per-pair coefficients from the oracle over every
/// unordered pair of reference walks and average them (constantly 1 when no
/// oracle is given or fewer than two references exist), and assemble the
/// canonical model with bound sup s.
ProximityModel build_average_proximity(const std::vector<Walk>& references,
                                       const PartialEvaluation& known_values,
                                       const SingletonOracle* known_proximity,
                                       const PipelineConfig& config);

/// The evaluation used when none is supplied: d(v, target) - d(start, target)
/// on the vertices visited by the walks, which all must start at `start` and
/// end constantly at `target`. Base vertex = start.
PartialEvaluation visited_distance_evaluation(GraphPtr graph, const std::vector<Walk>& walks);

/// Index of the reference with the smallest proximity to `walk`; ties break
/// toward the smallest list index.
std::size_t classify(const ProximityModel& model, const VertexSeq& walk,
                     const std::vector<Walk>& references, const IndexSet& set);

/// Walk indices grouped by classified reference; cluster k holds the walks
/// assigned to references[k].
std::vector<std::vector<std::size_t>> partition_walks(const ProximityModel& model,
                                                      const std::vector<Walk>& walks,
                                                      const std::vector<Walk>& references,
                                                      const IndexSet& set);

struct WalkPairSample {
    VertexSeq first;
    VertexSeq second;
    IndexSet set;
    std::string label;
};

struct CheckRow {
    std::string label;
    Rational lhs;
    Rational rhs;
    bool pass;
};

struct CheckReport {
    std::vector<CheckRow> rows;
    bool all_pass = true;
};

/// Verifies P(a, b, A) <= ||phi||_Lip * K * d_A(a, b) for every sample.
/// Throws DominationViolatedError on a failure (which would be a bug: the
/// canonical form satisfies the bound identically).
CheckReport check_domination(const ProximityModel& model,
                             const std::vector<WalkPairSample>& samples);

/// Verifies sum_k P(a_k, b_k, A_k) <= K * sum_k abs_pairing(a_k, b_k, A_k)
/// for each family. When ||phi||_Lip <= 1 the right side evaluates the
/// summed-pairing functional at a unit-ball witness, so success certifies
/// the 1-concavity inequality without computing any supremum. Throws
/// WitnessCheckFailedError on a failure.
CheckReport check_concavity_witness(const ProximityModel& model,
                                    const std::vector<std::vector<WalkPairSample>>& families);

/// Deterministic (seeded) list of distinct simple-path walks from `from`
/// ending constantly at `to`, edge count at most max_len, at most max_count
/// of them. Throws NoPathWithinLengthError when max_len < d(from, to).
std::vector<Walk> sample_paths(const Graph& g, const std::string& from, const std::string& to,
                               std::size_t max_len, std::size_t max_count, std::uint64_t seed);

}  // namespace walkmetric
