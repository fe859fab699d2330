#include "walkmetric/proximity.hpp"

#include <algorithm>
#include <random>

#include "walkmetric/detail/series.hpp"
#include "walkmetric/errors.hpp"

namespace walkmetric {

WeightSequence::WeightSequence(std::vector<Rational> prefix, Rational tail_value)
    : prefix_(std::move(prefix)), tail_(std::move(tail_value)) {
    if (tail_ < 0) throw ValidationError("weight sequence values must be non-negative");
    for (const Rational& value : prefix_)
        if (value < 0) throw ValidationError("weight sequence values must be non-negative");
    while (!prefix_.empty() && prefix_.back() == tail_) prefix_.pop_back();
}

Rational WeightSequence::sup() const {
    Rational best = tail_;
    for (const Rational& value : prefix_) best = std::max(best, value);
    return best;
}

ProximityModel::ProximityModel(WeightScheme scheme, Evaluation evaluation,
                               WeightSequence weights, std::optional<Rational> bound)
    : scheme_(std::move(scheme)),
      evaluation_(std::move(evaluation)),
      weights_(std::move(weights)),
      bound_(bound.value_or(weights_.sup())) {
    if (bound_ < weights_.sup())
        throw ValidationError("model bound " + fraction_string(bound_) +
                              " is below the weight supremum " + fraction_string(weights_.sup()));
}

Rational ProximityModel::proximity(const VertexSeq& a, const VertexSeq& b,
                                   const IndexSet& set) const {
    const Evaluation& phi = evaluation_;
    auto term = [&](std::size_t i) {
        Rational gap = phi.at(a.at(i)) - phi.at(b.at(i));
        if (gap < 0) gap = -gap;
        return weights_.at(i) * gap;
    };
    Rational tail_gap = phi.at(a.tail()) - phi.at(b.tail());
    if (tail_gap < 0) tail_gap = -tail_gap;
    const std::size_t horizon =
        std::max({a.horizon(), b.horizon(), weights_.horizon()});
    return detail::series_sum(scheme_, set, horizon, term,
                              Rational(weights_.tail_value() * tail_gap));
}

WeightSequence recover_weights(const std::map<std::size_t, Rational>& singletons,
                               const Evaluation& phi, const WeightScheme& scheme,
                               const VertexSeq& a, const VertexSeq& b, std::size_t horizon,
                               const Rational& tail_value) {
    std::vector<Rational> prefix;
    prefix.reserve(horizon);
    for (std::size_t i = 1; i <= horizon; ++i) {
        auto it = singletons.find(i);
        if (it == singletons.end())
            throw ValidationError("singleton proximity missing index " + std::to_string(i));
        const Rational& p = it->second;
        if (p < 0)
            throw InconsistentProximityError(i, "negative value " + fraction_string(p));
        Rational gap = phi.at(a.at(i)) - phi.at(b.at(i));
        if (gap < 0) gap = -gap;
        if (gap == 0) {
            if (p != 0)
                throw InconsistentProximityError(
                    i, "the evaluation gap vanishes but P({i}) = " + fraction_string(p));
            prefix.emplace_back(0);
        } else {
            prefix.push_back(p / (scheme.weight(i) * gap));
        }
    }
    return WeightSequence(std::move(prefix), tail_value);
}

WeightSequence average_weights(const std::vector<WeightSequence>& sequences) {
    if (sequences.empty()) throw EmptyInputError("cannot average zero weight sequences");
    std::size_t horizon = 0;
    for (const auto& s : sequences) horizon = std::max(horizon, s.horizon());
    const Rational count = static_cast<int>(sequences.size());
    std::vector<Rational> prefix(horizon, Rational(0));
    Rational tail = 0;
    for (const auto& s : sequences) {
        for (std::size_t i = 1; i <= horizon; ++i) prefix[i - 1] += s.at(i);
        tail += s.tail_value();
    }
    for (auto& value : prefix) value /= count;
    return WeightSequence(std::move(prefix), tail / count);
}

PartialEvaluation visited_distance_evaluation(GraphPtr graph, const std::vector<Walk>& walks) {
    if (!graph) throw ValidationError("needs a graph");
    if (walks.empty()) throw EmptyInputError("needs at least one walk");
    const int start = walks.front().at(1);
    const int target = walks.front().tail();
    std::vector<char> visited(graph->vertex_count(), 0);
    for (const auto& walk : walks) {
        if (walk.at(1) != start)
            throw ValidationError("walks must share a start vertex; expected '" +
                                  graph->label(start) + "', got '" + graph->label(walk.at(1)) +
                                  "'");
        if (walk.tail() != target)
            throw ValidationError("walks must share a tail vertex; expected '" +
                                  graph->label(target) + "', got '" + graph->label(walk.tail()) +
                                  "'");
        for (std::size_t i = 1; i <= walk.horizon() + 1; ++i)
            visited[static_cast<std::size_t>(walk.at(i))] = 1;
    }
    const int offset = graph->distance(start, target);
    std::map<std::string, Rational> values;
    for (std::size_t v = 0; v < visited.size(); ++v) {
        if (!visited[v]) continue;
        const int vertex = static_cast<int>(v);
        values.emplace(graph->label(vertex), Rational(graph->distance(vertex, target) - offset));
    }
    const std::string base_label = graph->label(start);
    return PartialEvaluation::make(std::move(graph), base_label, values);
}

ProximityModel build_average_proximity(const std::vector<Walk>& references,
                                       const PartialEvaluation& known_values,
                                       const SingletonOracle* known_proximity,
                                       const PipelineConfig& config) {
    if (references.empty()) throw EmptyInputError("needs at least one reference walk");
    Evaluation extended = extend_with_anchors(known_values, config.anchors, config.alpha,
                                              config.lip_constant);

    WeightSequence weights = WeightSequence::constant(Rational(1));
    if (known_proximity != nullptr && references.size() >= 2) {
        std::size_t horizon = config.recovery_horizon;
        if (horizon == 0) {
            for (const auto& w : references) horizon = std::max(horizon, w.horizon());
            ++horizon;
        }
        std::vector<WeightSequence> recovered;
        for (std::size_t a = 0; a < references.size(); ++a) {
            for (std::size_t b = a + 1; b < references.size(); ++b) {
                std::map<std::size_t, Rational> singletons;
                for (std::size_t i = 1; i <= horizon; ++i)
                    singletons.emplace(i, (*known_proximity)(a, b, i));
                recovered.push_back(recover_weights(singletons, extended, config.scheme,
                                                    references[a], references[b], horizon));
            }
        }
        weights = average_weights(recovered);
    }

    return ProximityModel(config.scheme, std::move(extended), std::move(weights));
}

std::size_t classify(const ProximityModel& model, const VertexSeq& walk,
                     const std::vector<Walk>& references, const IndexSet& set) {
    if (references.empty()) throw EmptyInputError("needs at least one reference walk");
    std::size_t best = 0;
    Rational best_value = model.proximity(walk, references[0], set);
    for (std::size_t k = 1; k < references.size(); ++k) {
        Rational value = model.proximity(walk, references[k], set);
        if (value < best_value) {
            best_value = std::move(value);
            best = k;
        }
    }
    return best;
}

std::vector<std::vector<std::size_t>> partition_walks(const ProximityModel& model,
                                                      const std::vector<Walk>& walks,
                                                      const std::vector<Walk>& references,
                                                      const IndexSet& set) {
    std::vector<std::vector<std::size_t>> clusters(references.size());
    for (std::size_t i = 0; i < walks.size(); ++i)
        clusters[classify(model, walks[i], references, set)].push_back(i);
    return clusters;
}

CheckReport check_domination(const ProximityModel& model,
                             const std::vector<WalkPairSample>& samples) {
    const Graph& g = model.evaluation().graph();
    CheckReport report;
    for (const auto& sample : samples) {
        Rational lhs = model.proximity(sample.first, sample.second, sample.set);
        Rational rhs = model.evaluation().lipschitz_norm() * model.bound() *
                       walk_distance_on(model.scheme(), g, sample.first, sample.second,
                                        sample.set);
        const bool pass = lhs <= rhs;
        report.rows.push_back({sample.label, std::move(lhs), std::move(rhs), pass});
        if (!pass) {
            report.all_pass = false;
            throw DominationViolatedError("domination violated for " + sample.label);
        }
    }
    return report;
}

CheckReport check_concavity_witness(const ProximityModel& model,
                                    const std::vector<std::vector<WalkPairSample>>& families) {
    CheckReport report;
    std::size_t family_index = 0;
    for (const auto& family : families) {
        ++family_index;
        Rational lhs = 0;
        Rational rhs = 0;
        std::string label = "family " + std::to_string(family_index) + " (" +
                            std::to_string(family.size()) + " pairs)";
        for (const auto& sample : family) {
            lhs += model.proximity(sample.first, sample.second, sample.set);
            rhs += abs_pairing(model.scheme(), sample.first, sample.second, model.evaluation(),
                               sample.set);
        }
        rhs *= model.bound();
        const bool pass = lhs <= rhs;
        report.rows.push_back({std::move(label), std::move(lhs), std::move(rhs), pass});
        if (!pass) {
            report.all_pass = false;
            throw WitnessCheckFailedError("witness inequality violated for family " +
                                          std::to_string(family_index));
        }
    }
    return report;
}

std::vector<Walk> sample_paths(const Graph& g, const std::string& from, const std::string& to,
                               std::size_t max_len, std::size_t max_count, std::uint64_t seed) {
    const int start = g.index_of(from);
    const int target = g.index_of(to);
    if (static_cast<std::size_t>(g.distance(start, target)) > max_len)
        throw NoPathWithinLengthError("no path from '" + from + "' to '" + to + "' within " +
                                      std::to_string(max_len) + " edges (distance is " +
                                      std::to_string(g.distance(start, target)) + ")");

    // Deterministic neighbor orders: explicit Fisher-Yates so the result does
    // not depend on the standard library's shuffle implementation.
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> order(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        order[v] = g.neighbors(static_cast<int>(v));
        for (std::size_t i = order[v].size(); i > 1; --i)
            std::swap(order[v][i - 1], order[v][rng() % i]);
    }

    std::vector<Walk> result;
    std::vector<int> path{start};
    std::vector<char> on_path(g.vertex_count(), 0);
    on_path[static_cast<std::size_t>(start)] = 1;

    // Depth-first enumeration of simple paths, pruned by the remaining
    // distance bound.
    auto visit = [&](auto&& self, int current) -> bool {
        if (result.size() >= max_count) return false;
        if (current == target) {
            std::vector<int> prefix(path.begin(), path.end() - 1);
            result.push_back(Walk::make(g, std::move(prefix), target));
            return result.size() < max_count;
        }
        for (int next : order[static_cast<std::size_t>(current)]) {
            if (on_path[static_cast<std::size_t>(next)]) continue;
            if (path.size() + static_cast<std::size_t>(g.distance(next, target)) > max_len)
                continue;
            on_path[static_cast<std::size_t>(next)] = 1;
            path.push_back(next);
            const bool keep_going = self(self, next);
            path.pop_back();
            on_path[static_cast<std::size_t>(next)] = 0;
            if (!keep_going) return false;
        }
        return true;
    };
    if (max_count > 0) visit(visit, start);
    return result;
}

}  // namespace walkmetric
