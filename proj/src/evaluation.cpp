#include "walkmetric/evaluation.hpp"

#include <algorithm>

#include "walkmetric/detail/series.hpp"
#include "walkmetric/errors.hpp"

namespace walkmetric {

Evaluation::Evaluation(GraphPtr graph, int base_vertex, std::vector<Rational> values)
    : graph_(std::move(graph)), base_(base_vertex), values_(std::move(values)), norm_(0) {
    for (std::size_t u = 0; u < graph_->vertex_count(); ++u) {
        for (int v : graph_->neighbors(static_cast<int>(u))) {
            if (static_cast<std::size_t>(v) < u) continue;
            Rational gap = values_[u] - values_[static_cast<std::size_t>(v)];
            if (gap < 0) gap = -gap;
            if (gap > norm_) norm_ = gap;
        }
    }
}

Evaluation Evaluation::from_values(GraphPtr graph, int base_vertex, std::vector<Rational> values) {
    if (!graph) throw ValidationError("evaluation needs a graph");
    if (values.size() != graph->vertex_count())
        throw ValidationError("evaluation must cover every vertex");
    graph->label(base_vertex);  // bounds check
    if (values[static_cast<std::size_t>(base_vertex)] != 0)
        throw ValidationError("evaluation must vanish at the base vertex '" +
                              graph->label(base_vertex) + "'");
    return Evaluation(std::move(graph), base_vertex, std::move(values));
}

Evaluation Evaluation::make(GraphPtr graph, const std::string& base_vertex,
                            const std::map<std::string, Rational>& values) {
    if (!graph) throw ValidationError("evaluation needs a graph");
    const int base = graph->index_of(base_vertex);
    std::vector<Rational> dense(graph->vertex_count());
    std::vector<char> seen(graph->vertex_count(), 0);
    for (const auto& [label, value] : values) {
        int v = graph->index_of(label);
        dense[static_cast<std::size_t>(v)] = value;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    for (std::size_t v = 0; v < seen.size(); ++v) {
        if (!seen[v])
            throw ValidationError("evaluation is missing a value for vertex '" +
                                  graph->label(static_cast<int>(v)) + "'");
    }
    return from_values(std::move(graph), base, std::move(dense));
}

const Rational& Evaluation::at(int vertex) const {
    graph_->label(vertex);  // bounds check
    return values_[static_cast<std::size_t>(vertex)];
}

Rational pairing(const WeightScheme& scheme, const VertexSeq& seq, const Evaluation& phi,
                 const IndexSet& set) {
    return detail::series_sum(
        scheme, set, seq.horizon(), [&](std::size_t i) { return phi.at(seq.at(i)); },
        phi.at(seq.tail()));
}

Rational pairing_diff(const WeightScheme& scheme, const VertexSeq& a, const VertexSeq& b,
                      const Evaluation& phi, const IndexSet& set) {
    return pairing(scheme, a, phi, set) - pairing(scheme, b, phi, set);
}

Rational abs_pairing(const WeightScheme& scheme, const VertexSeq& a, const VertexSeq& b,
                     const Evaluation& phi, const IndexSet& set) {
    auto gap = [&](std::size_t i) {
        Rational diff = phi.at(a.at(i)) - phi.at(b.at(i));
        return diff < 0 ? Rational(-diff) : diff;
    };
    Rational tail = phi.at(a.tail()) - phi.at(b.tail());
    if (tail < 0) tail = -tail;
    return detail::series_sum(scheme, set, std::max(a.horizon(), b.horizon()), gap, tail);
}

NormWitness norm_witness(const Evaluation& phi) {
    const Graph& g = phi.graph();
    if (phi.lipschitz_norm() == 0)
        return NormWitness{Walk::constant(g, phi.base_vertex()), 1, 2, Rational(0)};

    // Maximize |phi(u) - phi(v)| / d(u, v) over all pairs; the geodesic
    // metric guarantees some edge attains the same value, so this sup is
    // exact and attained.
    const int n = static_cast<int>(g.vertex_count());
    int best_u = 0, best_v = 0;
    Rational best = -1;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            Rational gap = phi.at(u) - phi.at(v);
            if (gap < 0) gap = -gap;
            Rational ratio = gap / g.distance(u, v);
            if (ratio > best) {
                best = ratio;
                best_u = u;
                best_v = v;
            }
        }
    }
    std::vector<int> path = g.shortest_path(best_u, best_v);
    const std::size_t j = path.size();
    const int tail = path.back();
    path.pop_back();
    return NormWitness{Walk::make(g, std::move(path), tail), 1, j, best};
}

}  // namespace walkmetric
