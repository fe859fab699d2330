#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "walkmetric/graph.hpp"
#include "walkmetric/index_set.hpp"
#include "walkmetric/rational.hpp"
#include "walkmetric/walk.hpp"
#include "walkmetric/weight_scheme.hpp"

namespace walkmetric {

/// Real-valued function on the vertex set, vanishing at a base vertex.
/// Total, immutable; the Lipschitz norm is computed on construction as the
/// maximum of |value(u) - value(v)| over edges, which equals the all-pairs
/// supremum because the hop metric is geodesic along edges.
class Evaluation {
public:
    static Evaluation make(GraphPtr graph, const std::string& base_vertex,
                           const std::map<std::string, Rational>& values);
    static Evaluation from_values(GraphPtr graph, int base_vertex, std::vector<Rational> values);

    const Graph& graph() const { return *graph_; }
    const GraphPtr& graph_ptr() const { return graph_; }
    int base_vertex() const { return base_; }

    const Rational& at(int vertex) const;
    const Rational& at(std::string_view label) const { return at(graph_->index_of(label)); }

    const Rational& lipschitz_norm() const { return norm_; }

private:
    Evaluation(GraphPtr graph, int base_vertex, std::vector<Rational> values);

    GraphPtr graph_;
    int base_;
    std::vector<Rational> values_;
    Rational norm_;
};

/// The duality pairing: sum over i in `set` of weight(i) * phi(seq(i)).
Rational pairing(const WeightScheme& scheme, const VertexSeq& seq, const Evaluation& phi,
                 const IndexSet& set);

/// pairing(a) - pairing(b).
Rational pairing_diff(const WeightScheme& scheme, const VertexSeq& a, const VertexSeq& b,
                      const Evaluation& phi, const IndexSet& set);

/// Sum over i in `set` of weight(i) * |phi(a(i)) - phi(b(i))|. Additive over
/// disjoint index sets.
Rational abs_pairing(const WeightScheme& scheme, const VertexSeq& a, const VertexSeq& b,
                     const Evaluation& phi, const IndexSet& set);

/// A walk along one shortest path together with two indices certifying that
/// the Lipschitz norm is attained: |phi(w(i)) - phi(w(j))| / |i - j| equals
/// the norm. Constant evaluations get a constant walk and value zero.
struct NormWitness {
    Walk walk;
    std::size_t i;
    std::size_t j;
    Rational value;
};

NormWitness norm_witness(const Evaluation& phi);

}  // namespace walkmetric
