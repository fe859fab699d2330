#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "walkmetric/graph.hpp"
#include "walkmetric/index_set.hpp"
#include "walkmetric/rational.hpp"
#include "walkmetric/weight_scheme.hpp"

namespace walkmetric {

/// Eventually constant vertex sequence in canonical prefix+tail form:
/// entry i is prefix[i-1] for i <= |prefix| and the tail vertex beyond.
/// Trailing prefix entries equal to the tail are trimmed on construction, so
/// equal sequences compare equal. Indexing is 1-based throughout. No
/// adjacency requirement; restrictions of walks live here.
class VertexSeq {
public:
    VertexSeq(std::vector<int> prefix, int tail);

    /// Entry at 1-based index i.
    int at(std::size_t i) const {
        return i <= prefix_.size() ? prefix_[i - 1] : tail_;
    }
    /// Length of the canonical prefix; entries beyond it equal the tail.
    std::size_t horizon() const { return prefix_.size(); }
    int tail() const { return tail_; }
    bool constant() const { return prefix_.empty(); }
    const std::vector<int>& prefix() const { return prefix_; }

    friend bool operator==(const VertexSeq&, const VertexSeq&) = default;

private:
    std::vector<int> prefix_;
    int tail_;
};

/// A walk: an eventually constant sequence whose consecutive vertices are
/// adjacent or equal. Construction validates the adjacency invariant.
class Walk {
public:
    /// Builds from labels; the last label is the tail vertex.
    static Walk make(const Graph& g, const std::vector<std::string>& vertices);
    static Walk make(const Graph& g, std::vector<int> prefix, int tail);
    static Walk constant(const Graph& g, int vertex);

    const VertexSeq& seq() const { return seq_; }
    operator const VertexSeq&() const { return seq_; }

    int at(std::size_t i) const { return seq_.at(i); }
    std::size_t horizon() const { return seq_.horizon(); }
    int tail() const { return seq_.tail(); }
    bool constant_walk() const { return seq_.constant(); }

    /// 0 for constant walks, 1 for every other walk.
    int lipschitz_constant() const { return seq_.constant() ? 0 : 1; }

    friend bool operator==(const Walk&, const Walk&) = default;

private:
    explicit Walk(VertexSeq seq) : seq_(std::move(seq)) {}

    VertexSeq seq_;
};

/// Finite prefix followed by a cycle repeated forever. Models the eventually
/// periodic sequences that arise as limits of walks; a VertexSeq is the
/// special case of a one-vertex cycle.
class PeriodicSeq {
public:
    PeriodicSeq(std::vector<int> prefix, std::vector<int> cycle);
    explicit PeriodicSeq(const VertexSeq& seq)
        : PeriodicSeq(seq.prefix(), std::vector<int>{seq.tail()}) {}

    int at(std::size_t i) const;
    std::size_t prefix_length() const { return prefix_.size(); }
    std::size_t cycle_length() const { return cycle_.size(); }

private:
    std::vector<int> prefix_;
    std::vector<int> cycle_;
};

/// The weighted walk distance: sum over i of weight(i) * d(a(i), b(i)),
/// evaluated exactly as the prefix sum plus tail_mass(N) * d(tail, tail).
Rational walk_distance(const WeightScheme& scheme, const Graph& g, const VertexSeq& a,
                       const VertexSeq& b);

/// Same series restricted to an index set.
Rational walk_distance_on(const WeightScheme& scheme, const Graph& g, const VertexSeq& a,
                          const VertexSeq& b, const IndexSet& set);

/// Weighted distance between eventually periodic sequences, summed exactly
/// with one geometric progression per residue of the combined cycle.
Rational walk_distance(const WeightScheme& scheme, const Graph& g, const PeriodicSeq& a,
                       const PeriodicSeq& b);

/// The sequence equal to `seq` on the index set and to `base_vertex` off it.
/// The result need not be a walk.
VertexSeq restrict_to(const VertexSeq& seq, const IndexSet& set, int base_vertex);

}  // namespace walkmetric
