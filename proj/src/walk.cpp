#include "walkmetric/walk.hpp"

#include <algorithm>
#include <numeric>

#include "walkmetric/detail/series.hpp"
#include "walkmetric/errors.hpp"

namespace walkmetric {

VertexSeq::VertexSeq(std::vector<int> prefix, int tail) : prefix_(std::move(prefix)), tail_(tail) {
    while (!prefix_.empty() && prefix_.back() == tail_) prefix_.pop_back();
}

Walk Walk::make(const Graph& g, std::vector<int> prefix, int tail) {
    g.label(tail);  // bounds check
    for (std::size_t i = 0; i + 1 < prefix.size(); ++i) {
        if (!g.adjacent_or_equal(prefix[i], prefix[i + 1]))
            throw NotAWalkError(i + 1, g.label(prefix[i]), g.label(prefix[i + 1]));
    }
    if (!prefix.empty() && !g.adjacent_or_equal(prefix.back(), tail))
        throw NotAWalkError(prefix.size(), g.label(prefix.back()), g.label(tail));
    return Walk(VertexSeq(std::move(prefix), tail));
}

Walk Walk::make(const Graph& g, const std::vector<std::string>& vertices) {
    if (vertices.empty()) throw EmptyInputError("a walk needs at least one vertex");
    std::vector<int> indices;
    indices.reserve(vertices.size());
    for (const auto& label : vertices) indices.push_back(g.index_of(label));
    int tail = indices.back();
    indices.pop_back();
    return make(g, std::move(indices), tail);
}

Walk Walk::constant(const Graph& g, int vertex) { return make(g, std::vector<int>{}, vertex); }

PeriodicSeq::PeriodicSeq(std::vector<int> prefix, std::vector<int> cycle)
    : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
    if (cycle_.empty()) throw ValidationError("periodic sequence needs a nonempty cycle");
}

int PeriodicSeq::at(std::size_t i) const {
    if (i == 0) throw ValidationError("sequences are 1-based");
    if (i <= prefix_.size()) return prefix_[i - 1];
    return cycle_[(i - prefix_.size() - 1) % cycle_.size()];
}

Rational walk_distance(const WeightScheme& scheme, const Graph& g, const VertexSeq& a,
                       const VertexSeq& b) {
    const std::size_t n = std::max(a.horizon(), b.horizon());
    Rational total = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        int d = g.distance(a.at(i), b.at(i));
        if (d != 0) total += scheme.weight(i) * d;
    }
    int tail_d = g.distance(a.tail(), b.tail());
    if (tail_d != 0) total += scheme.tail_mass(n) * tail_d;
    return total;
}

Rational walk_distance_on(const WeightScheme& scheme, const Graph& g, const VertexSeq& a,
                          const VertexSeq& b, const IndexSet& set) {
    const std::size_t n = std::max(a.horizon(), b.horizon());
    return detail::series_sum(
        scheme, set, n, [&](std::size_t i) { return Rational(g.distance(a.at(i), b.at(i))); },
        Rational(g.distance(a.tail(), b.tail())));
}

Rational walk_distance(const WeightScheme& scheme, const Graph& g, const PeriodicSeq& a,
                       const PeriodicSeq& b) {
    const std::size_t n = std::max(a.prefix_length(), b.prefix_length());
    Rational total = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        int d = g.distance(a.at(i), b.at(i));
        if (d != 0) total += scheme.weight(i) * d;
    }
    // Beyond the prefixes both sequences are periodic, so the aligned
    // distances repeat with the combined cycle length.
    const std::size_t period = std::lcm(a.cycle_length(), b.cycle_length());
    for (std::size_t j = 1; j <= period; ++j) {
        int d = g.distance(a.at(n + j), b.at(n + j));
        if (d != 0) total += scheme.progression_mass(n + j, period) * d;
    }
    return total;
}

VertexSeq restrict_to(const VertexSeq& seq, const IndexSet& set, int base_vertex) {
    std::size_t horizon;
    if (set.cofinite()) {
        horizon = seq.horizon();
        if (!set.base().empty()) horizon = std::max(horizon, set.base().back());
    } else {
        horizon = set.base().empty() ? 0 : set.base().back();
    }
    std::vector<int> prefix;
    prefix.reserve(horizon);
    for (std::size_t i = 1; i <= horizon; ++i)
        prefix.push_back(set.contains(i) ? seq.at(i) : base_vertex);
    const int tail = set.cofinite() ? seq.tail() : base_vertex;
    return VertexSeq(std::move(prefix), tail);
}

}  // namespace walkmetric
