#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace walkmetric {

/// Finite undirected connected graph with the shortest-path (hop) metric.
///
/// Vertices are opaque string labels, kept in first-appearance order and
/// mapped to dense indices internally. Every vertex is implicitly
/// self-adjacent: d(v, v) == 0 and hop distances of at most one define the
/// edge relation. Immutable after construction; the all-pairs distance
/// matrix is built lazily on first query, under a once-flag so concurrent
/// readers are safe.
class Graph {
public:
    /// Parses an edge-list document: `#` starts a comment, blank lines are
    /// skipped, every other line is `<u> <v>`. Rejects self-loop lines,
    /// duplicate edges (in either orientation), and disconnected inputs.
    static std::shared_ptr<const Graph> parse(std::string_view text);

    static std::shared_ptr<const Graph> from_edges(
        const std::vector<std::pair<std::string, std::string>>& edges);

    std::size_t vertex_count() const { return labels_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    const std::vector<std::string>& vertices() const { return labels_; }

    bool has_vertex(std::string_view label) const;
    /// Dense index of a label; throws UnknownVertexError.
    int index_of(std::string_view label) const;
    const std::string& label(int v) const;

    const std::vector<int>& neighbors(int v) const;
    /// d(u, v) <= 1, i.e. equal or joined by an edge.
    bool adjacent_or_equal(int u, int v) const;

    /// Hop count of a shortest path.
    int distance(int u, int v) const;
    int distance(std::string_view u, std::string_view v) const;

    /// Maximum hop distance over all vertex pairs.
    int diameter() const;

    /// Vertex indices of one shortest path from u to v, inclusive.
    std::vector<int> shortest_path(int u, int v) const;

    Graph(const Graph&) = delete;
    Graph& operator=(const Graph&) = delete;

private:
    Graph(std::vector<std::string> labels, std::vector<std::vector<int>> adjacency,
          std::size_t edge_count);

    int checked(int v) const;
    void ensure_distances() const;
    std::vector<int> bfs_from(int source) const;

    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<int>> adjacency_;  // sorted, no self entries
    std::size_t edge_count_ = 0;

    mutable std::once_flag distances_once_;
    mutable std::vector<int> distances_;  // V*V row-major, filled lazily
    mutable int diameter_ = 0;
};

using GraphPtr = std::shared_ptr<const Graph>;

}  // namespace walkmetric
