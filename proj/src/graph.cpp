#include "walkmetric/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "walkmetric/errors.hpp"

namespace walkmetric {

namespace {

std::vector<std::string> split_tokens(std::string_view line) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) tokens.emplace_back(line.substr(start, i - start));
    }
    return tokens;
}

}  // namespace

Graph::Graph(std::vector<std::string> labels, std::vector<std::vector<int>> adjacency,
             std::size_t edge_count)
    : labels_(std::move(labels)), adjacency_(std::move(adjacency)), edge_count_(edge_count) {
    index_.reserve(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) index_.emplace(labels_[i], static_cast<int>(i));
}

std::shared_ptr<const Graph> Graph::from_edges(
    const std::vector<std::pair<std::string, std::string>>& edges) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> index;
    auto intern = [&](const std::string& label) {
        auto [it, inserted] = index.emplace(label, static_cast<int>(labels.size()));
        if (inserted) labels.push_back(label);
        return it->second;
    };

    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> pairs;
    for (const auto& [u_label, v_label] : edges) {
        int u = intern(u_label);
        int v = intern(v_label);
        if (u == v)
            throw ValidationError("self-loop on vertex '" + u_label +
                                  "' (vertices are implicitly self-adjacent)");
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw ValidationError("duplicate edge: " + u_label + " " + v_label);
        pairs.push_back(key);
    }
    if (labels.empty()) throw ValidationError("empty graph");

    std::vector<std::vector<int>> adjacency(labels.size());
    for (auto [u, v] : pairs) {
        adjacency[static_cast<std::size_t>(u)].push_back(v);
        adjacency[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& list : adjacency) std::sort(list.begin(), list.end());

    // Connectivity by breadth-first search from the first vertex.
    std::vector<char> reached(labels.size(), 0);
    std::deque<int> queue{0};
    reached[0] = 1;
    std::size_t count = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : adjacency[static_cast<std::size_t>(u)]) {
            if (!reached[static_cast<std::size_t>(v)]) {
                reached[static_cast<std::size_t>(v)] = 1;
                ++count;
                queue.push_back(v);
            }
        }
    }
    if (count != labels.size()) {
        auto missing = std::find(reached.begin(), reached.end(), 0);
        throw ValidationError("disconnected graph: vertex '" +
                              labels[static_cast<std::size_t>(missing - reached.begin())] +
                              "' is unreachable from '" + labels[0] + "'");
    }

    return std::shared_ptr<const Graph>(
        new Graph(std::move(labels), std::move(adjacency), pairs.size()));
}

std::shared_ptr<const Graph> Graph::parse(std::string_view text) {
    std::vector<std::pair<std::string, std::string>> edges;
    std::size_t line_number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_number;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        auto tokens = split_tokens(line);
        if (tokens.empty()) {
            if (pos > text.size()) break;
            continue;
        }
        if (tokens.size() != 2)
            throw ParseError("line " + std::to_string(line_number) +
                             ": expected '<u> <v>', got '" + std::string(line) + "'");
        edges.emplace_back(std::move(tokens[0]), std::move(tokens[1]));
        if (pos > text.size()) break;
    }
    return from_edges(edges);
}

bool Graph::has_vertex(std::string_view label) const {
    return index_.find(std::string(label)) != index_.end();
}

int Graph::index_of(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) throw UnknownVertexError(std::string(label));
    return it->second;
}

const std::string& Graph::label(int v) const { return labels_[static_cast<std::size_t>(checked(v))]; }

int Graph::checked(int v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= labels_.size())
        throw UnknownVertexError("#" + std::to_string(v));
    return v;
}

const std::vector<int>& Graph::neighbors(int v) const {
    return adjacency_[static_cast<std::size_t>(checked(v))];
}

bool Graph::adjacent_or_equal(int u, int v) const {
    checked(u);
    checked(v);
    if (u == v) return true;
    const auto& list = adjacency_[static_cast<std::size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<int> Graph::bfs_from(int source) const {
    std::vector<int> dist(labels_.size(), -1);
    std::deque<int> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : adjacency_[static_cast<std::size_t>(u)]) {
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

void Graph::ensure_distances() const {
    std::call_once(distances_once_, [this] {
        const std::size_t n = labels_.size();
        distances_.assign(n * n, 0);
        int diameter = 0;
        for (std::size_t u = 0; u < n; ++u) {
            auto row = bfs_from(static_cast<int>(u));
            for (std::size_t v = 0; v < n; ++v) {
                distances_[u * n + v] = row[v];
                diameter = std::max(diameter, row[v]);
            }
        }
        diameter_ = diameter;
    });
}

int Graph::distance(int u, int v) const {
    checked(u);
    checked(v);
    ensure_distances();
    return distances_[static_cast<std::size_t>(u) * labels_.size() + static_cast<std::size_t>(v)];
}

int Graph::distance(std::string_view u, std::string_view v) const {
    return distance(index_of(u), index_of(v));
}

int Graph::diameter() const {
    ensure_distances();
    return diameter_;
}

std::vector<int> Graph::shortest_path(int u, int v) const {
    checked(u);
    checked(v);
    std::vector<int> parent(labels_.size(), -2);
    std::deque<int> queue{u};
    parent[static_cast<std::size_t>(u)] = -1;
    while (!queue.empty() && parent[static_cast<std::size_t>(v)] == -2) {
        int x = queue.front();
        queue.pop_front();
        for (int y : adjacency_[static_cast<std::size_t>(x)]) {
            if (parent[static_cast<std::size_t>(y)] == -2) {
                parent[static_cast<std::size_t>(y)] = x;
                queue.push_back(y);
            }
        }
    }
    std::vector<int> path;
    for (int x = v; x != -1; x = parent[static_cast<std::size_t>(x)]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace walkmetric
