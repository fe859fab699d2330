#include "walkmetric/extension.hpp"

#include <algorithm>

#include "walkmetric/errors.hpp"

namespace walkmetric {

PartialEvaluation::PartialEvaluation(GraphPtr graph, int base_vertex,
                                     std::map<int, Rational> values)
    : graph_(std::move(graph)), base_(base_vertex), values_(std::move(values)), norm_(0) {
    domain_.reserve(values_.size());
    for (const auto& [v, value] : values_) domain_.push_back(v);
    for (std::size_t a = 0; a < domain_.size(); ++a) {
        for (std::size_t b = a + 1; b < domain_.size(); ++b) {
            Rational gap = values_.at(domain_[a]) - values_.at(domain_[b]);
            if (gap < 0) gap = -gap;
            Rational ratio = gap / graph_->distance(domain_[a], domain_[b]);
            if (ratio > norm_) norm_ = ratio;
        }
    }
}

PartialEvaluation PartialEvaluation::make(GraphPtr graph, const std::string& base_vertex,
                                          const std::map<std::string, Rational>& values) {
    if (!graph) throw ValidationError("partial evaluation needs a graph");
    if (values.empty()) throw ValidationError("partial evaluation needs a nonempty known set");
    const int base = graph->index_of(base_vertex);
    std::map<int, Rational> dense;
    for (const auto& [label, value] : values) dense.emplace(graph->index_of(label), value);
    auto base_it = dense.find(base);
    if (base_it == dense.end())
        throw ValidationError("base vertex '" + base_vertex + "' must be in the known set");
    if (base_it->second != 0)
        throw ValidationError("partial evaluation must vanish at the base vertex '" + base_vertex +
                              "'");
    return PartialEvaluation(std::move(graph), base, std::move(dense));
}

bool PartialEvaluation::knows(int vertex) const { return values_.count(vertex) != 0; }

const Rational& PartialEvaluation::at(int vertex) const {
    auto it = values_.find(vertex);
    if (it == values_.end())
        throw UnknownVertexError(graph_->label(vertex) + " (not in the known set)");
    return it->second;
}

PartialEvaluation PartialEvaluation::without(const std::vector<std::string>& targets) const {
    std::map<int, Rational> kept = values_;
    for (const auto& label : targets) {
        int v = graph_->index_of(label);
        if (v == base_)
            throw ValidationError("cannot exclude the base vertex '" + label + "' from the anchors");
        if (kept.erase(v) == 0)
            throw ValidationError("anchor target '" + label + "' is not in the known set");
    }
    return PartialEvaluation(graph_, base_, std::move(kept));
}

namespace {

void require_constant(const PartialEvaluation& p, const Rational& lip_constant) {
    if (lip_constant < p.restricted_norm())
        throw BadConstantError("extension constant " + fraction_string(lip_constant) +
                               " is below the restricted Lipschitz norm " +
                               fraction_string(p.restricted_norm()));
}

}  // namespace

Rational mcshane_value(const PartialEvaluation& p, int vertex, const Rational& lip_constant) {
    require_constant(p, lip_constant);
    bool first = true;
    Rational best = 0;
    for (int y : p.domain()) {
        Rational candidate = p.at(y) - lip_constant * p.graph().distance(vertex, y);
        if (first || candidate > best) {
            best = candidate;
            first = false;
        }
    }
    return best;
}

Rational whitney_value(const PartialEvaluation& p, int vertex, const Rational& lip_constant) {
    require_constant(p, lip_constant);
    bool first = true;
    Rational best = 0;
    for (int y : p.domain()) {
        Rational candidate = p.at(y) + lip_constant * p.graph().distance(vertex, y);
        if (first || candidate < best) {
            best = candidate;
            first = false;
        }
    }
    return best;
}

Evaluation extend(const PartialEvaluation& p, const Rational& alpha,
                  const Rational& lip_constant) {
    if (alpha < 0 || alpha > 1)
        throw ValidationError("blend parameter must lie in [0, 1], got " + fraction_string(alpha));
    require_constant(p, lip_constant);
    const std::size_t n = p.graph().vertex_count();
    std::vector<Rational> values(n);
    for (std::size_t v = 0; v < n; ++v) {
        const int vertex = static_cast<int>(v);
        if (p.knows(vertex)) {
            values[v] = p.at(vertex);
        } else {
            values[v] = alpha * mcshane_value(p, vertex, lip_constant) +
                        (1 - alpha) * whitney_value(p, vertex, lip_constant);
        }
    }
    return Evaluation::from_values(p.graph_ptr(), p.base_vertex(), std::move(values));
}

Evaluation extend(const PartialEvaluation& p, const Rational& alpha) {
    return extend(p, alpha, p.restricted_norm());
}

AnchorPolicy AnchorPolicy::parse(std::string_view text) {
    if (text == "all") return all();
    constexpr std::string_view kPrefix = "minus:";
    if (text.substr(0, kPrefix.size()) == kPrefix) {
        std::string_view rest = text.substr(kPrefix.size());
        std::vector<std::string> targets;
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            std::size_t comma = rest.find(',', pos);
            if (comma == std::string_view::npos) comma = rest.size();
            std::string_view item = rest.substr(pos, comma - pos);
            if (!item.empty()) targets.emplace_back(item);
            pos = comma + 1;
            if (pos > rest.size()) break;
        }
        if (!targets.empty()) return minus(std::move(targets));
    }
    throw ParseError("invalid anchor policy: '" + std::string(text) +
                     "' (expected all or minus:<v,...>)");
}

std::string AnchorPolicy::to_string() const {
    if (use_all) return "all";
    std::string out = "minus:";
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (i) out += ',';
        out += targets[i];
    }
    return out;
}

Evaluation extend_with_anchors(const PartialEvaluation& p, const AnchorPolicy& policy,
                               const Rational& alpha,
                               const std::optional<Rational>& lip_constant) {
    if (alpha < 0 || alpha > 1)
        throw ValidationError("blend parameter must lie in [0, 1], got " + fraction_string(alpha));
    const PartialEvaluation anchors = policy.use_all ? p : p.without(policy.targets);
    const Rational k = lip_constant.value_or(anchors.restricted_norm());
    require_constant(anchors, k);
    const std::size_t n = p.graph().vertex_count();
    std::vector<Rational> values(n);
    for (std::size_t v = 0; v < n; ++v) {
        const int vertex = static_cast<int>(v);
        if (p.knows(vertex)) {
            values[v] = p.at(vertex);
        } else {
            values[v] = alpha * mcshane_value(anchors, vertex, k) +
                        (1 - alpha) * whitney_value(anchors, vertex, k);
        }
    }
    return Evaluation::from_values(p.graph_ptr(), p.base_vertex(), std::move(values));
}

}  // namespace walkmetric
