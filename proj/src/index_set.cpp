#include "walkmetric/index_set.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>

#include "walkmetric/errors.hpp"

namespace walkmetric {

namespace {

std::vector<std::size_t> normalized(std::vector<std::size_t> indices) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    if (!indices.empty() && indices.front() == 0)
        throw ValidationError("index sets contain positive integers only");
    return indices;
}

std::vector<std::size_t> sorted_union(const std::vector<std::size_t>& a,
                                      const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<std::size_t> sorted_intersection(const std::vector<std::size_t>& a,
                                             const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<std::size_t> sorted_difference(const std::vector<std::size_t>& a,
                                           const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

IndexSet IndexSet::of(std::vector<std::size_t> indices) {
    return IndexSet(false, normalized(std::move(indices)));
}

IndexSet IndexSet::complement_of(std::vector<std::size_t> indices) {
    return IndexSet(true, normalized(std::move(indices)));
}

bool IndexSet::contains(std::size_t i) const {
    const bool in_base = std::binary_search(base_.begin(), base_.end(), i);
    return cofinite_ ? !in_base : in_base;
}

IndexSet IndexSet::united(const IndexSet& other) const {
    if (!cofinite_ && !other.cofinite_) return IndexSet(false, sorted_union(base_, other.base_));
    if (cofinite_ && other.cofinite_)
        return IndexSet(true, sorted_intersection(base_, other.base_));
    const IndexSet& fin = cofinite_ ? other : *this;
    const IndexSet& cof = cofinite_ ? *this : other;
    return IndexSet(true, sorted_difference(cof.base_, fin.base_));
}

IndexSet IndexSet::intersected(const IndexSet& other) const {
    return complemented().united(other.complemented()).complemented();
}

bool IndexSet::disjoint_with(const IndexSet& other) const {
    return intersected(other).is_empty();
}

IndexSet IndexSet::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s == "all") return all();
    bool cofinite = false;
    if (!s.empty() && s.front() == '~') {
        cofinite = true;
        s.remove_prefix(1);
    }
    if (s.size() < 2 || s.front() != '{' || s.back() != '}')
        throw ParseError("invalid index set: '" + std::string(text) +
                         "' (expected all, {}, {1,2,5} or ~{3})");
    s = s.substr(1, s.size() - 2);
    std::vector<std::size_t> indices;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t comma = s.find(',', pos);
        if (comma == std::string_view::npos) comma = s.size();
        std::string_view item = s.substr(pos, comma - pos);
        pos = comma + 1;
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front())))
            item.remove_prefix(1);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back())))
            item.remove_suffix(1);
        if (item.empty() ||
            !std::all_of(item.begin(), item.end(),
                         [](unsigned char c) { return std::isdigit(c) != 0; }))
            throw ParseError("invalid index set: '" + std::string(text) + "'");
        std::size_t value = std::stoull(std::string(item));
        if (value == 0) throw ParseError("invalid index set: indices are 1-based");
        indices.push_back(value);
    }
    return cofinite ? complement_of(std::move(indices)) : of(std::move(indices));
}

std::string IndexSet::to_string() const {
    if (is_all()) return "all";
    std::string out = cofinite_ ? "~{" : "{";
    for (std::size_t i = 0; i < base_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(base_[i]);
    }
    out += '}';
    return out;
}

}  // namespace walkmetric
