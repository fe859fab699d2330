#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace walkmetric {

/// Finite or cofinite subset of the positive integers. The family is closed
/// under complement, union and intersection, which is all the series
/// machinery needs. Literal syntax: `all`, `{}`, `{1,2,5}`, `~{3}`.
class IndexSet {
public:
    static IndexSet all() { return IndexSet(true, {}); }
    static IndexSet none() { return IndexSet(false, {}); }
    /// Finite set of 1-based indices.
    static IndexSet of(std::vector<std::size_t> indices);
    /// Complement of a finite set of 1-based indices.
    static IndexSet complement_of(std::vector<std::size_t> indices);

    static IndexSet parse(std::string_view text);
    std::string to_string() const;

    bool cofinite() const { return cofinite_; }
    bool is_all() const { return cofinite_ && base_.empty(); }
    bool is_empty() const { return !cofinite_ && base_.empty(); }

    /// Members when finite, excluded indices when cofinite; sorted.
    const std::vector<std::size_t>& base() const { return base_; }

    bool contains(std::size_t i) const;

    IndexSet complemented() const { return IndexSet(!cofinite_, base_); }
    IndexSet united(const IndexSet& other) const;
    IndexSet intersected(const IndexSet& other) const;
    bool disjoint_with(const IndexSet& other) const;

    friend bool operator==(const IndexSet&, const IndexSet&) = default;

private:
    IndexSet(bool cofinite, std::vector<std::size_t> base)
        : cofinite_(cofinite), base_(std::move(base)) {}

    bool cofinite_;
    std::vector<std::size_t> base_;
};

}  // namespace walkmetric
