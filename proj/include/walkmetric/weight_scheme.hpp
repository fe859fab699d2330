#pragma once

#include <cstddef>

#include "walkmetric/rational.hpp"

namespace walkmetric {

/// Positive index weights summing to one. Only the geometric family ships:
/// weight(i) = (1 - r) * r^(i-1) for a ratio r in (0, 1), which gives the
/// exact closed forms tail_mass(n) = r^n and
/// progression_mass(first, step) = weight(first) / (1 - r^step).
/// Ratio 1/2 yields weight(i) = 2^-i.
class WeightScheme {
public:
    static WeightScheme geometric(const Rational& ratio);

    const Rational& ratio() const { return ratio_; }

    /// weight(i) for i >= 1.
    Rational weight(std::size_t i) const;

    /// Sum of weight(i) over i > n. tail_mass(0) == 1.
    Rational tail_mass(std::size_t n) const;

    /// Sum of weight(first + k*step) over k >= 0, for first >= 1, step >= 1.
    Rational progression_mass(std::size_t first, std::size_t step) const;

private:
    explicit WeightScheme(Rational ratio) : ratio_(std::move(ratio)) {}

    Rational ratio_;
};

}  // namespace walkmetric
