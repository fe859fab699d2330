#include "walkmetric/weight_scheme.hpp"

#include "walkmetric/errors.hpp"

namespace walkmetric {

WeightScheme WeightScheme::geometric(const Rational& ratio) {
    if (!(ratio > 0 && ratio < 1))
        throw ValidationError("geometric ratio must lie strictly between 0 and 1, got " +
                              fraction_string(ratio));
    return WeightScheme(ratio);
}

Rational WeightScheme::weight(std::size_t i) const {
    if (i == 0) throw ValidationError("weights are 1-based");
    return (1 - ratio_) * rational_pow(ratio_, i - 1);
}

Rational WeightScheme::tail_mass(std::size_t n) const { return rational_pow(ratio_, n); }

Rational WeightScheme::progression_mass(std::size_t first, std::size_t step) const {
    if (first == 0 || step == 0) throw ValidationError("progression needs first >= 1 and step >= 1");
    return weight(first) / (1 - rational_pow(ratio_, step));
}

}  // namespace walkmetric
