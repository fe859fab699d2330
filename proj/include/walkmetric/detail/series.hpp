#pragma once

#include <cstddef>

#include "walkmetric/index_set.hpp"
#include "walkmetric/rational.hpp"
#include "walkmetric/weight_scheme.hpp"

namespace walkmetric::detail {

// Exact sum of weight(i) * term(i) over i in `set`, for a term that is
// constantly `tail_term` beyond `horizon`. Finite sets are summed directly;
// cofinite sets are the full series (prefix + closed-form tail) minus the
// finitely many excluded terms.
template <class Term>
Rational series_sum(const WeightScheme& scheme, const IndexSet& set, std::size_t horizon,
                    Term&& term, const Rational& tail_term) {
    Rational total = 0;
    if (!set.cofinite()) {
        for (std::size_t i : set.base())
            total += scheme.weight(i) * (i <= horizon ? Rational(term(i)) : tail_term);
        return total;
    }
    for (std::size_t i = 1; i <= horizon; ++i) total += scheme.weight(i) * Rational(term(i));
    total += scheme.tail_mass(horizon) * tail_term;
    for (std::size_t i : set.base())
        total -= scheme.weight(i) * (i <= horizon ? Rational(term(i)) : tail_term);
    return total;
}

}  // namespace walkmetric::detail
