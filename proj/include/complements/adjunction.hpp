#pragma once

#include <string>
#include <vector>

#include "complements/coefficients.hpp"
#include "complements/rational.hpp"

namespace complements::adjunction {

/// A boundary component b_j meeting the point with multiplicity n_j.
struct DifferentTerm {
    Rational b;
    long multiplicity = 0;
};

/// Local data of the different at one point of S: the index m and the
/// boundary components passing through it.
struct DifferentInput {
    long m = 1;
    std::vector<DifferentTerm> terms;
};

/// (m-1)/m + sum_j b_j n_j / m. Throws DomainError ("not lc along divisor")
/// when the result exceeds 1.
Rational different_coefficient(const DifferentInput& input);

/// Whether the different coefficient stays inside `set`. Every b_j must
/// already lie in `set`.
bool closure_check(const DifferentInput& input, const CoefficientSet& set);

/// Non-fatal remarks about the input, e.g. sum n_j > 1 with all b_j >= 1/2,
/// which cannot come from a plt pair.
std::vector<std::string> different_warnings(const DifferentInput& input);

}  // namespace complements::adjunction
