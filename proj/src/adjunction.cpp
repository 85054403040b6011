#include "complements/adjunction.hpp"

#include <algorithm>

#include "complements/errors.hpp"

namespace complements::adjunction {

namespace {

void validate(const DifferentInput& input) {
    if (input.m < 1) throw DomainError("different index m must be positive");
    for (const auto& t : input.terms) {
        if (t.b <= Rational(0) || t.b >= Rational(1))
            throw DomainError("boundary coefficient " + t.b.to_string() + " outside (0,1)");
        if (t.multiplicity < 0) throw DomainError("negative multiplicity");
    }
}

}  // namespace

Rational different_coefficient(const DifferentInput& input) {
    validate(input);
    Rational alpha = Rational(input.m - 1, input.m);
    for (const auto& t : input.terms) alpha += t.b * Rational(t.multiplicity, input.m);
    if (alpha > Rational(1))
        throw DomainError("not lc along divisor: different coefficient " + alpha.to_string() + " > 1");
    return alpha;
}

bool closure_check(const DifferentInput& input, const CoefficientSet& set) {
    validate(input);
    for (const auto& t : input.terms)
        if (!set.contains(t.b))
            throw DomainError("coefficient " + t.b.to_string() + " not in " + set.describe());
    return set.contains(different_coefficient(input));
}

std::vector<std::string> different_warnings(const DifferentInput& input) {
    validate(input);
    std::vector<std::string> out;
    long total = 0;
    for (const auto& t : input.terms) total += t.multiplicity;
    bool all_half = std::all_of(input.terms.begin(), input.terms.end(),
                                [](const DifferentTerm& t) { return t.b >= Rational(1, 2); });
    if (total > 1 && all_half)
        out.push_back("sum of multiplicities is " + std::to_string(total) +
                      " > 1 with all b_j >= 1/2; a plt pair forces sum n_j <= 1");
    return out;
}

}  // namespace complements::adjunction
