#include "complements/boundary.hpp"

#include <algorithm>
#include <set>

#include "complements/errors.hpp"

namespace complements {

Boundary::Boundary(std::vector<BoundaryEntry> entries) : entries_(std::move(entries)) {
    std::set<std::string> seen;
    for (const auto& e : entries_) {
        if (e.coeff < Rational(0) || e.coeff > Rational(1))
            throw DomainError("coefficient " + e.coeff.to_string() + " of '" + e.label +
                              "' outside [0,1]");
        if (!seen.insert(e.label).second)
            throw DomainError("duplicate boundary label '" + e.label + "'");
    }
    std::sort(entries_.begin(), entries_.end(), [](const auto& a, const auto& b) {
        if (a.coeff != b.coeff) return a.coeff > b.coeff;
        return a.label < b.label;
    });
}

Boundary Boundary::from_coefficients(const std::vector<Rational>& coeffs) {
    std::vector<BoundaryEntry> entries;
    entries.reserve(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        entries.push_back({"P" + std::to_string(i + 1), coeffs[i]});
    return Boundary(std::move(entries));
}

Boundary Boundary::from_standard_indices(const std::vector<long>& indices) {
    std::vector<Rational> coeffs;
    coeffs.reserve(indices.size());
    for (long m : indices) coeffs.push_back(standard_coefficient(m));
    return from_coefficients(coeffs);
}

std::optional<Rational> Boundary::coeff(const std::string& label) const {
    for (const auto& e : entries_)
        if (e.label == label) return e.coeff;
    return std::nullopt;
}

Rational Boundary::coeff_or_zero(const std::string& label) const {
    return coeff(label).value_or(Rational(0));
}

Rational Boundary::degree() const {
    Rational total;
    for (const auto& e : entries_) total += e.coeff;
    return total;
}

Boundary Boundary::reduced_part() const {
    std::vector<BoundaryEntry> out;
    for (const auto& e : entries_)
        if (e.coeff == Rational(1)) out.push_back(e);
    return Boundary(std::move(out));
}

Boundary Boundary::fractional_part() const {
    std::vector<BoundaryEntry> out;
    for (const auto& e : entries_)
        if (e.coeff < Rational(1)) out.push_back(e);
    return Boundary(std::move(out));
}

bool Boundary::dominates(const Boundary& other) const {
    for (const auto& e : other.entries_)
        if (coeff_or_zero(e.label) < e.coeff) return false;
    return true;
}

Rational standard_coefficient(long m) {
    if (m < 1) throw DomainError("standard index must be >= 1, got " + std::to_string(m));
    return Rational(1) - Rational(1, m);
}

}  // namespace complements
