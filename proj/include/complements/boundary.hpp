#pragma once

#include <optional>
#include <string>
#include <vector>

#include "complements/rational.hpp"

namespace complements {

/// One prime component of a boundary with its coefficient.
struct BoundaryEntry {
    std::string label;
    Rational coeff;

    friend bool operator==(const BoundaryEntry&, const BoundaryEntry&) = default;
};

/// D = sum d_i D_i with every d_i in [0,1] and distinct labels.
///
/// Entries are kept in canonical order: coefficient descending, then label
/// ascending, so that equal boundaries compare and serialize identically.
class Boundary {
public:
    Boundary() = default;
    explicit Boundary(std::vector<BoundaryEntry> entries);

    /// Labels "P1", "P2", ... in the order given.
    static Boundary from_coefficients(const std::vector<Rational>& coeffs);

    /// Standard boundary sum (1 - 1/m_i) P_i; m_i >= 1.
    static Boundary from_standard_indices(const std::vector<long>& indices);

    const std::vector<BoundaryEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    std::optional<Rational> coeff(const std::string& label) const;
    /// Coefficient at label, or 0 when the label is absent.
    Rational coeff_or_zero(const std::string& label) const;

    Rational degree() const;

    /// S = floor(D): the reduced part.
    Boundary reduced_part() const;
    /// B = {D}: the entries with coefficient < 1.
    Boundary fractional_part() const;

    /// Coefficientwise D >= other, absent labels counted as 0.
    bool dominates(const Boundary& other) const;

    friend bool operator==(const Boundary&, const Boundary&) = default;

private:
    std::vector<BoundaryEntry> entries_;
};

/// 1 - 1/m for m >= 1.
Rational standard_coefficient(long m);

}  // namespace complements
