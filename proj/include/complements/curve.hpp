#pragma once

#include <optional>
#include <vector>

#include "complements/boundary.hpp"

namespace complements {

/// Default search cap for complement indices when no a priori bound applies.
inline constexpr long kDefaultSearchCap = 100;

/// An explicit n-complement D+ together with its index.
struct ComplementReport {
    long n = 0;
    Boundary witness;
    /// All witness coefficients are < 1.
    bool klt = true;
};

/// Boundaries on P^1 (labels are points). -(K+D) is nef iff deg D <= 2.
namespace curve {

bool is_nef(const Boundary& boundary);

/// Throws NotNefError when deg D > 2.
void require_nef(const Boundary& boundary);

/// sum_i complement_coeff(d_i, n) <= 2n.
bool has_n_complement(const Boundary& boundary, long n);

/// The canonical witness for index n, or nullopt when none exists.
std::optional<ComplementReport> n_complement(const Boundary& boundary, long n);

/// Least n with an n-complement. Standard boundaries are searched up to 6,
/// which always succeeds; others up to `cap` (CapExceededError beyond).
ComplementReport minimal_complement(const Boundary& boundary, long cap = kDefaultSearchCap);

/// Least n admitting an n-complement with a reduced component.
ComplementReport minimal_non_klt_complement(const Boundary& boundary,
                                            long cap = kDefaultSearchCap);

/// Every Q-complement is klt: deg D > 1 and deg D - d_j > 1 for every j.
bool is_exceptional(const Boundary& boundary);

/// All collections (m_1 <= ... <= m_r), m_i >= 2, r <= max_points, whose
/// standard boundary is nef and exceptional. Sorted by length, then
/// lexicographically.
std::vector<std::vector<long>> enumerate_exceptional_standard(int max_points);

}  // namespace curve
}  // namespace complements
