#pragma once

#include <optional>

#include "complements/boundary.hpp"

namespace complements::detail {

/// Complement of a boundary supported on general hyperplanes of P^d, where
/// n(K + D+) ~ 0 reduces to n deg(D+) = (d+1) n. The floor-sum deficit is
/// filled with fresh generic hyperplanes labelled "_generic_k".
///
/// With `non_klt` set, the witness must carry a reduced component; the
/// largest lifted coefficient is raised to 1 when the degree allows it.
std::optional<Boundary> padded_complement(const Boundary& boundary, long n,
                                          long anticanonical_degree, bool non_klt);

}  // namespace complements::detail
