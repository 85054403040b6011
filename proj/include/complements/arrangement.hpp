#pragma once

#include <optional>
#include <vector>

#include "complements/boundary.hpp"
#include "complements/curve.hpp"

namespace complements::arrangement {

/// A boundary on P^d whose components are hyperplanes in general position.
///
/// General position is assumed, not checked: the pair is simple normal
/// crossing, so it is lc iff every coefficient is <= 1, and -(K+D) is nef
/// iff deg D <= d + 1.
struct ArrangementPair {
    int dim = 1;
    Boundary boundary;
};

bool is_nef(const ArrangementPair& pair);
void require_nef(const ArrangementPair& pair);

/// sum_i complement_coeff(d_i, n) <= (d+1) n.
bool has_n_complement(const ArrangementPair& pair, long n);
std::optional<ComplementReport> n_complement(const ArrangementPair& pair, long n);

/// Least n <= cap with an n-complement; CapExceededError otherwise.
ComplementReport minimal_complement(const ArrangementPair& pair, long cap = kDefaultSearchCap);

/// Necessary degree condition for exceptionality with standard coefficients:
/// the pair is nef, but raising any coefficient to 1 (or adding a reduced
/// generic hyperplane) breaks nef. For d + 2 hyperplanes with indices m_i
/// this is sum_{i != j} 1/m_i < 1 <= sum_i 1/m_i for every j.
///
/// Throws DomainError on non-standard coefficients and NotNefError when
/// the pair is not nef.
bool candidate_exceptional(const ArrangementPair& pair);

/// The same test with both inequalities reversed: nef iff sum 1/m_i <= 1,
/// exceptional only if sum_{i != j} 1/m_i > 1 for all j. Kept so callers
/// can report where the two readings disagree.
bool reversed_candidate_exceptional(int dim, const std::vector<long>& indices);

struct CandidateTable {
    int dim = 0;
    std::vector<std::vector<long>> collections;
    /// Largest index attained, the effective Const(d).
    long max_index = 0;
};

struct CandidateSummary {
    int dim = 0;
    Integer count = 0;
    long max_index = 0;
};

inline constexpr std::size_t kDefaultEnumerationLimit = 2'000'000;

/// All sorted (m_1 <= ... <= m_{d+2}), m_i >= 2, passing candidate_exceptional,
/// in lexicographic order. Supported for 1 <= d <= 4; DomainError when the
/// list would exceed `limit` entries.
CandidateTable enumerate_candidate_exceptional(int dim,
                                               std::size_t limit = kDefaultEnumerationLimit);

/// Count and Const(d) of the same collections without materializing them.
CandidateSummary summarize_candidate_exceptional(int dim);

/// (d + 1 - deg D)^d, the top self-intersection of -(K+D).
Rational anticanonical_volume(const ArrangementPair& pair);

/// (-(K+D))^d > d^d, the volume condition under which a non-klt complement
/// of index in N_{d-1} is produced.
bool exceeds_volume_bound(const ArrangementPair& pair);

}  // namespace complements::arrangement
