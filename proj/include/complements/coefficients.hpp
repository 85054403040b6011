#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "complements/boundary.hpp"
#include "complements/rational.hpp"

namespace complements {

/// Closed interval [lo, hi]; a point is lo == hi.
struct ClosedInterval {
    Rational lo;
    Rational hi;

    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    friend bool operator==(const ClosedInterval&, const ClosedInterval&) = default;
};

class ComplementRegistry;

/// A set of admissible boundary coefficients inside [0,1].
///
/// Every set is a union of (optionally) the standard coefficients
/// {1 - 1/m : m in N or m = infinity} with finitely many closed intervals
/// and isolated points. Membership is decided exactly.
class CoefficientSet {
public:
    enum class Kind { Standard, Hyperstandard, IntervalUnion };

    /// {1 - 1/m}: the standard coefficients.
    static CoefficientSet standard();
    static CoefficientSet interval_union(std::vector<ClosedInterval> parts,
                                         bool with_standard = false);
    /// M_m^d resolved against the registry; see registry_mmd().
    static CoefficientSet hyperstandard(int dim, const ComplementRegistry& registry);

    /// "Msm", "Mm<d>", or a '|'-separated union of "Msm", "[a,b]" and "p/q".
    static CoefficientSet parse(std::string_view text, const ComplementRegistry& registry);

    Kind kind() const { return kind_; }
    /// Dimension d for Kind::Hyperstandard, 0 otherwise.
    int dimension() const { return dim_; }
    bool includes_standard() const { return with_standard_; }
    const std::vector<ClosedInterval>& parts() const { return parts_; }

    bool contains(const Rational& alpha) const;

    /// Canonical textual form, e.g. "Msm|[6/7,1]"; parse(describe()) gives an equal set.
    std::string describe() const;

    /// Sets are equal when they contain the same structural pieces.
    friend bool operator==(const CoefficientSet& a, const CoefficientSet& b) {
        return a.with_standard_ == b.with_standard_ && a.parts_ == b.parts_;
    }

private:
    Kind kind_ = Kind::Standard;
    int dim_ = 0;
    bool with_standard_ = true;
    std::vector<ClosedInterval> parts_;
};

/// True iff alpha = 1 or 1/(1 - alpha) is a positive integer.
bool is_standard(const Rational& alpha);

/// The m with alpha = 1 - 1/m, or nullopt for alpha = 1 (m = infinity) and
/// for non-standard alpha.
std::optional<Integer> standard_index(const Rational& alpha);

/// Known values of N_d = max N_d(Phi) and, where available, the full sets.
///
/// Defaults: N_0 = 2 with {1,2}; N_1 = 6 with {1,2,3,4,6}. Higher dimensions
/// must be supplied by the caller.
class ComplementRegistry {
public:
    static ComplementRegistry defaults();

    /// Copy with N_dim recorded (and the index set, when given).
    ComplementRegistry with_entry(int dim, long max_index,
                                  std::optional<std::set<long>> indices = std::nullopt) const;

    std::optional<long> max_index(int dim) const;
    long require_max_index(int dim) const;
    const std::set<long>* index_set(int dim) const;

    /// delta_d = 1 / max N_{d-1}, the discrepancy gap of exceptional
    /// contractions away from the central divisor.
    Rational delta(int dim) const;

    const std::map<int, long>& known_max() const { return max_; }
    const std::map<int, std::set<long>>& known_sets() const { return sets_; }

private:
    std::map<int, long> max_;
    std::map<int, std::set<long>> sets_;
};

/// Membership with a domain check: alpha must lie in [0,1].
bool is_member(const Rational& alpha, const CoefficientSet& set);

/// floor((n+1) alpha) >= n alpha.
bool rounding_lemma_holds(const Rational& alpha, long n);

/// Every coefficient of the boundary satisfies the rounding inequality.
bool boundary_satisfies_rounding(const Boundary& boundary, long n);

/// Least numerator c such that c/n may sit above coefficient d in an
/// n-complement: n when d = 1, floor((n+1) d) otherwise.
Integer complement_coeff(const Rational& d, long n);

/// Coefficient-level n-complement test: at every label n * D+ is an integer
/// and at least complement_coeff(D, n). Labels missing on either side count
/// as coefficient 0.
bool is_n_complement_coeffwise(const Boundary& boundary, const Boundary& candidate, long n);

/// M_m^d: M_sm for d = 1, M_sm | [1 - 1/(N_{d-1}+1), 1] for d >= 2.
CoefficientSet registry_mmd(int dim, const ComplementRegistry& registry);

}  // namespace complements
