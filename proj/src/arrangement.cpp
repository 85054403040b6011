#include "complements/arrangement.hpp"

#include <algorithm>
#include <functional>

#include "complements/coefficients.hpp"
#include "complements/detail/padding.hpp"
#include "complements/errors.hpp"

namespace complements::arrangement {

namespace {

constexpr int kMaxEnumerationDim = 4;

void require_dim(int dim) {
    if (dim < 1) throw DomainError("dimension must be positive, got " + std::to_string(dim));
}

long anticanonical_degree(const ArrangementPair& pair) { return pair.dim + 1L; }

Rational power(const Rational& base, int exponent) {
    Rational out(1);
    for (int i = 0; i < exponent; ++i) out *= base;
    return out;
}

}  // namespace

bool is_nef(const ArrangementPair& pair) {
    require_dim(pair.dim);
    return pair.boundary.degree() <= Rational(anticanonical_degree(pair));
}

void require_nef(const ArrangementPair& pair) {
    if (!is_nef(pair))
        throw NotNefError("not nef: deg D = " + pair.boundary.degree().to_string() + " > " +
                          std::to_string(anticanonical_degree(pair)));
}

bool has_n_complement(const ArrangementPair& pair, long n) {
    require_nef(pair);
    Integer total = 0;
    for (const auto& e : pair.boundary.entries()) total += complement_coeff(e.coeff, n);
    return total <= Integer(anticanonical_degree(pair)) * n;
}

std::optional<ComplementReport> n_complement(const ArrangementPair& pair, long n) {
    require_nef(pair);
    auto w = detail::padded_complement(pair.boundary, n, anticanonical_degree(pair), false);
    if (!w) return std::nullopt;
    bool klt = std::all_of(w->entries().begin(), w->entries().end(),
                           [](const BoundaryEntry& e) { return e.coeff < Rational(1); });
    return ComplementReport{n, std::move(*w), klt};
}

ComplementReport minimal_complement(const ArrangementPair& pair, long cap) {
    require_nef(pair);
    for (long n = 1; n <= cap; ++n)
        if (auto r = n_complement(pair, n)) return std::move(*r);
    throw CapExceededError(static_cast<int>(cap));
}

bool candidate_exceptional(const ArrangementPair& pair) {
    for (const auto& e : pair.boundary.entries())
        if (!is_standard(e.coeff))
            throw DomainError("coefficient " + e.coeff.to_string() + " of '" + e.label +
                              "' is not standard");
    require_nef(pair);
    const Rational limit(anticanonical_degree(pair));
    const Rational deg = pair.boundary.degree();
    if (deg + Rational(1) <= limit) return false;
    return std::all_of(pair.boundary.entries().begin(), pair.boundary.entries().end(),
                       [&](const BoundaryEntry& e) { return deg - e.coeff + Rational(1) > limit; });
}

bool reversed_candidate_exceptional(int dim, const std::vector<long>& indices) {
    require_dim(dim);
    if (indices.size() != static_cast<std::size_t>(dim) + 2)
        throw DomainError("expected d + 2 = " + std::to_string(dim + 2) + " indices");
    Rational total;
    for (long m : indices) {
        if (m < 1) throw DomainError("indices must be positive");
        total += Rational(1, m);
    }
    if (total > Rational(1)) return false;
    return std::all_of(indices.begin(), indices.end(),
                       [&](long m) { return total - Rational(1, m) > Rational(1); });
}

namespace {

/// Walks every sorted prefix (m_1, ..., m_{d+1}) of a candidate collection
/// and reports the admissible range [lo, hi] of the last index. With sorted
/// m_i the binding conditions are: the first d+1 reciprocals sum to < 1 and
/// all d+2 sum to >= 1. An index m_i = 1 can never occur.
void walk_candidate_prefixes(
    int dim, const std::function<void(const std::vector<long>&, long, long)>& visit) {
    require_dim(dim);
    if (dim > kMaxEnumerationDim)
        throw DomainError("enumeration supported for d <= " + std::to_string(kMaxEnumerationDim));
    const long slots = dim + 2L;
    std::vector<long> prefix;
    std::function<void(long, const Rational&)> extend = [&](long from, const Rational& sum) {
        const long remaining = slots - static_cast<long>(prefix.size());
        const Rational gap = Rational(1) - sum;
        // feasibility: sum + remaining/m >= 1
        const long highest = (Rational(remaining) / gap).floor().get_si();
        if (remaining == 1) {
            if (from <= highest) visit(prefix, from, highest);
            return;
        }
        // the prefix stays below 1: 1/m < gap
        long m = std::max<long>(from, Integer((Rational(1) / gap).floor() + 1).get_si());
        for (; m <= highest; ++m) {
            prefix.push_back(m);
            extend(m, sum + Rational(1, m));
            prefix.pop_back();
        }
    };
    extend(2, Rational(0));
}

}  // namespace

CandidateTable enumerate_candidate_exceptional(int dim, std::size_t limit) {
    CandidateTable table;
    table.dim = dim;
    walk_candidate_prefixes(dim, [&](const std::vector<long>& prefix, long lo, long hi) {
        if (table.collections.size() + static_cast<std::size_t>(hi - lo + 1) > limit)
            throw DomainError("more than " + std::to_string(limit) +
                              " candidate collections; use the summary instead");
        for (long m = lo; m <= hi; ++m) {
            table.collections.push_back(prefix);
            table.collections.back().push_back(m);
        }
        table.max_index = std::max(table.max_index, hi);
    });
    return table;
}

CandidateSummary summarize_candidate_exceptional(int dim) {
    CandidateSummary summary;
    summary.dim = dim;
    walk_candidate_prefixes(dim, [&](const std::vector<long>&, long lo, long hi) {
        summary.count += hi - lo + 1;
        summary.max_index = std::max(summary.max_index, hi);
    });
    return summary;
}

Rational anticanonical_volume(const ArrangementPair& pair) {
    require_dim(pair.dim);
    return power(Rational(anticanonical_degree(pair)) - pair.boundary.degree(), pair.dim);
}

bool exceeds_volume_bound(const ArrangementPair& pair) {
    require_nef(pair);
    return anticanonical_volume(pair) > power(Rational(pair.dim), pair.dim);
}

}  // namespace complements::arrangement
