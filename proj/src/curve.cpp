#include "complements/curve.hpp"

#include <algorithm>
#include <functional>

#include "complements/coefficients.hpp"
#include "complements/detail/padding.hpp"
#include "complements/errors.hpp"

namespace complements::curve {

namespace {

constexpr long kAnticanonicalDegree = 2;
// Every standard boundary on P^1 is 1-, 2-, 3-, 4- or 6-complementary.
constexpr long kStandardBound = 6;

bool all_standard(const Boundary& boundary) {
    return std::all_of(boundary.entries().begin(), boundary.entries().end(),
                       [](const BoundaryEntry& e) { return is_standard(e.coeff); });
}

ComplementReport make_report(long n, Boundary witness) {
    bool klt = std::all_of(witness.entries().begin(), witness.entries().end(),
                           [](const BoundaryEntry& e) { return e.coeff < Rational(1); });
    return {n, std::move(witness), klt};
}

ComplementReport search(const Boundary& boundary, long cap, bool non_klt) {
    require_nef(boundary);
    const bool standard = all_standard(boundary);
    if (non_klt && standard && is_exceptional(boundary))
        throw DomainError("exceptional boundary: every complement is klt");
    const long limit = !non_klt && standard ? kStandardBound : cap;
    for (long n = 1; n <= limit; ++n) {
        if (auto w = detail::padded_complement(boundary, n, kAnticanonicalDegree, non_klt))
            return make_report(n, std::move(*w));
    }
    throw CapExceededError(static_cast<int>(limit));
}

}  // namespace

bool is_nef(const Boundary& boundary) { return boundary.degree() <= Rational(kAnticanonicalDegree); }

void require_nef(const Boundary& boundary) {
    if (!is_nef(boundary))
        throw NotNefError("not nef: deg D = " + boundary.degree().to_string() + " > 2");
}

bool has_n_complement(const Boundary& boundary, long n) {
    require_nef(boundary);
    Integer total = 0;
    for (const auto& e : boundary.entries()) total += complement_coeff(e.coeff, n);
    return total <= Integer(kAnticanonicalDegree) * n;
}

std::optional<ComplementReport> n_complement(const Boundary& boundary, long n) {
    require_nef(boundary);
    auto w = detail::padded_complement(boundary, n, kAnticanonicalDegree, false);
    if (!w) return std::nullopt;
    return make_report(n, std::move(*w));
}

ComplementReport minimal_complement(const Boundary& boundary, long cap) {
    return search(boundary, cap, false);
}

ComplementReport minimal_non_klt_complement(const Boundary& boundary, long cap) {
    return search(boundary, cap, true);
}

bool is_exceptional(const Boundary& boundary) {
    require_nef(boundary);
    // A non-klt Q-complement exists iff some coefficient can be raised to 1
    // (or a fresh reduced point added) while keeping deg <= 2.
    const Rational deg = boundary.degree();
    if (deg <= Rational(1)) return false;
    return std::all_of(boundary.entries().begin(), boundary.entries().end(),
                       [&](const BoundaryEntry& e) { return deg - e.coeff > Rational(1); });
}

std::vector<std::vector<long>> enumerate_exceptional_standard(int max_points) {
    if (max_points < 3) throw DomainError("max_points must be at least 3");
    std::vector<std::vector<long>> out;
    // An exceptional boundary needs every sum of r-1 coefficients above 1,
    // so r >= 3. In reciprocals, with m_i sorted: the first r-1 sum to less
    // than r-2 and nef means all r sum to at least r-2. Both bound each m_i.
    for (int r = 3; r <= max_points; ++r) {
        const Rational need(r - 2);
        std::vector<long> current;
        std::function<void(long, Rational)> extend = [&](long from, Rational reciprocal_sum) {
            const long remaining = r - static_cast<long>(current.size());
            if (remaining == 0) {
                if (reciprocal_sum >= need && is_exceptional(Boundary::from_standard_indices(current)))
                    out.push_back(current);
                return;
            }
            long m = from;
            if (remaining > 1) {
                if (reciprocal_sum >= need) return;
                Integer lowest = (Rational(1) / (need - reciprocal_sum)).floor() + 1;
                if (lowest > m) m = lowest.get_si();
            }
            for (; reciprocal_sum + Rational(remaining, m) >= need; ++m) {
                current.push_back(m);
                extend(m, reciprocal_sum + Rational(1, m));
                current.pop_back();
            }
        };
        extend(2, Rational(0));
    }
    return out;
}

}  // namespace complements::curve
