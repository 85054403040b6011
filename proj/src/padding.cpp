#include "complements/detail/padding.hpp"

#include <set>
#include <string>

#include "complements/coefficients.hpp"
#include "complements/errors.hpp"

namespace complements::detail {

std::optional<Boundary> padded_complement(const Boundary& boundary, long n,
                                          long anticanonical_degree, bool non_klt) {
    if (n < 1) throw DomainError("complement index must be positive");
    const Integer target = Integer(anticanonical_degree) * n;

    std::vector<Integer> lifted;
    Integer total = 0;
    for (const auto& e : boundary.entries()) {
        lifted.push_back(complement_coeff(e.coeff, n));
        total += lifted.back();
    }
    if (total > target) return std::nullopt;

    if (non_klt) {
        bool reduced = false;
        for (const auto& c : lifted) reduced = reduced || c == n;
        if (!reduced) {
            // Raising the largest lifted value costs the least; entries are
            // in canonical order so ties resolve to the first one.
            std::size_t best = lifted.size();
            for (std::size_t i = 0; i < lifted.size(); ++i)
                if (best == lifted.size() || lifted[i] > lifted[best]) best = i;
            if (best < lifted.size() && total - lifted[best] + n <= target) {
                total += n - lifted[best];
                lifted[best] = n;
            } else if (total + n > target) {
                return std::nullopt;
            }
            // Otherwise the padding below starts with a fresh reduced point.
        }
    }

    std::set<std::string> used;
    std::vector<BoundaryEntry> entries;
    for (std::size_t i = 0; i < lifted.size(); ++i) {
        const auto& e = boundary.entries()[i];
        used.insert(e.label);
        entries.push_back({e.label, Rational(lifted[i], Integer(n))});
    }

    long k = 0;
    auto fresh_label = [&] {
        std::string label;
        do label = "_generic_" + std::to_string(++k);
        while (used.count(label));
        return label;
    };
    Integer deficit = target - total;
    while (deficit >= n) {
        entries.push_back({fresh_label(), Rational(1)});
        deficit -= n;
    }
    if (deficit > 0) entries.push_back({fresh_label(), Rational(deficit, Integer(n))});
    return Boundary(std::move(entries));
}

}  // namespace complements::detail
