#include "complements/coefficients.hpp"

#include <algorithm>

#include "complements/errors.hpp"

namespace complements {

namespace {

void require_unit_interval(const Rational& alpha) {
    if (alpha < Rational(0) || alpha > Rational(1))
        throw DomainError("coefficient " + alpha.to_string() + " outside [0,1]");
}

void require_positive(long n) {
    if (n < 1) throw DomainError("complement index must be positive, got " + std::to_string(n));
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
}

}  // namespace

bool is_standard(const Rational& alpha) {
    if (alpha == Rational(1)) return true;
    if (alpha < Rational(0) || alpha > Rational(1)) return false;
    // 1/(1 - alpha) = den / (den - num) must be an integer.
    return standard_index(alpha).has_value();
}

std::optional<Integer> standard_index(const Rational& alpha) {
    if (alpha >= Rational(1) || alpha < Rational(0)) return std::nullopt;
    Rational m = Rational(1) / (Rational(1) - alpha);
    if (!m.is_integer()) return std::nullopt;
    return m.numerator();
}

CoefficientSet CoefficientSet::standard() { return CoefficientSet{}; }

CoefficientSet CoefficientSet::interval_union(std::vector<ClosedInterval> parts,
                                              bool with_standard) {
    for (const auto& p : parts) {
        if (p.lo > p.hi)
            throw DomainError("empty interval [" + p.lo.to_string() + "," + p.hi.to_string() + "]");
        require_unit_interval(p.lo);
        require_unit_interval(p.hi);
    }
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
        return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
    });
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    CoefficientSet s;
    s.kind_ = Kind::IntervalUnion;
    s.with_standard_ = with_standard;
    s.parts_ = std::move(parts);
    return s;
}

CoefficientSet CoefficientSet::hyperstandard(int dim, const ComplementRegistry& registry) {
    if (dim < 1) throw DomainError("M_m^d needs d >= 1, got " + std::to_string(dim));
    CoefficientSet s = standard();
    if (dim >= 2) {
        long prev = registry.require_max_index(dim - 1);
        s = interval_union({{Rational(1) - Rational(1, prev + 1), Rational(1)}}, true);
    }
    s.kind_ = Kind::Hyperstandard;
    s.dim_ = dim;
    return s;
}

CoefficientSet CoefficientSet::parse(std::string_view text, const ComplementRegistry& registry) {
    text = trim(text);
    if (text == "Msm") return standard();
    if (text.size() > 2 && text.substr(0, 2) == "Mm" && text.find('|') == std::string_view::npos) {
        auto digits = text.substr(2);
        if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw ParseError("malformed coefficient set '" + std::string(text) + "'");
        return registry_mmd(std::stoi(std::string(digits)), registry);
    }
    bool with_standard = false;
    std::vector<ClosedInterval> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto bar = text.find('|', start);
        auto piece = trim(text.substr(start, bar == std::string_view::npos ? text.npos : bar - start));
        if (piece.empty()) throw ParseError("empty piece in coefficient set '" + std::string(text) + "'");
        if (piece == "Msm") {
            with_standard = true;
        } else if (piece.front() == '[') {
            auto comma = piece.find(',');
            if (piece.back() != ']' || comma == std::string_view::npos)
                throw ParseError("malformed interval '" + std::string(piece) + "'");
            parts.push_back({Rational::parse(trim(piece.substr(1, comma - 1))),
                             Rational::parse(trim(piece.substr(comma + 1, piece.size() - comma - 2)))});
        } else {
            auto p = Rational::parse(piece);
            parts.push_back({p, p});
        }
        if (bar == std::string_view::npos) break;
        start = bar + 1;
    }
    if (!with_standard && parts.empty())
        throw ParseError("empty coefficient set '" + std::string(text) + "'");
    if (with_standard && parts.empty()) return standard();
    return interval_union(std::move(parts), with_standard);
}

bool CoefficientSet::contains(const Rational& alpha) const {
    if (with_standard_ && is_standard(alpha)) return true;
    return std::any_of(parts_.begin(), parts_.end(),
                       [&](const ClosedInterval& p) { return p.contains(alpha); });
}

std::string CoefficientSet::describe() const {
    std::string out;
    auto append = [&](const std::string& piece) {
        if (!out.empty()) out += '|';
        out += piece;
    };
    if (with_standard_) append("Msm");
    for (const auto& p : parts_) {
        if (p.lo == p.hi)
            append(p.lo.to_string());
        else
            append("[" + p.lo.to_string() + "," + p.hi.to_string() + "]");
    }
    return out;
}

ComplementRegistry ComplementRegistry::defaults() {
    return ComplementRegistry{}
        .with_entry(0, 2, std::set<long>{1, 2})
        .with_entry(1, 6, std::set<long>{1, 2, 3, 4, 6});
}

ComplementRegistry ComplementRegistry::with_entry(int dim, long max_index,
                                                  std::optional<std::set<long>> indices) const {
    if (dim < 0) throw DomainError("negative dimension in registry entry");
    if (max_index < 1) throw DomainError("N_" + std::to_string(dim) + " must be positive");
    if (indices) {
        if (indices->empty() || *indices->rbegin() != max_index || *indices->begin() < 1)
            throw DomainError("index set for dimension " + std::to_string(dim) +
                              " must consist of positive integers with maximum N_d");
    }
    ComplementRegistry out = *this;
    out.max_[dim] = max_index;
    if (indices)
        out.sets_[dim] = std::move(*indices);
    else
        out.sets_.erase(dim);
    return out;
}

std::optional<long> ComplementRegistry::max_index(int dim) const {
    auto it = max_.find(dim);
    if (it == max_.end()) return std::nullopt;
    return it->second;
}

long ComplementRegistry::require_max_index(int dim) const {
    auto v = max_index(dim);
    if (!v) throw RegistryIncompleteError(dim);
    return *v;
}

const std::set<long>* ComplementRegistry::index_set(int dim) const {
    auto it = sets_.find(dim);
    return it == sets_.end() ? nullptr : &it->second;
}

Rational ComplementRegistry::delta(int dim) const {
    if (dim < 1) throw DomainError("delta_d needs d >= 1");
    return Rational(1, require_max_index(dim - 1));
}

bool is_member(const Rational& alpha, const CoefficientSet& set) {
    require_unit_interval(alpha);
    return set.contains(alpha);
}

bool rounding_lemma_holds(const Rational& alpha, long n) {
    require_unit_interval(alpha);
    require_positive(n);
    Rational lhs((Rational(n + 1) * alpha).floor());
    return lhs >= Rational(n) * alpha;
}

bool boundary_satisfies_rounding(const Boundary& boundary, long n) {
    return std::all_of(boundary.entries().begin(), boundary.entries().end(),
                       [n](const BoundaryEntry& e) { return rounding_lemma_holds(e.coeff, n); });
}

Integer complement_coeff(const Rational& d, long n) {
    require_unit_interval(d);
    require_positive(n);
    if (d == Rational(1)) return Integer(n);
    return (Rational(n + 1) * d).floor();
}

bool is_n_complement_coeffwise(const Boundary& boundary, const Boundary& candidate, long n) {
    require_positive(n);
    std::set<std::string> labels;
    for (const auto& e : boundary.entries()) labels.insert(e.label);
    for (const auto& e : candidate.entries()) labels.insert(e.label);
    for (const auto& label : labels) {
        Rational scaled = Rational(n) * candidate.coeff_or_zero(label);
        if (!scaled.is_integer()) return false;
        if (scaled.numerator() < complement_coeff(boundary.coeff_or_zero(label), n)) return false;
    }
    return true;
}

CoefficientSet registry_mmd(int dim, const ComplementRegistry& registry) {
    return CoefficientSet::hyperstandard(dim, registry);
}

}  // namespace complements
