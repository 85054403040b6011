#include "complements/lct.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "complements/errors.hpp"

namespace complements::lct {

namespace {

void require_unit(const Rational& alpha) {
    if (alpha < Rational(0) || alpha > Rational(1))
        throw DomainError("parameter " + alpha.to_string() + " outside [0,1]");
}

/// beta-bound of a row with positive mult_f as an affine function of alpha.
AffinePiece bound_of(const ThresholdRow& row) {
    return {-row.mult_delta / row.mult_f, (Rational(1) + row.dis) / row.mult_f};
}

}  // namespace

ThresholdProblem::ThresholdProblem(std::vector<ThresholdRow> rows, std::string distinguished)
    : rows_(std::move(rows)), distinguished_(std::move(distinguished)) {
    std::set<std::string> labels;
    bool hits_f = false;
    for (const auto& r : rows_) {
        if (!labels.insert(r.label).second) throw DomainError("duplicate row label '" + r.label + "'");
        if (r.dis < Rational(-1))
            throw DomainError("row '" + r.label + "' has discrepancy below -1; K+D is not lc");
        if (r.mult_f.sign() < 0) throw DomainError("row '" + r.label + "' has negative mult_f");
        hits_f = hits_f || r.mult_f.sign() > 0;
    }
    if (!hits_f) throw DomainError("F misses all divisors: no row with mult_f > 0");
    if (!labels.count(distinguished_))
        throw DomainError("distinguished divisor '" + distinguished_ + "' is not a row");
    if (distinguished_row().dis != Rational(-1))
        throw DomainError("distinguished divisor must have a(S, D) = -1");
}

const ThresholdRow& ThresholdProblem::distinguished_row() const {
    return *std::find_if(rows_.begin(), rows_.end(),
                         [&](const ThresholdRow& r) { return r.label == distinguished_; });
}

PiecewiseLinear::PiecewiseLinear(std::vector<Rational> breakpoints, std::vector<AffinePiece> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
    if (breakpoints_.size() != pieces_.size() + 1 || pieces_.empty())
        throw DomainError("piecewise-linear function needs one more breakpoint than pieces");
    for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i)
        if (breakpoints_[i] >= breakpoints_[i + 1])
            throw DomainError("breakpoints must be strictly increasing");
    for (std::size_t i = 1; i < pieces_.size(); ++i)
        if (pieces_[i - 1].at(breakpoints_[i]) != pieces_[i].at(breakpoints_[i]))
            throw DomainError("piecewise-linear function is discontinuous at " +
                              breakpoints_[i].to_string());
}

Rational PiecewiseLinear::operator()(const Rational& x) const {
    if (x < breakpoints_.front() || x > breakpoints_.back())
        throw DomainError("argument " + x.to_string() + " outside the domain");
    auto it = std::upper_bound(breakpoints_.begin() + 1, breakpoints_.end() - 1, x);
    return pieces_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1].at(x);
}

PiecewiseLinear sigma(const ThresholdProblem& problem) {
    std::vector<AffinePiece> lines;
    for (const auto& r : problem.rows())
        if (r.mult_f.sign() > 0) lines.push_back(bound_of(r));

    // Candidate breakpoints: the ends and every pairwise crossing inside.
    std::vector<Rational> xs{Rational(0), Rational(1)};
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            if (lines[i].slope == lines[j].slope) continue;
            Rational x = (lines[j].intercept - lines[i].intercept) / (lines[i].slope - lines[j].slope);
            if (x > Rational(0) && x < Rational(1)) xs.push_back(x);
        }
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::vector<Rational> breaks{xs.front()};
    std::vector<AffinePiece> pieces;
    for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
        const Rational mid = (xs[k] + xs[k + 1]) / Rational(2);
        const AffinePiece* lowest = &lines.front();
        for (const auto& l : lines)
            if (l.at(mid) < lowest->at(mid)) lowest = &l;
        if (!pieces.empty() && pieces.back() == *lowest) {
            breaks.back() = xs[k + 1];
        } else {
            pieces.push_back(*lowest);
            breaks.push_back(xs[k + 1]);
        }
    }
    return PiecewiseLinear(std::move(breaks), std::move(pieces));
}

std::vector<Rational> discrepancies_at(const ThresholdProblem& problem, const Rational& alpha) {
    require_unit(alpha);
    const Rational beta = sigma(problem)(alpha);
    std::vector<Rational> out;
    for (const auto& r : problem.rows()) out.push_back(r.dis - alpha * r.mult_delta - beta * r.mult_f);
    return out;
}

Rational alpha0(const ThresholdProblem& problem) {
    const PiecewiseLinear s = sigma(problem);
    const ThresholdRow& row = problem.distinguished_row();
    const Rational minus_one(-1);
    if (row.dis - s(Rational(0)) * row.mult_f != minus_one)
        throw DomainError("a(S, T(0)) != -1; the table does not describe a complement family");

    // a(S, T(a)) = dis - a mult_delta - (slope a + intercept) mult_f on each piece.
    std::optional<Rational> best;
    const auto& bp = s.breakpoints();
    for (std::size_t i = 0; i < s.pieces().size(); ++i) {
        const auto& p = s.pieces()[i];
        const Rational constant = row.dis - p.intercept * row.mult_f;
        const Rational linear = -row.mult_delta - p.slope * row.mult_f;
        std::optional<Rational> hit;
        if (linear.sign() == 0) {
            if (constant == minus_one) hit = bp[i + 1];
        } else {
            Rational x = (minus_one - constant) / linear;
            if (x >= bp[i] && x <= bp[i + 1]) hit = x;
        }
        if (hit && (!best || *hit > *best)) best = hit;
    }
    return *best;
}

std::vector<std::string> active_labels(const ThresholdProblem& problem, const Rational& alpha) {
    const auto values = discrepancies_at(problem, alpha);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] == Rational(-1)) out.push_back(problem.rows()[i].label);
    return out;
}

}  // namespace complements::lct
