#pragma once

#include <string>
#include <vector>

#include "complements/rational.hpp"

namespace complements::lct {

/// One prime divisor E on a fixed log resolution.
struct ThresholdRow {
    std::string label;
    /// a(E, D)
    Rational dis;
    /// mult_E(D' - D)
    Rational mult_delta;
    /// mult_E(F), non-negative
    Rational mult_f;
};

/// The family D(a) = D + a (D' - D) together with the divisor F, seen
/// through finitely many prime divisors. Along the family
///
///     a(E, D(a) + b F) = dis_E - a mult_delta_E - b mult_f_E.
///
/// The table is assumed complete: every divisor that can reach
/// discrepancy -1 must be listed. That cannot be checked here.
class ThresholdProblem {
public:
    ThresholdProblem(std::vector<ThresholdRow> rows, std::string distinguished);

    const std::vector<ThresholdRow>& rows() const { return rows_; }
    const std::string& distinguished() const { return distinguished_; }
    const ThresholdRow& distinguished_row() const;

private:
    std::vector<ThresholdRow> rows_;
    std::string distinguished_;
};

struct AffinePiece {
    Rational slope;
    Rational intercept;

    Rational at(const Rational& x) const { return slope * x + intercept; }
    friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

/// Continuous piecewise-linear function on [0,1]. breakpoints() runs from
/// 0 to 1 and piece i is valid on [breakpoints[i], breakpoints[i+1]].
class PiecewiseLinear {
public:
    PiecewiseLinear(std::vector<Rational> breakpoints, std::vector<AffinePiece> pieces);

    const std::vector<Rational>& breakpoints() const { return breakpoints_; }
    const std::vector<AffinePiece>& pieces() const { return pieces_; }

    Rational operator()(const Rational& x) const;

private:
    std::vector<Rational> breakpoints_;
    std::vector<AffinePiece> pieces_;
};

/// sigma(a) = sup{b | K + D(a) + b F is lc}
///          = min over rows with mult_f > 0 of (1 + dis - a mult_delta) / mult_f,
/// as an exact lower envelope on [0,1]. Rows with mult_f = 0 do not bound b.
PiecewiseLinear sigma(const ThresholdProblem& problem);

/// a(E, T(a)) for every row, where T(a) = D(a) + sigma(a) F.
std::vector<Rational> discrepancies_at(const ThresholdProblem& problem, const Rational& alpha);

/// Largest a in [0,1] with a(S, T(a)) = -1. Requires a(S, T(0)) = -1.
Rational alpha0(const ThresholdProblem& problem);

/// Labels of the rows with a(E, T(alpha)) = -1, in table order.
std::vector<std::string> active_labels(const ThresholdProblem& problem, const Rational& alpha);

}  // namespace complements::lct
