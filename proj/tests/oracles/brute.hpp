#pragma once

// Slow, independent reference implementations used to cross-check the
// library. They share no code with src/ beyond the Rational type.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "complements/rational.hpp"

namespace oracle {

using complements::Integer;
using complements::Rational;

/// p/q with 0 <= p <= q, q >= 1.
struct Frac {
    std::int64_t p;
    std::int64_t q;
};

/// Smallest numerator c with c/n allowed above d in an n-complement.
inline std::int64_t lifted(Frac d, std::int64_t n) {
    if (d.p == d.q) return n;
    return ((n + 1) * d.p) / d.q;
}

/// Whether `rest` splits into parts of size 1..n (coefficients of fresh
/// points), by explicit search.
inline bool fresh_split_exists(std::int64_t rest, std::int64_t n) {
    if (rest == 0) return true;
    for (std::int64_t part = 1; part <= n && part <= rest; ++part)
        if (fresh_split_exists(rest - part, part)) return true;
    return false;
}

/// Exhaustive search for an integral divisor n D+ of degree `per_n * n`:
/// coefficients c_i in [0, n] on the support with c_i >= lifted(d_i, n),
/// the remaining degree spread over fresh components.
inline bool has_complement(const std::vector<Frac>& coeffs, std::int64_t n, std::int64_t per_n) {
    const std::int64_t total = per_n * n;
    std::function<bool(std::size_t, std::int64_t)> go = [&](std::size_t i, std::int64_t used) {
        if (used > total) return false;
        if (i == coeffs.size()) return fresh_split_exists(total - used, n);
        for (std::int64_t c = 0; c <= n; ++c) {
            if (c < lifted(coeffs[i], n)) continue;
            if (go(i + 1, used + c)) return true;
        }
        return false;
    };
    return go(0, 0);
}

inline std::optional<std::int64_t> compl_index(const std::vector<Frac>& coeffs,
                                               std::int64_t per_n, std::int64_t cap) {
    for (std::int64_t n = 1; n <= cap; ++n)
        if (has_complement(coeffs, n, per_n)) return n;
    return std::nullopt;
}

inline std::vector<Frac> standard(const std::vector<long>& indices) {
    std::vector<Frac> out;
    for (long m : indices) out.push_back({m - 1, m});
    return out;
}

/// Sorted tuples of length d+2 with entries in [2, bound] satisfying
/// sum 1/m >= 1 and every (d+1)-subsum < 1, checked subset by subset.
inline std::vector<std::vector<long>> candidate_tuples(int dim, long bound) {
    std::vector<std::vector<long>> out;
    std::vector<long> t;
    const std::size_t len = static_cast<std::size_t>(dim) + 2;
    std::function<void(long)> go = [&](long from) {
        if (t.size() == len) {
            Rational total;
            for (long m : t) total += Rational(1, m);
            if (total < Rational(1)) return;
            for (long m : t)
                if (total - Rational(1, m) >= Rational(1)) return;
            out.push_back(t);
            return;
        }
        for (long m = from; m <= bound; ++m) {
            t.push_back(m);
            go(m);
            t.pop_back();
        }
    };
    go(2);
    return out;
}

/// Cofactor expansion along the first row.
inline Integer laplace_determinant(const std::vector<std::vector<Integer>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Integer out = 0;
    for (std::size_t col = 0; col < n; ++col) {
        if (m[0][col] == 0) continue;
        std::vector<std::vector<Integer>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Integer> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != col) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Integer term = m[0][col] * laplace_determinant(minor);
        out += (col % 2 == 0) ? term : Integer(-term);
    }
    return out;
}

struct Row {
    Rational dis;
    Rational mult_delta;
    Rational mult_f;
};

/// min over rows with mult_f > 0 of (1 + dis - a mult_delta) / mult_f.
inline Rational pointwise_sigma(const std::vector<Row>& rows, const Rational& a) {
    std::optional<Rational> best;
    for (const auto& r : rows) {
        if (r.mult_f.sign() <= 0) continue;
        Rational v = (Rational(1) + r.dis - a * r.mult_delta) / r.mult_f;
        if (!best || v < *best) best = v;
    }
    return *best;
}

}  // namespace oracle
