#include <random>

#include "doctest.h"

#include "complements/errors.hpp"
#include "complements/lct.hpp"
#include "oracles/brute.hpp"

using namespace complements;
using namespace complements::lct;

namespace {

Rational q(const char* text) { return Rational::parse(text); }

ThresholdProblem two_piece() {
    return ThresholdProblem({{"S", -1, -1, 1}, {"E", q("-1/3"), 1, 1}}, "S");
}

Rational random_rational(std::mt19937_64& rng, long lo, long hi, long max_den) {
    long den = 1 + static_cast<long>(rng() % max_den);
    long span = (hi - lo) * den;
    return Rational(lo * den + static_cast<long>(rng() % (span + 1)), den);
}

ThresholdProblem random_problem(std::mt19937_64& rng) {
    std::vector<ThresholdRow> rows;
    rows.push_back({"S", -1, random_rational(rng, -2, 2, 20), random_rational(rng, 0, 2, 20) + q("1/20")});
    int extra = static_cast<int>(rng() % 8);
    for (int i = 0; i < extra; ++i)
        rows.push_back({"E" + std::to_string(i + 1), random_rational(rng, -1, 2, 20),
                        random_rational(rng, -2, 2, 20), random_rational(rng, 0, 2, 20)});
    return ThresholdProblem(std::move(rows), "S");
}

std::vector<oracle::Row> oracle_rows(const ThresholdProblem& p) {
    std::vector<oracle::Row> out;
    for (const auto& r : p.rows()) out.push_back({r.dis, r.mult_delta, r.mult_f});
    return out;
}

Rational a_s(const ThresholdProblem& p, const Rational& alpha) {
    const auto& s = p.distinguished_row();
    return s.dis - alpha * s.mult_delta - sigma(p)(alpha) * s.mult_f;
}

}  // namespace

TEST_CASE("problem validation") {
    CHECK_THROWS_WITH_AS(ThresholdProblem({{"S", -1, 0, 0}}, "S"),
                         "F misses all divisors: no row with mult_f > 0", DomainError);
    CHECK_THROWS_AS(ThresholdProblem({{"S", -1, 0, 1}, {"S", 0, 0, 1}}, "S"), DomainError);
    CHECK_THROWS_AS(ThresholdProblem({{"S", -2, 0, 1}}, "S"), DomainError);
    CHECK_THROWS_AS(ThresholdProblem({{"S", -1, 0, -1}, {"E", 0, 0, 1}}, "S"), DomainError);
    CHECK_THROWS_AS(ThresholdProblem({{"E", 0, 0, 1}}, "S"), DomainError);
    CHECK_THROWS_AS(ThresholdProblem({{"S", 0, 0, 1}}, "S"), DomainError);
}

TEST_CASE("sigma examples") {
    auto constant = sigma(ThresholdProblem({{"S", -1, 0, 0}, {"E", 0, 0, 1}}, "S"));
    CHECK(constant.pieces().size() == 1);
    CHECK(constant(q("1/2")) == Rational(1));
    auto tent = sigma(ThresholdProblem({{"S", -1, 0, 0}, {"A", 0, 1, 1}, {"B", 0, -1, 1}}, "S"));
    CHECK(tent.pieces() == std::vector<AffinePiece>{{-1, 1}});
    CHECK(tent.breakpoints() == std::vector<Rational>{0, 1});
    auto two = sigma(two_piece());
    CHECK(two.breakpoints() == std::vector<Rational>{0, q("1/3"), 1});
    CHECK(two(q("1/3")) == q("1/3"));
    CHECK_THROWS_AS(two(q("3/2")), DomainError);
}

TEST_CASE("piecewise-linear validation") {
    CHECK_THROWS_AS(PiecewiseLinear({0, 1}, {}), DomainError);
    CHECK_THROWS_AS(PiecewiseLinear({0, q("1/2"), 1}, {{0, 0}, {0, 1}}), DomainError);
    CHECK_THROWS_AS(PiecewiseLinear({1, 0}, {{0, 0}}), DomainError);
}

TEST_CASE("alpha0 examples") {
    CHECK(alpha0(ThresholdProblem({{"S", -1, 0, 0}, {"E", 0, 0, 1}}, "S")) == Rational(1));
    CHECK(alpha0(ThresholdProblem({{"S", -1, 1, 0}, {"E", 0, 0, 1}}, "S")) == Rational(0));
    CHECK(alpha0(two_piece()) == q("1/3"));
    for (long k = 1; k <= 300; ++k) {
        Rational a(k, 300);
        CHECK((a_s(two_piece(), a) == Rational(-1)) == (a <= q("1/3")));
    }
}

TEST_CASE("active sets") {
    CHECK(active_labels(two_piece(), q("1/3")) == std::vector<std::string>{"S", "E"});
    CHECK(active_labels(two_piece(), q("1/5")) == std::vector<std::string>{"S"});
    CHECK(active_labels(two_piece(), q("1/2")) == std::vector<std::string>{"E"});
    ThresholdProblem flat({{"S", -1, 0, 0}, {"E", 0, 0, 1}}, "S");
    for (long k = 0; k <= 10; ++k)
        CHECK(active_labels(flat, Rational(k, 10)) == std::vector<std::string>{"S", "E"});
    CHECK_THROWS_AS(active_labels(flat, Rational(2)), DomainError);
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        auto p = random_problem(rng);
        auto labels = active_labels(p, 0);
        CHECK(std::find(labels.begin(), labels.end(), "S") != labels.end());
    }
}

TEST_CASE("sigma is the exact concave lower envelope") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        auto p = random_problem(rng);
        auto s = sigma(p);
        auto rows = oracle_rows(p);
        for (std::size_t i = 1; i < s.pieces().size(); ++i)
            REQUIRE(s.pieces()[i].slope < s.pieces()[i - 1].slope);
        for (int k = 0; k < 200; ++k) {
            Rational a = random_rational(rng, 0, 1, 1000);
            if (a > Rational(1)) a = 1;
            REQUIRE(s(a) == oracle::pointwise_sigma(rows, a));
            auto dis = discrepancies_at(p, a);
            bool tight = false;
            for (std::size_t i = 0; i < dis.size(); ++i) {
                if (p.rows()[i].mult_f.sign() == 0) continue;
                REQUIRE(dis[i] >= Rational(-1));
                tight = tight || dis[i] == Rational(-1);
            }
            REQUIRE(tight);
        }
        Rational a1 = random_rational(rng, 0, 1, 50), a2 = random_rational(rng, 0, 1, 50);
        Rational t = random_rational(rng, 0, 1, 50);
        REQUIRE(s(t * a1 + (Rational(1) - t) * a2) >= t * s(a1) + (Rational(1) - t) * s(a2));
    }
}

TEST_CASE("alpha0 is the last parameter with a(S, T) = -1") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        auto p = random_problem(rng);
        Rational a0 = alpha0(p);
        REQUIRE(a0 >= Rational(0));
        REQUIRE(a0 <= Rational(1));
        REQUIRE(a_s(p, a0) == Rational(-1));
        for (int k = 1; k <= 50; ++k) {
            Rational a = a0 + (Rational(1) - a0) * Rational(k, 50);
            if (a > a0) REQUIRE(a_s(p, a) != Rational(-1));
        }
    }
}
