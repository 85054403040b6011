#include "doctest.h"

#include "complements/adjunction.hpp"
#include "complements/coefficients.hpp"
#include "complements/errors.hpp"

using namespace complements;
using namespace complements::adjunction;

namespace {

Rational q(const char* text) { return Rational::parse(text); }

}  // namespace

TEST_CASE("different coefficient examples") {
    CHECK(different_coefficient({2, {}}) == q("1/2"));
    CHECK(different_coefficient({2, {{q("2/3"), 1}}}) == q("5/6"));
    CHECK(different_coefficient({1, {}}) == Rational(0));
    try {
        different_coefficient({5, {{q("1/2"), 3}}});
        FAIL("expected lc error");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("not lc along divisor") != std::string::npos);
    }
    CHECK_THROWS_AS(different_coefficient({0, {}}), DomainError);
}

TEST_CASE("closure examples") {
    auto reg = ComplementRegistry::defaults();
    CHECK(closure_check({3, {{q("1/2"), 1}}}, CoefficientSet::standard()));
    CHECK(closure_check({4, {{q("9/10"), 1}}}, registry_mmd(2, reg)));
    CHECK(closure_check({7, {}}, CoefficientSet::standard()));
    CHECK_THROWS_AS(closure_check({3, {{q("3/5"), 1}}}, CoefficientSet::standard()), DomainError);
}

TEST_CASE("one standard term gives 1 - 1/(mk)") {
    for (long m = 1; m <= 200; ++m)
        for (long k = 1; k <= 200; ++k) {
            Rational b = standard_coefficient(k);
            if (b == Rational(0)) {
                REQUIRE(different_coefficient({m, {}}) == standard_coefficient(m));
                continue;
            }
            auto a = different_coefficient({m, {{b, 1}}});
            REQUIRE(a == Rational(1) - Rational(1, m * k));
            REQUIRE(is_standard(a));
        }
}

TEST_CASE("monotone in b and in multiplicity") {
    for (long m = 1; m <= 12; ++m)
        for (long den = 2; den <= 12; ++den)
            for (long num = 1; num + 1 < den; ++num) {
                Rational b(num, den), b2(num + 1, den);
                for (long n = 1; n <= 2; ++n) {
                    Rational lo, hi;
                    try {
                        hi = different_coefficient({m, {{b2, n}}});
                    } catch (const DomainError&) {
                        continue;
                    }
                    lo = different_coefficient({m, {{b, n}}});
                    REQUIRE(lo <= hi);
                    if (n == 2) REQUIRE(different_coefficient({m, {{b, 1}}}) <= lo);
                }
            }
}

TEST_CASE("warnings for impossible multiplicities") {
    CHECK(different_warnings({3, {{q("1/2"), 1}}}).empty());
    CHECK(different_warnings({6, {{q("1/2"), 1}, {q("2/3"), 1}}}).size() == 1);
    CHECK(different_warnings({6, {{q("1/3"), 2}}}).empty());
}
