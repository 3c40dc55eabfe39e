#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"

#include "dctlab/exact_dct.hpp"
#include "dctlab/integer_functions.hpp"
#include "dctlab/reference_data.hpp"

using namespace dctlab;

TEST_CASE("basic values") {
    CHECK(apply(IntFuncKind::Trunc, -1.7) == -1);
    CHECK(apply(IntFuncKind::RoundEven, 2.5) == 2);
    CHECK(apply(IntFuncKind::RoundEven, 3.5) == 4);
    CHECK(apply(IntFuncKind::RoundOdd, 2.5) == 3);
    CHECK(apply(IntFuncKind::RoundOdd, 3.5) == 3);
    CHECK(apply(IntFuncKind::RoundHu, -0.5) == 0);
    CHECK(apply(IntFuncKind::RoundHd, -0.5) == -1);
    CHECK(apply(IntFuncKind::RoundAfz, 0.2) == 1);
    CHECK(apply(IntFuncKind::RoundAfz, -0.2) == -1);
    CHECK(apply(IntFuncKind::RoundHafz, 0.5) == 1);
    CHECK(apply(IntFuncKind::RoundHafz, -0.5) == -1);
    CHECK(apply(IntFuncKind::RoundHtz, 0.5) == 0);
    CHECK(apply(IntFuncKind::RoundHtz, -0.5) == 0);
    CHECK(apply(IntFuncKind::Floor, -0.0001) == -1);
    CHECK(apply(IntFuncKind::Ceil, 0.0001) == 1);
}

TEST_CASE("ties are snapped within the documented tolerance") {
    CHECK(apply(IntFuncKind::RoundHu, 0.5 - 1e-12) == 1);
    CHECK(apply(IntFuncKind::RoundHu, 0.5 + 1e-12) == 1);
    CHECK(apply(IntFuncKind::Floor, 1.0 - 1e-12) == 1);
    CHECK(apply(IntFuncKind::Ceil, 1.0 + 1e-12) == 1);
    // outside the snap tolerance nothing is a tie
    CHECK(apply(IntFuncKind::RoundHu, 0.5 - 1e-7) == 0);
    CHECK(apply(IntFuncKind::Floor, 1.0 - 1e-7) == 0);
}

TEST_CASE("non-finite arguments raise domain errors") {
    CHECK_THROWS_AS(apply(IntFuncKind::Floor, std::numeric_limits<double>::infinity()),
                    std::domain_error);
    CHECK_THROWS_AS(apply(IntFuncKind::RoundEven, std::numeric_limits<double>::quiet_NaN()),
                    std::domain_error);
}

TEST_CASE("distance bounds and agreement off ties") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> dist(-9.0, 9.0);
    const std::array<IntFuncKind, 6> nearest = {IntFuncKind::RoundHu,   IntFuncKind::RoundHd,
                                                IntFuncKind::RoundHafz, IntFuncKind::RoundHtz,
                                                IntFuncKind::RoundEven, IntFuncKind::RoundOdd};
    for (int trial = 0; trial < 3000; ++trial) {
        const double x = dist(rng);
        for (IntFuncKind k : kAllIntFuncKinds) {
            const double diff = std::abs(static_cast<double>(apply(k, x)) - x);
            CHECK(diff <= 1.0);
        }
        for (IntFuncKind k : nearest)
            CHECK(std::abs(static_cast<double>(apply(k, x)) - x) <= 0.5 + 1e-9);

        const double frac = std::abs(x - std::floor(x) - 0.5);
        if (frac > 1e-6) {
            const std::int64_t first = apply(nearest[0], x);
            for (IntFuncKind k : nearest) CHECK(apply(k, x) == first);
        }
    }
}

TEST_CASE("symmetries") {
    std::mt19937 rng(1234);
    std::uniform_real_distribution<double> dist(-9.0, 9.0);
    const std::array<IntFuncKind, 6> odd_kinds = {IntFuncKind::Trunc,     IntFuncKind::RoundAfz,
                                                  IntFuncKind::RoundHafz, IntFuncKind::RoundHtz,
                                                  IntFuncKind::RoundEven, IntFuncKind::RoundOdd};
    for (int trial = 0; trial < 2000; ++trial) {
        double x = dist(rng);
        if (trial % 4 == 0) x = std::round(2.0 * x) / 2.0;  // hit ties often
        for (IntFuncKind k : odd_kinds) CHECK(apply(k, -x) == -apply(k, x));
        CHECK(apply(IntFuncKind::Floor, -x) == -apply(IntFuncKind::Ceil, x));
    }
}

TEST_CASE("entrywise matrix application") {
    const Mat8d& c = build_exact_dct();

    SUBCASE("integer-valued matrices are fixed points") {
        Mat8d m{};
        std::mt19937 rng(5);
        std::uniform_int_distribution<int> dist(-3, 3);
        for (auto& row : m)
            for (double& v : row) v = dist(rng);
        for (IntFuncKind k : kAllIntFuncKinds) {
            const IntMatrix8 out = apply_matrix(k, m);
            for (int i = 0; i < 8; ++i)
                for (int j = 0; j < 8; ++j) CHECK(out.e[i][j] == static_cast<std::int64_t>(m[i][j]));
        }
    }

    SUBCASE("floor of a sub-unit scaling zeroes positive entries") {
        Mat8d m{};
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) m[i][j] = 0.9 * c[i][j];
        const IntMatrix8 out = apply_matrix(IntFuncKind::Floor, m);
        // independent oracle: plain floor, no tie handling needed at 0.9
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) CHECK(out.e[i][j] == std::floor(m[i][j]));
        for (int j = 0; j < 8; ++j) CHECK(out.e[0][j] == 0);
    }

    SUBCASE("round-half-away-from-zero inside the T4 interval") {
        // 2.6742 lies in [1/g5, 3/g0)
        Mat8d m{};
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) m[i][j] = 2.6742 * c[i][j];
        const IntMatrix8 out = apply_matrix(IntFuncKind::RoundHafz, m);
        CHECK(out == find_reference("T4")->matrix);
    }
}
