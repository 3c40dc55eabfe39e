#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "doctest.h"

#include "dctlab/exact_dct.hpp"
#include "dctlab/search.hpp"

using namespace dctlab;

namespace {

IntMatrix8 candidate(IntFuncKind kind, double alpha) {
    const Mat8d& c = build_exact_dct();
    Mat8d scaled{};
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) scaled[i][j] = alpha * c[i][j];
    return apply_matrix(kind, scaled);
}

std::set<std::string> names_of(const std::vector<ApproximationRecord>& records,
                               Classification cls) {
    std::set<std::string> out;
    for (const ApproximationRecord& r : records)
        if (r.classification == cls) out.insert(r.name);
    return out;
}

} // namespace

TEST_CASE("admissible ranges") {
    CHECK(alpha_range(IntFuncKind::Ceil).lo.value() == 0.0);
    CHECK(alpha_range(IntFuncKind::Ceil).hi.value() == doctest::Approx(6.0 / gamma_k(0)));
    CHECK(alpha_range(IntFuncKind::RoundAfz).hi.value() == doctest::Approx(6.0 / gamma_k(0)));
    CHECK(alpha_range(IntFuncKind::Trunc).lo.value() == doctest::Approx(2.0 / gamma_k(0)));
    CHECK(alpha_range(IntFuncKind::Trunc).hi.value() == doctest::Approx(8.0 / gamma_k(0)));
    CHECK(alpha_range(IntFuncKind::Floor).lo.value() == doctest::Approx(2.0 / gamma_k(0)));
    CHECK(alpha_range(IntFuncKind::RoundHafz).lo.value() == doctest::Approx(1.0 / gamma_k(0)));
    CHECK(alpha_range(IntFuncKind::RoundHafz).hi.value() == doctest::Approx(7.0 / gamma_k(0)));
}

TEST_CASE("breakpoints are sorted, merged, and cover the crossing set") {
    for (IntFuncKind kind : kAllIntFuncKinds) {
        const auto bps = breakpoints(kind);
        REQUIRE(!bps.empty());
        CHECK(bps.front().value == 0.0);
        for (std::size_t i = 1; i < bps.size(); ++i)
            CHECK(bps[i].value > bps[i - 1].value + 1e-9);
        // every l/gamma_k in range appears
        const double hi = alpha_range(kind).hi.value();
        for (int k = 0; k < 7; ++k)
            for (int l = 1; l / gamma_k(k) <= hi + 1e-12; ++l) {
                const double v = l / gamma_k(k);
                const bool present = std::any_of(bps.begin(), bps.end(), [&](const Breakpoint& b) {
                    return std::abs(b.value - v) < 1e-9;
                });
                CHECK(present);
            }
    }
    // the truncation set includes the documented interval endpoints
    const auto bps = breakpoints(IntFuncKind::Trunc);
    for (double v : {2.0 / gamma_k(0), 2.0 / gamma_k(1), 4.0 / gamma_k(0), 2.0 / gamma_k(4)})
        CHECK(std::any_of(bps.begin(), bps.end(),
                          [&](const Breakpoint& b) { return std::abs(b.value - v) < 1e-9; }));
    // nearest-integer sets include the odd crossings
    const auto nbps = breakpoints(IntFuncKind::RoundHafz);
    for (double v : {3.0 / gamma_k(0), 3.0 / gamma_k(1), 3.0 / gamma_k(2)})
        CHECK(std::any_of(nbps.begin(), nbps.end(),
                          [&](const Breakpoint& b) { return std::abs(b.value - v) < 1e-9; }));
}

TEST_CASE("per-function sweeps reproduce the expected sets") {
    SUBCASE("truncation") {
        const auto records = sweep(IntFuncKind::Trunc);
        CHECK(names_of(records, Classification::Orthogonal) ==
              std::set<std::string>{"T0", "T1", "T2", "T3"});
        CHECK(names_of(records, Classification::NearOrthogonal) == std::set<std::string>{"T~1"});
        const auto degs = names_of(records, Classification::Degenerate);
        CHECK(degs.count("Td3"));  // merged with Td4 under one name
        CHECK(degs.count("Td5"));
        CHECK(degs.count("Td6"));
    }
    SUBCASE("floor yields no accepted records, three published degenerates") {
        const auto records = sweep(IntFuncKind::Floor);
        CHECK(names_of(records, Classification::Orthogonal).empty());
        CHECK(names_of(records, Classification::NearOrthogonal).empty());
        const auto degs = names_of(records, Classification::Degenerate);
        CHECK(degs.count("Td0"));
        CHECK(degs.count("Td1"));
        CHECK(degs.count("Td2"));
    }
    SUBCASE("ceil yields only the rejected candidate") {
        const auto records = sweep(IntFuncKind::Ceil);
        REQUIRE(records.size() == 1);
        CHECK(records[0].name == "T~0");
        CHECK(records[0].classification == Classification::Rejected);
        CHECK(std::abs(records[0].delta - 0.4548) < 5e-5);
    }
    SUBCASE("round-away-from-zero yields the three non-orthogonal transforms") {
        const auto records = sweep(IntFuncKind::RoundAfz);
        CHECK(names_of(records, Classification::NearOrthogonal) ==
              std::set<std::string>{"T~2", "T~3", "T~4"});
        CHECK(names_of(records, Classification::Orthogonal).empty());
    }
    SUBCASE("round-half-away-from-zero intervals") {
        const auto records = sweep(IntFuncKind::RoundHafz);
        CHECK(names_of(records, Classification::Orthogonal) ==
              std::set<std::string>{"T0", "T4", "T5", "T6", "T7"});
        const ApproximationRecord* t6 = find_record(records, "T6");
        REQUIRE(t6);
        REQUIRE(t6->provenance.size() == 1);
        CHECK(t6->provenance[0].interval.lo.value() == doctest::Approx(3.0 / gamma_k(1)));
        CHECK(t6->provenance[0].interval.hi.value() == doctest::Approx(3.0 / gamma_k(2)));
    }
}

TEST_CASE("segment coverage of the admissible range") {
    for (IntFuncKind kind : kAllIntFuncKinds) {
        const auto segs = sweep_segments(kind);
        const AlphaInterval range = alpha_range(kind);
        // segments tile [0, hi] with no gaps: each begins where the previous ended
        REQUIRE(!segs.empty());
        double cursor = 0.0;
        for (const SweepSegment& s : segs) {
            CHECK(s.interval.lo.value() == doctest::Approx(cursor).epsilon(1e-12));
            cursor = s.interval.hi.value();
        }
        CHECK(cursor == doctest::Approx(range.hi.value()));
    }
}

TEST_CASE("interval correctness fuzz") {
    std::mt19937 rng(505);
    for (IntFuncKind kind : kAllIntFuncKinds) {
        for (const ApproximationRecord& rec : sweep(kind)) {
            for (const Provenance& p : rec.provenance) {
                const double lo = p.interval.lo.value();
                const double hi = p.interval.hi.value();
                if (hi - lo > 1e-7) {
                    std::uniform_real_distribution<double> dist(lo + 1e-7, hi - 1e-7);
                    for (int trial = 0; trial < 5; ++trial)
                        CHECK(candidate(kind, dist(rng)) == rec.matrix);
                }
                // just outside an open endpoint the candidate differs
                if (!p.interval.lo_closed && lo > 0.0)
                    CHECK_FALSE(candidate(kind, lo - 1e-7) == rec.matrix);
                if (!p.interval.hi_closed)
                    CHECK_FALSE(candidate(kind, hi + 1e-7) == rec.matrix);
                // a closed endpoint evaluates to the recorded matrix
                if (p.interval.lo_closed && lo > 0.0) CHECK(candidate(kind, lo) == rec.matrix);
                if (p.interval.hi_closed) CHECK(candidate(kind, hi) == rec.matrix);
            }
        }
    }
}

TEST_CASE("full catalog contents") {
    const auto catalog = full_catalog();

    CHECK(names_of(catalog, Classification::Orthogonal) ==
          std::set<std::string>{"T0", "T1", "T2", "T3", "T4", "T5", "T6", "T7"});
    CHECK(names_of(catalog, Classification::NearOrthogonal) ==
          std::set<std::string>{"T~1", "T~2", "T~3", "T~4"});
    CHECK(names_of(catalog, Classification::Rejected) == std::set<std::string>{"T~0"});
    CHECK(names_of(catalog, Classification::ExactBaseline) == std::set<std::string>{"DCT"});

    const auto degs = names_of(catalog, Classification::Degenerate);
    for (const char* name : {"Td0", "Td1", "Td2", "Td3", "Td5", "Td6", "Td7"})
        CHECK(degs.count(name));

    SUBCASE("aliases resolve") {
        CHECK(find_record(catalog, "SDCT") == find_record(catalog, "T~2"));
        CHECK(find_record(catalog, "RDCT") == find_record(catalog, "T4"));
        CHECK(find_record(catalog, "nope") == nullptr);
    }

    SUBCASE("T4 provenance spans the six nearest-integer kinds") {
        const ApproximationRecord* t4 = find_record(catalog, "T4");
        REQUIRE(t4);
        std::set<IntFuncKind> fns;
        for (const Provenance& p : t4->provenance) fns.insert(p.function);
        CHECK(fns == std::set<IntFuncKind>{IntFuncKind::RoundHu, IntFuncKind::RoundHd,
                                           IntFuncKind::RoundHafz, IntFuncKind::RoundHtz,
                                           IntFuncKind::RoundEven, IntFuncKind::RoundOdd});
        bool has_hu_interval = false;
        for (const Provenance& p : t4->provenance)
            if (p.function == IntFuncKind::RoundHu &&
                std::abs(p.interval.lo.value() - 1.0 / gamma_k(5)) < 1e-9 &&
                std::abs(p.interval.hi.value() - 3.0 / gamma_k(0)) < 1e-9)
                has_hu_interval = true;
        CHECK(has_hu_interval);
    }

    SUBCASE("SDCT provenance") {
        const ApproximationRecord* sdct = find_record(catalog, "SDCT");
        REQUIRE(sdct);
        REQUIRE(sdct->provenance.size() == 1);
        CHECK(sdct->provenance[0].function == IntFuncKind::RoundAfz);
        CHECK(sdct->provenance[0].interval.lo.value() == 0.0);
        CHECK(sdct->provenance[0].interval.hi.value() == doctest::Approx(2.0 / gamma_k(0)));
    }

    SUBCASE("equivalent pairs are linked") {
        const ApproximationRecord* t3 = find_record(catalog, "T~3");
        const ApproximationRecord* t4 = find_record(catalog, "T~4");
        REQUIRE(t3);
        REQUIRE(t4);
        REQUIRE(t4->equivalent_to.has_value());
        CHECK(*t4->equivalent_to == "T~3");
        REQUIRE(t3->equivalent_to.has_value());
        CHECK(*t3->equivalent_to == "T~4");

        // a consequence of the corrected T1: rows 2 and 6 of T2 are twice
        // T1's, so the two normalized transforms coincide as well
        const ApproximationRecord* t1o = find_record(catalog, "T1");
        const ApproximationRecord* t2o = find_record(catalog, "T2");
        REQUIRE(t1o->equivalent_to.has_value());
        CHECK(*t1o->equivalent_to == "T2");
        REQUIRE(t2o->equivalent_to.has_value());
        CHECK(*t2o->equivalent_to == "T1");
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                CHECK(std::abs(t1o->scaling->d[i] * t1o->matrix.e[i][j] -
                               t2o->scaling->d[i] * t2o->matrix.e[i][j]) < 1e-12);
    }

    SUBCASE("deviation ordering across the non-orthogonal candidates") {
        const double d0 = find_record(catalog, "T~0")->delta;
        const double d1 = find_record(catalog, "T~1")->delta;
        const double d2 = find_record(catalog, "T~2")->delta;
        const double d3 = find_record(catalog, "T~3")->delta;
        const double d4 = find_record(catalog, "T~4")->delta;
        CHECK(d4 < d3);
        CHECK(d3 < d1);
        CHECK(d1 < d2);
        CHECK(d2 < d0);
    }

    SUBCASE("all extra records are degenerate with a null row") {
        const std::set<std::string> named = {"DCT", "T0", "T1", "T2", "T3", "T4", "T5", "T6",
                                             "T7", "T~0", "T~1", "T~2", "T~3", "T~4", "Td0",
                                             "Td1", "Td2", "Td3", "Td4", "Td5", "Td6", "Td7"};
        for (const ApproximationRecord& r : catalog) {
            if (named.count(r.name)) continue;
            CHECK(r.classification == Classification::Degenerate);
            CHECK(r.matrix.has_null_row());
        }
    }
}
