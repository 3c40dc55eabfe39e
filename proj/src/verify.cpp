#include "dctlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "dctlab/fast_transform.hpp"
#include "dctlab/matrix_lab.hpp"

namespace dctlab {

namespace {

void check(std::vector<CheckResult>& out, const std::string& name, bool ok,
           const std::string& detail = "") {
    out.push_back({name, ok, ok ? "" : detail});
}

std::string interval_set(const ApproximationRecord& rec, IntFuncKind fn) {
    std::string s;
    for (const Provenance& p : rec.provenance)
        if (p.function == fn) s += p.interval.text();
    return s;
}

} // namespace

std::vector<CheckResult> run_reference_verification(const std::vector<ApproximationRecord>& catalog) {
    std::vector<CheckResult> results;

    // accepted set: the twelve named transforms, entry-exact, with the
    // expected producing functions and interval endpoints
    int orthogonal_count = 0, near_count = 0;
    for (const ApproximationRecord& r : catalog) {
        if (r.classification == Classification::Orthogonal) ++orthogonal_count;
        if (r.classification == Classification::NearOrthogonal) ++near_count;
    }
    check(results, "accepted counts (8 orthogonal + 4 near-orthogonal)",
          orthogonal_count == 8 && near_count == 4,
          "got " + std::to_string(orthogonal_count) + " orthogonal, " + std::to_string(near_count) +
              " near-orthogonal");

    for (const ReferenceTransform& ref : reference_transforms()) {
        const ApproximationRecord* rec = find_record(catalog, ref.name);
        if (!rec) {
            check(results, "catalog has " + ref.name, false, "record missing");
            continue;
        }
        check(results, ref.name + " matrix entry-exact", rec->matrix == ref.matrix);
        check(results, ref.name + " classification",
              rec->classification ==
                  (ref.orthogonal ? Classification::Orthogonal : Classification::NearOrthogonal));

        std::vector<IntFuncKind> got;
        for (const Provenance& p : rec->provenance)
            if (std::find(got.begin(), got.end(), p.function) == got.end())
                got.push_back(p.function);
        std::vector<IntFuncKind> want = ref.source_functions;
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        std::string got_s, want_s;
        for (IntFuncKind k : got) got_s += std::string(to_string(k)) + " ";
        for (IntFuncKind k : want) want_s += std::string(to_string(k)) + " ";
        check(results, ref.name + " source functions", got == want,
              "got {" + got_s + "} want {" + want_s + "}");

        bool interval_ok = false;
        for (const Provenance& p : rec->provenance) {
            if (p.function != ref.primary_function) continue;
            if (std::abs(p.interval.lo.value() - ref.interval_lo.value()) < 1e-9 &&
                std::abs(p.interval.hi.value() - ref.interval_hi.value()) < 1e-9)
                interval_ok = true;
        }
        check(results, ref.name + " interval endpoints", interval_ok,
              "under " + std::string(to_string(ref.primary_function)) + ": " +
                  interval_set(*rec, ref.primary_function) + " want [" + ref.interval_lo.text() +
                  ", " + ref.interval_hi.text() + "]");

        // gram diagonal
        check(results, ref.name + " gram diagonal", rec->diag_gram == ref.diag_gram);

        // deviation against the published 4-decimal value
        if (!ref.orthogonal)
            check(results, ref.name + " deviation value", std::abs(rec->delta - ref.delta) < 5e-5,
                  "got " + std::to_string(rec->delta));
    }

    // rejected ceiling candidate is retained and classified rejected
    {
        const ApproximationRecord* rec = find_record(catalog, reference_rejected().name);
        const bool ok = rec && rec->matrix == reference_rejected().matrix &&
                        rec->classification == Classification::Rejected &&
                        std::abs(rec->delta - reference_rejected().delta) < 5e-5;
        check(results, "T~0 retained, rejected by deviation", ok);
    }

    // threshold is met exactly by the signed-DCT gram matrix
    {
        const ApproximationRecord* sdct = find_record(catalog, "SDCT");
        check(results, "SDCT meets deviation threshold (exact integer test)",
              sdct && within_deviation_threshold(gram(sdct->matrix)));
    }

    // degenerate displays
    for (const ReferenceDegenerate& ref : reference_degenerates()) {
        const ApproximationRecord* rec = nullptr;
        for (const ApproximationRecord& r : catalog)
            if (!r.is_exact_dct() && r.matrix == ref.matrix) {
                rec = &r;
                break;
            }
        if (!rec) {
            check(results, "degenerate " + ref.name + " present", false, "matrix missing");
            continue;
        }
        check(results, "degenerate " + ref.name + " present",
              rec->classification == Classification::Degenerate);
        bool interval_ok = false;
        for (const Provenance& p : rec->provenance) {
            if (p.function != ref.primary_function) continue;
            const bool point = ref.interval_lo.l == ref.interval_hi.l &&
                               ref.interval_lo.k == ref.interval_hi.k;
            if (point) {
                // the published point may have merged into a wider interval
                if (p.interval.lo.value() - 1e-9 <= ref.interval_lo.value() &&
                    ref.interval_lo.value() <= p.interval.hi.value() + 1e-9)
                    interval_ok = true;
            } else if (std::abs(p.interval.lo.value() - ref.interval_lo.value()) < 1e-9 &&
                       std::abs(p.interval.hi.value() - ref.interval_hi.value()) < 1e-9) {
                interval_ok = true;
            }
        }
        check(results, "degenerate " + ref.name + " interval", interval_ok);
    }

    // exact inverses of the non-orthogonal transforms
    for (const ReferenceInverse& ref : reference_inverses()) {
        const ApproximationRecord* rec = find_record(catalog, ref.name);
        if (!rec || !rec->inverse) {
            check(results, ref.name + " inverse factorization", false, "missing");
            continue;
        }
        check(results, ref.name + " inverse factorization",
              rec->inverse->integer_part == ref.integer_part &&
                  rec->inverse->column_scale == ref.column_scale);
        // and the factorization actually inverts the matrix, exactly
        RationalMatrix8 inv;
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                inv.e[i][j] = Rational(rec->inverse->integer_part.e[i][j]) * rec->inverse->column_scale[j];
        check(results, ref.name + " inverse identity", rat_mul(inv, rec->matrix) == RationalMatrix8::identity());
    }

    // T~4^-1 = T~3^-1 * diag(1/2,1,1,1,1/2,1,1,1), exactly
    {
        const ApproximationRecord* t3 = find_record(catalog, "T~3");
        const ApproximationRecord* t4 = find_record(catalog, "T~4");
        bool ok = t3 && t4 && t3->inverse && t4->inverse;
        if (ok) {
            const std::array<Rational, 8> halves = {Rational(1, 2), 1, 1, 1, Rational(1, 2), 1, 1, 1};
            RationalMatrix8 lhs, rhs;
            for (int i = 0; i < 8; ++i)
                for (int j = 0; j < 8; ++j) {
                    lhs.e[i][j] = Rational(t4->inverse->integer_part.e[i][j]) * t4->inverse->column_scale[j];
                    rhs.e[i][j] = Rational(t3->inverse->integer_part.e[i][j]) * t3->inverse->column_scale[j] * halves[j];
                }
            ok = lhs == rhs;
        }
        check(results, "T~4 inverse equals T~3 inverse times diag(1/2,1,1,1,1/2,1,1,1)", ok);
    }

    // fast algorithm: factorization identity, schedule agreement, counts
    std::mt19937 rng(20250809);
    std::uniform_int_distribution<std::int64_t> dist(-256, 255);
    for (const ReferenceTransform& ref : reference_transforms()) {
        const ApproximationRecord* rec = find_record(catalog, ref.name);
        if (!rec || !rec->plan_constants) {
            check(results, ref.name + " fast constants", false, "missing plan constants");
            continue;
        }
        check(results, ref.name + " factorization identity",
              factorization_product(*rec->plan_constants) == rec->matrix);
        const TransformPlan plan = build_plan(*rec);
        check(results, ref.name + " schedule realizes matrix", plan_matrix(plan) == rec->matrix);
        check(results, ref.name + " no fallback schedule", !plan.used_fallback);
        bool agree = true;
        for (int trial = 0; trial < 100 && agree; ++trial) {
            std::array<std::int64_t, 8> x{};
            for (auto& v : x) v = dist(rng);
            const auto fast = apply_plan(plan, x);
            for (int i = 0; i < 8; ++i) {
                std::int64_t direct = 0;
                for (int j = 0; j < 8; ++j) direct += rec->matrix.e[i][j] * x[j];
                if (direct != fast[i]) agree = false;
            }
        }
        check(results, ref.name + " schedule matches direct product", agree);
        check(results, ref.name + " operation counts",
              plan.counts.multiplications == ref.counts.multiplications &&
                  plan.counts.additions == ref.counts.additions &&
                  plan.counts.shifts == ref.counts.shifts,
              "got " + std::to_string(plan.counts.multiplications) + "/" +
                  std::to_string(plan.counts.additions) + "/" + std::to_string(plan.counts.shifts));
    }

    // equivalent normalized transforms are linked and numerically identical
    {
        const ApproximationRecord* t3 = find_record(catalog, "T~3");
        const ApproximationRecord* t4 = find_record(catalog, "T~4");
        bool linked = t3 && t4 && t4->equivalent_to && *t4->equivalent_to == "T~3" &&
                      t3->equivalent_to && *t3->equivalent_to == "T~4";
        bool close = false;
        if (t3 && t4 && t3->scaling && t4->scaling) {
            double max_diff = 0.0;
            for (int i = 0; i < 8; ++i)
                for (int j = 0; j < 8; ++j)
                    max_diff = std::max(max_diff,
                                        std::abs(t3->scaling->d[i] * t3->matrix.e[i][j] -
                                                 t4->scaling->d[i] * t4->matrix.e[i][j]));
            close = max_diff < 1e-12;
        }
        check(results, "T~3/T~4 equivalence linked and normalized forms agree", linked && close);
    }

    return results;
}

std::vector<std::string> known_listing_deviations() {
    return {
        "T1: published display has rows 2 and 6 interchanged (one negated); no entrywise "
        "integer map of the scaled DCT can produce it. Catalog stores the truncation sweep "
        "result on (4/g0, 4/g1); fast constants correspondingly (2,1,1,1,1,0,0). Gram "
        "diagonal, orthogonality and operation counts are unaffected. A consequence: rows "
        "2 and 6 of T2 are exactly twice T1's, so T1 and T2 normalize to the same "
        "transform and produce identical compression curves (the catalog links them).",
        "T4: also listed once under round_afz at the single point 1/g0, where round_afz in "
        "fact yields the signed matrix T~2; T4 is produced by the six nearest-integer kinds.",
        "T~0: published range (0, 2/g4) exceeds the maximal interval; ceil yields this "
        "matrix exactly on (0, 2/g0).",
        "Td0: published range (2, 2/g0); the full maximal interval under floor is (0, 2/g0).",
        "Td3/Td4: the two published displays are one matrix (one display drops the +1 at row "
        "5, column 6); the sweep merges them over [2/g0, 2/g1).",
        "Td6: published display repeats the full T~1 matrix; on (2/g2, 2/g3) truncation "
        "nulls rows 0 and 4 (their entries scale with 1/sqrt(2)), which is what the catalog "
        "stores.",
        "Degenerate listings are not exhaustive: isolated boundary points of floor, "
        "round_hu and round_hd contribute additional null-row candidates (named Td8 "
        "upward).",
        "Interval endpoint open/closed status is determined empirically; published bracket "
        "conventions disagree with evaluation at several boundary points.",
    };
}

} // namespace dctlab
