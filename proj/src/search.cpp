#include "dctlab/search.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "dctlab/exact_dct.hpp"

namespace dctlab {

std::string AlphaInterval::text() const {
    if (lo.l == hi.l && lo.k == hi.k && lo_closed && hi_closed) return "{" + lo.text() + "}";
    std::string s;
    s += lo_closed ? '[' : '(';
    s += lo.text();
    s += ", ";
    s += hi.text();
    s += hi_closed ? ']' : ')';
    return s;
}

std::string_view to_string(Classification c) {
    switch (c) {
        case Classification::Orthogonal: return "orthogonal";
        case Classification::NearOrthogonal: return "near_orthogonal";
        case Classification::Degenerate: return "degenerate";
        case Classification::Rejected: return "rejected";
        case Classification::ExactBaseline: return "exact";
    }
    return "?";
}

std::optional<Classification> classification_from_string(std::string_view s) {
    for (Classification c : {Classification::Orthogonal, Classification::NearOrthogonal,
                             Classification::Degenerate, Classification::Rejected,
                             Classification::ExactBaseline})
        if (to_string(c) == s) return c;
    return std::nullopt;
}

AlphaInterval alpha_range(IntFuncKind kind) {
    AlphaInterval r;
    r.lo_closed = r.hi_closed = true;
    switch (kind) {
        case IntFuncKind::Ceil:
        case IntFuncKind::RoundAfz:
            r.lo = {0, 0};
            r.hi = {6, 0};
            break;
        case IntFuncKind::Floor:
        case IntFuncKind::Trunc:
            r.lo = {2, 0};
            r.hi = {8, 0};
            break;
        default:
            r.lo = {1, 0};
            r.hi = {7, 0};
            break;
    }
    return r;
}

namespace {

constexpr double kMergeTolerance = 1e-9;

IntMatrix8 candidate_at(IntFuncKind kind, double alpha) {
    const Mat8d& c = build_exact_dct();
    Mat8d scaled{};
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) scaled[i][j] = alpha * c[i][j];
    return apply_matrix(kind, scaled);
}

Classification classify(const IntMatrix8& t) {
    if (!entries_in_C(t)) return Classification::Rejected;
    if (t.has_null_row()) return Classification::Degenerate;
    const IntMatrix8 g = gram(t);
    if (g.is_diagonal()) return Classification::Orthogonal;
    if (within_deviation_threshold(g)) {
        if (determinant(t) != 0) {
            if (factor_inverse_lowcomplexity(exact_inverse(t)).has_value())
                return Classification::NearOrthogonal;
        }
    }
    return Classification::Rejected;
}

} // namespace

std::vector<Breakpoint> breakpoints(IntFuncKind kind) {
    const double hi = alpha_range(kind).hi.value();
    std::vector<Breakpoint> pts;
    pts.push_back({0.0, {0, 0}});
    for (int k = 0; k < 7; ++k) {
        for (int l = 1;; ++l) {
            const double v = static_cast<double>(l) / gamma_k(k);
            if (v > hi + kMergeTolerance) break;
            pts.push_back({v, {l, k}});
        }
    }
    std::sort(pts.begin(), pts.end(),
              [](const Breakpoint& a, const Breakpoint& b) { return a.value < b.value; });
    std::vector<Breakpoint> merged;
    for (const Breakpoint& p : pts) {
        if (!merged.empty() && std::abs(p.value - merged.back().value) < kMergeTolerance) continue;
        merged.push_back(p);
    }
    return merged;
}

std::vector<SweepSegment> sweep_segments(IntFuncKind kind) {
    const std::vector<Breakpoint> bps = breakpoints(kind);
    struct RawSegment {
        AlphaInterval interval;
        IntMatrix8 matrix;
    };
    std::vector<RawSegment> raw;
    for (std::size_t i = 0; i < bps.size(); ++i) {
        if (bps[i].value > 0.0)
            raw.push_back({{bps[i].symbol, bps[i].symbol, true, true},
                           candidate_at(kind, bps[i].value)});
        if (i + 1 < bps.size()) {
            const double mid = 0.5 * (bps[i].value + bps[i + 1].value);
            raw.push_back({{bps[i].symbol, bps[i + 1].symbol, false, false},
                           candidate_at(kind, mid)});
        }
    }

    // merge adjacent segments carrying the same candidate into maximal intervals
    std::vector<SweepSegment> out;
    for (const RawSegment& r : raw) {
        if (!out.empty() && out.back().matrix == r.matrix) {
            out.back().interval.hi = r.interval.hi;
            out.back().interval.hi_closed = r.interval.hi_closed;
            continue;
        }
        SweepSegment s;
        s.interval = r.interval;
        s.matrix = r.matrix;
        s.classification = r.matrix.is_zero() ? Classification::Rejected : classify(r.matrix);
        s.entries_in_domain = entries_in_C(r.matrix);
        s.dropped = r.matrix.is_zero() ||
                    (s.classification == Classification::Rejected &&
                     !(r.matrix == reference_rejected().matrix));
        out.push_back(std::move(s));
    }
    return out;
}

namespace {

ApproximationRecord make_record(const IntMatrix8& m, Classification cls, IntFuncKind kind,
                                const AlphaInterval& interval) {
    ApproximationRecord rec;
    rec.matrix = m;
    rec.classification = cls;
    rec.provenance.push_back({kind, interval});
    const IntMatrix8 g = gram(m);
    for (int i = 0; i < 8; ++i) rec.diag_gram[i] = g.e[i][i];
    rec.delta = deviation_from_diagonality(g);
    if (cls == Classification::Orthogonal || cls == Classification::NearOrthogonal) {
        rec.scaling = orthonormalize(m);
        if (cls == Classification::NearOrthogonal)
            rec.inverse = factor_inverse_lowcomplexity(exact_inverse(m));
    }
    return rec;
}

void assign_names(std::vector<ApproximationRecord>& records, int& unnamed_counter) {
    for (ApproximationRecord& rec : records) {
        if (!rec.name.empty()) continue;
        bool matched = false;
        for (const ReferenceTransform& ref : reference_transforms()) {
            if (ref.matrix == rec.matrix) {
                rec.name = ref.name;
                rec.alias = ref.alias;
                rec.plan_constants = ref.plan_m;
                matched = true;
                break;
            }
        }
        if (matched) continue;
        if (rec.matrix == reference_rejected().matrix) {
            rec.name = reference_rejected().name;
            continue;
        }
        for (const ReferenceDegenerate& ref : reference_degenerates()) {
            if (ref.matrix == rec.matrix) {
                rec.name = ref.name;  // Td3/Td4 share a matrix; first name wins
                matched = true;
                break;
            }
        }
        if (!matched) rec.name = "Td" + std::to_string(8 + unnamed_counter++);
    }
}

} // namespace

std::vector<ApproximationRecord> sweep(IntFuncKind kind) {
    std::vector<ApproximationRecord> records;
    for (const SweepSegment& seg : sweep_segments(kind)) {
        if (seg.dropped) continue;
        records.push_back(make_record(seg.matrix, seg.classification, kind, seg.interval));
    }
    int unnamed = 0;
    assign_names(records, unnamed);
    return records;
}

namespace {

void link_equivalent_pairs(std::vector<ApproximationRecord>& catalog) {
    // Two candidates define the same normalized transform when their rows are
    // positively proportional; checked exactly on the integer entries.
    auto rows_proportional = [](const IntMatrix8& a, const IntMatrix8& b) {
        for (int i = 0; i < 8; ++i) {
            std::int64_t pa = 0, pb = 0;
            for (int j = 0; j < 8; ++j)
                if (a.e[i][j] != 0 || b.e[i][j] != 0) {
                    pa = a.e[i][j];
                    pb = b.e[i][j];
                    break;
                }
            if ((pa == 0) != (pb == 0)) return false;
            if (pa * pb <= 0 && pa != 0) return false;
            for (int j = 0; j < 8; ++j)
                if (a.e[i][j] * pb != b.e[i][j] * pa) return false;
        }
        return true;
    };
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        for (std::size_t j = i + 1; j < catalog.size(); ++j) {
            ApproximationRecord& a = catalog[i];
            ApproximationRecord& b = catalog[j];
            if (!a.usable_in_codec() || !b.usable_in_codec()) continue;
            if (a.is_exact_dct() || b.is_exact_dct()) continue;
            if (a.matrix == b.matrix) continue;
            if (rows_proportional(a.matrix, b.matrix)) {
                if (!b.equivalent_to) b.equivalent_to = a.name;
                if (!a.equivalent_to) a.equivalent_to = b.name;
            }
        }
    }
}

int classification_rank(Classification c) {
    switch (c) {
        case Classification::ExactBaseline: return 0;
        case Classification::Orthogonal: return 1;
        case Classification::NearOrthogonal: return 2;
        case Classification::Rejected: return 3;
        case Classification::Degenerate: return 4;
    }
    return 5;
}

} // namespace

std::vector<ApproximationRecord> full_catalog() {
    std::vector<ApproximationRecord> catalog;

    ApproximationRecord exact;
    exact.name = "DCT";
    exact.classification = Classification::ExactBaseline;
    catalog.push_back(std::move(exact));

    // merge across kinds by matrix identity, keeping every provenance
    for (IntFuncKind kind : kAllIntFuncKinds) {
        for (const SweepSegment& seg : sweep_segments(kind)) {
            if (seg.dropped) continue;
            auto it = std::find_if(catalog.begin(), catalog.end(), [&](const ApproximationRecord& r) {
                return !r.is_exact_dct() && r.matrix == seg.matrix;
            });
            if (it != catalog.end()) {
                it->provenance.push_back({kind, seg.interval});
            } else {
                catalog.push_back(make_record(seg.matrix, seg.classification, kind, seg.interval));
            }
        }
    }

    int unnamed = 0;
    assign_names(catalog, unnamed);
    link_equivalent_pairs(catalog);

    std::stable_sort(catalog.begin(), catalog.end(),
                     [](const ApproximationRecord& a, const ApproximationRecord& b) {
                         const int ra = classification_rank(a.classification);
                         const int rb = classification_rank(b.classification);
                         if (ra != rb) return ra < rb;
                         return a.name < b.name;
                     });
    return catalog;
}

const ApproximationRecord* find_record(const std::vector<ApproximationRecord>& catalog,
                                       const std::string& name_or_alias) {
    for (const ApproximationRecord& r : catalog)
        if (r.name == name_or_alias || (r.alias && *r.alias == name_or_alias)) return &r;
    return nullptr;
}

} // namespace dctlab
