#ifndef DCTLAB_SEARCH_HPP
#define DCTLAB_SEARCH_HPP

#include <optional>
#include <string>
#include <vector>

#include "dctlab/integer_functions.hpp"
#include "dctlab/matrices.hpp"
#include "dctlab/matrix_lab.hpp"
#include "dctlab/reference_data.hpp"

namespace dctlab {

/// Interval of expansion factors producing one candidate matrix. Endpoints
/// are kept symbolically as l/gamma_k pairs alongside their float values;
/// a point interval has lo == hi with both ends closed.
struct AlphaInterval {
    AlphaSymbol lo, hi;
    bool lo_closed = false;
    bool hi_closed = false;
    std::string text() const;
};

struct Breakpoint {
    double value;
    AlphaSymbol symbol;
};

enum class Classification { Orthogonal, NearOrthogonal, Degenerate, Rejected, ExactBaseline };

std::string_view to_string(Classification c);
std::optional<Classification> classification_from_string(std::string_view s);

struct Provenance {
    IntFuncKind function;
    AlphaInterval interval;
};

struct ApproximationRecord {
    std::string name;
    std::optional<std::string> alias;
    IntMatrix8 matrix;
    Classification classification = Classification::Rejected;
    std::vector<Provenance> provenance;
    double delta = 0.0;
    std::array<std::int64_t, 8> diag_gram{};
    std::optional<ScalingDiagonal> scaling;
    std::optional<InverseFactorization> inverse;
    std::optional<std::string> equivalent_to;
    std::optional<std::array<int, 7>> plan_constants;

    bool is_exact_dct() const { return classification == Classification::ExactBaseline; }
    bool usable_in_codec() const {
        return classification == Classification::Orthogonal ||
               classification == Classification::NearOrthogonal ||
               classification == Classification::ExactBaseline;
    }
};

/// Admissible expansion-factor range keeping the largest mapped entry in
/// {0..3}: ceil and round-away-from-zero get [0, 6/g0], floor and truncation
/// [2/g0, 8/g0], the six nearest-integer kinds [1/g0, 7/g0].
AlphaInterval alpha_range(IntFuncKind kind);

/// All alpha = l/gamma_k in [0, hi(alpha_range)] merged within 1e-9,
/// sorted ascending. Covers both the integer crossings (even l) and the
/// half-integer crossings (odd l), so the candidate matrix is constant on
/// every open interval between consecutive breakpoints for every kind.
std::vector<Breakpoint> breakpoints(IntFuncKind kind);

/// One evaluated sweep segment (point or open interval) with its candidate.
struct SweepSegment {
    AlphaInterval interval;
    IntMatrix8 matrix;
    Classification classification;
    bool entries_in_domain = false;
    bool dropped = false;  // zero matrix, or rejected without catalog value
};

/// Full segmentation of [0, hi] for one kind, adjacent equal candidates
/// merged into maximal intervals. Exposed for coverage/property checks.
std::vector<SweepSegment> sweep_segments(IntFuncKind kind);

/// Retained records of one kind: orthogonal, near-orthogonal, degenerate,
/// plus the documented rejected ceiling candidate.
std::vector<ApproximationRecord> sweep(IntFuncKind kind);

/// Union over all ten kinds, deduplicated by matrix identity with all
/// (function, interval) provenances retained, plus the exact-DCT
/// pseudo-record for baseline use. Names are resolved against the built-in
/// registry; unnamed degenerates get sequential Td8, Td9, ... names.
std::vector<ApproximationRecord> full_catalog();

/// Name or alias lookup (case-sensitive names, e.g. "T0", "T~2", "SDCT").
const ApproximationRecord* find_record(const std::vector<ApproximationRecord>& catalog,
                                       const std::string& name_or_alias);

} // namespace dctlab

#endif
