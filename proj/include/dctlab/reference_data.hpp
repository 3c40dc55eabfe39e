#ifndef DCTLAB_REFERENCE_DATA_HPP
#define DCTLAB_REFERENCE_DATA_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dctlab/integer_functions.hpp"
#include "dctlab/matrices.hpp"

namespace dctlab {

struct ExpectedOpCounts {
    int multiplications = 0;
    int additions = 0;
    int shifts = 0;
    bool operator==(const ExpectedOpCounts&) const = default;
};

/// A symbolic interval endpoint l / gamma_k (l = 0 encodes the origin).
struct AlphaSymbol {
    int l = 0;
    int k = 0;
    double value() const;
    std::string text() const;  // "2/g0", "0"
};

/// Built-in registry entry for one of the named accepted transforms.
///
/// The registry is the ground truth the search output is checked against and
/// the source of aliases, fast-algorithm constants and expected complexity.
/// Two entries deviate knowingly from their original published displays:
///  - T1: the published matrix has rows 2 and 6 interchanged (one negated),
///    which no entrywise integer mapping of a scaled DCT can produce (it
///    would violate monotonicity of the entry map). The registry stores the
///    matrix the truncation sweep actually yields on (4/g0, 4/g1); the fast
///    constants change from (2,0,1,1,1,1,0) to (2,1,1,1,1,0,0) accordingly.
///    Gram diagonal, orthogonality and operation counts are unchanged.
///  - The degenerate pair Td3/Td4 is a single matrix (the two published
///    displays differ only by a dropped entry in one row) and Td6 is the
///    Td-pattern with rows 0 and 4 null, not the full T~1 matrix.
struct ReferenceTransform {
    std::string name;
    std::optional<std::string> alias;
    IntMatrix8 matrix;
    bool orthogonal = false;
    std::array<int, 7> plan_m{};
    std::array<std::int64_t, 8> diag_gram{};
    double delta = 0.0;  // published 4-decimal value; 0 for orthogonal
    ExpectedOpCounts counts;
    std::vector<IntFuncKind> source_functions;
    IntFuncKind primary_function = IntFuncKind::Trunc;
    AlphaSymbol interval_lo, interval_hi;  // under primary_function
};

const std::vector<ReferenceTransform>& reference_transforms();  // the 12 accepted

/// The rejected ceiling candidate (kept in catalogs for documentation).
struct ReferenceRejected {
    std::string name;
    IntMatrix8 matrix;
    double delta;
};
const ReferenceRejected& reference_rejected();

struct ReferenceDegenerate {
    std::string name;
    IntMatrix8 matrix;
    IntFuncKind primary_function;
    AlphaSymbol interval_lo, interval_hi;  // point when lo == hi
};
const std::vector<ReferenceDegenerate>& reference_degenerates();  // Td0..Td7

/// Exact inverse displays for the four non-orthogonal transforms:
/// T^-1 = integer_part * diag(column_scale).
struct ReferenceInverse {
    std::string name;
    IntMatrix8 integer_part;
    std::array<Rational, 8> column_scale;
};
const std::vector<ReferenceInverse>& reference_inverses();

const ReferenceTransform* find_reference(const std::string& name);

} // namespace dctlab

#endif
