#ifndef DCTLAB_INTEGER_FUNCTIONS_HPP
#define DCTLAB_INTEGER_FUNCTIONS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "dctlab/matrices.hpp"

namespace dctlab {

/// The ten integer-valued rounding functions used to map scaled DCT entries
/// to integers. The six nearest-integer variants differ only at exact
/// half-integer arguments.
enum class IntFuncKind {
    Floor,
    Ceil,
    Trunc,
    RoundAfz,   // sign(x) * ceil(|x|)
    RoundHu,    // floor(x + 1/2)
    RoundHd,    // ceil(x - 1/2)
    RoundHafz,  // sign(x) * floor(|x| + 1/2)
    RoundHtz,   // sign(x) * ceil(|x| - 1/2)
    RoundEven,
    RoundOdd,
};

inline constexpr std::array<IntFuncKind, 10> kAllIntFuncKinds = {
    IntFuncKind::Floor,    IntFuncKind::Ceil,      IntFuncKind::Trunc,
    IntFuncKind::RoundAfz, IntFuncKind::RoundHu,   IntFuncKind::RoundHd,
    IntFuncKind::RoundHafz, IntFuncKind::RoundHtz, IntFuncKind::RoundEven,
    IntFuncKind::RoundOdd,
};

std::string_view to_string(IntFuncKind kind);
std::optional<IntFuncKind> int_func_from_string(std::string_view name);

/// True for the six kinds whose discontinuities sit at half-integers.
bool is_nearest_integer_kind(IntFuncKind kind);

/// Applies the integer function. Arguments within 1e-9 of a multiple of 1/2
/// are snapped onto the grid first, so that ties produced as alpha*gamma_k/2
/// are resolved exactly rather than by accumulated float error.
/// Throws std::domain_error for non-finite x.
std::int64_t apply(IntFuncKind kind, double x);

/// Entrywise application to an 8x8 real matrix.
IntMatrix8 apply_matrix(IntFuncKind kind, const Mat8d& m);

} // namespace dctlab

#endif
