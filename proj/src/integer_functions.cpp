#include "dctlab/integer_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace dctlab {

namespace {

constexpr double kTieTolerance = 1e-9;

// Snap x onto the half-integer grid when within tolerance. Half-grid values
// are exactly representable, so floor/ceil on the snapped value are exact.
double snap_to_half_grid(double x) {
    const double r = std::round(2.0 * x) / 2.0;
    return std::abs(x - r) < kTieTolerance ? r : x;
}

double sign_of(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }

std::int64_t round_even_impl(double s) {
    // Ties go to the lower neighbour exactly when (2x-1)/4 is an integer,
    // i.e. x = 2k + 1/2; that lower neighbour is the even one.
    const double twice = 2.0 * s;
    if (twice == std::round(twice)) {
        const std::int64_t n = std::llround(twice);
        if (((n - 1) % 4 + 4) % 4 == 0) return std::llround(std::floor(s - 0.5));
    }
    return std::llround(std::floor(s + 0.5));
}

std::int64_t round_odd_impl(double s) {
    const double twice = 2.0 * s;
    if (twice == std::round(twice) && std::llround(twice) % 2 != 0) {
        // Exact half-integer: both neighbours are equally near, pick the odd
        // one; it is the upper neighbour iff (2x-1)/4 is an integer.
        const std::int64_t n = std::llround(twice);
        if (((n - 1) % 4 + 4) % 4 == 0) return std::llround(std::floor(s + 0.5));
        return std::llround(std::floor(s - 0.5));
    }
    return std::llround(std::floor(s + 0.5));
}

} // namespace

std::string_view to_string(IntFuncKind kind) {
    switch (kind) {
        case IntFuncKind::Floor: return "floor";
        case IntFuncKind::Ceil: return "ceil";
        case IntFuncKind::Trunc: return "trunc";
        case IntFuncKind::RoundAfz: return "round_afz";
        case IntFuncKind::RoundHu: return "round_hu";
        case IntFuncKind::RoundHd: return "round_hd";
        case IntFuncKind::RoundHafz: return "round_hafz";
        case IntFuncKind::RoundHtz: return "round_htz";
        case IntFuncKind::RoundEven: return "round_even";
        case IntFuncKind::RoundOdd: return "round_odd";
    }
    return "?";
}

std::optional<IntFuncKind> int_func_from_string(std::string_view name) {
    for (IntFuncKind k : kAllIntFuncKinds)
        if (to_string(k) == name) return k;
    return std::nullopt;
}

bool is_nearest_integer_kind(IntFuncKind kind) {
    switch (kind) {
        case IntFuncKind::RoundHu:
        case IntFuncKind::RoundHd:
        case IntFuncKind::RoundHafz:
        case IntFuncKind::RoundHtz:
        case IntFuncKind::RoundEven:
        case IntFuncKind::RoundOdd:
            return true;
        default:
            return false;
    }
}

std::int64_t apply(IntFuncKind kind, double x) {
    if (!std::isfinite(x)) throw std::domain_error("non-finite argument to integer function");
    const double s = snap_to_half_grid(x);
    switch (kind) {
        case IntFuncKind::Floor:
            return std::llround(std::floor(s));
        case IntFuncKind::Ceil:
            return std::llround(std::ceil(s));
        case IntFuncKind::Trunc:
            return std::llround(sign_of(s) * std::floor(std::abs(s)));
        case IntFuncKind::RoundAfz:
            return std::llround(sign_of(s) * std::ceil(std::abs(s)));
        case IntFuncKind::RoundHu:
            return std::llround(std::floor(s + 0.5));
        case IntFuncKind::RoundHd:
            return std::llround(std::ceil(s - 0.5));
        case IntFuncKind::RoundHafz:
            return std::llround(sign_of(s) * std::floor(std::abs(s) + 0.5));
        case IntFuncKind::RoundHtz:
            return std::llround(sign_of(s) * std::ceil(std::abs(s) - 0.5));
        case IntFuncKind::RoundEven:
            return round_even_impl(s);
        case IntFuncKind::RoundOdd:
            return round_odd_impl(s);
    }
    throw std::logic_error("unreachable");
}

IntMatrix8 apply_matrix(IntFuncKind kind, const Mat8d& m) {
    IntMatrix8 out;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) out.e[i][j] = apply(kind, m[i][j]);
    return out;
}

} // namespace dctlab
