#ifndef DCTLAB_MATRIX_LAB_HPP
#define DCTLAB_MATRIX_LAB_HPP

#include <array>
#include <optional>

#include "dctlab/matrices.hpp"

namespace dctlab {

/// Diagonal orthonormalization factor S = sqrt(diag(T*T^T)^-1), stored both
/// exactly (d^2 as rationals, for quantizer absorption) and as floats.
struct ScalingDiagonal {
    std::array<Rational, 8> d_squared;
    std::array<double, 8> d;
};

/// Column-scaled inverse T^-1 = E * diag(scale), with E integer. Succeeds for
/// the low-complexity inverses where every entry of E lies in {0,+-1,+-2,+-3}.
struct InverseFactorization {
    IntMatrix8 integer_part;
    std::array<Rational, 8> column_scale;
};

/// T * T^T in exact integer arithmetic.
IntMatrix8 gram(const IntMatrix8& t);

/// True iff gram(t) is exactly diagonal.
bool is_orthogonal(const IntMatrix8& t);

/// 1 - ||diag(M)||_F / ||M||_F. Throws std::domain_error for the zero matrix.
double deviation_from_diagonality(const IntMatrix8& m);

/// Exact integer test for delta(M) <= 1 - 2/sqrt(5), i.e.
/// 5 * ||diag||_F^2 >= 4 * ||M||_F^2. Avoids float ambiguity at the
/// threshold, which is attained exactly by the signed-DCT gram matrix.
bool within_deviation_threshold(const IntMatrix8& m);

std::int64_t determinant(const IntMatrix8& t);

/// Exact inverse via adjugate over determinant. Throws std::domain_error for
/// singular input.
RationalMatrix8 exact_inverse(const IntMatrix8& t);

/// Pulls out, per column, the least common denominator. Returns nullopt when
/// the resulting integer factor has an entry outside {0,+-1,+-2,+-3}.
std::optional<InverseFactorization> factor_inverse_lowcomplexity(const RationalMatrix8& tinv);

/// d[i] = 1/sqrt(gram(t)_ii). Throws std::domain_error when a diagonal entry
/// of the gram matrix vanishes (degenerate input).
ScalingDiagonal orthonormalize(const IntMatrix8& t);

/// True iff every entry lies in {0,+-1,+-2,+-3}.
bool entries_in_C(const IntMatrix8& t);

} // namespace dctlab

#endif
