#include "dctlab/matrix_lab.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace dctlab {

IntMatrix8 gram(const IntMatrix8& t) {
    return int_mul(t, t.transposed());
}

bool is_orthogonal(const IntMatrix8& t) {
    return gram(t).is_diagonal();
}

namespace {

void frobenius_sums(const IntMatrix8& m, __int128& diag_sq, __int128& total_sq) {
    diag_sq = 0;
    total_sq = 0;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            const __int128 sq = static_cast<__int128>(m.e[i][j]) * m.e[i][j];
            total_sq += sq;
            if (i == j) diag_sq += sq;
        }
}

} // namespace

double deviation_from_diagonality(const IntMatrix8& m) {
    __int128 diag_sq, total_sq;
    frobenius_sums(m, diag_sq, total_sq);
    if (total_sq == 0) throw std::domain_error("deviation from diagonality of zero matrix");
    return 1.0 - std::sqrt(static_cast<double>(diag_sq)) / std::sqrt(static_cast<double>(total_sq));
}

bool within_deviation_threshold(const IntMatrix8& m) {
    __int128 diag_sq, total_sq;
    frobenius_sums(m, diag_sq, total_sq);
    if (total_sq == 0) throw std::domain_error("deviation threshold of zero matrix");
    return 5 * diag_sq >= 4 * total_sq;
}

namespace {

// Bareiss fraction-free elimination; intermediates are minors, so they stay
// exact in 128-bit for the entry magnitudes handled here.
__int128 bareiss_det(std::array<std::array<__int128, 8>, 8> a, int n) {
    __int128 prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[r][k] != 0) { pivot = r; break; }
            if (pivot < 0) return 0;
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

__int128 minor_det(const IntMatrix8& t, int skip_row, int skip_col) {
    std::array<std::array<__int128, 8>, 8> m{};
    int r = 0;
    for (int i = 0; i < 8; ++i) {
        if (i == skip_row) continue;
        int c = 0;
        for (int j = 0; j < 8; ++j) {
            if (j == skip_col) continue;
            m[r][c++] = t.e[i][j];
        }
        ++r;
    }
    return bareiss_det(m, 7);
}

std::int64_t to_i64(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("determinant overflow");
    return static_cast<std::int64_t>(v);
}

} // namespace

std::int64_t determinant(const IntMatrix8& t) {
    std::array<std::array<__int128, 8>, 8> m{};
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) m[i][j] = t.e[i][j];
    return to_i64(bareiss_det(m, 8));
}

RationalMatrix8 exact_inverse(const IntMatrix8& t) {
    const std::int64_t det = determinant(t);
    if (det == 0) throw std::domain_error("singular matrix has no inverse");
    RationalMatrix8 inv;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            const std::int64_t cof = to_i64(minor_det(t, i, j));
            const std::int64_t signed_cof = ((i + j) % 2 == 0) ? cof : -cof;
            // adjugate transposes the cofactor matrix
            inv.e[j][i] = Rational(signed_cof, det);
        }
    return inv;
}

std::optional<InverseFactorization> factor_inverse_lowcomplexity(const RationalMatrix8& tinv) {
    InverseFactorization f;
    for (int j = 0; j < 8; ++j) {
        std::int64_t lcd = 1;
        for (int i = 0; i < 8; ++i)
            lcd = std::lcm(lcd, tinv.e[i][j].den);
        f.column_scale[j] = Rational(1, lcd);
        for (int i = 0; i < 8; ++i) {
            const Rational& v = tinv.e[i][j];
            const std::int64_t entry = v.num * (lcd / v.den);
            if (entry < -3 || entry > 3) return std::nullopt;
            f.integer_part.e[i][j] = entry;
        }
    }
    return f;
}

ScalingDiagonal orthonormalize(const IntMatrix8& t) {
    const IntMatrix8 g = gram(t);
    ScalingDiagonal s;
    for (int i = 0; i < 8; ++i) {
        if (g.e[i][i] <= 0) throw std::domain_error("degenerate input: null gram diagonal entry");
        s.d_squared[i] = Rational(1, g.e[i][i]);
        s.d[i] = 1.0 / std::sqrt(static_cast<double>(g.e[i][i]));
    }
    return s;
}

bool entries_in_C(const IntMatrix8& t) {
    for (const auto& row : t.e)
        for (std::int64_t v : row)
            if (v < -3 || v > 3) return false;
    return true;
}

} // namespace dctlab
