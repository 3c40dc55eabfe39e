#ifndef DCTLAB_MATRICES_HPP
#define DCTLAB_MATRICES_HPP

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dctlab {

using Mat8d = std::array<std::array<double, 8>, 8>;

Mat8d mat_mul(const Mat8d& a, const Mat8d& b);
Mat8d mat_transpose(const Mat8d& a);
double mat_max_abs_diff(const Mat8d& a, const Mat8d& b);

/// 8x8 matrix with exact integer entries.
struct IntMatrix8 {
    std::array<std::array<std::int64_t, 8>, 8> e{};

    std::int64_t& operator()(int r, int c) { return e[r][c]; }
    std::int64_t operator()(int r, int c) const { return e[r][c]; }

    bool operator==(const IntMatrix8&) const = default;

    static IntMatrix8 identity();
    static IntMatrix8 diagonal(const std::array<std::int64_t, 8>& d);

    IntMatrix8 transposed() const;
    bool is_diagonal() const;
    bool has_null_row() const;
    bool is_zero() const;
    Mat8d to_real() const;
};

IntMatrix8 int_mul(const IntMatrix8& a, const IntMatrix8& b);

/// Exact rational with canonical form: den > 0, gcd(num, den) = 1.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d);

    bool operator==(const Rational&) const = default;

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;

    bool is_integer() const { return den == 1; }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string to_string() const;
};

Rational rational_from_string(const std::string& s);

struct RationalMatrix8 {
    std::array<std::array<Rational, 8>, 8> e{};

    Rational& operator()(int r, int c) { return e[r][c]; }
    const Rational& operator()(int r, int c) const { return e[r][c]; }

    bool operator==(const RationalMatrix8&) const = default;

    static RationalMatrix8 identity();
    Mat8d to_real() const;
};

RationalMatrix8 rat_mul(const RationalMatrix8& a, const RationalMatrix8& b);
RationalMatrix8 rat_mul(const RationalMatrix8& a, const IntMatrix8& b);
RationalMatrix8 rat_mul(const IntMatrix8& a, const RationalMatrix8& b);

} // namespace dctlab

#endif
