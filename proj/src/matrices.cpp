#include "dctlab/matrices.hpp"

#include <cmath>
#include <cstdlib>

namespace dctlab {

Mat8d mat_mul(const Mat8d& a, const Mat8d& b) {
    Mat8d out{};
    for (int i = 0; i < 8; ++i)
        for (int k = 0; k < 8; ++k) {
            const double aik = a[i][k];
            for (int j = 0; j < 8; ++j) out[i][j] += aik * b[k][j];
        }
    return out;
}

Mat8d mat_transpose(const Mat8d& a) {
    Mat8d out{};
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) out[i][j] = a[j][i];
    return out;
}

double mat_max_abs_diff(const Mat8d& a, const Mat8d& b) {
    double m = 0.0;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) m = std::max(m, std::abs(a[i][j] - b[i][j]));
    return m;
}

IntMatrix8 IntMatrix8::identity() {
    IntMatrix8 m;
    for (int i = 0; i < 8; ++i) m.e[i][i] = 1;
    return m;
}

IntMatrix8 IntMatrix8::diagonal(const std::array<std::int64_t, 8>& d) {
    IntMatrix8 m;
    for (int i = 0; i < 8; ++i) m.e[i][i] = d[i];
    return m;
}

IntMatrix8 IntMatrix8::transposed() const {
    IntMatrix8 m;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) m.e[i][j] = e[j][i];
    return m;
}

bool IntMatrix8::is_diagonal() const {
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            if (i != j && e[i][j] != 0) return false;
    return true;
}

bool IntMatrix8::has_null_row() const {
    for (int i = 0; i < 8; ++i) {
        bool all_zero = true;
        for (int j = 0; j < 8; ++j)
            if (e[i][j] != 0) { all_zero = false; break; }
        if (all_zero) return true;
    }
    return false;
}

bool IntMatrix8::is_zero() const {
    for (const auto& row : e)
        for (std::int64_t v : row)
            if (v != 0) return false;
    return true;
}

Mat8d IntMatrix8::to_real() const {
    Mat8d m{};
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) m[i][j] = static_cast<double>(e[i][j]);
    return m;
}

IntMatrix8 int_mul(const IntMatrix8& a, const IntMatrix8& b) {
    IntMatrix8 out;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            std::int64_t s = 0;
            for (int k = 0; k < 8; ++k) s += a.e[i][k] * b.e[k][j];
            out.e[i][j] = s;
        }
    return out;
}

namespace {

std::int64_t checked(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
    return static_cast<std::int64_t>(v);
}

} // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    num = g ? n / g : n;
    den = g ? d / g : d;
    if (num == 0) den = 1;
}

Rational Rational::operator+(const Rational& o) const {
    const __int128 n = static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den;
    const __int128 d = static_cast<__int128>(den) * o.den;
    return Rational(checked(n), checked(d));
}

Rational Rational::operator-(const Rational& o) const {
    return *this + Rational(-o.num, o.den);
}

Rational Rational::operator*(const Rational& o) const {
    const __int128 n = static_cast<__int128>(num) * o.num;
    const __int128 d = static_cast<__int128>(den) * o.den;
    return Rational(checked(n), checked(d));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num == 0) throw std::domain_error("division by zero rational");
    const __int128 n = static_cast<__int128>(num) * o.den;
    const __int128 d = static_cast<__int128>(den) * o.num;
    return Rational(checked(n), checked(d));
}

std::string Rational::to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational rational_from_string(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

RationalMatrix8 RationalMatrix8::identity() {
    RationalMatrix8 m;
    for (int i = 0; i < 8; ++i) m.e[i][i] = Rational(1);
    return m;
}

Mat8d RationalMatrix8::to_real() const {
    Mat8d m{};
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) m[i][j] = e[i][j].to_double();
    return m;
}

RationalMatrix8 rat_mul(const RationalMatrix8& a, const RationalMatrix8& b) {
    RationalMatrix8 out;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            Rational s(0);
            for (int k = 0; k < 8; ++k) s = s + a.e[i][k] * b.e[k][j];
            out.e[i][j] = s;
        }
    return out;
}

RationalMatrix8 rat_mul(const RationalMatrix8& a, const IntMatrix8& b) {
    RationalMatrix8 rb;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) rb.e[i][j] = Rational(b.e[i][j]);
    return rat_mul(a, rb);
}

RationalMatrix8 rat_mul(const IntMatrix8& a, const RationalMatrix8& b) {
    RationalMatrix8 ra;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) ra.e[i][j] = Rational(a.e[i][j]);
    return rat_mul(ra, b);
}

} // namespace dctlab
