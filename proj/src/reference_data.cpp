#include "dctlab/reference_data.hpp"

#include <sstream>

#include "dctlab/exact_dct.hpp"

namespace dctlab {

double AlphaSymbol::value() const {
    if (l == 0) return 0.0;
    return static_cast<double>(l) / gamma_k(k);
}

std::string AlphaSymbol::text() const {
    if (l == 0) return "0";
    return std::to_string(l) + "/g" + std::to_string(k);
}

namespace {

IntMatrix8 parse_matrix(const char* text) {
    IntMatrix8 m;
    std::istringstream in(text);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) in >> m.e[i][j];
    return m;
}

using K = IntFuncKind;

const std::vector<IntFuncKind> kTruncOnly = {K::Trunc};
const std::vector<IntFuncKind> kAfzOnly = {K::RoundAfz};
const std::vector<IntFuncKind> kNearest = {K::RoundHu,   K::RoundHd,  K::RoundHafz,
                                           K::RoundHtz,  K::RoundEven, K::RoundOdd};
const std::vector<IntFuncKind> kTruncAndNearest = {K::Trunc,    K::RoundHu,  K::RoundHd,
                                                   K::RoundHafz, K::RoundHtz, K::RoundEven,
                                                   K::RoundOdd};

std::vector<ReferenceTransform> build_transforms() {
    std::vector<ReferenceTransform> v;

    v.push_back({"T0", std::nullopt, parse_matrix(R"(
        1 1 1 1 1 1 1 1
        1 1 1 0 0 -1 -1 -1
        1 0 0 -1 -1 0 0 1
        1 0 -1 -1 1 1 0 -1
        1 -1 -1 1 1 -1 -1 1
        1 -1 0 1 -1 0 1 -1
        0 -1 1 0 0 1 -1 0
        0 -1 1 -1 1 -1 1 0)"),
        true, {1, 1, 1, 1, 1, 0, 0}, {8, 6, 4, 6, 8, 6, 4, 6}, 0.0, {0, 22, 0},
        kTruncAndNearest, K::Trunc, {2, 4}, {4, 0}});

    v.push_back({"T1", std::nullopt, parse_matrix(R"(
        1 1 1 1 1 1 1 1
        2 1 1 0 0 -1 -1 -2
        1 0 0 -1 -1 0 0 1
        1 0 -2 -1 1 2 0 -1
        1 -1 -1 1 1 -1 -1 1
        1 -2 0 1 -1 0 2 -1
        0 -1 1 0 0 1 -1 0
        0 -1 1 -2 2 -1 1 0)"),
        true, {2, 1, 1, 1, 1, 0, 0}, {8, 12, 4, 12, 8, 12, 4, 12}, 0.0, {0, 22, 4},
        kTruncOnly, K::Trunc, {4, 0}, {4, 1}});

    v.push_back({"T2", std::nullopt, parse_matrix(R"(
        1 1 1 1 1 1 1 1
        2 1 1 0 0 -1 -1 -2
        2 0 0 -2 -2 0 0 2
        1 0 -2 -1 1 2 0 -1
        1 -1 -1 1 1 -1 -1 1
        1 -2 0 1 -1 0 2 -1
        0 -2 2 0 0 2 -2 0
        0 -1 1 -2 2 -1 1 0)"),
        true, {2, 2, 1, 1, 1, 0, 0}, {8, 12, 16, 12, 8, 12, 16, 12}, 0.0, {0, 22, 6},
        kTruncOnly, K::Trunc, {4, 1}, {4, 2}});

    v.push_back({"T3", std::nullopt, parse_matrix(R"(
        2 2 2 2 2 2 2 2
        3 2 2 0 0 -2 -2 -3
        3 1 -1 -3 -3 -1 1 3
        2 0 -3 -2 2 3 0 -2
        2 -2 -2 2 2 -2 -2 2
        2 -3 0 2 -2 0 3 -2
        1 -3 3 -1 -1 3 -3 1
        0 -2 2 -3 3 -2 2 0)"),
        true, {3, 3, 2, 2, 2, 1, 0}, {32, 34, 40, 34, 32, 34, 40, 34}, 0.0, {0, 30, 16},
        kTruncOnly, K::Trunc, {4, 4}, {6, 2}});

    v.push_back({"T4", "RDCT", parse_matrix(R"(
        1 1 1 1 1 1 1 1
        1 1 1 0 0 -1 -1 -1
        1 1 -1 -1 -1 -1 1 1
        1 0 -1 -1 1 1 0 -1
        1 -1 -1 1 1 -1 -1 1
        1 -1 0 1 -1 0 1 -1
        1 -1 1 -1 -1 1 -1 1
        0 -1 1 -1 1 -1 1 0)"),
        true, {1, 1, 1, 1, 1, 1, 0}, {8, 6, 8, 6, 8, 6, 8, 6}, 0.0, {0, 24, 0},
        kNearest, K::RoundHafz, {1, 5}, {3, 0}});

    v.push_back({"T5", std::nullopt, parse_matrix(R"(
        1 1 1 1 1 1 1 1
        2 1 1 0 0 -1 -1 -2
        1 1 -1 -1 -1 -1 1 1
        1 0 -2 -1 1 2 0 -1
        1 -1 -1 1 1 -1 -1 1
        1 -2 0 1 -1 0 2 -1
        1 -1 1 -1 -1 1 -1 1
        0 -1 1 -2 2 -1 1 0)"),
        true, {2, 1, 1, 1, 1, 1, 0}, {8, 12, 8, 12, 8, 12, 8, 12}, 0.0, {0, 24, 4},
        kNearest, K::RoundHafz, {3, 0}, {3, 1}});

    v.push_back({"T6", "RF-DCT", parse_matrix(R"(
        1 1 1 1 1 1 1 1
        2 1 1 0 0 -1 -1 -2
        2 1 -1 -2 -2 -1 1 2
        1 0 -2 -1 1 2 0 -1
        1 -1 -1 1 1 -1 -1 1
        1 -2 0 1 -1 0 2 -1
        1 -2 2 -1 -1 2 -2 1
        0 -1 1 -2 2 -1 1 0)"),
        true, {2, 2, 1, 1, 1, 1, 0}, {8, 12, 20, 12, 8, 12, 20, 12}, 0.0, {0, 24, 6},
        kNearest, K::RoundHafz, {3, 1}, {3, 2}});

    v.push_back({"T7", std::nullopt, parse_matrix(R"(
        2 2 2 2 2 2 2 2
        3 2 1 1 -1 -1 -2 -3
        2 1 -1 -2 -2 -1 1 2
        2 -1 -3 -1 1 3 1 -2
        2 -2 -2 2 2 -2 -2 2
        1 -3 1 2 -2 -1 3 -1
        1 -2 2 -1 -1 2 -2 1
        1 -1 2 -3 3 -2 1 -1)"),
        true, {3, 2, 2, 2, 1, 1, 1}, {32, 30, 20, 30, 32, 30, 20, 30}, 0.0, {0, 32, 12},
        kNearest, K::RoundHafz, {1, 6}, {3, 4}});

    v.push_back({"T~1", std::nullopt, parse_matrix(R"(
        1 1 1 1 1 1 1 1
        1 1 0 0 0 0 -1 -1
        1 0 0 -1 -1 0 0 1
        1 0 -1 0 0 1 0 -1
        1 -1 -1 1 1 -1 -1 1
        0 -1 0 1 -1 0 1 0
        0 -1 1 0 0 1 -1 0
        0 0 1 -1 1 -1 0 0)"),
        false, {1, 1, 1, 1, 0, 0, 0}, {8, 4, 4, 4, 8, 4, 4, 4}, 0.0646, {0, 18, 0},
        kTruncAndNearest, K::Trunc, {2, 3}, {2, 4}});

    v.push_back({"T~2", "SDCT", parse_matrix(R"(
        1 1 1 1 1 1 1 1
        1 1 1 1 -1 -1 -1 -1
        1 1 -1 -1 -1 -1 1 1
        1 -1 -1 -1 1 1 1 -1
        1 -1 -1 1 1 -1 -1 1
        1 -1 1 1 -1 -1 1 -1
        1 -1 1 -1 -1 1 -1 1
        1 -1 1 -1 1 -1 1 -1)"),
        false, {1, 1, 1, 1, 1, 1, 1}, {8, 8, 8, 8, 8, 8, 8, 8}, 0.1056, {0, 28, 0},
        kAfzOnly, K::RoundAfz, {0, 0}, {2, 0}});

    v.push_back({"T~3", std::nullopt, parse_matrix(R"(
        1 1 1 1 1 1 1 1
        2 2 1 1 -1 -1 -2 -2
        2 1 -1 -2 -2 -1 1 2
        2 -1 -2 -1 1 2 1 -2
        1 -1 -1 1 1 -1 -1 1
        1 -2 1 2 -2 -1 2 -1
        1 -2 2 -1 -1 2 -2 1
        1 -1 2 -2 2 -2 1 -1)"),
        false, {2, 2, 2, 1, 1, 1, 1}, {8, 20, 20, 20, 8, 20, 20, 20}, 0.0063, {0, 28, 10},
        kAfzOnly, K::RoundAfz, {2, 2}, {2, 3}});

    v.push_back({"T~4", std::nullopt, parse_matrix(R"(
        2 2 2 2 2 2 2 2
        2 2 1 1 -1 -1 -2 -2
        2 1 -1 -2 -2 -1 1 2
        2 -1 -2 -1 1 2 1 -2
        2 -2 -2 2 2 -2 -2 2
        1 -2 1 2 -2 -1 2 -1
        1 -2 2 -1 -1 2 -2 1
        1 -1 2 -2 2 -2 1 -1)"),
        false, {2, 2, 2, 2, 1, 1, 1}, {32, 20, 20, 20, 32, 20, 20, 20}, 0.0036, {0, 28, 12},
        kAfzOnly, K::RoundAfz, {2, 3}, {2, 4}});

    return v;
}

} // namespace

const std::vector<ReferenceTransform>& reference_transforms() {
    static const std::vector<ReferenceTransform> v = build_transforms();
    return v;
}

const ReferenceRejected& reference_rejected() {
    static const ReferenceRejected r = {"T~0", parse_matrix(R"(
        1 1 1 1 1 1 1 1
        1 1 1 1 0 0 0 0
        1 1 0 0 0 0 1 1
        1 0 0 0 1 1 1 0
        1 0 0 1 1 0 0 1
        1 0 1 1 0 0 1 0
        1 0 1 0 0 1 0 1
        1 0 1 0 1 0 1 0)"),
        0.4548};
    return r;
}

const std::vector<ReferenceDegenerate>& reference_degenerates() {
    static const std::vector<ReferenceDegenerate> v = [] {
        std::vector<ReferenceDegenerate> d;
        d.push_back({"Td0", parse_matrix(R"(
            0 0 0 0 0 0 0 0
            0 0 0 0 -1 -1 -1 -1
            0 0 -1 -1 -1 -1 0 0
            0 -1 -1 -1 0 0 0 -1
            0 -1 -1 0 0 -1 -1 0
            0 -1 0 0 -1 -1 0 -1
            0 -1 0 -1 -1 0 -1 0
            0 -1 0 -1 0 -1 0 -1)"),
            K::Floor, {0, 0}, {2, 0}});
        d.push_back({"Td1", parse_matrix(R"(
            0 0 0 0 0 0 0 0
            1 0 0 0 -1 -1 -1 -2
            0 0 -1 -1 -1 -1 0 0
            0 -1 -2 -1 0 1 0 -1
            0 -1 -1 0 0 -1 -1 0
            0 -2 0 0 -1 -1 1 -1
            0 -1 0 -1 -1 0 -1 0
            0 -1 0 -2 1 -1 0 -1)"),
            K::Floor, {2, 0}, {2, 1}});
        d.push_back({"Td2", parse_matrix(R"(
            0 0 0 0 0 0 0 0
            1 0 0 0 -1 -1 -1 -2
            1 0 -1 -2 -2 -1 0 1
            0 -1 -2 -1 0 1 0 -1
            0 -1 -1 0 0 -1 -1 0
            0 -2 0 0 -1 -1 1 -1
            0 -2 1 -1 -1 1 -2 0
            0 -1 0 -2 1 -1 0 -1)"),
            K::Floor, {2, 1}, {2, 2}});
        const IntMatrix8 td34 = parse_matrix(R"(
            0 0 0 0 0 0 0 0
            1 0 0 0 0 0 0 -1
            0 0 0 0 0 0 0 0
            0 0 -1 0 0 1 0 0
            0 0 0 0 0 0 0 0
            0 -1 0 0 0 0 1 0
            0 0 0 0 0 0 0 0
            0 0 0 -1 1 0 0 0)");
        d.push_back({"Td3", td34, K::Trunc, {2, 0}, {2, 0}});
        d.push_back({"Td4", td34, K::Trunc, {2, 0}, {2, 1}});
        d.push_back({"Td5", parse_matrix(R"(
            0 0 0 0 0 0 0 0
            1 0 0 0 0 0 0 -1
            1 0 0 -1 -1 0 0 1
            0 0 -1 0 0 1 0 0
            0 0 0 0 0 0 0 0
            0 -1 0 0 0 0 1 0
            0 -1 1 0 0 1 -1 0
            0 0 0 -1 1 0 0 0)"),
            K::Trunc, {2, 1}, {2, 2}});
        d.push_back({"Td6", parse_matrix(R"(
            0 0 0 0 0 0 0 0
            1 1 0 0 0 0 -1 -1
            1 0 0 -1 -1 0 0 1
            1 0 -1 0 0 1 0 -1
            0 0 0 0 0 0 0 0
            0 -1 0 1 -1 0 1 0
            0 -1 1 0 0 1 -1 0
            0 0 1 -1 1 -1 0 0)"),
            K::Trunc, {2, 2}, {2, 3}});
        d.push_back({"Td7", parse_matrix(R"(
            0 0 0 0 0 0 0 0
            1 0 0 0 0 0 0 0
            0 0 0 0 0 0 0 0
            0 0 0 0 0 1 0 0
            0 0 0 0 0 0 0 0
            0 0 0 0 0 0 1 0
            0 0 0 0 0 0 0 0
            0 0 0 0 1 0 0 0)"),
            K::RoundHu, {1, 0}, {1, 0}});
        return d;
    }();
    return v;
}

const std::vector<ReferenceInverse>& reference_inverses() {
    static const std::vector<ReferenceInverse> v = [] {
        std::vector<ReferenceInverse> inv;
        inv.push_back({"T~1", parse_matrix(R"(
            1 1 1 1 1 1 0 1
            1 1 0 -1 -1 -1 -1 -1
            1 1 0 -1 -1 1 1 1
            1 1 -1 -1 1 1 0 -1
            1 -1 -1 1 1 -1 0 1
            1 -1 0 1 -1 -1 1 -1
            1 -1 0 1 -1 1 -1 1
            1 -1 1 -1 1 -1 0 -1)"),
            {Rational(1, 8), Rational(1, 4), Rational(1, 4), Rational(1, 4),
             Rational(1, 8), Rational(1, 4), Rational(1, 4), Rational(1, 4)}});
        inv.push_back({"T~2", parse_matrix(R"(
            1 1 1 1 1 0 1 0
            1 1 1 0 -1 -1 -1 0
            1 0 -1 -1 -1 0 1 1
            1 0 -1 0 1 1 -1 -1
            1 0 -1 0 1 -1 -1 1
            1 0 -1 1 -1 0 1 -1
            1 -1 1 0 -1 1 -1 0
            1 -1 1 -1 1 0 1 0)"),
            {Rational(1, 8), Rational(1, 4), Rational(1, 8), Rational(1, 4),
             Rational(1, 8), Rational(1, 4), Rational(1, 8), Rational(1, 4)}});
        const IntMatrix8 e34 = parse_matrix(R"(
            1 3 2 3 1 1 1 1
            1 3 1 -1 -1 -3 -2 -1
            1 1 -1 -3 -1 1 2 3
            1 1 -2 -1 1 3 -1 -3
            1 -1 -2 1 1 -3 -1 3
            1 -1 -1 3 -1 -1 2 -3
            1 -3 1 1 -1 3 -2 1
            1 -3 2 -3 1 -1 1 -1)");
        inv.push_back({"T~3", e34,
            {Rational(1, 8), Rational(1, 28), Rational(1, 20), Rational(1, 28),
             Rational(1, 8), Rational(1, 28), Rational(1, 20), Rational(1, 28)}});
        inv.push_back({"T~4", e34,
            {Rational(1, 16), Rational(1, 28), Rational(1, 20), Rational(1, 28),
             Rational(1, 16), Rational(1, 28), Rational(1, 20), Rational(1, 28)}});
        return inv;
    }();
    return v;
}

const ReferenceTransform* find_reference(const std::string& name) {
    for (const auto& t : reference_transforms())
        if (t.name == name || (t.alias && *t.alias == name)) return &t;
    return nullptr;
}

} // namespace dctlab
