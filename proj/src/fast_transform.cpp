#include "dctlab/fast_transform.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dctlab {

namespace {

IntMatrix8 parse_matrix(const char* text) {
    IntMatrix8 m;
    std::istringstream in(text);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) in >> m.e[i][j];
    return m;
}

} // namespace

const FactorizationMatrices& factorization_matrices() {
    static const FactorizationMatrices f = {
        parse_matrix(R"(
            1 0 0 0 0 0 0 0
            0 0 0 0 -1 0 0 0
            0 0 1 0 0 0 0 0
            0 0 0 0 0 -1 0 0
            0 1 0 0 0 0 0 0
            0 0 0 0 0 0 0 -1
            0 0 0 1 0 0 0 0
            0 0 0 0 0 0 1 0)"),
        parse_matrix(R"(
            1 1 0 0 0 0 0 0
            1 -1 0 0 0 0 0 0
            0 0 0 1 0 0 0 0
            0 0 1 0 0 0 0 0
            0 0 0 0 0 0 -1 0
            0 0 0 0 0 0 0 1
            0 0 0 0 0 -1 0 0
            0 0 0 0 -1 0 0 0)"),
        parse_matrix(R"(
            1 0 0 1 0 0 0 0
            0 1 1 0 0 0 0 0
            1 0 0 -1 0 0 0 0
            0 1 -1 0 0 0 0 0
            0 0 0 0 1 0 0 0
            0 0 0 0 0 1 0 0
            0 0 0 0 0 0 1 0
            0 0 0 0 0 0 0 1)"),
        parse_matrix(R"(
            1 0 0 0 0 0 0 1
            0 1 0 0 0 0 1 0
            0 0 1 0 0 1 0 0
            0 0 0 1 1 0 0 0
            1 0 0 0 0 0 0 -1
            0 1 0 0 0 0 -1 0
            0 0 1 0 0 -1 0 0
            0 0 0 1 -1 0 0 0)"),
    };
    return f;
}

IntMatrix8 multiplicative_stage(const std::array<int, 7>& m) {
    IntMatrix8 k;
    k.e[0][0] = m[3];
    k.e[1][1] = m[3];
    k.e[2][2] = m[5];
    k.e[2][3] = m[1];
    k.e[3][2] = -m[1];
    k.e[3][3] = m[5];
    k.e[4][4] = m[4];
    k.e[4][5] = -m[6];
    k.e[4][6] = m[2];
    k.e[4][7] = m[0];
    k.e[5][4] = -m[0];
    k.e[5][5] = m[4];
    k.e[5][6] = -m[6];
    k.e[5][7] = m[2];
    k.e[6][4] = -m[2];
    k.e[6][5] = -m[0];
    k.e[6][6] = m[4];
    k.e[6][7] = -m[6];
    k.e[7][4] = m[6];
    k.e[7][5] = -m[2];
    k.e[7][6] = -m[0];
    k.e[7][7] = m[4];
    return k;
}

IntMatrix8 factorization_product(const std::array<int, 7>& m) {
    const FactorizationMatrices& f = factorization_matrices();
    return int_mul(int_mul(int_mul(int_mul(f.p, multiplicative_stage(m)), f.b1), f.b2), f.b3);
}

namespace {

class ScheduleBuilder {
public:
    explicit ScheduleBuilder(TransformPlan& plan) : plan_(plan) { plan_.slot_count = 8; }

    int fresh() { return plan_.slot_count++; }

    int add(int a, int b) {
        const int d = fresh();
        plan_.schedule.push_back({PlanStep::Op::Add, d, a, b});
        return d;
    }
    int sub(int a, int b) {
        const int d = fresh();
        plan_.schedule.push_back({PlanStep::Op::Sub, d, a, b});
        return d;
    }
    int shift(int a, int bits) {
        const int d = fresh();
        plan_.schedule.push_back({PlanStep::Op::Shift, d, a, bits});
        return d;
    }
    int negate(int a) {
        const int d = fresh();
        plan_.schedule.push_back({PlanStep::Op::Negate, d, a});
        return d;
    }
    int zero() {
        if (zero_slot_ < 0) zero_slot_ = fresh();  // slots start out zeroed
        return zero_slot_;
    }

    // coefficient-times-slot with shift/add decomposition; coefficients are
    // restricted to 0..3 by the entry domain
    int scaled(int coef, int src) {
        switch (coef) {
            case 1: return src;
            case 2: return shift(src, 1);
            case 3: {
                const int twice = shift(src, 1);
                return add(twice, src);
            }
            default: throw std::invalid_argument("unsupported coefficient");
        }
    }

    // signed linear combination sum_i sign_i * coef_i * slot_i
    int linear(std::vector<std::tuple<int, int, int>> terms) {  // (sign, coef, slot)
        std::erase_if(terms, [](const auto& t) { return std::get<1>(t) == 0; });
        if (terms.empty()) return zero();
        // lead with a positive term when one exists; otherwise negate at the end
        auto pos = std::find_if(terms.begin(), terms.end(),
                                [](const auto& t) { return std::get<0>(t) > 0; });
        bool negate_result = false;
        if (pos == terms.end()) {
            negate_result = true;
            for (auto& t : terms) std::get<0>(t) = -std::get<0>(t);
            pos = terms.begin();
        }
        std::iter_swap(terms.begin(), pos);
        int acc = scaled(std::get<1>(terms[0]), std::get<2>(terms[0]));
        for (std::size_t i = 1; i < terms.size(); ++i) {
            const int term = scaled(std::get<1>(terms[i]), std::get<2>(terms[i]));
            acc = std::get<0>(terms[i]) > 0 ? add(acc, term) : sub(acc, term);
        }
        return negate_result ? negate(acc) : acc;
    }

private:
    TransformPlan& plan_;
    int zero_slot_ = -1;
};

TransformPlan emit_shared_structure(const std::array<int, 7>& m, const std::string& name) {
    TransformPlan plan;
    plan.name = name;
    plan.m = m;
    ScheduleBuilder sb(plan);

    // stage 1: symmetric/antisymmetric halves
    const int a0 = sb.add(0, 7), a1 = sb.add(1, 6), a2 = sb.add(2, 5), a3 = sb.add(3, 4);
    const int a4 = sb.sub(0, 7), a5 = sb.sub(1, 6), a6 = sb.sub(2, 5), a7 = sb.sub(3, 4);
    // stage 2: second butterfly on the symmetric half
    const int b0 = sb.add(a0, a3), b1 = sb.add(a1, a2);
    const int b2 = sb.sub(a0, a3), b3 = sb.sub(a1, a2);
    const int b4 = a4, b5 = a5, b6 = a6, b7 = a7;
    // stage 3: DC pair
    const int c0 = sb.add(b0, b1), c1 = sb.sub(b0, b1);

    const int m0 = m[0], m1 = m[1], m2 = m[2], m3 = m[3], m4 = m[4], m5 = m[5], m6 = m[6];
    plan.output_slots[0] = sb.linear({{+1, m3, c0}});
    plan.output_slots[4] = sb.linear({{+1, m3, c1}});
    plan.output_slots[2] = sb.linear({{+1, m5, b3}, {+1, m1, b2}});
    plan.output_slots[6] = sb.linear({{-1, m1, b3}, {+1, m5, b2}});
    plan.output_slots[1] = sb.linear({{+1, m4, b6}, {+1, m6, b7}, {+1, m2, b5}, {+1, m0, b4}});
    plan.output_slots[3] = sb.linear({{+1, m2, b4}, {-1, m0, b6}, {-1, m4, b7}, {-1, m6, b5}});
    plan.output_slots[5] = sb.linear({{+1, m4, b4}, {+1, m6, b6}, {+1, m2, b7}, {-1, m0, b5}});
    plan.output_slots[7] = sb.linear({{+1, m2, b6}, {-1, m0, b7}, {-1, m4, b5}, {+1, m6, b4}});

    plan.counts = count_ops(plan);
    return plan;
}

// Direct per-row expansion of an explicit matrix; only used when the shared
// factorization does not reproduce the target matrix.
TransformPlan emit_row_expansion(const IntMatrix8& t, const std::array<int, 7>& m,
                                 const std::string& name) {
    TransformPlan plan;
    plan.name = name;
    plan.m = m;
    plan.used_fallback = true;
    ScheduleBuilder sb(plan);
    for (int i = 0; i < 8; ++i) {
        std::vector<std::tuple<int, int, int>> terms;
        for (int j = 0; j < 8; ++j) {
            const std::int64_t c = t.e[i][j];
            if (c != 0) terms.push_back({c > 0 ? +1 : -1, static_cast<int>(c > 0 ? c : -c), j});
        }
        plan.output_slots[i] = sb.linear(std::move(terms));
    }
    plan.counts = count_ops(plan);
    return plan;
}

} // namespace

TransformPlan build_plan(const std::array<int, 7>& m, const std::string& name) {
    for (int c : m)
        if (c < 0 || c > 3) throw std::invalid_argument("fast constants must lie in 0..3");
    return emit_shared_structure(m, name);
}

TransformPlan build_plan(const ApproximationRecord& record) {
    if (!record.plan_constants)
        throw std::invalid_argument("no fast-algorithm constants for transform '" + record.name + "'");
    TransformPlan plan = emit_shared_structure(*record.plan_constants, record.name);
    if (!(plan_matrix(plan) == record.matrix)) {
        // the shared structure is verified for every catalog matrix; this
        // path exists for explicitly supplied constants that disagree
        plan = emit_row_expansion(record.matrix, *record.plan_constants, record.name);
    }
    return plan;
}

std::array<std::int64_t, 8> apply_plan(const TransformPlan& plan,
                                       const std::array<std::int64_t, 8>& x) {
    return plan.apply(x);
}

OpCounts count_ops(const TransformPlan& plan) {
    OpCounts c;
    for (const PlanStep& s : plan.schedule) {
        switch (s.op) {
            case PlanStep::Op::Add:
            case PlanStep::Op::Sub: ++c.additions; break;
            case PlanStep::Op::Shift: ++c.shifts; break;
            default: break;
        }
    }
    return c;
}

IntMatrix8 plan_matrix(const TransformPlan& plan) {
    IntMatrix8 t;
    for (int col = 0; col < 8; ++col) {
        std::array<std::int64_t, 8> e{};
        e[col] = 1;
        const auto out = plan.apply(e);
        for (int row = 0; row < 8; ++row) t.e[row][col] = out[row];
    }
    return t;
}

std::string format_schedule(const TransformPlan& plan) {
    std::ostringstream os;
    for (const PlanStep& s : plan.schedule) {
        switch (s.op) {
            case PlanStep::Op::Add: os << "add  s" << s.dst << ", s" << s.a << ", s" << s.b; break;
            case PlanStep::Op::Sub: os << "sub  s" << s.dst << ", s" << s.a << ", s" << s.b; break;
            case PlanStep::Op::Shift: os << "shl  s" << s.dst << ", s" << s.a << ", " << s.b; break;
            case PlanStep::Op::Negate: os << "neg  s" << s.dst << ", s" << s.a; break;
            case PlanStep::Op::Copy: os << "mov  s" << s.dst << ", s" << s.a; break;
        }
        os << '\n';
    }
    for (int i = 0; i < 8; ++i) os << "out  X" << i << " = s" << plan.output_slots[i] << '\n';
    return os.str();
}

int max_intermediate_bits(const TransformPlan& plan, std::int64_t lo, std::int64_t hi) {
    struct Range {
        std::int64_t lo, hi;
    };
    std::vector<Range> r(static_cast<std::size_t>(plan.slot_count), {0, 0});
    for (int i = 0; i < 8; ++i) r[i] = {lo, hi};
    auto width_bits = [](std::int64_t v) {
        int bits = 1;  // sign bit
        std::uint64_t mag = v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
        while (mag) {
            ++bits;
            mag >>= 1;
        }
        return bits;
    };
    int max_bits = 0;
    for (int i = 0; i < 8; ++i) max_bits = std::max({max_bits, width_bits(lo), width_bits(hi)});
    for (const PlanStep& s : plan.schedule) {
        Range out{};
        switch (s.op) {
            case PlanStep::Op::Add: out = {r[s.a].lo + r[s.b].lo, r[s.a].hi + r[s.b].hi}; break;
            case PlanStep::Op::Sub: out = {r[s.a].lo - r[s.b].hi, r[s.a].hi - r[s.b].lo}; break;
            case PlanStep::Op::Shift: out = {r[s.a].lo << s.b, r[s.a].hi << s.b}; break;
            case PlanStep::Op::Negate: out = {-r[s.a].hi, -r[s.a].lo}; break;
            case PlanStep::Op::Copy: out = r[s.a]; break;
        }
        r[s.dst] = out;
        max_bits = std::max({max_bits, width_bits(out.lo), width_bits(out.hi)});
    }
    return max_bits;
}

} // namespace dctlab
