#ifndef DCTLAB_FAST_TRANSFORM_HPP
#define DCTLAB_FAST_TRANSFORM_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dctlab/matrices.hpp"
#include "dctlab/search.hpp"

namespace dctlab {

struct OpCounts {
    int multiplications = 0;
    int additions = 0;
    int shifts = 0;
    bool operator==(const OpCounts&) const = default;
};

/// One three-address step over the plan's working slots. Negate and copy are
/// free wiring; add/sub count as additions, shift as a bit-shift.
struct PlanStep {
    enum class Op { Add, Sub, Shift, Negate, Copy };
    Op op;
    int dst;
    int a;
    int b = 0;     // second operand for add/sub, shift amount for shift
};

/// Multiplierless evaluation schedule computing X = T * x. All catalog plans
/// use additions, subtractions and bit-shifts only.
struct TransformPlan {
    std::string name;
    std::array<int, 7> m{};
    std::vector<PlanStep> schedule;
    int slot_count = 0;
    std::array<int, 8> output_slots{};
    OpCounts counts;
    bool used_fallback = false;  // set when the shared factorization failed
                                 // and a direct row expansion was emitted

    template <typename T>
    std::array<T, 8> apply(const std::array<T, 8>& x) const {
        std::vector<T> slots(static_cast<std::size_t>(slot_count), T(0));
        for (int i = 0; i < 8; ++i) slots[i] = x[i];
        for (const PlanStep& s : schedule) {
            switch (s.op) {
                case PlanStep::Op::Add: slots[s.dst] = slots[s.a] + slots[s.b]; break;
                case PlanStep::Op::Sub: slots[s.dst] = slots[s.a] - slots[s.b]; break;
                case PlanStep::Op::Shift:
                    slots[s.dst] = slots[s.a] * static_cast<T>(std::int64_t(1) << s.b);
                    break;
                case PlanStep::Op::Negate: slots[s.dst] = -slots[s.a]; break;
                case PlanStep::Op::Copy: slots[s.dst] = slots[s.a]; break;
            }
        }
        std::array<T, 8> out;
        for (int i = 0; i < 8; ++i) out[i] = slots[output_slots[i]];
        return out;
    }
};

/// Builds the schedule for the record's fast constants. Throws
/// std::invalid_argument when the record carries none (degenerate or
/// out-of-catalog input).
TransformPlan build_plan(const ApproximationRecord& record);
TransformPlan build_plan(const std::array<int, 7>& m, const std::string& name = "custom");

std::array<std::int64_t, 8> apply_plan(const TransformPlan& plan, const std::array<std::int64_t, 8>& x);

struct FactorizationMatrices {
    IntMatrix8 p;   // signed permutation
    IntMatrix8 b1;  // additive stages
    IntMatrix8 b2;
    IntMatrix8 b3;
};

/// The four fixed factors shared by every catalog transform.
const FactorizationMatrices& factorization_matrices();

/// The multiplicative middle factor for a set of constants.
IntMatrix8 multiplicative_stage(const std::array<int, 7>& m);

/// The full product P * K(m) * B1 * B2 * B3 in exact integer arithmetic.
IntMatrix8 factorization_product(const std::array<int, 7>& m);

OpCounts count_ops(const TransformPlan& plan);

/// The matrix realized by the schedule, column by column.
IntMatrix8 plan_matrix(const TransformPlan& plan);

/// One primitive per line, for audit.
std::string format_schedule(const TransformPlan& plan);

/// Largest bit width (signed, including sign bit) any slot can reach when
/// inputs range over [lo, hi]; computed by interval propagation.
int max_intermediate_bits(const TransformPlan& plan, std::int64_t lo, std::int64_t hi);

} // namespace dctlab

#endif
