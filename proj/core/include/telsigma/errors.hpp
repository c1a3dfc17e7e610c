#pragma once

#include <stdexcept>
#include <string>

namespace telsigma {

// Input/spec validation failures. The CLI maps these to exit code 2.
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// Internal pipeline assertion failures. Any of these firing means an algebra
// bug (or deliberate under-truncation), never bad user input. Exit code 3.
struct pipeline_error : std::runtime_error {
    enum class kind {
        not_a_unit,
        nonzero_remainder,
        truncation_exceeded,
        grading_violation,
        integrality_violation,
        leading_mismatch,
        determinant_mismatch,
        residual_not_integral,
        stabilization_failure,
        window_exceeded,
        symmetry_violation,
        gauge_dependence,
        cap_mismatch,
    };
    kind k;
    pipeline_error(kind k_, const std::string& what) : std::runtime_error(what), k(k_) {}
};

[[noreturn]] inline void fail(pipeline_error::kind k, const std::string& msg) {
    throw pipeline_error(k, msg);
}

inline void require(bool cond, pipeline_error::kind k, const std::string& msg) {
    if (!cond)
        fail(k, msg);
}

}  // namespace telsigma
