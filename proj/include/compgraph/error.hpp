#pragma once

#include <stdexcept>
#include <string>

namespace compgraph {

enum class errc {
    cycle_detected,
    mismatched_vertex_count,
    empty_input,
    too_small,
    index_out_of_range,
    infeasible_degree,
    rejection_limit_exceeded,
    budget_zero,
    non_exact_certificate,
    dimension_mismatch,
    size_mismatch,
    zero_normal,
    limit_exceeded,
    invalid_argument,
    malformed_input,
};

inline const char* to_string(errc code) {
    switch (code) {
        case errc::cycle_detected: return "CycleDetected";
        case errc::mismatched_vertex_count: return "MismatchedVertexCount";
        case errc::empty_input: return "EmptyInput";
        case errc::too_small: return "TooSmall";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::infeasible_degree: return "InfeasibleDegree";
        case errc::rejection_limit_exceeded: return "RejectionLimitExceeded";
        case errc::budget_zero: return "BudgetZero";
        case errc::non_exact_certificate: return "NonExactCertificate";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::size_mismatch: return "SizeMismatch";
        case errc::zero_normal: return "ZeroNormal";
        case errc::limit_exceeded: return "LimitExceeded";
        case errc::invalid_argument: return "InvalidArgument";
        case errc::malformed_input: return "MalformedInput";
    }
    return "Unknown";
}

/// All library failures are reported through this exception; `code()` names the condition.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace compgraph
