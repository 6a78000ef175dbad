#pragma once

#include <stdexcept>
#include <string>

namespace hopfv {

// Error taxonomy for the symbolic engine. Every throw carries a code so tests
// can assert the precise failure class without string matching.
enum class errc {
    exp_of_unit,          // series exponential of a unit (nonzero constant term)
    inverse_of_non_unit,  // series inverse where the constant term vanishes
    division_mismatch,    // division by z^k of a series with valuation < k
    unknown_generator,
    unknown_presentation,
    duplicate_rule,
    rank_mismatch,        // tensor operands of different rank / slot signature
    degree_cap,           // operand exceeds a declared word-degree cap
    unmapped_generator,   // generator map without an image
    non_terminating,      // rewrite budget exhausted
    non_convergent,       // exp/series iteration budget exhausted
    reduction_failure,    // residual not reducible by the declared relation set
    parse_error,
    usage_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::exp_of_unit: return "ExpOfUnit";
    case errc::inverse_of_non_unit: return "InverseOfNonUnit";
    case errc::division_mismatch: return "DivisionMismatch";
    case errc::unknown_generator: return "UnknownGenerator";
    case errc::unknown_presentation: return "UnknownPresentation";
    case errc::duplicate_rule: return "DuplicateRule";
    case errc::rank_mismatch: return "RankMismatch";
    case errc::degree_cap: return "DegreeCap";
    case errc::unmapped_generator: return "UnmappedGenerator";
    case errc::non_terminating: return "NonTerminating";
    case errc::non_convergent: return "NonConvergent";
    case errc::reduction_failure: return "ReductionFailure";
    case errc::parse_error: return "ParseError";
    case errc::usage_error: return "UsageError";
    }
    return "Error";
}

class algebra_error : public std::runtime_error {
public:
    algebra_error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw algebra_error(code, what);
}

} // namespace hopfv
