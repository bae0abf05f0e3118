#pragma once

#include <stdexcept>
#include <string>

namespace mhorizon {

// Error codes for every failure mode the library reports. Grouped by the
// subsystem that raises them.
enum class Errc {
    // time structure
    NonPositiveProbability,
    ProbabilitySumMismatch,
    EmptyDimension,
    UnknownHour,
    NegativeRate,
    // catalog
    DuplicateAssetId,
    UnknownCommodity,
    UnknownNode,
    DanglingConversion,
    NegativeEmission,
    RateOutOfRange,
    NegativeOutput,
    NonPositiveCOP,
    // model builder
    NoSupplyPath,
    MissingCapTrajectory,
    InfeasibleDemand,
    MissingCostTrack,
    // lp core
    NonFiniteCoefficient,
    IterationLimit,
    NumericalBreakdown,
    TooLarge,
    NameTooLong,
    DimensionMismatch,
    // case io
    MissingTable,
    SchemaMismatch,
    NegativeQuantity,
    UncoveredPeriod,
    ProfileGap,
    UntaggedRussianSupply,
    // reporting / cli
    NonOptimalSolution,
    IoFailure,
    UnknownSubcommand,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message);
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

} // namespace mhorizon
