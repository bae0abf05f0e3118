#include "mhorizon/errors.hpp"

namespace mhorizon {

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::NonPositiveProbability: return "NonPositiveProbability";
        case Errc::ProbabilitySumMismatch: return "ProbabilitySumMismatch";
        case Errc::EmptyDimension: return "EmptyDimension";
        case Errc::UnknownHour: return "UnknownHour";
        case Errc::NegativeRate: return "NegativeRate";
        case Errc::DuplicateAssetId: return "DuplicateAssetId";
        case Errc::UnknownCommodity: return "UnknownCommodity";
        case Errc::UnknownNode: return "UnknownNode";
        case Errc::DanglingConversion: return "DanglingConversion";
        case Errc::NegativeEmission: return "NegativeEmission";
        case Errc::RateOutOfRange: return "RateOutOfRange";
        case Errc::NegativeOutput: return "NegativeOutput";
        case Errc::NonPositiveCOP: return "NonPositiveCOP";
        case Errc::NoSupplyPath: return "NoSupplyPath";
        case Errc::MissingCapTrajectory: return "MissingCapTrajectory";
        case Errc::InfeasibleDemand: return "InfeasibleDemand";
        case Errc::MissingCostTrack: return "MissingCostTrack";
        case Errc::NonFiniteCoefficient: return "NonFiniteCoefficient";
        case Errc::IterationLimit: return "IterationLimit";
        case Errc::NumericalBreakdown: return "NumericalBreakdown";
        case Errc::TooLarge: return "TooLarge";
        case Errc::NameTooLong: return "NameTooLong";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::MissingTable: return "MissingTable";
        case Errc::SchemaMismatch: return "SchemaMismatch";
        case Errc::NegativeQuantity: return "NegativeQuantity";
        case Errc::UncoveredPeriod: return "UncoveredPeriod";
        case Errc::ProfileGap: return "ProfileGap";
        case Errc::UntaggedRussianSupply: return "UntaggedRussianSupply";
        case Errc::NonOptimalSolution: return "NonOptimalSolution";
        case Errc::IoFailure: return "IoFailure";
        case Errc::UnknownSubcommand: return "UnknownSubcommand";
    }
    return "UnknownError";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace mhorizon
