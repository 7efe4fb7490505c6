#ifndef ODDCOL_OUTCOME_HPP
#define ODDCOL_OUTCOME_HPP

#include "oddcol/colouring.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace oddcol
{

enum class Status { sat, unsat, gave_up };

inline std::string_view to_string(Status s)
{
    switch (s) {
    case Status::sat: return "SAT";
    case Status::unsat: return "UNSAT";
    case Status::gave_up: return "GaveUp";
    }
    return "?";
}

/// Result of a solver or sampler run. The certificate is present iff SAT.
struct SolveOutcome {
    Status status = Status::gave_up;
    std::optional<Colouring> certificate;
    std::uint64_t work = 0;  // search nodes (exact) or resamplings (samplers)
    double millis = 0.0;

    bool sat() const { return status == Status::sat; }
};

} // namespace oddcol

#endif // ODDCOL_OUTCOME_HPP
