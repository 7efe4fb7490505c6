#ifndef ODDCOL_PLAN_HPP
#define ODDCOL_PLAN_HPP

#include "oddcol/sampler.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace oddcol
{

/// One line of a plan file: `<graph-file-or-genspec> <algo> <k> <seed> <cap>`.
struct PlanRow {
    std::string instance;
    std::string algorithm;
    int k = 0;
    std::uint64_t seed = 0;
    std::uint64_t cap = 0;
};

/// Parses and validates a plan. Relative graph paths are resolved against
/// base_dir. Throws ParseError on a malformed line, unknown algorithm or
/// missing file.
std::vector<PlanRow> parse_plan(std::istream &in, const std::string &base_dir = ".");

/// Runs one row. Failures are recorded in the record, never thrown.
TrialRecord run_trial(const PlanRow &row);

/// Runs every row on `threads` workers; records come back in plan order.
std::vector<TrialRecord> run_plan(const std::vector<PlanRow> &rows, int threads = 1);

std::string trial_csv_header(bool timing);
std::string trial_csv_row(const TrialRecord &r, bool timing);
void write_trials_csv(std::ostream &out, const std::vector<TrialRecord> &records, bool timing);

} // namespace oddcol

#endif // ODDCOL_PLAN_HPP
