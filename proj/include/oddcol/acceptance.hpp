#ifndef ODDCOL_ACCEPTANCE_HPP
#define ODDCOL_ACCEPTANCE_HPP

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace oddcol
{

struct AcceptanceConfig {
    /// Run the greedy criterion with witness protection switched off. The
    /// suite must then fail.
    bool skip_witness = false;
};

struct CriterionResult {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id = 0;
    std::vector<std::string> tags;  // matched by --filter, as is the id
    std::string title;
    double budget_seconds = 0.0;    // exceeding it fails the criterion
    std::function<CriterionResult(const AcceptanceConfig &)> run;
};

const std::vector<Criterion> &acceptance_criteria();

bool matches_filter(const Criterion &c, const std::string &filter);

/// Runs the selected criteria, printing one line each. Returns the number
/// of failures (0 if nothing matched the filter is an error: returns -1).
int run_acceptance(std::ostream &out, const std::string &filter = "", const AcceptanceConfig &cfg = {});

} // namespace oddcol

#endif // ODDCOL_ACCEPTANCE_HPP
