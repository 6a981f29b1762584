#pragma once

#include "mfc/presentation.hpp"
#include "mfc/series.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mfc {

/// Process exit codes of the `mfc` tool.
enum ExitCode : int {
    kExitClean = 0,
    kExitFlagged = 1,       // route disagreement, factorization failure, failed check, exhausted budget
    kExitParse = 2,         // unreadable or malformed input, bad command line
    kExitPrecondition = 3,  // input outside an operation's domain
};

struct RunConfig {
    std::string command;
    std::string input;
    Target target = Target::Cp;
    std::vector<int> dims;
    std::optional<int> max_dim;
    int max_degree = 10;
    Convention convention = Convention::ExteriorOnOdd;
    bool json = false;
    std::int64_t budget_words = 2'000'000;
    int shift_search_bound = 8;
    // allday
    bool check_bubenik = false;
    bool product = false;
    // porter
    int porter_n = 0;
    int porter_k = 0;
};

int run_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_decompose(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_loop_homology(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_allday(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_porter(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_check(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses `args` (without the program name), dispatches, and maps exceptions to exit codes.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mfc
