#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "edgeideal/field.hpp"

namespace edgeideal::cli {

enum ExitCode : int {
    kSuccess = 0,
    kMismatch = 1,
    kUsage = 2,
    kResource = 3,
};

struct RunConfig {
    std::string command;
    std::vector<std::string> inputs;
    FieldSpec field = FieldSpec::rationals();
    int codim = 2;
    std::optional<int> max_n;
    int max_m = 4;
    int ferrers_n = 6;
    int random_complexes = 10000;
    int mv_splits = 200;
    std::uint64_t seed = 0x5eedULL;
    std::string format = "auto";
    std::string out_dir;
    bool json = false;
    bool verbose = false;
    bool timing = false;
    int jobs = 1;
    std::vector<int> lambda;
    std::vector<std::string> ids;
};

int cmd_analyze(const RunConfig& cfg, std::ostream& out);
int cmd_ferrers(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_reproduce(const RunConfig& cfg, std::ostream& out);

/// Parses arguments, dispatches, and maps errors to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace edgeideal::cli
