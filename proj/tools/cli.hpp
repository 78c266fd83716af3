#pragma once

#include "borelz/sft.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace borelz::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitFalse = 1,
    kExitUsage = 2,
    kExitCapacity = 3,
    kExitInternal = 4,
};

struct RunConfig {
    std::uint64_t budget = std::uint64_t{1} << 27;
    unsigned workers = 1;
    std::string cache_path; // empty: no cache
    bool records = false;   // key=value records instead of prose
};

// Generator sets of a sweep family: "pairs", "triples", "odd", "all".
// Every returned set has gcd 1 and max <= bound.
std::vector<GeneratorSet> enumerate_family(const std::string& family, std::uint32_t bound);

// Entry point shared by the executable and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace borelz::cli
