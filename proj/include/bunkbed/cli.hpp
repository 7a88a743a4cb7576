#ifndef BUNKBED_CLI_HPP
#define BUNKBED_CLI_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

namespace bunkbed {

// One parsed invocation. Rationals stay as strings so the config echo in the
// report is byte-stable.
struct RunConfig {
    std::string command; // bunkbed|cuts|poly|verify|epsilon|simulate|oracle-compare|sweep
    std::string graph_path;
    int u = -1;
    int v = -1;
    int r_max = 2;
    bool r_max_given = false;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    std::string precision = "1/1024";
    std::string epsilon = "1/100";
    std::string uniform; // empty = not given; "true" (bare flag) = symbolic only
    int max_vertices = 4;
    unsigned threads = 1;
    int edge_cap = 22;
    std::string out_path; // empty = stdout
};

struct RunResult {
    int exit_code = 0; // 0 pass, 1 checks failed, 2 invalid input / refusal
    nlohmann::json report;
    std::string human; // one-line summary for stderr
};

RunResult run_command(const RunConfig& config);

} // namespace bunkbed

#endif
