#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "radsplit/integer.hpp"

namespace radsplit::cli {

/// One unit of work: a subcommand plus its arguments. Batch lines parse
/// into the same shape.
struct Request {
    std::string command;  // irreducible | split | cids | polygon | batch
    Z n;
    Z a;
    std::optional<Z> p;
    std::string format = "json";  // json | text
    std::optional<std::uint64_t> seed;
    std::optional<Z> phi_root;   // polygon: develop at x - r
    std::string batch_path;
};

struct Response {
    int exit_code = 0;
    std::string out;  // stdout payload (may be multi-line for batch)
    std::string err;  // structured error, empty on success
};

// exit codes
inline constexpr int kExitOk = 0;
inline constexpr int kExitMalformed = 1;
inline constexpr int kExitReducible = 2;
inline constexpr int kExitUnsupported = 3;

Response run(const Request& req);

/// Parses one newline-delimited batch request. Throws RangeError on
/// malformed documents.
Request parse_request_json(const std::string& line);

/// argv front end; returns the process exit code.
int main_entry(int argc, char** argv);

}  // namespace radsplit::cli
