// Command-line front end, kept as a library function so the dispatch logic
// and exit codes are testable without spawning processes.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cpf/verify.hpp"

namespace cpf::cli {

enum class Format { text, json, latex };

struct Invocation {
    enum class Command { compute, axis, verify, batch } command = Command::compute;
    std::string braid;
    std::string colors;
    Format format = Format::text;
    verify::CheckConfig config;
    std::vector<std::string> checks;  // empty = all
};

/// Maps "text" / "json" / "latex"; anything else throws invalid_argument.
Format parse_format(const std::string& name);

/// Runs one invocation. Returns 0 on success, 1 on input error or failed
/// verification, 2 on an internal invariant violation (failed exact
/// division). Batch mode reads one JSON task per line from `in`, emits one
/// result line each, and never aborts the batch on a bad line.
int run(const Invocation& inv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cpf::cli
