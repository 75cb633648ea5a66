#pragma once

// Command line driver. Exit codes: 0 success, 1 failed verification, 2 bad input.

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace bbm::cli {

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Streams a JSONL list of nef partition records and emits, in input order,
/// every entry with at least two base point systems. Memory stays bounded by
/// a window of jobs * 16 lines.
int scan(std::istream& in, std::ostream& out, std::size_t jobs, bool record);

}  // namespace bbm::cli
