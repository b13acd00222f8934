#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "mwvote/election.hpp"

namespace mwvote {

// Line-oriented election files:
//
//   # comment
//   candidates: a,b,c,d
//   vote: a > c > b > d
//   3 * vote: b > c > a > d
//
// Count lines expand in place. Blank lines are ignored.

/// Throws ParseError carrying the offending line number.
Election parse_election(std::string_view text);

/// Candidates in id order, one "vote:" line per vote in sequence order.
std::string serialize_election(const Election& e);

Election read_election_file(const std::filesystem::path& path);
void write_election_file(const std::filesystem::path& path, const Election& e,
                         std::string_view header_comment = {});

}  // namespace mwvote
