#include "mwvote/election_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace mwvote {
namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char ch) {
    return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n' || ch == '\v' || ch == '\f';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t at = s.find(sep, start);
    parts.push_back(trim(s.substr(start, at == std::string_view::npos ? s.npos : at - start)));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return parts;
}

bool starts_with_keyword(std::string_view line, std::string_view keyword, std::string_view& rest) {
  if (line.substr(0, keyword.size()) != keyword) return false;
  std::string_view after = trim(line.substr(keyword.size()));
  if (after.empty() || after.front() != ':') return false;
  rest = trim(after.substr(1));
  return true;
}

}  // namespace

Election parse_election(std::string_view text) {
  std::shared_ptr<const Roster> roster;
  std::vector<CandidateId> flat;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    std::string_view raw = text.substr(start, nl == text.npos ? text.npos : nl - start);
    start = nl == text.npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    std::string_view rest;
    if (starts_with_keyword(line, "candidates", rest)) {
      if (roster) throw ParseError(line_no, "duplicate candidates line");
      std::vector<std::string> labels;
      for (auto part : split(rest, ',')) {
        if (!is_valid_label(part)) throw ParseError(line_no, "invalid candidate label '" + std::string(part) + "'");
        labels.emplace_back(part);
      }
      try {
        roster = std::make_shared<const Roster>(std::move(labels));
      } catch (const DomainError& err) {
        throw ParseError(line_no, err.what());
      }
      continue;
    }

    long count = 1;
    std::string_view vote_part = line;
    // Labels may contain '*', so only a prefix before "vote:" is a multiplicity.
    if (const std::size_t star = line.find('*');
        !starts_with_keyword(line, "vote", rest) && star != std::string_view::npos) {
      const std::string_view num = trim(line.substr(0, star));
      const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), count);
      if (ec != std::errc{} || ptr != num.data() + num.size() || count < 1)
        throw ParseError(line_no, "vote multiplicity must be a positive integer");
      vote_part = trim(line.substr(star + 1));
    }
    if (!starts_with_keyword(vote_part, "vote", rest))
      throw ParseError(line_no, "expected 'candidates:' or 'vote:' line");
    if (!roster) throw ParseError(line_no, "vote before candidates line");

    const int m = roster->size();
    std::vector<CandidateId> ranking;
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    for (auto label : split(rest, '>')) {
      const auto id = roster->find(label);
      if (!id) throw ParseError(line_no, "unknown candidate '" + std::string(label) + "'");
      if (seen[static_cast<std::size_t>(*id)])
        throw ParseError(line_no, "candidate '" + std::string(label) + "' ranked twice");
      seen[static_cast<std::size_t>(*id)] = true;
      ranking.push_back(*id);
    }
    if (static_cast<int>(ranking.size()) != m)
      throw ParseError(line_no, "vote ranks " + std::to_string(ranking.size()) + " of " +
                                    std::to_string(m) + " candidates");
    for (long i = 0; i < count; ++i) flat.insert(flat.end(), ranking.begin(), ranking.end());
  }
  if (!roster) throw ParseError(0, "missing candidates line");
  if (flat.empty()) throw ParseError(0, "election has no votes");
  return Election(roster, std::move(flat));
}

std::string serialize_election(const Election& e) {
  std::string out = "candidates: ";
  const Roster& roster = e.roster();
  for (int c = 0; c < roster.size(); ++c) {
    if (c) out += ',';
    out += roster.label(c);
  }
  out += '\n';
  for (int v = 0; v < e.num_voters(); ++v) {
    out += "vote: ";
    for (int r = 1; r <= e.num_candidates(); ++r) {
      if (r > 1) out += " > ";
      out += roster.label(e.at_rank(v, r));
    }
    out += '\n';
  }
  return out;
}

Election read_election_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_election(buf.str());
}

void write_election_file(const std::filesystem::path& path, const Election& e,
                         std::string_view header_comment) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DomainError("cannot write " + path.string());
  if (!header_comment.empty()) {
    std::size_t start = 0;
    while (start < header_comment.size()) {
      const std::size_t nl = header_comment.find('\n', start);
      out << "# " << header_comment.substr(start, nl == header_comment.npos ? header_comment.npos : nl - start)
          << '\n';
      if (nl == header_comment.npos) break;
      start = nl + 1;
    }
  }
  out << serialize_election(e);
}

}  // namespace mwvote
