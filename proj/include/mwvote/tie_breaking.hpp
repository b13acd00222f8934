#pragma once

#include <cstddef>

namespace mwvote {

/// ParallelUniverses returns every committee reachable under some resolution
/// of internal ties; Lexicographic resolves each tie by smallest candidate id,
/// then lowest voter index.
enum class TieMode { ParallelUniverses, Lexicographic };

inline constexpr std::size_t kDefaultUniverseCap = 1'000'000;

}  // namespace mwvote
