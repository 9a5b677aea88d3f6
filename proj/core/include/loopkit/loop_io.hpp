#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "loopkit/table.hpp"

namespace loopkit {

struct LoopReadOptions {
  /// Relabel so the two-sided identity sits at index 0 instead of
  /// rejecting tables whose identity is elsewhere.
  bool normalize = false;
};

/// Parses the text loop format:
///
///     # comment lines may appear anywhere
///     loop <n>
///     <n rows of n space-separated base-10 indices>
///
/// Throws InputError on malformed text or when the result is not a loop
/// with identity 0 (after optional normalization).
Loop parse_loop(std::string_view text, const LoopReadOptions& options = {});

/// Canonical rendering: header line then one row per line, entries
/// separated by single spaces, trailing newline.
std::string format_loop(const CayleyTable& t);
inline std::string format_loop(const Loop& t) { return format_loop(t.table()); }

Loop read_loop_file(const std::filesystem::path& path, const LoopReadOptions& options = {});
void write_loop_file(const std::filesystem::path& path, const Loop& t);

}  // namespace loopkit
