#include "loopkit/loop_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "loopkit/error.hpp"

namespace loopkit {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_index(std::string_view token, std::size_t line_no) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw InputError("line " + std::to_string(line_no) + ": '" + std::string(token) +
                     "' is not a base-10 index");
  }
  return value;
}

}  // namespace

Loop parse_loop(std::string_view text, const LoopReadOptions& options) {
  std::size_t n = 0;
  bool have_header = false;
  std::vector<std::vector<Element>> rows;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = split_ws(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (tokens.front().front() == '#') continue;

    if (!have_header) {
      if (tokens.size() != 2 || tokens[0] != "loop") {
        throw InputError("line " + std::to_string(line_no) + ": expected 'loop <n>' header");
      }
      n = parse_index(tokens[1], line_no);
      if (n == 0) throw InputError("loop order must be positive");
      have_header = true;
      continue;
    }
    if (rows.size() == n) {
      throw InputError("line " + std::to_string(line_no) + ": more than " + std::to_string(n) +
                       " rows");
    }
    if (tokens.size() != n) {
      throw InputError("line " + std::to_string(line_no) + ": row has " +
                       std::to_string(tokens.size()) + " entries, expected " + std::to_string(n));
    }
    std::vector<Element> row;
    row.reserve(n);
    for (auto tok : tokens) {
      const std::size_t v = parse_index(tok, line_no);
      if (v >= n) {
        throw InputError("line " + std::to_string(line_no) + ": entry " + std::to_string(v) +
                         " out of range");
      }
      row.push_back(static_cast<Element>(v));
    }
    rows.push_back(std::move(row));
    if (end == text.size()) break;
  }
  if (!have_header) throw InputError("missing 'loop <n>' header");
  if (rows.size() != n) {
    throw InputError("expected " + std::to_string(n) + " rows, found " +
                     std::to_string(rows.size()));
  }
  CayleyTable table = CayleyTable::from_rows(rows);
  if (options.normalize) table = normalize_identity(table);
  return Loop(std::move(table));
}

std::string format_loop(const CayleyTable& t) {
  std::string out = "loop " + std::to_string(t.order()) + "\n";
  for (Element x = 0; x < t.order(); ++x) {
    for (Element y = 0; y < t.order(); ++y) {
      if (y) out += ' ';
      out += std::to_string(t.at(x, y));
    }
    out += '\n';
  }
  return out;
}

Loop read_loop_file(const std::filesystem::path& path, const LoopReadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open loop file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_loop(buffer.str(), options);
}

void write_loop_file(const std::filesystem::path& path, const Loop& t) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write loop file '" + path.string() + "'");
  out << format_loop(t);
}

}  // namespace loopkit
