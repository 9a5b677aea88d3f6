#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "loopkit/error.hpp"
#include "loopkit/table.hpp"
#include "loopkit/varieties.hpp"

namespace loopkit {

/// Thrown by parse_identity; `position()` is the 1-based column of the
/// offending character (one past the end for unexpected end of input).
class IdentitySyntaxError : public InputError {
 public:
  IdentitySyntaxError(std::size_t position, const std::string& message)
      : InputError("column " + std::to_string(position) + ": " + message), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

enum class TermKind { variable, identity, mul, ldiv, rdiv };

struct TermNode {
  TermKind kind = TermKind::identity;
  int var = -1;    // index into Identity::variables for TermKind::variable
  int left = -1;   // child node indices for the binary kinds
  int right = -1;
};

/// A term stored as a flat node array; `root` indexes `nodes`.
struct IdentityTerm {
  std::vector<TermNode> nodes;
  int root = -1;
};

inline constexpr std::size_t kMaxIdentityVariables = 4;

/// lhs = rhs, universally quantified over `variables` (sorted letters).
struct Identity {
  IdentityTerm lhs;
  IdentityTerm rhs;
  std::vector<char> variables;

  /// Canonical text: fully parenthesized where the grammar needs it, single
  /// spaces around '='.
  std::string to_string() const;
};

/// Grammar (whitespace ignored):
///
///     identity := term '=' term
///     term     := factor ('*' factor)*          left-associative, loosest
///     factor   := atom (('\' | '/') atom)*      left-associative
///     atom     := letter | 'e' | '(' term ')'
///
/// Letters other than `e` are variables; at most four distinct ones.
Identity parse_identity(std::string_view text);

/// One identity per non-blank line; `#` starts a comment line.
std::vector<Identity> parse_identity_list(std::string_view text);
std::vector<Identity> read_identity_file(const std::filesystem::path& path);

std::string render_term(const IdentityTerm& term, std::span<const char> variables);

/// Evaluates with `values[i]` bound to variable i.
Element evaluate_term(const Loop& t, const IdentityTerm& term, std::span<const Element> values);

/// Exhaustive check over all assignments, variables in alphabetical order
/// and assignments in lexicographic order; the first violation is reported.
VarietyReport verify_identity(const Loop& t, const Identity& identity);

}  // namespace loopkit
