#include "loopkit/identity.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "loopkit/parallel.hpp"

namespace loopkit {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Identity parse() {
    Identity id;
    id.lhs.root = term(id.lhs);
    expect('=');
    id.rhs.root = term(id.rhs);
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    if (letters_.size() > kMaxIdentityVariables) {
      throw IdentitySyntaxError(1, "at most " + std::to_string(kMaxIdentityVariables) +
                                       " variables are supported, got " +
                                       std::to_string(letters_.size()));
    }
    id.variables.assign(letters_.begin(), letters_.end());
    std::sort(id.variables.begin(), id.variables.end());
    for (IdentityTerm* side : {&id.lhs, &id.rhs}) {
      for (auto& node : side->nodes) {
        if (node.kind == TermKind::variable) {
          const char letter = static_cast<char>(node.var);
          node.var = static_cast<int>(
              std::find(id.variables.begin(), id.variables.end(), letter) - id.variables.begin());
        }
      }
    }
    return id;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw IdentitySyntaxError(pos_ + 1, message);
  }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) {
      fail(pos_ < text_.size() ? "expected '" + std::string(1, c) + "', found '" +
                                     std::string(1, text_[pos_]) + "'"
                               : "expected '" + std::string(1, c) + "' before end of input");
    }
    ++pos_;
  }

  static int push(IdentityTerm& t, TermNode node) {
    t.nodes.push_back(node);
    return static_cast<int>(t.nodes.size()) - 1;
  }

  int term(IdentityTerm& t) {
    int left = factor(t);
    while (peek('*')) {
      ++pos_;
      const int right = factor(t);
      left = push(t, {TermKind::mul, -1, left, right});
    }
    return left;
  }

  int factor(IdentityTerm& t) {
    int left = atom(t);
    for (;;) {
      if (peek('\\')) {
        ++pos_;
        const int right = atom(t);
        left = push(t, {TermKind::ldiv, -1, left, right});
      } else if (peek('/')) {
        ++pos_;
        const int right = atom(t);
        left = push(t, {TermKind::rdiv, -1, left, right});
      } else {
        return left;
      }
    }
  }

  int atom(IdentityTerm& t) {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      const int inner = term(t);
      expect(')');
      return inner;
    }
    if (c == 'e') {
      ++pos_;
      return push(t, {TermKind::identity, -1, -1, -1});
    }
    if (c >= 'a' && c <= 'z') {
      ++pos_;
      if (pos_ < text_.size() && text_[pos_] >= 'a' && text_[pos_] <= 'z') {
        fail("variables are single letters; write products with '*'");
      }
      if (std::find(letters_.begin(), letters_.end(), c) == letters_.end()) letters_.push_back(c);
      // Letters are resolved to variable indices once all are known.
      return push(t, {TermKind::variable, static_cast<int>(c), -1, -1});
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<char> letters_;
};

std::string render(const IdentityTerm& t, int node, std::span<const char> vars, bool in_factor) {
  const auto& n = t.nodes[node];
  switch (n.kind) {
    case TermKind::variable:
      return std::string(1, vars[n.var]);
    case TermKind::identity:
      return "e";
    case TermKind::mul: {
      const std::string s = render(t, n.left, vars, false) + "*" + render(t, n.right, vars, true);
      return in_factor ? "(" + s + ")" : s;
    }
    case TermKind::ldiv:
    case TermKind::rdiv: {
      // Division is left-associative, so a division on the right needs
      // parentheses; a product there is already wrapped.
      const auto rk = t.nodes[n.right].kind;
      std::string right = render(t, n.right, vars, true);
      if (rk == TermKind::ldiv || rk == TermKind::rdiv) right = "(" + right + ")";
      return render(t, n.left, vars, true) + (n.kind == TermKind::ldiv ? "\\" : "/") + right;
    }
  }
  return {};
}

}  // namespace

Identity parse_identity(std::string_view text) { return Parser(text).parse(); }

std::vector<Identity> parse_identity_list(std::string_view text) {
  std::vector<Identity> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;
    try {
      out.push_back(parse_identity(line));
    } catch (const IdentitySyntaxError& e) {
      throw IdentitySyntaxError(e.position(), "line " + std::to_string(line_no) + ", " + e.what());
    }
  }
  return out;
}

std::vector<Identity> read_identity_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open identity file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_identity_list(buffer.str());
}

std::string render_term(const IdentityTerm& term, std::span<const char> variables) {
  return render(term, term.root, variables, false);
}

std::string Identity::to_string() const {
  return render_term(lhs, variables) + " = " + render_term(rhs, variables);
}

Element evaluate_term(const Loop& t, const IdentityTerm& term, std::span<const Element> values) {
  auto eval = [&](auto&& self, int node) -> Element {
    const auto& n = term.nodes[node];
    switch (n.kind) {
      case TermKind::variable:
        return values[n.var];
      case TermKind::identity:
        return kIdentity;
      case TermKind::mul:
        return t.mul(self(self, n.left), self(self, n.right));
      case TermKind::ldiv:
        return t.ldiv(self(self, n.left), self(self, n.right));
      case TermKind::rdiv:
        return t.rdiv(self(self, n.left), self(self, n.right));
    }
    return kIdentity;
  };
  return eval(eval, term.root);
}

VarietyReport verify_identity(const Loop& t, const Identity& identity) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = t.order();
  const std::size_t k = identity.variables.size();
  VarietyReport report;
  report.variety = "identity";
  report.note("identity", identity.to_string());

  // Assignments are enumerated as base-n counters; the outer scan splits on
  // the first variable.
  auto scan = [&](std::size_t first) -> std::optional<std::vector<Element>> {
    std::vector<Element> values(k, 0);
    if (k > 0) values[0] = static_cast<Element>(first);
    for (;;) {
      if (evaluate_term(t, identity.lhs, values) != evaluate_term(t, identity.rhs, values)) {
        return values;
      }
      std::size_t i = k;
      while (i > 1) {
        --i;
        if (++values[i] < n) break;
        values[i] = 0;
        if (i == 1) return std::nullopt;
      }
      if (k <= 1) return std::nullopt;
    }
  };
  const auto hit = first_hit(k == 0 ? 1 : n, scan);
  if (hit) {
    report.pass = false;
    report.witness = hit->second;
    report.equation = identity.to_string();
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace loopkit
