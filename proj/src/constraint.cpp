// Copyright 2026 The scenforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "scenforge/constraint.hpp"

#include "scenforge/error.hpp"

#include <array>
#include <deque>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace scenforge {

struct Formula::Node {
  Kind kind;
  std::string id;
  std::vector<Formula> children;
};

Formula Formula::var(std::string id) {
  return Formula(std::make_shared<const Node>(Node{Kind::Var, std::move(id), {}}));
}

Formula Formula::negation(Formula child) {
  return Formula(std::make_shared<const Node>(Node{Kind::Not, {}, {std::move(child)}}));
}

Formula Formula::conjunction(Formula left, Formula right) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::And, {}, {std::move(left), std::move(right)}}));
}

Formula Formula::disjunction(Formula left, Formula right) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::Or, {}, {std::move(left), std::move(right)}}));
}

Formula Formula::implication(Formula left, Formula right) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::Implies, {}, {std::move(left), std::move(right)}}));
}

Formula::Kind Formula::kind() const { return node_->kind; }
const std::string& Formula::id() const { return node_->id; }
const Formula& Formula::left() const { return node_->children.at(0); }
const Formula& Formula::right() const { return node_->children.at(1); }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.id() != b.id()) return false;
  const auto& ac = a.node_->children;
  const auto& bc = b.node_->children;
  if (ac.size() != bc.size()) return false;
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (!(ac[i] == bc[i])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

enum class Tok : std::uint8_t { Ident, Not, And, Or, Arrow, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based
};

constexpr std::size_t kMaxDepth = 512;

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::Ident: return "identifier \"" + t.text + "\"";
    case Tok::End: return "end of input";
    default: return "'" + t.text + "'";
  }
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    const std::size_t col = i + 1;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
    } else if (c == '!') {
      out.push_back({Tok::Not, "!", col});
      ++i;
    } else if (c == '&') {
      out.push_back({Tok::And, "&", col});
      ++i;
    } else if (c == '|') {
      out.push_back({Tok::Or, "|", col});
      ++i;
    } else if (c == '(') {
      out.push_back({Tok::LParen, "(", col});
      ++i;
    } else if (c == ')') {
      out.push_back({Tok::RParen, ")", col});
      ++i;
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({Tok::Arrow, "->", col});
      i += 2;
    } else if ((c >= 'a' && c <= 'z') || c == '_') {
      std::size_t j = i;
      while (j < text.size() && ((text[j] >= 'a' && text[j] <= 'z') || text[j] == '_' ||
                                 (text[j] >= '0' && text[j] <= '9'))) {
        ++j;
      }
      out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), col});
      i = j;
    } else {
      std::string shown = (static_cast<unsigned char>(c) < 0x20 || static_cast<unsigned char>(c) >= 0x7f)
                              ? "byte 0x" + [&] {
                                  std::ostringstream os;
                                  os << std::hex << static_cast<int>(static_cast<unsigned char>(c));
                                  return os.str();
                                }()
                              : "'" + std::string(1, c) + "'";
      throw FormulaError("illegal character " + shown + " at column " + std::to_string(col), 1, col);
    }
  }
  out.push_back({Tok::End, "", text.size() + 1});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula parse() {
    if (peek().kind == Tok::End) {
      throw FormulaError("empty formula", 1, 1);
    }
    Formula f = implication(0);
    if (peek().kind != Tok::End) {
      fail("unexpected " + describe(peek()) + " after complete formula");
    }
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw FormulaError(what + " at column " + std::to_string(peek().column), 1, peek().column);
  }

  void check_depth(std::size_t depth) const {
    if (depth > kMaxDepth) fail("formula nested too deeply");
  }

  Formula implication(std::size_t depth) {
    check_depth(depth);
    Formula lhs = disjunction(depth + 1);
    if (peek().kind == Tok::Arrow) {
      advance();
      return Formula::implication(std::move(lhs), implication(depth + 1));
    }
    return lhs;
  }

  Formula disjunction(std::size_t depth) {
    Formula lhs = conjunction(depth + 1);
    while (peek().kind == Tok::Or) {
      advance();
      lhs = Formula::disjunction(std::move(lhs), conjunction(depth + 1));
    }
    return lhs;
  }

  Formula conjunction(std::size_t depth) {
    Formula lhs = unary(depth + 1);
    while (peek().kind == Tok::And) {
      advance();
      lhs = Formula::conjunction(std::move(lhs), unary(depth + 1));
    }
    return lhs;
  }

  Formula unary(std::size_t depth) {
    check_depth(depth);
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Not:
        advance();
        return Formula::negation(unary(depth + 1));
      case Tok::LParen: {
        advance();
        Formula inner = implication(depth + 1);
        if (peek().kind != Tok::RParen) {
          fail("expected ')' but found " + describe(peek()));
        }
        advance();
        return inner;
      }
      case Tok::Ident:
        return Formula::var(advance().text);
      default:
        fail("expected identifier, '!' or '(' but found " + describe(t));
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

void render(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Var:
      out += f.id();
      return;
    case Formula::Kind::Not:
      out += '!';
      render(f.left(), out);
      return;
    default:
      break;
  }
  const char* op = f.kind() == Formula::Kind::And ? " & " : f.kind() == Formula::Kind::Or ? " | " : " -> ";
  out += '(';
  render(f.left(), out);
  out += op;
  render(f.right(), out);
  out += ')';
}

void collect_ids(const Formula& f, std::vector<std::string>& out,
                 std::unordered_set<std::string>& seen) {
  if (f.kind() == Formula::Kind::Var) {
    if (seen.insert(f.id()).second) out.push_back(f.id());
    return;
  }
  collect_ids(f.left(), out, seen);
  if (f.kind() != Formula::Kind::Not) collect_ids(f.right(), out, seen);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(tokenize(text)).parse(); }

std::string to_string(const Formula& formula) {
  std::string out;
  render(formula, out);
  return out;
}

std::vector<std::string> identifiers(const Formula& formula) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  collect_ids(formula, out, seen);
  return out;
}

bool evaluate(const Formula& formula, const Scenario& scenario) {
  switch (formula.kind()) {
    case Formula::Kind::Var: return scenario.contains(formula.id());
    case Formula::Kind::Not: return !evaluate(formula.left(), scenario);
    case Formula::Kind::And:
      return evaluate(formula.left(), scenario) && evaluate(formula.right(), scenario);
    case Formula::Kind::Or:
      return evaluate(formula.left(), scenario) || evaluate(formula.right(), scenario);
    case Formula::Kind::Implies:
      return !evaluate(formula.left(), scenario) || evaluate(formula.right(), scenario);
  }
  return false;
}

std::vector<ConstraintSource> parse_constraints(std::string_view content) {
  std::vector<ConstraintSource> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= content.size()) {
    std::size_t end = content.find('\n', start);
    if (end == std::string_view::npos) end = content.size();
    ++line_no;
    const std::string_view raw = content.substr(start, end - start);
    const std::string_view line = trim(raw);
    if (!line.empty() && line.front() != '#') {
      try {
        out.push_back({parse_formula(raw), std::string(line), line_no});
      } catch (const FormulaError& e) {
        throw FormulaError("line " + std::to_string(line_no) + ": " + e.what(), line_no, e.column());
      }
    }
    if (end == content.size()) break;
    start = end + 1;
  }
  return out;
}

std::vector<ConstraintSource> load_constraints_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(path.string() + ": cannot open constraint file");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_constraints(buf.str());
  } catch (const FormulaError& e) {
    throw FormulaError(path.string() + ":" + e.what(), e.line(), e.column());
  }
}

// ---------------------------------------------------------------------------
// Binding and evaluation
// ---------------------------------------------------------------------------

namespace {

inline Truth tri_not(Truth a) {
  if (a == Truth::Unknown) return a;
  return a == Truth::True ? Truth::False : Truth::True;
}

inline Truth tri_and(Truth a, Truth b) {
  if (a == Truth::False || b == Truth::False) return Truth::False;
  if (a == Truth::True && b == Truth::True) return Truth::True;
  return Truth::Unknown;
}

inline Truth tri_or(Truth a, Truth b) {
  if (a == Truth::True || b == Truth::True) return Truth::True;
  if (a == Truth::False && b == Truth::False) return Truth::False;
  return Truth::Unknown;
}

}  // namespace

ConstraintSet bind_constraints(const std::vector<ConstraintSource>& sources, const Catalog& catalog) {
  std::vector<UnresolvedIdentifier> unresolved;
  for (const auto& src : sources) {
    for (const auto& id : identifiers(src.formula)) {
      if (!catalog.contains(id)) unresolved.push_back({id, src.line});
    }
  }
  if (!unresolved.empty()) {
    std::string msg = "unknown identifier";
    msg += unresolved.size() > 1 ? "s: " : ": ";
    for (std::size_t i = 0; i < unresolved.size(); ++i) {
      if (i > 0) msg += ", ";
      msg += "\"" + unresolved[i].id + "\"";
      if (unresolved[i].line > 0) msg += " (line " + std::to_string(unresolved[i].line) + ")";
    }
    throw BindError(msg, std::move(unresolved));
  }

  ConstraintSet set;
  set.domain_size_ = catalog.size();
  set.watchers_.assign(catalog.size(), {});
  for (const auto& src : sources) {
    ConstraintSet::Program prog;
    // Postfix order: operands before their operator.
    std::vector<std::pair<const Formula*, bool>> stack{{&src.formula, false}};
    while (!stack.empty()) {
      auto [node, expanded] = stack.back();
      stack.pop_back();
      if (node->kind() == Formula::Kind::Var) {
        const auto idx = *catalog.index_of(node->id());
        prog.ops.push_back({Formula::Kind::Var, static_cast<std::uint32_t>(idx)});
        if (std::find(prog.vars.begin(), prog.vars.end(), idx) == prog.vars.end()) {
          prog.vars.push_back(idx);
        }
        continue;
      }
      if (expanded) {
        prog.ops.push_back({node->kind(), 0});
        continue;
      }
      stack.push_back({node, true});
      if (node->kind() != Formula::Kind::Not) stack.push_back({&node->right(), false});
      stack.push_back({&node->left(), false});
    }
    const std::size_t index = set.formulas_.size();
    for (auto v : prog.vars) set.watchers_[v].push_back(index);
    set.formulas_.push_back(src.formula);
    set.source_lines_.push_back(src.text.empty() ? to_string(src.formula) : src.text);
    set.compiled_.push_back(std::move(prog));
  }
  return set;
}

ConstraintSet bind_constraints(const std::vector<Formula>& formulas, const Catalog& catalog) {
  std::vector<ConstraintSource> sources;
  sources.reserve(formulas.size());
  for (const auto& f : formulas) sources.push_back({f, to_string(f), 0});
  return bind_constraints(sources, catalog);
}

bool ConstraintSet::evaluate(std::size_t formula_index, std::span<const std::uint8_t> membership) const {
  const auto& ops = compiled_.at(formula_index).ops;
  std::array<bool, 64> small{};
  std::vector<bool> large;
  const bool use_small = ops.size() <= small.size();
  if (!use_small) large.resize(ops.size());
  std::size_t top = 0;
  auto at = [&](std::size_t i) -> auto { return use_small ? small[i] : static_cast<bool>(large[i]); };
  auto put = [&](std::size_t i, bool v) {
    if (use_small) small[i] = v;
    else large[i] = v;
  };
  for (const auto& op : ops) {
    switch (op.kind) {
      case Formula::Kind::Var: put(top++, membership[op.var] != 0); break;
      case Formula::Kind::Not: put(top - 1, !at(top - 1)); break;
      case Formula::Kind::And: put(top - 2, at(top - 2) && at(top - 1)); --top; break;
      case Formula::Kind::Or: put(top - 2, at(top - 2) || at(top - 1)); --top; break;
      case Formula::Kind::Implies: put(top - 2, !at(top - 2) || at(top - 1)); --top; break;
    }
  }
  return at(0);
}

bool ConstraintSet::satisfied_by(std::span<const std::uint8_t> membership) const {
  for (std::size_t i = 0; i < compiled_.size(); ++i) {
    if (!evaluate(i, membership)) return false;
  }
  return true;
}

Truth ConstraintSet::evaluate3(std::size_t formula_index, std::span<const Truth> state) const {
  const auto& ops = compiled_[formula_index].ops;
  std::array<Truth, 64> small{};
  std::vector<Truth> large;
  Truth* stack = small.data();
  if (ops.size() > small.size()) {
    large.resize(ops.size());
    stack = large.data();
  }
  std::size_t top = 0;
  for (const auto& op : ops) {
    switch (op.kind) {
      case Formula::Kind::Var: stack[top++] = state[op.var]; break;
      case Formula::Kind::Not: stack[top - 1] = tri_not(stack[top - 1]); break;
      case Formula::Kind::And: stack[top - 2] = tri_and(stack[top - 2], stack[top - 1]); --top; break;
      case Formula::Kind::Or: stack[top - 2] = tri_or(stack[top - 2], stack[top - 1]); --top; break;
      case Formula::Kind::Implies:
        stack[top - 2] = tri_or(tri_not(stack[top - 2]), stack[top - 1]);
        --top;
        break;
    }
  }
  return stack[0];
}

// ---------------------------------------------------------------------------
// Propagation
// ---------------------------------------------------------------------------

Truth PartialAssignment::get(const Catalog& catalog, std::string_view id) const {
  auto idx = catalog.index_of(id);
  if (!idx) throw UnknownFeature("unknown feature id \"" + std::string(id) + "\"");
  return get(*idx);
}

void PartialAssignment::set(const Catalog& catalog, std::string_view id, Truth value) {
  auto idx = catalog.index_of(id);
  if (!idx) throw UnknownFeature("unknown feature id \"" + std::string(id) + "\"");
  set(*idx, value);
}

namespace detail {

std::optional<std::size_t> propagate_in_place(const ConstraintSet& constraints,
                                              std::vector<Truth>& state,
                                              std::span<const std::size_t> changed) {
  if (constraints.empty()) return std::nullopt;
  std::deque<std::size_t> queue;
  std::vector<std::uint8_t> queued(constraints.size(), 0);
  auto enqueue = [&](std::size_t f) {
    if (!queued[f]) {
      queued[f] = 1;
      queue.push_back(f);
    }
  };
  if (changed.empty()) {
    for (std::size_t f = 0; f < constraints.size(); ++f) enqueue(f);
  } else {
    for (auto v : changed) {
      for (auto f : constraints.watchers(v)) enqueue(f);
    }
  }

  while (!queue.empty()) {
    const std::size_t f = queue.front();
    queue.pop_front();
    queued[f] = 0;

    const Truth now = constraints.evaluate3(f, state);
    if (now == Truth::False) return f;
    if (now == Truth::True) continue;

    for (auto v : constraints.variables(f)) {
      if (state[v] != Truth::Unknown) continue;
      state[v] = Truth::True;
      const Truth if_true = constraints.evaluate3(f, state);
      state[v] = Truth::False;
      const Truth if_false = constraints.evaluate3(f, state);
      state[v] = Truth::Unknown;
      if (if_true == Truth::False && if_false == Truth::False) return f;
      if (if_true == Truth::False || if_false == Truth::False) {
        state[v] = if_true == Truth::False ? Truth::False : Truth::True;
        for (auto g : constraints.watchers(v)) enqueue(g);
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

PropagationResult propagate(const ConstraintSet& constraints, PartialAssignment partial) {
  if (!constraints.empty() && partial.size() != constraints.domain_size()) {
    throw Error("partial assignment covers " + std::to_string(partial.size()) +
                " features but the constraints were bound to " +
                std::to_string(constraints.domain_size()));
  }
  if (auto conflict = detail::propagate_in_place(constraints, partial.mutable_values(), {})) {
    return Conflict{*conflict};
  }
  return partial;
}

}  // namespace scenforge
