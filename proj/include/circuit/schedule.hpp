#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "circuit/ratio.hpp"

namespace circuit {

struct Move {
  Ratio miles;  // signed; positive is forward around the circuit
  friend bool operator==(const Move&, const Move&) = default;
};
struct Dump {
  long count;
  friend bool operator==(const Dump&, const Dump&) = default;
};
struct Take {
  long count;
  friend bool operator==(const Take&, const Take&) = default;
};
struct Unseal {
  friend bool operator==(const Unseal&, const Unseal&) = default;
};
struct Discard {
  friend bool operator==(const Discard&, const Discard&) = default;
};
struct Mark {
  std::string label;
  friend bool operator==(const Mark&, const Mark&) = default;
};

using Action = std::variant<Move, Dump, Take, Unseal, Discard, Mark>;

/// A single-walker plan. The walker leaves the base `phase` days after dawn
/// and performs `actions` back to back; positions are implicit.
struct Schedule {
  Ratio phase{0};
  std::vector<Action> actions;

  friend bool operator==(const Schedule&, const Schedule&) = default;

  /// Sum of |Move| in miles.
  [[nodiscard]] Ratio distance() const {
    Ratio total;
    for (const auto& a : actions)
      if (const auto* m = std::get_if<Move>(&a)) total += m->miles.abs();
    return total;
  }
};

class ScheduleParseError : public std::runtime_error {
 public:
  ScheduleParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

namespace detail {

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> split_tokens(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

inline long parse_count(const Token& tok, std::size_t line_no) {
  Ratio r;
  try {
    r = Ratio::parse(tok.text);
  } catch (const std::invalid_argument& e) {
    throw ScheduleParseError(line_no, tok.column, e.what());
  }
  if (!r.is_integer() || r.sign() <= 0 || !r.num().fits_slong_p())
    throw ScheduleParseError(line_no, tok.column, "box count must be a positive integer, got '" + std::string(tok.text) + "'");
  return r.to_long();
}

}  // namespace detail

/// Parses the line-oriented schedule format:
///   phase <ratio> | move <signed ratio> | dump <n> | take <n> | unseal | discard | mark <label>
/// '#' starts a comment. Errors carry the 1-based line and column.
inline Schedule parse_schedule(std::string_view text) {
  Schedule s;
  bool seen_phase = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    auto toks = detail::split_tokens(line);
    if (toks.empty()) continue;
    const auto& kw = toks[0];
    auto expect_args = [&](std::size_t n) {
      if (toks.size() - 1 != n)
        throw ScheduleParseError(line_no, kw.column,
                                 "'" + std::string(kw.text) + "' takes " + std::to_string(n) + " argument(s)");
    };
    auto ratio_arg = [&](const detail::Token& t) {
      try {
        return Ratio::parse(t.text);
      } catch (const std::invalid_argument& e) {
        throw ScheduleParseError(line_no, t.column, e.what());
      }
    };

    if (kw.text == "phase") {
      expect_args(1);
      if (seen_phase) throw ScheduleParseError(line_no, kw.column, "duplicate phase");
      Ratio p = ratio_arg(toks[1]);
      if (p.sign() < 0 || p >= Ratio(1))
        throw ScheduleParseError(line_no, toks[1].column, "phase " + p.str() + " out of range [0, 1)");
      s.phase = p;
      seen_phase = true;
    } else if (kw.text == "move") {
      expect_args(1);
      Ratio d = ratio_arg(toks[1]);
      if (d.is_zero()) throw ScheduleParseError(line_no, toks[1].column, "zero move");
      s.actions.emplace_back(Move{d});
    } else if (kw.text == "dump") {
      expect_args(1);
      s.actions.emplace_back(Dump{detail::parse_count(toks[1], line_no)});
    } else if (kw.text == "take") {
      expect_args(1);
      s.actions.emplace_back(Take{detail::parse_count(toks[1], line_no)});
    } else if (kw.text == "unseal") {
      expect_args(0);
      s.actions.emplace_back(Unseal{});
    } else if (kw.text == "discard") {
      expect_args(0);
      s.actions.emplace_back(Discard{});
    } else if (kw.text == "mark") {
      if (toks.size() < 2) throw ScheduleParseError(line_no, kw.column, "mark needs a label");
      // label runs from the first argument to the last non-space character
      std::size_t begin = toks[1].column - 1;
      std::size_t end = toks.back().column - 1 + toks.back().text.size();
      s.actions.emplace_back(Mark{std::string(line.substr(begin, end - begin))});
    } else {
      throw ScheduleParseError(line_no, kw.column, "unknown keyword '" + std::string(kw.text) + "'");
    }
  }
  return s;
}

inline std::string format_action(const Action& a) {
  struct Visitor {
    std::string operator()(const Move& m) const { return "move " + m.miles.str(); }
    std::string operator()(const Dump& d) const { return "dump " + std::to_string(d.count); }
    std::string operator()(const Take& t) const { return "take " + std::to_string(t.count); }
    std::string operator()(const Unseal&) const { return "unseal"; }
    std::string operator()(const Discard&) const { return "discard"; }
    std::string operator()(const Mark& m) const { return "mark " + m.label; }
  };
  return std::visit(Visitor{}, a);
}

/// Canonical text: a phase line followed by one action per line.
inline std::string format_schedule(const Schedule& s) {
  std::ostringstream os;
  os << "phase " << s.phase.str() << '\n';
  for (const auto& a : s.actions) os << format_action(a) << '\n';
  return os.str();
}

}  // namespace circuit
