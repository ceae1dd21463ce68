#pragma once

// Line-oriented presentation file format:
//
//   presentation v1
//   rank <n>
//   meta <key> <value...>      (optional: family, provider, compressed,
//                               inner-relators)
//   gen <token>
//   rel <token[^-1]> <token[^-1]> ...
//
// Tokens are E[<letter>,<letter>], S[<name>] and G[<name>], where a letter is
// a<k> or a<k>^-.

#include <charconv>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "autfn/presentation.hpp"

namespace autfn {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column),
        message_(what) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  /// The message without the position prefix.
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

namespace detail {

/// Cursor over one line; columns are 1-based.
class LineCursor {
 public:
  LineCursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  bool done() const { return pos_ >= text_.size(); }
  std::size_t column() const { return pos_ + 1; }
  char peek() const { return done() ? '\0' : text_[pos_]; }

  void skip_spaces() {
    while (!done() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool consume(std::string_view s) {
    if (text_.substr(pos_, s.size()) == s) {
      pos_ += s.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view s) {
    if (!consume(s)) fail("expected '" + std::string(s) + "'");
  }

  std::string_view word() {
    std::size_t start = pos_;
    while (!done() && text_[pos_] != ' ' && text_[pos_] != '\t') ++pos_;
    return text_.substr(start, pos_ - start);
  }

  long number() {
    std::size_t start = pos_;
    long value = 0;
    auto [ptr, ec] =
        std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc() || ptr == text_.data() + start) fail("expected a number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  std::string until(char stop) {
    std::size_t start = pos_;
    while (!done() && text_[pos_] != stop) ++pos_;
    if (done()) fail(std::string("missing '") + stop + "'");
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(line_, column(), what);
  }
  [[noreturn]] void fail_at(std::size_t column, const std::string& what) const {
    throw ParseError(line_, column, what);
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

inline Letter parse_letter(LineCursor& c, int rank) {
  std::size_t col = c.column();
  c.expect("a");
  long k = c.number();
  if (k < 1 || k > rank) {
    c.fail_at(col, "letter index " + std::to_string(k) + " out of range for rank " +
                       std::to_string(rank));
  }
  int sign = 1;
  // "a3^-" but not the "^-1" inverse marker that may follow a whole token.
  if (c.consume("^-")) sign = -1;
  return Letter(static_cast<int>(k), sign);
}

inline GenSymbol parse_symbol(LineCursor& c, int rank) {
  std::size_t col = c.column();
  if (c.consume("E[")) {
    Letter a = parse_letter(c, rank);
    c.expect(",");
    Letter b = parse_letter(c, rank);
    c.expect("]");
    if (!valid_nielsen_pair(a, b)) {
      c.fail_at(col, "invalid Nielsen pair (" + to_string(a) + "," + to_string(b) + ")");
    }
    return NielsenGen{a, b};
  }
  if (c.consume("S[")) {
    std::string name = c.until(']');
    c.expect("]");
    if (name.empty()) c.fail_at(col, "empty symbol name");
    return SymGen{name};
  }
  if (c.consume("G[")) {
    std::string name = c.until(']');
    c.expect("]");
    if (name.empty()) c.fail_at(col, "empty symbol name");
    return AuxGen{name};
  }
  c.fail("expected a generator token E[..], S[..] or G[..]");
}

}  // namespace detail

/// Parses a bare word such as `a1 a2^- a3` (`1` for the empty word).
inline Word parse_word(std::string_view text, int rank, std::size_t line = 1) {
  detail::LineCursor c(text, line);
  Word w(rank);
  c.skip_spaces();
  if (c.consume("1")) {
    c.skip_spaces();
    if (!c.done()) c.fail("trailing input after empty word");
    return w;
  }
  while (!c.done()) {
    w.push_back(detail::parse_letter(c, rank));
    if (!c.done() && c.peek() != ' ' && c.peek() != '\t') c.fail("expected a space");
    c.skip_spaces();
  }
  return w;
}

inline std::string serialize(const Presentation& p) {
  std::ostringstream out;
  out << "presentation v1\n";
  out << "rank " << p.rank() << "\n";
  const PresentationMetadata& m = p.metadata();
  if (!m.family.empty()) out << "meta family " << m.family << "\n";
  if (!m.provider.empty()) out << "meta provider " << m.provider << "\n";
  if (m.compressed) out << "meta compressed 1\n";
  if (!m.inner_relators.empty()) {
    out << "meta inner-relators";
    for (std::size_t i : m.inner_relators) out << ' ' << i;
    out << "\n";
  }
  for (const GenSymbol& g : p.generators()) out << "gen " << token(g) << "\n";
  for (const Relator& r : p.relators()) {
    out << "rel " << to_string(r, p) << "\n";
  }
  return out.str();
}

inline Presentation parse(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::size_t start = 0; start <= text.size();) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();

  if (lines.empty() || lines[0] != "presentation v1") {
    throw ParseError(1, 1, "expected header 'presentation v1'");
  }
  if (lines.size() < 2) throw ParseError(2, 1, "expected 'rank <n>'");
  detail::LineCursor rank_line(lines[1], 2);
  rank_line.expect("rank ");
  long rank = rank_line.number();
  if (rank < 1 || rank > 1'000'000) rank_line.fail("rank out of range");
  if (!rank_line.done()) rank_line.fail("trailing input");

  Presentation p(static_cast<int>(rank));
  bool seen_rel = false;
  for (std::size_t li = 2; li < lines.size(); ++li) {
    const std::size_t line_no = li + 1;
    detail::LineCursor c(lines[li], line_no);
    if (lines[li].empty()) continue;
    std::string_view keyword = c.word();
    c.skip_spaces();
    if (keyword == "meta") {
      if (!p.generators().empty()) c.fail("meta lines must precede gen lines");
      std::string_view key = c.word();
      c.skip_spaces();
      PresentationMetadata& m = p.metadata();
      if (key == "family") {
        m.family = std::string(c.word());
      } else if (key == "provider") {
        m.provider = std::string(c.word());
      } else if (key == "compressed") {
        m.compressed = c.number() != 0;
      } else if (key == "inner-relators") {
        while (!c.done()) {
          m.inner_relators.push_back(static_cast<std::size_t>(c.number()));
          c.skip_spaces();
        }
      } else {
        c.fail("unknown meta key '" + std::string(key) + "'");
      }
      c.skip_spaces();
      if (!c.done()) c.fail("trailing input");
    } else if (keyword == "gen") {
      if (seen_rel) c.fail("gen lines must precede rel lines");
      std::size_t col = c.column();
      GenSymbol s = detail::parse_symbol(c, p.rank());
      c.skip_spaces();
      if (!c.done()) c.fail("trailing input");
      if (p.find(s)) c.fail_at(col, "duplicate generator " + token(s));
      p.add_generator(s);
    } else if (keyword == "rel") {
      seen_rel = true;
      Relator r;
      while (!c.done()) {
        std::size_t col = c.column();
        GenSymbol s = detail::parse_symbol(c, p.rank());
        auto id = p.find(s);
        if (!id) c.fail_at(col, "undeclared generator " + token(s));
        std::int8_t e = c.consume("^-1") ? -1 : 1;
        r.push_back({*id, e});
        if (!c.done() && c.peek() != ' ' && c.peek() != '\t') {
          c.fail("expected a space between tokens");
        }
        c.skip_spaces();
      }
      if (r.empty()) c.fail("empty relator");
      p.add_relator(std::move(r));
    } else {
      c.fail_at(1, "unknown line type '" + std::string(keyword) + "'");
    }
  }
  for (std::size_t i : p.metadata().inner_relators) {
    if (i >= p.relators().size()) {
      throw ParseError(1, 1, "inner-relators index " + std::to_string(i) +
                                 " out of range");
    }
  }
  return p;
}

}  // namespace autfn
