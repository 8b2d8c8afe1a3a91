#include "text.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <vector>

namespace cantor {

namespace {

// Single-pass cursor over the input; diagnostics carry 1-based line:column.
class Scanner {
 public:
  explicit Scanner(const std::string& text) : text_(text) {}

  [[noreturn]] void fail(const std::string& message) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(message, line, col);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(
               static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    return text_[pos_];
  }

  char take() {
    char c = peek();
    ++pos_;
    return c;
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool try_take(char c) {
    if (done() || text_[pos_] != c) return false;
    ++pos_;
    return true;
  }

  std::string fiber_token() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) ||
          std::string(":=,;|{}<>").find(c) != std::string::npos)
        break;
      ++pos_;
    }
    std::string token = text_.substr(start, pos_ - start);
    if (token.empty()) fail("expected a fiber label");
    if (!valid_fiber_label(token)) fail("malformed fiber label '" + token + "'");
    return token;
  }

  std::string bits() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (text_[pos_] == '0' || text_[pos_] == '1'))
      ++pos_;
    return text_.substr(start, pos_ - start);
  }

  std::uint64_t number() {
    skip_space();
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected a number");
    std::uint64_t value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      ++pos_;
    }
    return value;
  }

  std::uint64_t position() {
    skip_space();
    const std::size_t start = pos_;
    std::uint64_t value = number();
    if (value == 0) {
      pos_ = start;
      fail("positions are 1-based");
    }
    return value;
  }

  int bit() {
    char c = take();
    if (c != '0' && c != '1') fail("expected a bit");
    return c - '0';
  }

  void end() {
    if (!done()) fail("trailing input");
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

Point parse_point(const std::string& text) {
  Scanner s(text);
  std::string first = s.fiber_token();
  if (first == "zero" && s.done()) return Point{};
  std::map<std::string, FiberWord> words;
  std::string fiber = first;
  while (true) {
    s.expect('=');
    std::string transient = s.bits();
    s.expect('|');
    std::string period = s.bits();
    if (period.empty()) s.fail("period needs at least one bit");
    if (!words.emplace(fiber, FiberWord{transient, period}).second)
      s.fail("duplicate fiber '" + fiber + "'");
    if (!s.try_take(';')) break;
    fiber = s.fiber_token();
  }
  s.end();
  return Point::from_words(words);
}

Cylinder parse_cylinder(const std::string& text) {
  Scanner s(text);
  s.expect('{');
  std::vector<std::pair<Coordinate, int>> constraints;
  std::map<Coordinate, int> seen;
  if (!s.try_take('}')) {
    while (true) {
      std::string fiber = s.fiber_token();
      s.expect(':');
      std::uint64_t pos = s.position();
      s.expect('=');
      int bit = s.bit();
      Coordinate coord{fiber, pos};
      if (!seen.emplace(coord, bit).second)
        s.fail("duplicate coordinate " + fiber + ":" + std::to_string(pos));
      constraints.push_back({coord, bit});
      if (s.try_take('}')) break;
      s.expect(',');
    }
  }
  s.end();
  return Cylinder::from_constraints(constraints);
}

UIndex parse_index(const std::string& text) {
  Scanner s(text);
  s.expect('<');
  s.expect('{');
  std::set<std::string> fibers;
  while (true) {
    fibers.insert(s.fiber_token());
    if (s.try_take('}')) break;
    s.expect(',');
  }
  s.expect(',');
  std::uint64_t k = s.position();
  s.expect('>');
  s.end();
  return make_index(std::move(fibers), k);
}

SftSystem parse_sft(const std::string& text) {
  Scanner s(text);
  std::string key = s.fiber_token();
  if (key != "alphabet") s.fail("expected 'alphabet=N'");
  s.expect('=');
  std::uint64_t alphabet = s.number();
  if (alphabet < 2 || alphabet > 10)
    s.fail("alphabet size must be between 2 and 10");
  std::vector<std::string> forbidden;
  if (s.try_take(';')) {
    std::string forbid = s.fiber_token();
    if (forbid != "forbid") s.fail("expected 'forbid=...'");
    s.expect('=');
    while (!s.done()) {
      s.skip_space();
      std::string word;
      while (!s.done() && std::isdigit(static_cast<unsigned char>(s.peek())))
        word += s.take();
      if (word.empty()) s.fail("expected a forbidden word");
      forbidden.push_back(word);
      if (!s.try_take(',')) break;
    }
  }
  s.end();
  try {
    return make_sft(static_cast<int>(alphabet), std::move(forbidden));
  } catch (const std::invalid_argument& e) {
    s.fail(e.what());
  }
}

std::string print_point(const Point& p) {
  if (p.is_zero()) return "zero";
  std::ostringstream out;
  bool first = true;
  for (const auto& [fiber, word] : p.fibers()) {
    if (!first) out << ';';
    first = false;
    out << fiber << '=' << word.transient << '|' << word.period;
  }
  return out.str();
}

std::string print_cylinder(const Cylinder& c) {
  if (c.is_void()) return "VOID";
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [coord, bit] : c.constraints()) {
    if (!first) out << ',';
    first = false;
    out << coord.fiber << ':' << coord.pos << '=' << bit;
  }
  out << '}';
  return out.str();
}

std::string print_index(const UIndex& idx) {
  std::ostringstream out;
  out << "<{";
  bool first = true;
  for (const auto& fiber : idx.fibers) {
    if (!first) out << ',';
    first = false;
    out << fiber;
  }
  out << "}," << idx.k << '>';
  return out.str();
}

std::string print_sft(const SftSystem& sys) {
  std::ostringstream out;
  out << "alphabet=" << sys.alphabet;
  if (!sys.forbidden.empty()) {
    out << "; forbid=";
    bool first = true;
    for (const auto& word : sys.forbidden) {
      if (!first) out << ',';
      first = false;
      out << word;
    }
  }
  return out.str();
}

}  // namespace cantor
