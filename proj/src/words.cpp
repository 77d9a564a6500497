#include "earring/words.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <set>
#include <sstream>

#include "earring/errors.hpp"

namespace earring {

Letter inverse(Letter l) {
  return Letter{l.index, l.sign == Sign::plus ? Sign::minus : Sign::plus};
}

std::strong_ordering letter_cmp(Letter a, Letter b) {
  if (a.index != b.index) return a.index <=> b.index;
  if (a.sign == b.sign) return std::strong_ordering::equal;
  return a.sign == Sign::plus ? std::strong_ordering::less
                              : std::strong_ordering::greater;
}

MonoidWord::MonoidWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (const Letter& l : letters_) {
    if (l.index < 1) throw InputError("generator index must be >= 1");
  }
}

int MonoidWord::level() const {
  int lv = 0;
  for (const Letter& l : letters_) lv = std::max(lv, l.index);
  return lv;
}

MonoidWord concat(const MonoidWord& a, const MonoidWord& b) {
  std::vector<Letter> ls = a.letters();
  ls.insert(ls.end(), b.letters().begin(), b.letters().end());
  return MonoidWord(std::move(ls));
}

MonoidWord retract(const MonoidWord& w, int level) {
  if (level < 0) throw InputError("retraction level must be >= 0");
  std::vector<Letter> out;
  out.reserve(w.letters().size());
  for (const Letter& l : w.letters())
    if (l.index <= level) out.push_back(l);
  return MonoidWord(std::move(out));
}

int letter_count(const MonoidWord& w, int index) {
  if (index < 1) throw InputError("letter_count index must be >= 1");
  int n = 0;
  for (const Letter& l : w.letters())
    if (l.index == index) ++n;
  return n;
}

int exponent_sum(const MonoidWord& w, int index) {
  int n = 0;
  for (const Letter& l : w.letters())
    if (l.index == index) n += (l.sign == Sign::plus ? 1 : -1);
  return n;
}

std::strong_ordering length_lex_cmp(const MonoidWord& a, const MonoidWord& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (int i = 0; i < a.size(); ++i) {
    auto c = letter_cmp(a.letters()[i], b.letters()[i]);
    if (c != std::strong_ordering::equal) return c;
  }
  return std::strong_ordering::equal;
}

bool is_reduced(const MonoidWord& w) {
  for (int i = 0; i + 1 < w.size(); ++i)
    if (w.letters()[i + 1] == inverse(w.letters()[i])) return false;
  return true;
}

GroupWord::GroupWord(MonoidWord word) : word_(std::move(word)) {
  if (!is_reduced(word_)) throw InputError("word is not reduced: " + to_string(word_));
}

GroupWord reduce(const MonoidWord& w) {
  std::vector<Letter> stack;
  stack.reserve(w.letters().size());
  for (const Letter& l : w.letters()) {
    if (!stack.empty() && stack.back() == inverse(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return GroupWord(MonoidWord(std::move(stack)));
}

std::strong_ordering shortlex_cmp(const GroupWord& a, const GroupWord& b) {
  return length_lex_cmp(a.word(), b.word());
}

GroupWord reduced_product(const GroupWord& a, const GroupWord& b) {
  return reduce(concat(a.word(), b.word()));
}

std::vector<MonoidWord> delete_inessential(const MonoidWord& w) {
  std::vector<MonoidWord> out;
  std::set<std::string> seen;
  const auto& ls = w.letters();
  for (int i = 0; i < w.size(); ++i) {
    for (int j = i + 1; j <= w.size(); ++j) {
      MonoidWord sub(std::vector<Letter>(ls.begin() + i, ls.begin() + j));
      if (!reduce(sub).is_identity()) continue;
      std::vector<Letter> rest(ls.begin(), ls.begin() + i);
      rest.insert(rest.end(), ls.begin() + j, ls.end());
      MonoidWord res(std::move(rest));
      if (seen.insert(word_key(res)).second) out.push_back(std::move(res));
    }
  }
  return out;
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

  int read_nat() {
    skip_ws();
    if (pos < text.size() && text[pos] == '-') fail("exponent must be nonnegative");
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected a number");
    long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000000) fail("number too large");
      ++pos;
    }
    return static_cast<int>(v);
  }
};

void parse_terms(Cursor& c, std::vector<Letter>& out, bool top_level);

void parse_term(Cursor& c, std::vector<Letter>& out) {
  char ch = c.peek();
  if (ch == '(') {
    ++c.pos;
    std::vector<Letter> inner;
    parse_terms(c, inner, false);
    if (c.peek() != ')') c.fail("expected ')'");
    ++c.pos;
    if (c.peek() != '^') c.fail("expected '^' after ')'");
    ++c.pos;
    int k = c.read_nat();
    for (int r = 0; r < k; ++r) out.insert(out.end(), inner.begin(), inner.end());
    return;
  }
  if (ch == 'x' || ch == 'X') {
    Sign s = ch == 'x' ? Sign::plus : Sign::minus;
    ++c.pos;
    std::size_t at = c.pos;
    if (at >= c.text.size() || !std::isdigit(static_cast<unsigned char>(c.text[at])))
      c.fail("expected generator index");
    int idx = c.read_nat();
    if (idx < 1) throw ParseError("generator index must be >= 1", at);
    out.push_back(Letter{idx, s});
    return;
  }
  c.fail("expected a letter or '('");
}

void parse_terms(Cursor& c, std::vector<Letter>& out, bool top_level) {
  bool any = false;
  while (!c.done()) {
    char ch = c.peek();
    if (ch == ')') {
      if (top_level) c.fail("unmatched ')'");
      break;
    }
    parse_term(c, out);
    any = true;
  }
  if (!any) c.fail("empty word (write \"e\" for the identity)");
}

}  // namespace

MonoidWord parse_word(std::string_view text) {
  Cursor c{text};
  c.skip_ws();
  // "e" denotes the empty word and must stand alone.
  if (c.pos < text.size() && text[c.pos] == 'e') {
    ++c.pos;
    if (!c.done()) c.fail("'e' must stand alone");
    return MonoidWord();
  }
  std::vector<Letter> out;
  parse_terms(c, out, true);
  return MonoidWord(std::move(out));
}

std::string to_string(Letter l) {
  return (l.sign == Sign::plus ? "x" : "X") + std::to_string(l.index);
}

std::string to_string(const MonoidWord& w) {
  if (w.empty()) return "e";
  std::string s;
  for (int i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += to_string(w.letters()[i]);
  }
  return s;
}

std::string to_string(const GroupWord& w) { return to_string(w.word()); }

std::string word_key(const MonoidWord& w) {
  std::string s;
  s.reserve(w.letters().size() * 3);
  for (const Letter& l : w.letters()) {
    s += (l.sign == Sign::plus ? 'x' : 'X');
    s += std::to_string(l.index);
    s += '.';
  }
  return s;
}

std::vector<MonoidWord> read_word_lines(std::istream& in) {
  std::vector<MonoidWord> out;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size() || line[i] == '#') continue;
    out.push_back(parse_word(line));
  }
  return out;
}

}  // namespace earring
