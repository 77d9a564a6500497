#include "earring/templates.hpp"

#include <cctype>

#include "earring/errors.hpp"

namespace earring {

int WordTemplate::IndexExpr::value(int n) const {
  return parametric ? n + offset : offset;
}

namespace {

struct TCursor {
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

}  // namespace

namespace {
using IndexExpr = WordTemplate::IndexExpr;

IndexExpr read_index_expr(TCursor& c) {
  c.skip_ws();
  if (c.peek() == '%') {
    ++c.pos;
    if (c.pos < c.text.size() && c.text[c.pos] == 'n') {
      ++c.pos;
      return IndexExpr{true, 0};
    }
    if (c.pos < c.text.size() && c.text[c.pos] == '(') {
      ++c.pos;
      if (c.peek() != 'n') c.fail("expected 'n' in %(n+k)");
      ++c.pos;
      if (c.peek() != '+') c.fail("expected '+' in %(n+k)");
      ++c.pos;
      int k = c.read_nat();
      if (c.peek() != ')') c.fail("expected ')' in %(n+k)");
      ++c.pos;
      return IndexExpr{true, k};
    }
    c.fail("expected %n or %(n+k)");
  }
  return IndexExpr{false, c.read_nat()};
}
}  // namespace

WordTemplate WordTemplate::parse(std::string_view text) {
  WordTemplate t;
  t.source_ = std::string(text);
  TCursor c{text};

  // mirror the plain word grammar with index expressions
  struct Parser {
    TCursor& c;
    std::vector<Item> parse_items(bool top_level) {
      std::vector<Item> out;
      while (!c.done()) {
        char ch = c.peek();
        if (ch == ')') {
          if (top_level) c.fail("unmatched ')'");
          break;
        }
        if (ch == '(') {
          ++c.pos;
          Item g;
          g.is_group = true;
          g.children = parse_items(false);
          if (c.peek() != ')') c.fail("expected ')'");
          ++c.pos;
          if (c.peek() != '^') c.fail("expected '^' after ')'");
          ++c.pos;
          g.exponent = read_index_expr(c);
          out.push_back(std::move(g));
          continue;
        }
        if (ch == 'x' || ch == 'X') {
          Item l;
          l.sign = ch == 'x' ? Sign::plus : Sign::minus;
          ++c.pos;
          l.index = read_index_expr(c);
          out.push_back(std::move(l));
          continue;
        }
        c.fail("expected a letter, '(' or end of template");
      }
      if (out.empty() && top_level) c.fail("empty template");
      return out;
    }
  } p{c};

  c.skip_ws();
  if (c.pos < text.size() && text[c.pos] == 'e') {
    ++c.pos;
    if (!c.done()) c.fail("'e' must stand alone");
    return t;  // empty template: materializes to the empty word
  }
  t.items_ = p.parse_items(true);
  return t;
}

void WordTemplate::materialize_items(const std::vector<Item>& items, int n,
                                     std::vector<Letter>& out) const {
  for (const Item& it : items) {
    if (it.is_group) {
      int k = it.exponent.value(n);
      if (k < 0) throw InputError("template exponent is negative at n=" + std::to_string(n));
      std::vector<Letter> inner;
      materialize_items(it.children, n, inner);
      for (int r = 0; r < k; ++r) out.insert(out.end(), inner.begin(), inner.end());
    } else {
      int idx = it.index.value(n);
      if (idx < 1) throw InputError("template letter index < 1 at n=" + std::to_string(n));
      out.push_back(Letter{idx, it.sign});
    }
  }
}

MonoidWord WordTemplate::materialize(int n) const {
  std::vector<Letter> out;
  materialize_items(items_, n, out);
  return MonoidWord(std::move(out));
}

bool WordTemplate::items_constant(const std::vector<Item>& items) {
  for (const Item& it : items) {
    if (it.is_group) {
      if (it.exponent.parametric || !items_constant(it.children)) return false;
    } else if (it.index.parametric) {
      return false;
    }
  }
  return true;
}

bool WordTemplate::is_constant() const { return items_constant(items_); }

bool WordTemplate::items_pure_level(const std::vector<Item>& items) {
  for (const Item& it : items) {
    if (it.is_group) {
      if (!items_pure_level(it.children)) return false;
    } else if (!it.index.parametric || it.index.offset != 0) {
      return false;
    }
  }
  return true;
}

bool WordTemplate::pure_level_block() const { return items_pure_level(items_); }

std::string to_string(const WordTemplate& t) { return t.source(); }

}  // namespace earring
