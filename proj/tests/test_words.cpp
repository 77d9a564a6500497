#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "earring/errors.hpp"
#include "earring/words.hpp"
#include "test_util.hpp"

using namespace earring;
using testutil::all_monoid_words;
using testutil::oracle_reduce;
using testutil::random_monoid_word;

namespace {
MonoidWord W(const char* s) { return parse_word(s); }
}  // namespace

TEST_CASE("parse_word basics") {
  CHECK(W("e").empty());
  CHECK(to_string(W("x1 X1 x2")) == "x1 X1 x2");
  CHECK(W("x1X1x2") == W("x1 X1 x2"));
  CHECK(to_string(W("(x1 x3 X1 x3)^2 x2")) == "x1 x3 X1 x3 x1 x3 X1 x3 x2");
  CHECK(W("(x2)^0").empty());
  CHECK(W("(x1 (x2)^2)^2") == W("x1 x2 x2 x1 x2 x2"));
}

TEST_CASE("parse_word errors carry positions") {
  CHECK_THROWS_AS(W("x0"), ParseError);
  CHECK_THROWS_AS(W("(x1)^-1"), ParseError);
  CHECK_THROWS_AS(W("(x1 x2"), ParseError);
  CHECK_THROWS_AS(W("x1)"), ParseError);
  CHECK_THROWS_AS(W("e x1"), ParseError);
  CHECK_THROWS_AS(W(""), ParseError);
  CHECK_THROWS_AS(W("y1"), ParseError);
  try {
    W("x1 x0");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("reduce matches the all-orders cancellation oracle") {
  CHECK(reduce(W("x1 X1")).is_identity());
  CHECK(reduce(W("x1 x2 X2 X1 x3")) == GroupWord(W("x3")));
  CHECK(reduce(W("(x1 x3 X1 x3)^2 x2")).word() == W("(x1 x3 X1 x3)^2 x2"));
  CHECK(is_reduced(W("(x1 x3 X1 x3)^2 x2")));

  for (const MonoidWord& w : all_monoid_words(6, 2))
    CHECK(reduce(w).word() == oracle_reduce(w));

  std::mt19937 rng(7);
  for (int t = 0; t < 300; ++t) {
    MonoidWord w = random_monoid_word(rng, 12, 3);
    CHECK(reduce(w).word() == oracle_reduce(w));
  }
}

TEST_CASE("reduction conserves exponent sums") {
  std::mt19937 rng(11);
  for (int t = 0; t < 500; ++t) {
    MonoidWord w = random_monoid_word(rng, 12, 3);
    MonoidWord r = reduce(w).word();
    for (int i = 1; i <= 3; ++i) CHECK(exponent_sum(w, i) == exponent_sum(r, i));
  }
}

TEST_CASE("retract") {
  CHECK(retract(W("x1 x5 X1"), 1) == W("x1 X1"));
  CHECK(retract(W("(x1 x3 X1 x3)^2 x2"), 2) == W("x1 X1 x1 X1 x2"));
  std::mt19937 rng(13);
  for (int t = 0; t < 300; ++t) {
    MonoidWord w = random_monoid_word(rng, 10, 4);
    CHECK(retract(w, w.level()) == w);
    std::uniform_int_distribution<int> d(0, 4);
    int n = d(rng), m = d(rng);
    if (n > m) std::swap(n, m);
    CHECK(retract(retract(w, m), n) == retract(w, n));
    CHECK(retract(retract(w, n), n) == retract(w, n));
  }
}

TEST_CASE("letter_count") {
  CHECK(letter_count(W("e"), 1) == 0);
  for (int k = 1; k <= 4; ++k) {
    std::string s = "(x1 x3 X1 x3)^" + std::to_string(k) + " x2";
    CHECK(letter_count(parse_word(s), 1) == 2 * k);
  }
  for (int k = 2; k <= 5; ++k)
    CHECK(letter_count(testutil::w_fixture(k), 1) == 2 * k);
  CHECK(letter_count(W("x1 x5 X1"), 5) == 1);
  CHECK_THROWS_AS(letter_count(W("x1"), 0), InputError);
}

TEST_CASE("shortlex is a total order with the empty word least") {
  CHECK(shortlex_cmp(GroupWord(), GroupWord(W("x1"))) == std::strong_ordering::less);
  CHECK(shortlex_cmp(GroupWord(W("x1 x1")), GroupWord(W("x1 x2"))) ==
        std::strong_ordering::less);
  GroupWord g(W("x2 X1"));
  CHECK(shortlex_cmp(g, g) == std::strong_ordering::equal);

  std::vector<GroupWord> all;
  for (const MonoidWord& w : all_monoid_words(4, 2))
    if (is_reduced(w)) all.push_back(GroupWord(w));
  std::set<std::string> keys;
  for (const GroupWord& w : all) keys.insert(word_key(w.word()));
  CHECK(keys.size() == all.size());
  // trichotomy against equality
  for (std::size_t i = 0; i < all.size(); i += 7)
    for (std::size_t j = 0; j < all.size(); j += 7) {
      auto c = shortlex_cmp(all[i], all[j]);
      CHECK((c == std::strong_ordering::equal) == (all[i] == all[j]));
    }
  // sorted order has a unique minimum: the identity
  std::sort(all.begin(), all.end(), [](const GroupWord& a, const GroupWord& b) {
    return shortlex_cmp(a, b) < 0;
  });
  CHECK(all.front().is_identity());
  for (std::size_t i = 0; i + 1 < all.size(); ++i)
    CHECK(shortlex_cmp(all[i], all[i + 1]) == std::strong_ordering::less);
}

TEST_CASE("delete_inessential single steps") {
  auto one = delete_inessential(W("x1 X1"));
  REQUIRE(one.size() == 1);
  CHECK(one[0].empty());

  CHECK(delete_inessential(W("x2")).empty());

  auto got = delete_inessential(W("x1 x2 X2 X1"));
  std::set<std::string> keys;
  for (const MonoidWord& w : got) keys.insert(word_key(w));
  CHECK(keys.count(word_key(W("x1 X1"))) == 1);
  CHECK(keys.count(word_key(MonoidWord())) == 1);
}

TEST_CASE("inessential deletions are confluent onto the reduction") {
  // exhaustive on small words: every single deletion preserves the reduced
  // form, and the words admitting no deletion are exactly the reduced ones
  for (const MonoidWord& w : all_monoid_words(5, 2)) {
    auto nexts = delete_inessential(w);
    CHECK(nexts.empty() == is_reduced(w));
    for (const MonoidWord& v : nexts) CHECK(reduce(v) == reduce(w));
  }
  // randomized longer words: follow one maximal chain to its end
  std::mt19937 rng(17);
  for (int t = 0; t < 200; ++t) {
    MonoidWord w = random_monoid_word(rng, 10, 3);
    MonoidWord cur = w;
    while (true) {
      auto nexts = delete_inessential(cur);
      if (nexts.empty()) break;
      std::uniform_int_distribution<std::size_t> d(0, nexts.size() - 1);
      cur = nexts[d(rng)];
    }
    CHECK(cur == reduce(w).word());
  }
}

TEST_CASE("read_word_lines skips comments") {
  std::istringstream in("# header\nx1 x2\n\n  # more\nX2\n");
  auto words = read_word_lines(in);
  REQUIRE(words.size() == 2);
  CHECK(words[0] == W("x1 x2"));
  CHECK(words[1] == W("X2"));
}
