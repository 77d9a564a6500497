#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace earring {

enum class Sign : std::uint8_t { plus, minus };

// A signed generator x_i / x_i^{-1}, written x<i> / X<i>.
struct Letter {
  int index = 1;  // >= 1
  Sign sign = Sign::plus;

  friend bool operator==(const Letter&, const Letter&) = default;
};

Letter inverse(Letter l);

// Fixed letter order x1 < X1 < x2 < X2 < ... used for lexicographic ties.
std::strong_ordering letter_cmp(Letter a, Letter b);

// Finite unreduced word over the signed generators. Immutable value type;
// the level (max index, 0 for the empty word) is derived, never stored.
class MonoidWord {
 public:
  MonoidWord() = default;
  explicit MonoidWord(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  int level() const;

  friend bool operator==(const MonoidWord&, const MonoidWord&) = default;

 private:
  std::vector<Letter> letters_;
};

MonoidWord concat(const MonoidWord& a, const MonoidWord& b);

// Deletes every letter of index > level, preserving order. Idempotent and
// compatible: retract(retract(w, m), n) == retract(w, n) for n <= m.
MonoidWord retract(const MonoidWord& w, int level);

// Combined number of occurrences of x_index and x_index^{-1} in
// retract(w, index) (equivalently in w). index >= 1.
int letter_count(const MonoidWord& w, int index);

// Signed occurrence count of generator `index` (conserved by reduction).
int exponent_sum(const MonoidWord& w, int index);

// (length, then letterwise lex) order on unreduced words.
std::strong_ordering length_lex_cmp(const MonoidWord& a, const MonoidWord& b);

bool is_reduced(const MonoidWord& w);

// Maximally reduced word: no two adjacent letters are mutual inverses.
class GroupWord {
 public:
  GroupWord() = default;  // identity
  // Validates reducedness; use reduce() to build from arbitrary words.
  explicit GroupWord(MonoidWord word);

  const MonoidWord& word() const { return word_; }
  int size() const { return word_.size(); }
  int level() const { return word_.level(); }
  bool is_identity() const { return word_.empty(); }

  friend bool operator==(const GroupWord&, const GroupWord&) = default;

 private:
  MonoidWord word_;
};

// Canonical quotient onto the free group: cancel adjacent inverse pairs
// until none remain. The result is independent of cancellation order.
GroupWord reduce(const MonoidWord& w);

// Shorter word first, equal lengths letterwise by letter_cmp. The empty
// word is the global minimum.
std::strong_ordering shortlex_cmp(const GroupWord& a, const GroupWord& b);

GroupWord reduced_product(const GroupWord& a, const GroupWord& b);

// Every word obtained from w by deleting exactly one nonempty contiguous
// subword whose reduction is the identity. Deduplicated; a word has no such
// deletion iff it is reduced.
std::vector<MonoidWord> delete_inessential(const MonoidWord& w);

// Word grammar: word := "e" | term+ ; term := letter | "(" term+ ")" "^" nat ;
// letter := ("x"|"X") nat. Whitespace separates tokens where needed.
MonoidWord parse_word(std::string_view text);

std::string to_string(Letter l);
std::string to_string(const MonoidWord& w);  // "e" for the empty word
std::string to_string(const GroupWord& w);

// Compact stable key for hashing/maps.
std::string word_key(const MonoidWord& w);

// Set-file format: one word per line, '#' starts a comment line.
std::vector<MonoidWord> read_word_lines(std::istream& in);

}  // namespace earring
