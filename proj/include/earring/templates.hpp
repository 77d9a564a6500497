#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "earring/words.hpp"

namespace earring {

// Word template with %n placeholders: letters ("x"|"X")(nat | %n | %(n+k)),
// groups (...)^(nat | %n | %(n+k)). materialize(n) substitutes the level or
// sequence index n. Used for stream tails, sequence rules and cylinder
// families.
class WordTemplate {
 public:
  struct IndexExpr {
    bool parametric = false;
    int offset = 0;  // value(n) = parametric ? n + offset : offset
    int value(int n) const;
  };

  WordTemplate() = default;

  static WordTemplate parse(std::string_view text);

  MonoidWord materialize(int n) const;

  // True when no %n occurs anywhere.
  bool is_constant() const;

  // True when every letter index is exactly %n (offset 0); such a template
  // yields blocks of letters of index exactly n, as stream tails require.
  bool pure_level_block() const;

  const std::string& source() const { return source_; }

 private:
  struct Item {
    // letter when children empty, otherwise a (...)^exp group
    Sign sign = Sign::plus;
    IndexExpr index;
    std::vector<Item> children;
    IndexExpr exponent;
    bool is_group = false;
  };

  void materialize_items(const std::vector<Item>& items, int n,
                         std::vector<Letter>& out) const;
  static bool items_constant(const std::vector<Item>& items);
  static bool items_pure_level(const std::vector<Item>& items);

  std::vector<Item> items_;
  std::string source_;
};

std::string to_string(const WordTemplate& t);

}  // namespace earring
