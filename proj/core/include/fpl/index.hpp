#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fpl {

// A nonempty sequence of positive integers (k_1, ..., k_m).
class Index {
 public:
  explicit Index(std::vector<int> parts);
  Index(std::initializer_list<int> parts);

  // Accepts "2,1,1", "{1}^4", "(2,{1}^3)" and combinations thereof.
  static Index parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  int weight() const { return weight_; }
  int depth() const { return static_cast<int>(parts_.size()); }

  // "(2,1,1)"
  std::string str() const;

  friend bool operator==(const Index&, const Index&) = default;
  friend auto operator<=>(const Index& a, const Index& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// A word over {0,1} ending in 1, stored as packed bits.
class Word {
 public:
  Word() = default;
  explicit Word(std::string_view letters);  // "0011"

  std::size_t size() const { return size_; }
  bool operator[](std::size_t i) const { return (bits_[i / 64] >> (i % 64)) & 1U; }
  void push_back(bool letter);
  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<std::uint64_t> bits_;
  std::size_t size_ = 0;
};

Word to_word(const Index& k);
Index from_word(const Word& w);  // throws std::invalid_argument unless w ends in 1

Index hoffman_dual(const Index& k);
Index hoffman_dual_powerset(const Index& k);

Index reverse(const Index& k);
Index concat(const Index& a, const Index& b);
// Componentwise sum; depths must agree. The vector form takes offsets such as e_i.
Index oplus(const Index& a, const Index& b);
Index oplus(const Index& a, const std::vector<int>& v);
std::vector<int> unit_index(int i, int m);  // e_i of depth m, 1-based i
Index repeat(const Index& k, int m);          // k concatenated m times

// All indices of the given weight, ordered lexicographically by parts.
std::vector<Index> compositions(int weight);

}  // namespace fpl
