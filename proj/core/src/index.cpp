#include "fpl/index.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace fpl {

Index::Index(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("index must be nonempty");
  for (int k : parts_) {
    if (k < 1) throw std::invalid_argument("index entries must be positive");
    weight_ += k;
  }
}

Index::Index(std::initializer_list<int> parts) : Index(std::vector<int>(parts)) {}

namespace {

struct Parser {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const char* what) const {
    throw std::invalid_argument("bad index literal '" + std::string(s) + "': " + what);
  }
  int number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected a number");
    long v = std::stol(std::string(s.substr(start, pos - start)));
    if (v < 1 || v > 1000000) fail("entry out of range");
    return static_cast<int>(v);
  }
  // list := term (',' term)*
  void list(std::vector<int>& out) {
    do {
      term(out);
    } while (eat(','));
  }
  // term := number | '{' list '}' '^' number
  void term(std::vector<int>& out) {
    if (eat('{')) {
      std::vector<int> inner;
      list(inner);
      if (!eat('}')) fail("missing '}'");
      if (!eat('^')) fail("missing '^' after '}'");
      int m = number();
      for (int r = 0; r < m; ++r) out.insert(out.end(), inner.begin(), inner.end());
      return;
    }
    out.push_back(number());
  }
};

}  // namespace

Index Index::parse(std::string_view text) {
  Parser p{text};
  bool paren = p.eat('(');
  std::vector<int> parts;
  p.list(parts);
  if (paren && !p.eat(')')) p.fail("missing ')'");
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing characters");
  return Index(std::move(parts));
}

std::string Index::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

Word::Word(std::string_view letters) {
  for (char c : letters) {
    if (c != '0' && c != '1') throw std::invalid_argument("word letters must be 0 or 1");
    push_back(c == '1');
  }
}

void Word::push_back(bool letter) {
  if (size_ % 64 == 0) bits_.push_back(0);
  if (letter) bits_.back() |= std::uint64_t{1} << (size_ % 64);
  ++size_;
}

std::string Word::str() const {
  std::string out;
  out.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) out += (*this)[i] ? '1' : '0';
  return out;
}

Word to_word(const Index& k) {
  Word w;
  for (int part : k.parts()) {
    for (int j = 1; j < part; ++j) w.push_back(false);
    w.push_back(true);
  }
  return w;
}

Index from_word(const Word& w) {
  if (w.size() == 0 || !w[w.size() - 1]) throw std::invalid_argument("word must end in 1");
  std::vector<int> parts;
  int run = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i]) {
      parts.push_back(run);
      run = 1;
    } else {
      ++run;
    }
  }
  return Index(std::move(parts));
}

Index hoffman_dual(const Index& k) {
  Word w = to_word(k);
  Word d;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) d.push_back(!w[i]);
  d.push_back(true);
  return from_word(d);
}

// psi(k) = {k_1, k_1+k_2, ..., k_1+...+k_{m-1}} inside {1, ..., w-1};
// the dual is psi^{-1} of the complement.
Index hoffman_dual_powerset(const Index& k) {
  const int w = k.weight();
  std::vector<char> in_psi(static_cast<std::size_t>(w), 0);
  int acc = 0;
  for (int i = 0; i + 1 < k.depth(); ++i) {
    acc += k[i];
    in_psi[acc] = 1;
  }
  std::vector<int> parts;
  int last = 0;
  for (int s = 1; s < w; ++s) {
    if (!in_psi[s]) {
      parts.push_back(s - last);
      last = s;
    }
  }
  parts.push_back(w - last);
  return Index(std::move(parts));
}

Index reverse(const Index& k) {
  std::vector<int> parts(k.parts().rbegin(), k.parts().rend());
  return Index(std::move(parts));
}

Index concat(const Index& a, const Index& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Index(std::move(parts));
}

Index oplus(const Index& a, const Index& b) { return oplus(a, b.parts()); }

std::vector<int> unit_index(int i, int m) {
  if (m < 1 || i < 1 || i > m) throw std::invalid_argument("unit_index out of range");
  std::vector<int> e(static_cast<std::size_t>(m), 0);
  e[static_cast<std::size_t>(i - 1)] = 1;
  return e;
}

Index oplus(const Index& a, const std::vector<int>& v) {
  if (static_cast<std::size_t>(a.depth()) != v.size()) {
    throw std::invalid_argument("oplus needs vectors of equal depth");
  }
  std::vector<int> parts(a.parts());
  for (std::size_t i = 0; i < parts.size(); ++i) parts[i] += v[i];
  return Index(std::move(parts));
}

Index repeat(const Index& k, int m) {
  if (m < 1) throw std::invalid_argument("repeat count must be positive");
  std::vector<int> parts;
  for (int r = 0; r < m; ++r) parts.insert(parts.end(), k.parts().begin(), k.parts().end());
  return Index(std::move(parts));
}

std::vector<Index> compositions(int weight) {
  std::vector<Index> out;
  if (weight < 1) return out;
  // Bit b of mask set means a cut after position b+1.
  const std::uint32_t n = static_cast<std::uint32_t>(weight - 1);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (std::uint32_t b = 0; b < n; ++b) {
      if (mask & (std::uint32_t{1} << b)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.emplace_back(std::move(parts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fpl
