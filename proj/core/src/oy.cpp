#include <stdexcept>

#include "fpl/fmp.hpp"

namespace fpl {

Residue oy_li(const Ring& ring, const Index& k, std::uint64_t t) {
  const std::size_t P = ring.p;
  const int m = k.depth();
  // a[s] is the sum over l_1..l_i with l_1 + ... + l_i = s.
  std::vector<std::uint64_t> a(P, 0);
  for (std::size_t s = 1; s < P; ++s) a[s] = ring.pow(ring.inv(s), static_cast<std::uint64_t>(k[0]));
  for (int i = 1; i < m; ++i) {
    const std::size_t top = static_cast<std::size_t>(i + 1) * (P - 1);
    std::vector<std::uint64_t> prefix(a.size() + 1, 0);
    for (std::size_t s = 0; s < a.size(); ++s) prefix[s + 1] = ring.add(prefix[s], a[s]);
    std::vector<std::uint64_t> b(top + 1, 0);
    for (std::size_t s = static_cast<std::size_t>(i + 1); s <= top; ++s) {
      if (s % P == 0) continue;
      // sum of a[s - l] for l = 1..p-1, i.e. a over [s-p+1, s-1]
      const std::size_t lo = s >= P - 1 ? s - (P - 1) : 0;
      const std::size_t hi = std::min(s - 1, a.size() - 1);
      if (lo > hi) continue;
      std::uint64_t window = ring.sub(prefix[hi + 1], prefix[lo]);
      b[s] = ring.mul(window, ring.pow(ring.inv(s % ring.m), static_cast<std::uint64_t>(k[i])));
    }
    a = std::move(b);
  }
  std::uint64_t total = 0, tp = 1 % ring.m;
  for (std::size_t s = 1; s < a.size(); ++s) {
    tp = ring.mul(tp, t);
    total = ring.add(total, ring.mul(tp, a[s]));
  }
  return {ring, total};
}

Residue oy_li(const Index& k, const Rational& t, std::uint32_t p, int n) {
  Ring ring(p, n);
  return oy_li(ring, k, ring.from_rational(t));
}

Residue oy_li_naive(const Ring& ring, const Index& k, std::uint64_t t) {
  const int m = k.depth();
  std::vector<std::uint64_t> l(static_cast<std::size_t>(m), 1);
  std::uint64_t total = 0;
  for (;;) {
    std::uint64_t s = 0, term = 1 % ring.m;
    bool skip = false;
    for (int i = 0; i < m; ++i) {
      s += l[i];
      if (s % ring.p == 0) {
        skip = true;
        break;
      }
      term = ring.mul(term, ring.pow(ring.inv(s % ring.m), static_cast<std::uint64_t>(k[i])));
    }
    if (!skip) total = ring.add(total, ring.mul(term, ring.pow(t, s)));
    int i = m - 1;
    while (i >= 0 && l[i] == ring.p - 1) l[i--] = 1;
    if (i < 0) break;
    ++l[i];
  }
  return {ring, total};
}

std::vector<PhiMap> enumerate_phi(int m) {
  if (m < 1 || m > 6) throw std::domain_error("enumerate_phi supports 1 <= m <= 6");
  std::vector<PhiMap> out;
  for (int l = 1; l <= m; ++l) {
    std::vector<int> v(static_cast<std::size_t>(m), 1);
    for (;;) {
      bool ok = true;
      for (int a = 0; a + 1 < m && ok; ++a) ok = v[a] != v[a + 1];
      std::vector<char> hit(static_cast<std::size_t>(l) + 1, 0);
      for (int x : v) hit[x] = 1;
      for (int y = 1; y <= l && ok; ++y) ok = hit[y];
      if (ok) {
        PhiMap phi;
        phi.values = v;
        phi.l = l;
        int d = 0;
        for (int i = 0; i < m; ++i) {
          if (i > 0 && v[i - 1] > v[i]) ++d;
          phi.delta.push_back(d);
        }
        phi.beta = d + 1;
        out.push_back(std::move(phi));
      }
      int i = m - 1;
      while (i >= 0 && v[i] == l) v[i--] = 1;
      if (i < 0) break;
      ++v[i];
    }
  }
  return out;
}

Residue oy_decompose(const Ring& ring, const Index& k, std::uint64_t t) {
  const int m = k.depth();
  const std::uint64_t tp = ring.pow(t, ring.p);
  std::uint64_t total = 0;
  for (const PhiMap& phi : enumerate_phi(m)) {
    const int l = phi.l;
    std::vector<int> parts(static_cast<std::size_t>(l), 0);
    for (int j = 0; j < m; ++j) parts[static_cast<std::size_t>(l - phi.values[j])] += k[j];
    std::vector<std::uint64_t> args(static_cast<std::size_t>(l), 1 % ring.m);
    args[static_cast<std::size_t>(l - phi.values[m - 1])] = t;
    Residue term = nested_sum(ring, Index(std::move(parts)), args, false, SumKind::harmonic);
    total = ring.add(total, ring.mul(ring.pow(tp, static_cast<std::uint64_t>(phi.beta - 1)), term.value()));
  }
  return {ring, total};
}

Residue oy_decompose(const Index& k, const Rational& t, std::uint32_t p, int n) {
  Ring ring(p, n);
  return oy_decompose(ring, k, ring.from_rational(t));
}

}  // namespace fpl
