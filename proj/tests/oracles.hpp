#pragma once

// Slow, independent reimplementations used to check the library.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <set>
#include <vector>

namespace oracle {

// GF(p^n) by schoolbook polynomial arithmetic modulo a literal defining
// polynomial. Elements are integers a0 + a1 p + a2 p^2 + ...
struct Gf {
  int p, n, q;
  std::vector<int> modulus;  // low to high, monic, length n+1

  static Gf make(int q) {
    switch (q) {
      case 2: return {2, 1, 2, {0, 1}};
      case 3: return {3, 1, 3, {0, 1}};
      case 5: return {5, 1, 5, {0, 1}};
      case 7: return {7, 1, 7, {0, 1}};
      case 4: return {2, 2, 4, {1, 1, 1}};
      case 8: return {2, 3, 8, {1, 1, 0, 1}};
      case 9: return {3, 2, 9, {1, 0, 1}};
    }
    return {0, 0, 0, {}};
  }

  std::vector<int> digits(int a) const {
    std::vector<int> d(static_cast<std::size_t>(n));
    for (auto& x : d) {
      x = a % p;
      a /= p;
    }
    return d;
  }
  int number(const std::vector<int>& d) const {
    int a = 0;
    for (int i = n - 1; i >= 0; --i) a = a * p + d[static_cast<std::size_t>(i)];
    return a;
  }
  int add(int a, int b) const {
    auto x = digits(a), y = digits(b);
    for (int i = 0; i < n; ++i) x[i] = (x[i] + y[i]) % p;
    return number(x);
  }
  int neg(int a) const {
    auto x = digits(a);
    for (auto& v : x) v = (p - v) % p;
    return number(x);
  }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const {
    auto x = digits(a), y = digits(b);
    std::vector<int> prod(static_cast<std::size_t>(2 * n), 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    for (int k = 2 * n - 1; k >= n; --k) {
      const int c = prod[k];
      if (!c) continue;
      for (int i = 0; i <= n; ++i) prod[k - n + i] = ((prod[k - n + i] - c * modulus[i]) % p + p) % p;
    }
    prod.resize(static_cast<std::size_t>(n));
    return number(prod);
  }
  int pow(int a, int e) const {
    int r = 1;
    for (int i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }
};

using Exps = std::vector<int>;
using Poly = std::map<Exps, int>;

inline Poly poly_mul(const Gf& f, const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exps e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) {
        int x = ea[i] + eb[i];
        while (x >= f.q) x -= f.q - 1;  // x^q = x
        e[i] = x;
      }
      auto& slot = r[e];
      slot = f.add(slot, f.mul(ca, cb));
    }
  for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
  return r;
}

inline Poly poly_add(const Gf& f, Poly a, const Poly& b) {
  for (const auto& [e, c] : b) {
    auto& slot = a[e];
    slot = f.add(slot, c);
  }
  for (auto it = a.begin(); it != a.end();) it = it->second == 0 ? a.erase(it) : std::next(it);
  return a;
}

inline std::vector<int> point(std::size_t idx, int q, int m) {
  std::vector<int> x(static_cast<std::size_t>(m));
  for (auto& v : x) {
    v = static_cast<int>(idx % static_cast<std::size_t>(q));
    idx /= static_cast<std::size_t>(q);
  }
  return x;
}

inline std::size_t count(int q, int m) {
  std::size_t n = 1;
  for (int i = 0; i < m; ++i) n *= static_cast<std::size_t>(q);
  return n;
}

// Reduced polynomial of a value table: sum over points w of
// t(w) * prod_i (1 - (x_i - w_i)^(q-1)).
inline Poly interpolate(const Gf& f, const std::vector<int>& values, int m) {
  Poly total;
  for (std::size_t idx = 0; idx < values.size(); ++idx) {
    if (values[idx] == 0) continue;
    const auto w = point(idx, f.q, m);
    Poly prod{{Exps(static_cast<std::size_t>(m), 0), values[idx]}};
    for (int i = 0; i < m; ++i) {
      Exps xi(static_cast<std::size_t>(m), 0);
      xi[static_cast<std::size_t>(i)] = 1;
      Poly lin{{xi, 1}, {Exps(static_cast<std::size_t>(m), 0), f.neg(w[static_cast<std::size_t>(i)])}};
      Poly pw{{Exps(static_cast<std::size_t>(m), 0), 1}};
      for (int k = 0; k < f.q - 1; ++k) pw = poly_mul(f, pw, lin);
      Poly factor = poly_add(f, Poly{{Exps(static_cast<std::size_t>(m), 0), 1}}, poly_mul(f, pw, Poly{{Exps(static_cast<std::size_t>(m), 0), f.neg(1)}}));
      prod = poly_mul(f, prod, factor);
    }
    total = poly_add(f, total, prod);
  }
  return total;
}

inline int degree(const Poly& p) {
  int d = -1;
  for (const auto& [e, c] : p) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

inline int evaluate(const Gf& f, const Poly& p, const std::vector<int>& x) {
  int acc = 0;
  for (const auto& [e, c] : p) {
    int term = c;
    for (std::size_t i = 0; i < x.size(); ++i) term = f.mul(term, f.pow(x[i], e[i]));
    acc = f.add(acc, term);
  }
  return acc;
}

// Lines of AG(2,q) as point-index sets, built as {base + lambda * dir}.
inline std::vector<std::set<std::size_t>> plane_lines(const Gf& f) {
  std::set<std::set<std::size_t>> lines;
  const int q = f.q;
  std::vector<std::vector<int>> dirs{{1, 0}};
  for (int a = 0; a < q; ++a) dirs.push_back({a, 1});
  for (const auto& d : dirs)
    for (int x = 0; x < q; ++x)
      for (int y = 0; y < q; ++y) {
        std::set<std::size_t> line;
        for (int l = 0; l < q; ++l) {
          const int px = f.add(x, f.mul(l, d[0]));
          const int py = f.add(y, f.mul(l, d[1]));
          line.insert(static_cast<std::size_t>(px + q * py));
        }
        lines.insert(line);
      }
  return {lines.begin(), lines.end()};
}

inline bool is_blocking(const Gf& f, const std::set<std::size_t>& s, int n) {
  for (const auto& l : plane_lines(f)) {
    int in = 0;
    for (auto i : l) in += s.count(i) ? 1 : 0;
    if (in < n || f.q - in < n) return false;
  }
  return true;
}

// Weight histogram of R_q(r, m) by evaluating every coefficient vector
// directly over the monomials with per-variable degree < q and total <= r.
inline std::map<std::size_t, std::uint64_t> weight_histogram(const Gf& f, int m, int r) {
  std::vector<Exps> monos;
  for (std::size_t idx = 0; idx < count(f.q, m); ++idx) {
    auto e = point(idx, f.q, m);
    int s = 0;
    for (int x : e) s += x;
    if (s <= r) monos.push_back(e);
  }
  const std::size_t n = count(f.q, m);
  std::vector<std::vector<int>> eval(monos.size(), std::vector<int>(n));
  for (std::size_t j = 0; j < monos.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) {
      const auto x = point(i, f.q, m);
      int v = 1;
      for (int a = 0; a < m; ++a) v = f.mul(v, f.pow(x[a], monos[j][a]));
      eval[j][i] = v;
    }
  std::map<std::size_t, std::uint64_t> hist;
  std::vector<int> c(monos.size(), 0);
  for (;;) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < n; ++i) {
      int v = 0;
      for (std::size_t j = 0; j < monos.size(); ++j) v = f.add(v, f.mul(c[j], eval[j][i]));
      w += v != 0;
    }
    ++hist[w];
    std::size_t j = 0;
    while (j < c.size() && ++c[j] == f.q) c[j++] = 0;
    if (j == c.size()) break;
  }
  return hist;
}

}  // namespace oracle
