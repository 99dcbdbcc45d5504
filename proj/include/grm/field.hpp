#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "grm/error.hpp"

namespace grm {

/// A field element, stored as its index in the fixed encoding of its field.
using Elem = std::uint8_t;

inline constexpr int kMaxFieldOrder = 9;

/// GF(q) for q in {2,3,4,5,7,8,9}, backed by exhaustive arithmetic tables.
///
/// Elements of GF(p^n) are polynomials a0 + a1*α + ... over GF(p) reduced
/// modulo a fixed irreducible polynomial, and are encoded as the integer
/// a0 + p*a1 + p^2*a2. The defining polynomials are
///   GF(4): α^2 + α + 1,  GF(8): α^3 + α + 1,  GF(9): α^2 + 1,
/// and the prime fields are the integers mod p.
class Field {
 public:
  explicit Field(int q);

  /// Shared immutable instance for order q. Prefer this over constructing a
  /// Field: codeword tables keep a pointer to the shared instance.
  static const Field& get(int q);

  static bool supported(int q) noexcept;
  static std::string supported_orders();

  int order() const noexcept { return q_; }
  int characteristic() const noexcept { return p_; }
  int extension_degree() const noexcept { return n_; }
  /// Coefficients of the defining polynomial, lowest degree first, including
  /// the leading 1. Empty for prime fields.
  const std::vector<int>& irreducible() const noexcept { return irreducible_; }

  Elem add(Elem a, Elem b) const noexcept { return add_[a * kMaxFieldOrder + b]; }
  Elem mul(Elem a, Elem b) const noexcept { return mul_[a * kMaxFieldOrder + b]; }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  /// Multiplicative inverse; throws on zero.
  Elem inv(Elem a) const;
  /// a^e for e >= 0, with 0^0 = 1.
  Elem pow(Elem a, int e) const noexcept;

  bool contains(int v) const noexcept { return v >= 0 && v < q_; }
  /// The image of the integer v under Z -> GF(q).
  Elem from_int(long long v) const noexcept;

 private:
  int q_ = 0;
  int p_ = 0;
  int n_ = 0;
  std::vector<int> irreducible_;
  std::array<Elem, kMaxFieldOrder * kMaxFieldOrder> add_{};
  std::array<Elem, kMaxFieldOrder * kMaxFieldOrder> mul_{};
  std::array<Elem, kMaxFieldOrder> neg_{};
  std::array<Elem, kMaxFieldOrder> inv_{};
};

inline Field build_field(int q) { return Field(q); }

/// Exhaustively checks the field axioms on the tables. Returns an empty
/// string on success, otherwise a description of the first failure.
inline std::string check_field_axioms(const Field& f);

// ---------------------------------------------------------------------------

namespace detail {

inline bool field_params(int q, int& p, int& n) {
  switch (q) {
    case 2: p = 2; n = 1; return true;
    case 3: p = 3; n = 1; return true;
    case 4: p = 2; n = 2; return true;
    case 5: p = 5; n = 1; return true;
    case 7: p = 7; n = 1; return true;
    case 8: p = 2; n = 3; return true;
    case 9: p = 3; n = 2; return true;
    default: return false;
  }
}

inline std::vector<int> default_irreducible(int q) {
  switch (q) {
    case 4: return {1, 1, 1};
    case 8: return {1, 1, 0, 1};
    case 9: return {1, 0, 1};
    default: return {};
  }
}

}  // namespace detail

inline bool Field::supported(int q) noexcept {
  int p = 0, n = 0;
  return detail::field_params(q, p, n);
}

inline std::string Field::supported_orders() { return "{2, 3, 4, 5, 7, 8, 9}"; }

inline Field::Field(int q) {
  if (!detail::field_params(q, p_, n_)) {
    throw PreconditionError("unsupported field order " + std::to_string(q) +
                            "; supported orders are " + supported_orders());
  }
  q_ = q;
  irreducible_ = detail::default_irreducible(q);

  // Digit vectors (a0, a1, a2) of each encoded element.
  auto digits = [this](int x) {
    std::array<int, 3> d{};
    for (int i = 0; i < n_; ++i) {
      d[i] = x % p_;
      x /= p_;
    }
    return d;
  };
  auto encode = [this](const std::array<int, 3>& d) {
    int x = 0;
    for (int i = n_ - 1; i >= 0; --i) x = x * p_ + d[i];
    return x;
  };

  for (int a = 0; a < q_; ++a) {
    for (int b = 0; b < q_; ++b) {
      const auto da = digits(a);
      const auto db = digits(b);
      std::array<int, 3> sum{};
      for (int i = 0; i < n_; ++i) sum[i] = (da[i] + db[i]) % p_;

      // Schoolbook product, then reduce the high coefficients using the
      // monic defining polynomial.
      std::array<int, 5> prod{};
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      for (int k = 2 * n_ - 2; k >= n_; --k) {
        const int c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (int i = 0; i < n_; ++i) {
          const int coeff = irreducible_.empty() ? 0 : irreducible_[i];
          prod[k - n_ + i] = ((prod[k - n_ + i] - c * coeff) % p_ + p_) % p_;
        }
      }
      std::array<int, 3> reduced{};
      for (int i = 0; i < n_; ++i) reduced[i] = prod[i];

      add_[a * kMaxFieldOrder + b] = static_cast<Elem>(encode(sum));
      mul_[a * kMaxFieldOrder + b] = static_cast<Elem>(encode(reduced));
    }
  }
  for (int a = 0; a < q_; ++a) {
    const auto da = digits(a);
    std::array<int, 3> nd{};
    for (int i = 0; i < n_; ++i) nd[i] = (p_ - da[i]) % p_;
    neg_[a] = static_cast<Elem>(encode(nd));
    inv_[a] = 0;
    for (int b = 1; b < q_ && a != 0; ++b) {
      if (mul(static_cast<Elem>(a), static_cast<Elem>(b)) == 1) inv_[a] = static_cast<Elem>(b);
    }
  }
}

inline const Field& Field::get(int q) {
  static const std::array<std::unique_ptr<const Field>, kMaxFieldOrder + 1> cache = [] {
    std::array<std::unique_ptr<const Field>, kMaxFieldOrder + 1> c;
    for (int order = 0; order <= kMaxFieldOrder; ++order)
      if (supported(order)) c[order] = std::make_unique<const Field>(order);
    return c;
  }();
  if (q < 0 || q > kMaxFieldOrder || !cache[q]) {
    throw PreconditionError("unsupported field order " + std::to_string(q) +
                            "; supported orders are " + supported_orders());
  }
  return *cache[q];
}

inline Elem Field::inv(Elem a) const {
  if (a == 0 || a >= q_) throw PreconditionError("zero has no multiplicative inverse");
  return inv_[a];
}

inline Elem Field::pow(Elem a, int e) const noexcept {
  Elem r = 1;
  for (int i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

inline Elem Field::from_int(long long v) const noexcept {
  long long m = v % p_;
  if (m < 0) m += p_;
  return static_cast<Elem>(m);
}

inline std::string check_field_axioms(const Field& f) {
  const int q = f.order();
  auto name = [](int a) { return std::to_string(a); };
  for (int a = 0; a < q; ++a) {
    const Elem x = static_cast<Elem>(a);
    if (f.add(x, 0) != x) return "0 is not additively neutral for " + name(a);
    if (f.mul(x, 1) != x) return "1 is not multiplicatively neutral for " + name(a);
    if (f.add(x, f.neg(x)) != 0) return "neg is not an additive inverse for " + name(a);
    if (a != 0 && f.mul(x, f.inv(x)) != 1) return "inv is not a multiplicative inverse for " + name(a);
    for (int b = 0; b < q; ++b) {
      const Elem y = static_cast<Elem>(b);
      if (f.add(x, y) != f.add(y, x)) return "addition not commutative at " + name(a) + "," + name(b);
      if (f.mul(x, y) != f.mul(y, x)) return "multiplication not commutative at " + name(a) + "," + name(b);
      if (a != 0 && b != 0 && f.mul(x, y) == 0) return "zero divisor at " + name(a) + "," + name(b);
      for (int c = 0; c < q; ++c) {
        const Elem z = static_cast<Elem>(c);
        const std::string at = " at " + name(a) + "," + name(b) + "," + name(c);
        if (f.add(f.add(x, y), z) != f.add(x, f.add(y, z))) return "addition not associative" + at;
        if (f.mul(f.mul(x, y), z) != f.mul(x, f.mul(y, z))) return "multiplication not associative" + at;
        if (f.mul(x, f.add(y, z)) != f.add(f.mul(x, y), f.mul(x, z))) return "not distributive" + at;
      }
    }
  }
  return {};
}

}  // namespace grm
