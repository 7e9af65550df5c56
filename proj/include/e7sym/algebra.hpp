#pragma once

// Composition algebras R, C, H, O built by Cayley-Dickson doubling over exact
// rationals.

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "e7sym/rational.hpp"

namespace e7sym {

/// Raised whenever elements of different algebras are combined.
class AlgebraMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Which division algebra: level 0..3 is R, C, H, O with dimension 2^level.
class AlgebraTag {
 public:
  constexpr AlgebraTag() = default;
  constexpr explicit AlgebraTag(int level) : level_(level) {
    if (level < 0 || level > 3) throw std::invalid_argument("AlgebraTag: level must be 0..3");
  }

  static constexpr AlgebraTag real() { return AlgebraTag(0); }
  static constexpr AlgebraTag complex() { return AlgebraTag(1); }
  static constexpr AlgebraTag quaternion() { return AlgebraTag(2); }
  static constexpr AlgebraTag octonion() { return AlgebraTag(3); }

  /// Accepts "R", "C", "H", "O" (case-insensitive).
  static AlgebraTag from_letter(std::string_view s) {
    if (s.size() == 1) {
      switch (s[0]) {
        case 'R': case 'r': return real();
        case 'C': case 'c': return complex();
        case 'H': case 'h': return quaternion();
        case 'O': case 'o': return octonion();
        default: break;
      }
    }
    throw std::invalid_argument("unknown algebra '" + std::string(s) + "' (expected R, C, H or O)");
  }

  [[nodiscard]] constexpr int level() const { return level_; }
  [[nodiscard]] constexpr int dim() const { return 1 << level_; }
  [[nodiscard]] char letter() const { return "RCHO"[level_]; }

  friend constexpr bool operator==(AlgebraTag, AlgebraTag) = default;

 private:
  int level_ = 0;
};

inline constexpr std::array<AlgebraTag, 4> kAllAlgebras = {
    AlgebraTag::real(), AlgebraTag::complex(), AlgebraTag::quaternion(),
    AlgebraTag::octonion()};

inline void require_same(AlgebraTag a, AlgebraTag b, const char* where) {
  if (a != b) {
    throw AlgebraMismatch(std::string(where) + ": incompatible algebras " + a.letter() +
                          " and " + b.letter());
  }
}

namespace detail {

// Doubling rule (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)) on coefficient
// blocks of length 2^level.
inline void cd_conj_into(std::span<const Rational> x, std::span<Rational> out) {
  out[0] = x[0];
  for (std::size_t i = 1; i < x.size(); ++i) out[i] = -x[i];
}

inline void cd_mul_recursive(std::span<const Rational> x, std::span<const Rational> y,
                             std::span<Rational> out) {
  const std::size_t n = x.size();
  if (n == 1) {
    out[0] = x[0] * y[0];
    return;
  }
  const std::size_t h = n / 2;
  auto a = x.first(h), b = x.subspan(h);
  auto c = y.first(h), d = y.subspan(h);
  std::vector<Rational> dbar(h), cbar(h), t1(h), t2(h);
  cd_conj_into(d, dbar);
  cd_conj_into(c, cbar);
  cd_mul_recursive(a, c, t1);
  cd_mul_recursive(dbar, b, t2);
  for (std::size_t i = 0; i < h; ++i) out[i] = t1[i] - t2[i];
  cd_mul_recursive(d, a, t1);
  cd_mul_recursive(b, cbar, t2);
  for (std::size_t i = 0; i < h; ++i) out[h + i] = t1[i] + t2[i];
}

struct UnitProduct {
  int sign;
  int index;
};

// Unit table e_i e_j = sign * e_index, generated once per level from the
// recursive doubling rule.
class UnitTable {
 public:
  explicit UnitTable(int level) : dim_(1 << level), entries_(dim_ * dim_) {
    std::vector<Rational> x(dim_), y(dim_), z(dim_);
    for (int i = 0; i < dim_; ++i) {
      for (int j = 0; j < dim_; ++j) {
        std::fill(x.begin(), x.end(), Rational());
        std::fill(y.begin(), y.end(), Rational());
        x[i] = 1;
        y[j] = 1;
        cd_mul_recursive(x, y, z);
        int found = -1;
        int sign = 0;
        for (int k = 0; k < dim_; ++k) {
          if (z[k].is_zero()) continue;
          if (found >= 0) throw std::logic_error("unit product is not a signed unit");
          found = k;
          sign = z[k] == Rational(1) ? 1 : -1;
        }
        entries_[i * dim_ + j] = {sign, found};
      }
    }
  }
  [[nodiscard]] UnitProduct operator()(int i, int j) const { return entries_[i * dim_ + j]; }
  [[nodiscard]] int dim() const { return dim_; }

 private:
  int dim_;
  std::vector<UnitProduct> entries_;
};

inline const UnitTable& unit_table(int level) {
  static const std::array<UnitTable, 4> tables = {UnitTable(0), UnitTable(1), UnitTable(2),
                                                  UnitTable(3)};
  return tables.at(level);
}

}  // namespace detail

/// Element of R, C, H or O. Coefficient 0 is the real part, coefficient i
/// multiplies the imaginary unit e_i.
class AlgElem {
 public:
  AlgElem() = default;
  explicit AlgElem(AlgebraTag tag) : tag_(tag), c_(tag.dim()) {}
  AlgElem(AlgebraTag tag, std::vector<Rational> coeffs) : tag_(tag), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != tag.dim()) {
      throw std::invalid_argument("AlgElem: expected " + std::to_string(tag.dim()) +
                                  " coefficients, got " + std::to_string(c_.size()));
    }
  }

  static AlgElem scalar(AlgebraTag tag, const Rational& r) {
    AlgElem x(tag);
    x.c_[0] = r;
    return x;
  }
  static AlgElem unit(AlgebraTag tag, int index) {
    if (index < 0 || index >= tag.dim()) throw std::out_of_range("AlgElem::unit: bad index");
    AlgElem x(tag);
    x.c_[index] = 1;
    return x;
  }
  static AlgElem one(AlgebraTag tag) { return scalar(tag, 1); }

  [[nodiscard]] AlgebraTag tag() const { return tag_; }
  [[nodiscard]] int dim() const { return tag_.dim(); }
  [[nodiscard]] const std::vector<Rational>& coeffs() const { return c_; }
  [[nodiscard]] const Rational& operator[](int i) const { return c_[i]; }
  Rational& operator[](int i) { return c_[i]; }

  [[nodiscard]] bool is_zero() const {
    for (const auto& r : c_) {
      if (!r.is_zero()) return false;
    }
    return true;
  }
  [[nodiscard]] bool is_real() const {
    for (std::size_t i = 1; i < c_.size(); ++i) {
      if (!c_[i].is_zero()) return false;
    }
    return true;
  }

  /// Embeds into the next level up as (x, 0).
  [[nodiscard]] AlgElem embed() const {
    if (tag_.level() == 3) throw std::invalid_argument("AlgElem::embed: O is the top level");
    AlgElem r(AlgebraTag(tag_.level() + 1));
    for (int i = 0; i < dim(); ++i) r.c_[i] = c_[i];
    return r;
  }

  AlgElem& operator+=(const AlgElem& o) {
    require_same(tag_, o.tag_, "AlgElem +");
    for (int i = 0; i < dim(); ++i) {
      if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
    }
    return *this;
  }
  AlgElem& operator-=(const AlgElem& o) {
    require_same(tag_, o.tag_, "AlgElem -");
    for (int i = 0; i < dim(); ++i) {
      if (!o.c_[i].is_zero()) c_[i] -= o.c_[i];
    }
    return *this;
  }
  AlgElem& operator*=(const Rational& s) {
    for (auto& r : c_) r *= s;
    return *this;
  }

  friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
  friend AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }
  friend AlgElem operator*(AlgElem a, const Rational& s) { return a *= s; }
  friend AlgElem operator*(const Rational& s, AlgElem a) { return a *= s; }
  AlgElem operator-() const {
    AlgElem r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend bool operator==(const AlgElem& a, const AlgElem& b) {
    return a.tag_ == b.tag_ && a.c_ == b.c_;
  }

  /// Fused a += x * y, the hot path of every matrix product.
  void add_product(const AlgElem& x, const AlgElem& y) {
    require_same(x.tag_, y.tag_, "cd_mul");
    require_same(tag_, x.tag_, "cd_mul");
    const auto& table = detail::unit_table(tag_.level());
    const int n = dim();
    for (int i = 0; i < n; ++i) {
      if (x.c_[i].is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (y.c_[j].is_zero()) continue;
        const auto u = table(i, j);
        const Rational t = x.c_[i] * y.c_[j];
        if (u.sign > 0) {
          c_[u.index] += t;
        } else {
          c_[u.index] -= t;
        }
      }
    }
  }

 private:
  AlgebraTag tag_;
  std::vector<Rational> c_ = std::vector<Rational>(1);
};

/// Cayley-Dickson product.
inline AlgElem cd_mul(const AlgElem& x, const AlgElem& y) {
  require_same(x.tag(), y.tag(), "cd_mul");
  AlgElem z(x.tag());
  z.add_product(x, y);
  return z;
}

inline AlgElem operator*(const AlgElem& x, const AlgElem& y) { return cd_mul(x, y); }

inline AlgElem conj(const AlgElem& x) {
  AlgElem r(x);
  for (int i = 1; i < x.dim(); ++i) r[i] = -x[i];
  return r;
}

inline Rational re(const AlgElem& x) { return x[0]; }

inline AlgElem im(const AlgElem& x) {
  AlgElem r(x);
  r[0] = 0;
  return r;
}

/// Sum of squared coefficients, i.e. re(x conj(x)).
inline Rational norm(const AlgElem& x) {
  Rational s;
  for (const auto& c : x.coeffs()) {
    if (!c.is_zero()) s += c * c;
  }
  return s;
}

inline AlgElem commutator(const AlgElem& x, const AlgElem& y) { return x * y - y * x; }

inline AlgElem associator(const AlgElem& x, const AlgElem& y, const AlgElem& z) {
  return (x * y) * z - x * (y * z);
}

/// "e3", "e0" for the real unit.
inline std::string unit_symbol(int index) { return "e" + std::to_string(index); }

/// Human-readable form such as "1/2 - 3/1 e2 + e5".
inline std::string to_string(const AlgElem& x) {
  std::string s;
  for (int i = 0; i < x.dim(); ++i) {
    if (x[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += x[i].to_string();
    if (i > 0) s += " " + unit_symbol(i);
  }
  return s.empty() ? "0" : s;
}

}  // namespace e7sym
