#pragma once

// 3x3 matrices over R, C, H, O and the Jordan algebra H3(K) of Hermitian ones.

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "e7sym/algebra.hpp"
#include "e7sym/linalg.hpp"

namespace e7sym {

class NotHermitian : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// General 3x3 matrix with entries in K (no symmetry constraint).
class Mat3 {
 public:
  Mat3() : Mat3(AlgebraTag::real()) {}
  explicit Mat3(AlgebraTag tag) : tag_(tag) { e_.fill(AlgElem(tag)); }

  static Mat3 identity(AlgebraTag tag) {
    Mat3 m(tag);
    for (int i = 0; i < 3; ++i) m(i, i) = AlgElem::one(tag);
    return m;
  }
  static Mat3 diagonal(AlgebraTag tag, const Rational& a, const Rational& b, const Rational& c) {
    Mat3 m(tag);
    m(0, 0) = AlgElem::scalar(tag, a);
    m(1, 1) = AlgElem::scalar(tag, b);
    m(2, 2) = AlgElem::scalar(tag, c);
    return m;
  }

  [[nodiscard]] AlgebraTag tag() const { return tag_; }
  AlgElem& operator()(int i, int j) { return e_[3 * i + j]; }
  const AlgElem& operator()(int i, int j) const { return e_[3 * i + j]; }

  Mat3& operator+=(const Mat3& o) {
    require_same(tag_, o.tag_, "Mat3 +");
    for (int k = 0; k < 9; ++k) e_[k] += o.e_[k];
    return *this;
  }
  Mat3& operator-=(const Mat3& o) {
    require_same(tag_, o.tag_, "Mat3 -");
    for (int k = 0; k < 9; ++k) e_[k] -= o.e_[k];
    return *this;
  }
  Mat3& operator*=(const Rational& s) {
    for (auto& x : e_) x *= s;
    return *this;
  }
  friend Mat3 operator+(Mat3 a, const Mat3& b) { return a += b; }
  friend Mat3 operator-(Mat3 a, const Mat3& b) { return a -= b; }
  friend Mat3 operator*(Mat3 a, const Rational& s) { return a *= s; }
  friend Mat3 operator*(const Rational& s, Mat3 a) { return a *= s; }
  Mat3 operator-() const { return *this * Rational(-1); }

  /// Entrywise product (xy)_ij = sum_k x_ik y_kj, each term taken exactly as
  /// written (left entry times right entry).
  friend Mat3 operator*(const Mat3& x, const Mat3& y) {
    require_same(x.tag_, y.tag_, "Mat3 *");
    Mat3 z(x.tag_);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) z(i, j).add_product(x(i, k), y(k, j));
      }
    }
    return z;
  }

  friend bool operator==(const Mat3& a, const Mat3& b) = default;

  [[nodiscard]] bool is_zero() const {
    for (const auto& x : e_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  /// Conjugate transpose.
  [[nodiscard]] Mat3 dagger() const {
    Mat3 r(tag_);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) r(i, j) = conj((*this)(j, i));
    }
    return r;
  }

  /// Sum of diagonal entries as an element of K.
  [[nodiscard]] AlgElem full_trace() const { return e_[0] + e_[4] + e_[8]; }

  [[nodiscard]] bool is_hermitian() const { return *this == dagger(); }
  [[nodiscard]] bool is_antihermitian() const { return *this == -dagger(); }

  /// True when every entry is real.
  [[nodiscard]] bool is_real() const {
    for (const auto& x : e_) {
      if (!x.is_real()) return false;
    }
    return true;
  }

 private:
  AlgebraTag tag_;
  std::array<AlgElem, 9> e_;
};

/// Element of H3(K). Always Hermitian; real dimension 3 + 3k.
class HermMat {
 public:
  HermMat() : HermMat(AlgebraTag::real()) {}
  explicit HermMat(AlgebraTag tag) : m_(tag) {}
  explicit HermMat(Mat3 m) : m_(std::move(m)) {
    if (!m_.is_hermitian()) throw NotHermitian("HermMat: matrix is not Hermitian");
  }

  static HermMat identity(AlgebraTag tag) { return HermMat(Mat3::identity(tag)); }
  static HermMat diagonal(AlgebraTag tag, const Rational& a, const Rational& b,
                          const Rational& c) {
    return HermMat(Mat3::diagonal(tag, a, b, c));
  }

  /// Real dimension of H3(K).
  static int real_dim(AlgebraTag tag) { return 3 + 3 * tag.dim(); }

  /// Coordinates: E11, E22, E33, then positions (2,3), (1,3), (1,2), each
  /// expanded over the units 1, e1, ..., e_{k-1}. The coordinate of an
  /// off-diagonal basis element is read from the upper-triangle entry.
  [[nodiscard]] std::vector<Rational> coords() const {
    const int k = tag().dim();
    std::vector<Rational> v(real_dim(tag()));
    for (int i = 0; i < 3; ++i) v[i] = m_(i, i)[0];
    for (int pos = 0; pos < 3; ++pos) {
      const auto [r, c] = kOffDiagonal[pos];
      for (int u = 0; u < k; ++u) v[3 + pos * k + u] = m_(r, c)[u];
    }
    return v;
  }

  static HermMat from_coords(AlgebraTag tag, const std::vector<Rational>& v) {
    if (static_cast<int>(v.size()) != real_dim(tag)) {
      throw std::invalid_argument("HermMat::from_coords: expected " +
                                  std::to_string(real_dim(tag)) + " coordinates");
    }
    const int k = tag.dim();
    Mat3 m(tag);
    for (int i = 0; i < 3; ++i) m(i, i)[0] = v[i];
    for (int pos = 0; pos < 3; ++pos) {
      const auto [r, c] = kOffDiagonal[pos];
      for (int u = 0; u < k; ++u) m(r, c)[u] = v[3 + pos * k + u];
      m(c, r) = conj(m(r, c));
    }
    HermMat h;
    h.m_ = std::move(m);
    return h;
  }

  static HermMat basis_element(AlgebraTag tag, int index) {
    std::vector<Rational> v(real_dim(tag));
    v.at(index) = 1;
    return from_coords(tag, v);
  }

  [[nodiscard]] AlgebraTag tag() const { return m_.tag(); }
  [[nodiscard]] const Mat3& mat() const { return m_; }
  const AlgElem& operator()(int i, int j) const { return m_(i, j); }

  HermMat& operator+=(const HermMat& o) {
    m_ += o.m_;
    return *this;
  }
  HermMat& operator-=(const HermMat& o) {
    m_ -= o.m_;
    return *this;
  }
  HermMat& operator*=(const Rational& s) {
    m_ *= s;
    return *this;
  }
  friend HermMat operator+(HermMat a, const HermMat& b) { return a += b; }
  friend HermMat operator-(HermMat a, const HermMat& b) { return a -= b; }
  friend HermMat operator*(HermMat a, const Rational& s) { return a *= s; }
  friend HermMat operator*(const Rational& s, HermMat a) { return a *= s; }
  HermMat operator-() const { return *this * Rational(-1); }
  friend bool operator==(const HermMat& a, const HermMat& b) = default;

  [[nodiscard]] bool is_zero() const { return m_.is_zero(); }
  /// True when every entry is real (so it commutes with everything).
  [[nodiscard]] bool is_real() const { return m_.is_real(); }

  static constexpr std::array<std::array<int, 2>, 3> kOffDiagonal = {{{1, 2}, {0, 2}, {0, 1}}};

 private:
  Mat3 m_;
};

inline Rational trace(const HermMat& x) { return x(0, 0)[0] + x(1, 1)[0] + x(2, 2)[0]; }

/// X o Y = (XY + YX) / 2.
inline HermMat jordan_product(const HermMat& x, const HermMat& y) {
  require_same(x.tag(), y.tag(), "jordan_product");
  Mat3 s = x.mat() * y.mat() + y.mat() * x.mat();
  s *= Rational(1, 2);
  return HermMat(std::move(s));
}

/// X * Y = X o Y - ((trX) Y + (trY) X)/2 + ((trX)(trY) - tr(X o Y)) I / 2.
inline HermMat freudenthal_product(const HermMat& x, const HermMat& y) {
  require_same(x.tag(), y.tag(), "freudenthal_product");
  const Rational tx = trace(x), ty = trace(y);
  const HermMat xy = jordan_product(x, y);
  const Rational half(1, 2);
  return xy - half * (tx * y + ty * x) +
         (half * (tx * ty - trace(xy))) * HermMat::identity(x.tag());
}

/// tr(X o Y), the trace form.
inline Rational trace_form(const HermMat& x, const HermMat& y) {
  return trace(jordan_product(x, y));
}

/// det X = tr((X * X) o X) / 3.
inline Rational det(const HermMat& x) {
  return Rational(1, 3) * trace(jordan_product(freudenthal_product(x, x), x));
}

/// Gram matrix of the trace form in the HermMat basis: 1 on diagonal units,
/// 2 on off-diagonal units.
inline QMatrix trace_form_gram(AlgebraTag tag) {
  const int n = HermMat::real_dim(tag);
  QMatrix g(n, n);
  for (int i = 0; i < n; ++i) g(i, i) = i < 3 ? Rational(1) : Rational(2);
  return g;
}

/// Matrix of a linear map H3(K) -> H3(K) in the HermMat basis (columns are
/// images of basis elements).
template <typename Fn>
QMatrix matrix_of_map(AlgebraTag tag, Fn&& fn) {
  const int n = HermMat::real_dim(tag);
  QMatrix m(n, n);
  for (int j = 0; j < n; ++j) {
    const std::vector<Rational> img = fn(HermMat::basis_element(tag, j)).coords();
    for (int i = 0; i < n; ++i) m(i, j) = img[i];
  }
  return m;
}

inline HermMat apply(const QMatrix& op, const HermMat& x) {
  return HermMat::from_coords(x.tag(), op.apply(x.coords()));
}

/// <X,Y> Z = Y o (X o Z) - X o (Y o Z) - (X o Y) o Z + tr(X o Y) Z / 3, as a
/// matrix in the HermMat basis.
inline QMatrix angle_operator(const HermMat& x, const HermMat& y) {
  require_same(x.tag(), y.tag(), "angle_operator");
  const HermMat xy = jordan_product(x, y);
  const Rational t = Rational(1, 3) * trace(xy);
  return matrix_of_map(x.tag(), [&](const HermMat& z) {
    return jordan_product(y, jordan_product(x, z)) - jordan_product(x, jordan_product(y, z)) -
           jordan_product(xy, z) + t * z;
  });
}

}  // namespace e7sym
