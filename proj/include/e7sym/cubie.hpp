#pragma once

// Rank-3 antisymmetric tensors: Hodge duals of H3(K) elements ("cubies"), the
// 6x6x6 cube assembled from them, and the tensor actions of e7 on cubes.

#include <algorithm>
#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "e7sym/conformal.hpp"
#include "e7sym/jordan.hpp"

namespace e7sym {

class BlockInconsistency : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sign of the permutation taking (0, 1, ..., n-1) to idx, or 0 if idx has a
/// repeated entry. Indices are zero-based.
template <std::size_t N>
constexpr int permutation_sign(std::array<int, N> idx) {
  int sign = 1;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = i + 1; j < N; ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) sign = -sign;
    }
  }
  return sign;
}

/// Levi-Civita symbol on 3 indices, eps(0,1,2) = 1. Upper and lower
/// versions coincide numerically.
constexpr int eps3(int a, int b, int c) { return permutation_sign<3>({a, b, c}); }

/// Levi-Civita symbol on 6 indices, eps(0,...,5) = 1.
constexpr int eps6(int a, int b, int c, int d, int e, int f) {
  return permutation_sign<6>({a, b, c, d, e, f});
}

constexpr int delta(int a, int b) { return a == b ? 1 : 0; }

/// 3x3x3 tensor with entries in K.
class Cubie {
 public:
  Cubie() : Cubie(AlgebraTag::real()) {}
  explicit Cubie(AlgebraTag tag) : tag_(tag) { t_.fill(AlgElem(tag)); }

  /// The Levi-Civita tensor as a cubie.
  static Cubie epsilon(AlgebraTag tag) {
    Cubie c(tag);
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        for (int d = 0; d < 3; ++d) c(a, b, d) = AlgElem::scalar(tag, eps3(a, b, d));
      }
    }
    return c;
  }

  [[nodiscard]] AlgebraTag tag() const { return tag_; }
  AlgElem& operator()(int a, int b, int c) { return t_[9 * a + 3 * b + c]; }
  const AlgElem& operator()(int a, int b, int c) const { return t_[9 * a + 3 * b + c]; }

  [[nodiscard]] bool antisymmetric_in_last_two() const {
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        for (int c = 0; c < 3; ++c) {
          if (!((*this)(a, b, c) == -(*this)(a, c, b))) return false;
        }
      }
    }
    return true;
  }

  Cubie& operator*=(const Rational& s) {
    for (auto& x : t_) x *= s;
    return *this;
  }
  friend Cubie operator*(const Rational& s, Cubie c) { return c *= s; }
  friend bool operator==(const Cubie& a, const Cubie& b) = default;

 private:
  AlgebraTag tag_;
  std::array<AlgElem, 27> t_;
};

/// (*X)_abc = X_a^m eps_mbc.
inline Cubie hodge(const HermMat& x) {
  const AlgebraTag tag = x.tag();
  Cubie c(tag);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int d = 0; d < 3; ++d) {
        for (int m = 0; m < 3; ++m) {
          const int e = eps3(m, b, d);
          if (e != 0) c(a, b, d) += Rational(e) * x(a, m);
        }
      }
    }
  }
  return c;
}

/// X_a^b = C_amn eps^bmn / 2, the inverse of hodge.
inline HermMat unhodge(const Cubie& c) {
  if (!c.antisymmetric_in_last_two()) {
    throw BlockInconsistency("unhodge: cubie is not antisymmetric in its last two indices");
  }
  const AlgebraTag tag = c.tag();
  Mat3 m(tag);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int p = 0; p < 3; ++p) {
        for (int n = 0; n < 3; ++n) {
          const int e = eps3(b, p, n);
          if (e != 0) m(a, b) += Rational(e, 2) * c(a, p, n);
        }
      }
    }
  }
  if (!m.is_hermitian()) throw BlockInconsistency("unhodge: cubie is not the dual of a Hermitian matrix");
  return HermMat(std::move(m));
}

/// Outcome of the Levi-Civita identity checks.
struct EpsilonReport {
  int full_contraction = 0;        // eps_mns eps^mns
  bool single_free_ok = false;     // eps_amn eps^bmn = 2 delta
  bool double_free_ok = false;     // eps_abm eps^cdm = dd - dd
  bool expansion_ok = false;       // eps_abc eps^def as a signed sum over S3
  int printed_form_mismatches = 0; // index tuples where the printed six-term form differs
  [[nodiscard]] bool ok() const {
    return full_contraction == 6 && single_free_ok && double_free_ok && expansion_ok;
  }
};

inline EpsilonReport epsilon_identity_suite() {
  EpsilonReport r;
  for (int m = 0; m < 3; ++m) {
    for (int n = 0; n < 3; ++n) {
      for (int s = 0; s < 3; ++s) r.full_contraction += eps3(m, n, s) * eps3(m, n, s);
    }
  }
  r.single_free_ok = true;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      int sum = 0;
      for (int m = 0; m < 3; ++m) {
        for (int n = 0; n < 3; ++n) sum += eps3(a, m, n) * eps3(b, m, n);
      }
      r.single_free_ok = r.single_free_ok && sum == 2 * delta(a, b);
    }
  }
  r.double_free_ok = true;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        for (int d = 0; d < 3; ++d) {
          int sum = 0;
          for (int m = 0; m < 3; ++m) sum += eps3(a, b, m) * eps3(c, d, m);
          r.double_free_ok = r.double_free_ok &&
                             sum == delta(a, c) * delta(b, d) - delta(a, d) * delta(b, c);
        }
      }
    }
  }
  r.expansion_ok = true;
  const std::array<std::array<int, 3>, 6> perms = {
      {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {1, 0, 2}, {2, 1, 0}}};
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        for (int d = 0; d < 3; ++d) {
          for (int e = 0; e < 3; ++e) {
            for (int f = 0; f < 3; ++f) {
              const int lhs = eps3(a, b, c) * eps3(d, e, f);
              const std::array<int, 3> lo = {a, b, c};
              int standard = 0;
              for (const auto& s : perms) {
                standard += permutation_sign<3>(s) * delta(lo[s[0]], d) * delta(lo[s[1]], e) *
                            delta(lo[s[2]], f);
              }
              // six terms exactly as printed, including the repeated last one
              const int printed = delta(a, d) * delta(b, e) * delta(c, f) +
                                  delta(b, d) * delta(c, e) * delta(a, f) +
                                  delta(c, d) * delta(a, e) * delta(b, f) -
                                  delta(a, d) * delta(c, e) * delta(b, f) -
                                  delta(b, d) * delta(a, e) * delta(c, f) -
                                  delta(c, d) * delta(a, e) * delta(b, f);
              r.expansion_ok = r.expansion_ok && lhs == standard;
              if (lhs != printed) ++r.printed_form_mismatches;
            }
          }
        }
      }
    }
  }
  return r;
}

/// tr X = C_abc eps^abc / 2. The contraction must be real.
inline Rational cubie_trace(const Cubie& c) {
  AlgElem s(c.tag());
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int d = 0; d < 3; ++d) {
        const int e = eps3(a, b, d);
        if (e != 0) s += Rational(e, 2) * c(a, b, d);
      }
    }
  }
  if (!s.is_real()) throw std::domain_error("cubie_trace: contraction is not real");
  return s[0];
}

/// (*(XY))_abc = X_amn Y_pbc eps^mnp / 2.
inline Cubie cubie_product(const Cubie& cx, const Cubie& cy) {
  require_same(cx.tag(), cy.tag(), "cubie_product");
  Cubie out(cx.tag());
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        AlgElem s(cx.tag());
        for (int m = 0; m < 3; ++m) {
          for (int n = 0; n < 3; ++n) {
            for (int p = 0; p < 3; ++p) {
              const int e = eps3(m, n, p);
              if (e == 0) continue;
              AlgElem t(cx.tag());
              t.add_product(cx(a, m, n), cy(p, b, c));
              s += Rational(e, 2) * t;
            }
          }
        }
        out(a, b, c) = s;
      }
    }
  }
  return out;
}

/// (*(X o Y))_abc = (X_amn Y_pbc + Y_amn X_pbc) eps^mnp / 4.
inline Cubie cubie_jordan(const Cubie& cx, const Cubie& cy) {
  Cubie xy = cubie_product(cx, cy);
  const Cubie yx = cubie_product(cy, cx);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) xy(a, b, c) = Rational(1, 2) * (xy(a, b, c) + yx(a, b, c));
    }
  }
  return xy;
}

/// tr(X o Y) = (X_amn Y_pbc + Y_pbc X_amn) eps^mnp eps^bca / 8.
inline Rational cubie_trace_form(const Cubie& cx, const Cubie& cy) {
  require_same(cx.tag(), cy.tag(), "cubie_trace_form");
  AlgElem s(cx.tag());
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        const int e2 = eps3(b, c, a);
        if (e2 == 0) continue;
        for (int m = 0; m < 3; ++m) {
          for (int n = 0; n < 3; ++n) {
            for (int p = 0; p < 3; ++p) {
              const int e1 = eps3(m, n, p);
              if (e1 == 0) continue;
              AlgElem t(cx.tag());
              t.add_product(cx(a, m, n), cy(p, b, c));
              t.add_product(cy(p, b, c), cx(a, m, n));
              s += Rational(e1 * e2, 8) * t;
            }
          }
        }
      }
    }
  }
  if (!s.is_real()) throw std::domain_error("cubie_trace_form: contraction is not real");
  return s[0];
}

/// (trX)(trY) = X_abc Y_def eps^abc eps^def / 4.
inline Rational cubie_trace_product(const Cubie& cx, const Cubie& cy) {
  require_same(cx.tag(), cy.tag(), "cubie_trace_product");
  AlgElem sx(cx.tag()), sy(cy.tag());
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int d = 0; d < 3; ++d) {
        const int e = eps3(a, b, d);
        if (e == 0) continue;
        sx += Rational(e) * cx(a, b, d);
        sy += Rational(e) * cy(a, b, d);
      }
    }
  }
  const AlgElem s = sx * sy;
  if (!s.is_real()) throw std::domain_error("cubie_trace_product: contraction is not real");
  return s[0] / Rational(4);
}

/// X_c^m Y_d^n eps_amn eps^bcd / 2, which equals (X*Y)_a^b when every entry
/// of X commutes with every entry of Y.
inline HermMat cubie_freudenthal_commuting(const HermMat& x, const HermMat& y) {
  require_same(x.tag(), y.tag(), "cubie_freudenthal_commuting");
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        for (int l = 0; l < 3; ++l) {
          if (!commutator(x(i, j), y(k, l)).is_zero()) {
            throw std::invalid_argument(
                "cubie_freudenthal_commuting: X(" + std::to_string(i + 1) + "," +
                std::to_string(j + 1) + ") does not commute with Y(" + std::to_string(k + 1) +
                "," + std::to_string(l + 1) + ")");
          }
        }
      }
    }
  }
  const AlgebraTag tag = x.tag();
  Mat3 out(tag);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        for (int d = 0; d < 3; ++d) {
          const int e2 = eps3(b, c, d);
          if (e2 == 0) continue;
          for (int m = 0; m < 3; ++m) {
            for (int n = 0; n < 3; ++n) {
              const int e1 = eps3(a, m, n);
              if (e1 == 0) continue;
              AlgElem t(tag);
              t.add_product(x(c, m), y(d, n));
              out(a, b) += Rational(e1 * e2, 2) * t;
            }
          }
        }
      }
    }
  }
  return HermMat(std::move(out));
}

/// Image of *X under phi in e6 written on the cubie:
///   phi_a^m X_m^n eps_nbc + X_a^n phi'_b^m eps_nmc + X_a^n phi'_c^m eps_nbm
/// with phi' = -phi^dagger.
inline Cubie e6_cubie_action(const Mat3& phi, const HermMat& x) {
  require_same(phi.tag(), x.tag(), "e6_cubie_action");
  const AlgebraTag tag = x.tag();
  const Mat3 phid = -phi.dagger();
  const Mat3 phix = phi * x.mat();
  Cubie out(tag);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        AlgElem s(tag);
        for (int n = 0; n < 3; ++n) {
          const int e = eps3(n, b, c);
          if (e != 0) s += Rational(e) * phix(a, n);
        }
        for (int n = 0; n < 3; ++n) {
          for (int m = 0; m < 3; ++m) {
            const int e1 = eps3(n, m, c);
            if (e1 != 0) {
              AlgElem t(tag);
              t.add_product(x(a, n), phid(b, m));
              s += Rational(e1) * t;
            }
            const int e2 = eps3(n, b, m);
            if (e2 != 0) {
              AlgElem t(tag);
              t.add_product(x(a, n), phid(c, m));
              s += Rational(e2) * t;
            }
          }
        }
        out(a, b, c) = s;
      }
    }
  }
  return out;
}

/// 6x6 matrix with entries in K.
class Mat6 {
 public:
  Mat6() : Mat6(AlgebraTag::real()) {}
  explicit Mat6(AlgebraTag tag) : tag_(tag) { e_.fill(AlgElem(tag)); }

  [[nodiscard]] AlgebraTag tag() const { return tag_; }
  AlgElem& operator()(int i, int j) { return e_[6 * i + j]; }
  const AlgElem& operator()(int i, int j) const { return e_[6 * i + j]; }

  friend Mat6 operator*(const Mat6& x, const Mat6& y) {
    require_same(x.tag_, y.tag_, "Mat6 *");
    Mat6 z(x.tag_);
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) {
        for (int k = 0; k < 6; ++k) z(i, j).add_product(x(i, k), y(k, j));
      }
    }
    return z;
  }
  friend Mat6 operator+(Mat6 a, const Mat6& b) {
    for (int k = 0; k < 36; ++k) a.e_[k] += b.e_[k];
    return a;
  }
  friend Mat6 operator*(const Rational& s, Mat6 a) {
    for (auto& x : a.e_) x *= s;
    return a;
  }
  friend bool operator==(const Mat6& a, const Mat6& b) = default;

  [[nodiscard]] Mat6 dagger() const {
    Mat6 r(tag_);
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) r(i, j) = conj((*this)(j, i));
    }
    return r;
  }
  [[nodiscard]] bool is_zero() const {
    for (const auto& x : e_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }
  [[nodiscard]] bool is_real() const {
    for (const auto& x : e_) {
      if (!x.is_real()) return false;
    }
    return true;
  }

  /// Omega = [[0, I], [-I, 0]].
  static Mat6 omega(AlgebraTag tag) {
    Mat6 o(tag);
    for (int i = 0; i < 3; ++i) {
      o(i, i + 3) = AlgElem::one(tag);
      o(i + 3, i) = -AlgElem::one(tag);
    }
    return o;
  }

 private:
  AlgebraTag tag_;
  std::array<AlgElem, 36> e_;
};

/// Theta in block form [[phi - rho I/3, A], [B, phi' + rho I/3]], phi' =
/// -phi^dagger. Only defined when phi has a 3x3 matrix form.
inline Mat6 block_form(const E7Elem& theta) {
  if (!theta.phi.has_matrix()) {
    throw UnsupportedInput("block_form: phi of derived kind has no 3x3 matrix form");
  }
  const AlgebraTag tag = theta.tag();
  const Mat3& phi = *theta.phi.matrix;
  const Mat3 phid = -phi.dagger();
  const AlgElem r3 = AlgElem::scalar(tag, Rational(1, 3) * theta.rho);
  Mat6 m(tag);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      m(i, j) = phi(i, j);
      m(i, j + 3) = theta.A(i, j);
      m(i + 3, j) = theta.B(i, j);
      m(i + 3, j + 3) = phid(i, j);
    }
    m(i, i) -= r3;
    m(i + 3, i + 3) += r3;
  }
  return m;
}

/// Theta Omega + Omega Theta^dagger; zero for elements of sp(6, K).
inline Mat6 symplectic_defect(const Mat6& theta) {
  const Mat6 om = Mat6::omega(theta.tag());
  return theta * om + om * theta.dagger();
}

/// 6x6x6 tensor with entries in K; indices 0..5, where 0..2 are "small"
/// and 3..5 are "large".
class Cube {
 public:
  Cube() : Cube(AlgebraTag::real()) {}
  explicit Cube(AlgebraTag tag) : tag_(tag), t_(216, AlgElem(tag)) {}

  [[nodiscard]] AlgebraTag tag() const { return tag_; }
  AlgElem& operator()(int a, int b, int c) { return t_[36 * a + 6 * b + c]; }
  const AlgElem& operator()(int a, int b, int c) const { return t_[36 * a + 6 * b + c]; }

  [[nodiscard]] bool totally_antisymmetric() const {
    for (int a = 0; a < 6; ++a) {
      for (int b = 0; b < 6; ++b) {
        for (int c = 0; c < 6; ++c) {
          const AlgElem& v = (*this)(a, b, c);
          const int s = permutation_sign<3>({a, b, c});
          if (s == 0) {
            if (!v.is_zero()) return false;
            continue;
          }
          const std::array<std::array<int, 3>, 5> others = {
              {{b, c, a}, {c, a, b}, {b, a, c}, {a, c, b}, {c, b, a}}};
          for (std::size_t k = 0; k < others.size(); ++k) {
            const AlgElem w = (*this)(others[k][0], others[k][1], others[k][2]);
            const bool even = k < 2;
            if (!(even ? w == v : w == -v)) return false;
          }
        }
      }
    }
    return true;
  }

  [[nodiscard]] bool is_zero() const {
    for (const auto& x : t_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  /// Coordinates over the 20 sorted triples a<b<c, each expanded over the
  /// units of K; only meaningful for totally antisymmetric cubes.
  [[nodiscard]] std::vector<Rational> coords() const {
    std::vector<Rational> v;
    v.reserve(20 * tag_.dim());
    for_each_sorted_triple([&](int a, int b, int c) {
      for (const auto& x : (*this)(a, b, c).coeffs()) v.push_back(x);
    });
    return v;
  }

  static Cube from_coords(AlgebraTag tag, const std::vector<Rational>& v) {
    const int k = tag.dim();
    if (static_cast<int>(v.size()) != 20 * k) {
      throw std::invalid_argument("Cube::from_coords: expected " + std::to_string(20 * k) +
                                  " coordinates");
    }
    Cube cube(tag);
    int t = 0;
    for_each_sorted_triple([&](int a, int b, int c) {
      AlgElem x(tag, {v.begin() + t * k, v.begin() + (t + 1) * k});
      cube.set_antisymmetric(a, b, c, x);
      ++t;
    });
    return cube;
  }

  /// Writes x at (a,b,c) and the signed value at every permutation.
  void set_antisymmetric(int a, int b, int c, const AlgElem& x) {
    const std::array<std::array<int, 3>, 6> perms = {
        {{a, b, c}, {b, c, a}, {c, a, b}, {b, a, c}, {a, c, b}, {c, b, a}}};
    for (std::size_t k = 0; k < perms.size(); ++k) {
      (*this)(perms[k][0], perms[k][1], perms[k][2]) = k < 3 ? x : -x;
    }
  }

  template <typename Fn>
  static void for_each_sorted_triple(Fn&& fn) {
    for (int a = 0; a < 6; ++a) {
      for (int b = a + 1; b < 6; ++b) {
        for (int c = b + 1; c < 6; ++c) fn(a, b, c);
      }
    }
  }

  friend bool operator==(const Cube& x, const Cube& y) = default;

 private:
  AlgebraTag tag_;
  std::vector<AlgElem> t_;
};

namespace detail {
constexpr bool is_large(int i) { return i >= 3; }

// For a triple of distinct indices, the permutation that lists it in the
// canonical block order used by assemble_cube: the odd-one-out first (small
// index for two large, large index for one large), remaining indices in
// their original relative order. Returns the sign of that reordering.
inline int canonical_block_order(std::array<int, 3> idx, std::array<int, 3>& out) {
  const int nlarge = is_large(idx[0]) + is_large(idx[1]) + is_large(idx[2]);
  if (nlarge == 0 || nlarge == 3) {
    out = idx;
    return 1;
  }
  const bool lead_large = nlarge == 1;
  int lead = -1;
  for (int i = 0; i < 3; ++i) {
    if (is_large(idx[i]) == lead_large) lead = i;
  }
  out[0] = idx[lead];
  int k = 1;
  for (int i = 0; i < 3; ++i) {
    if (i != lead) out[k++] = idx[i];
  }
  // moving position `lead` to the front is `lead` adjacent transpositions
  return lead % 2 == 0 ? 1 : -1;
}
}  // namespace detail

/// P_abc = p eps_abc (all small), (*Y)_{a-3,b,c} (one large, first),
/// (*X)_{a,b-3,c-3} (two large, last), q eps (all large); the rest by
/// antisymmetry.
inline Cube assemble_cube(const FreudVec& v) {
  const AlgebraTag tag = v.tag();
  const Cubie cx = hodge(v.X);
  const Cubie cy = hodge(v.Y);
  Cube cube(tag);
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      for (int c = 0; c < 6; ++c) {
        if (a == b || b == c || a == c) continue;
        std::array<int, 3> o{};
        const int s = detail::canonical_block_order({a, b, c}, o);
        const int nlarge = detail::is_large(a) + detail::is_large(b) + detail::is_large(c);
        AlgElem x(tag);
        switch (nlarge) {
          case 0: x = AlgElem::scalar(tag, v.p * eps3(o[0], o[1], o[2])); break;
          case 1: x = cy(o[0] - 3, o[1], o[2]); break;
          case 2: x = cx(o[0], o[1] - 3, o[2] - 3); break;
          default: x = AlgElem::scalar(tag, v.q * eps3(o[0] - 3, o[1] - 3, o[2] - 3)); break;
        }
        cube(a, b, c) = s > 0 ? x : -x;
      }
    }
  }
  return cube;
}

/// Reads (X, Y, p, q) back from the cubies 011, 100, 000 and 111. Fails
/// unless the cube is exactly the assembly of the result.
inline FreudVec extract_freudvec(const Cube& cube) {
  const AlgebraTag tag = cube.tag();
  if (!cube.totally_antisymmetric()) {
    throw BlockInconsistency("extract_freudvec: cube is not totally antisymmetric");
  }
  Cubie cx(tag), cy(tag);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        cx(a, b, c) = cube(a, b + 3, c + 3);
        cy(a, b, c) = cube(a + 3, b, c);
      }
    }
  }
  const AlgElem& p = cube(0, 1, 2);
  const AlgElem& q = cube(3, 4, 5);
  if (!p.is_real() || !q.is_real()) {
    throw BlockInconsistency("extract_freudvec: 000 or 111 cubie is not a real multiple of eps");
  }
  FreudVec v{unhodge(cx), unhodge(cy), p[0], q[0]};
  if (!(assemble_cube(v) == cube)) {
    throw BlockInconsistency("extract_freudvec: cube is not of block form");
  }
  return v;
}

/// Theta_a^m P_mbc + Theta_b^m P_amc + Theta_c^m P_abm, every Theta factor on
/// the left.
inline Cube naive_action(const Mat6& theta, const Cube& cube) {
  require_same(theta.tag(), cube.tag(), "naive_action");
  const AlgebraTag tag = cube.tag();
  Cube out(tag);
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      for (int c = 0; c < 6; ++c) {
        AlgElem& s = out(a, b, c);
        for (int m = 0; m < 6; ++m) {
          s.add_product(theta(a, m), cube(m, b, c));
          s.add_product(theta(b, m), cube(a, m, c));
          s.add_product(theta(c, m), cube(a, b, m));
        }
      }
    }
  }
  return out;
}

inline Cube naive_action(const E7Elem& theta, const Cube& cube) {
  return naive_action(block_form(theta), cube);
}

/// Result of the sided action, before any consistency judgement.
struct SidedResult {
  Cube cube;
  bool consistent = true;  // defining cubies agreed with total antisymmetry
};

/// Theta_a^m P_mbc + P_amc Theta_b^m + P_abm Theta_c^m evaluated on the
/// defining cubies 000, 011, 100 and 111; every other entry is filled by
/// total antisymmetry from the signed average of the defining values.
inline SidedResult sided_action_checked(const Mat6& theta, const Cube& cube) {
  require_same(theta.tag(), cube.tag(), "sided_action");
  const AlgebraTag tag = cube.tag();
  auto raw = [&](int a, int b, int c) {
    AlgElem s(tag);
    for (int m = 0; m < 6; ++m) {
      s.add_product(theta(a, m), cube(m, b, c));
      s.add_product(cube(a, m, c), theta(b, m));
      s.add_product(cube(a, b, m), theta(c, m));
    }
    return s;
  };
  auto defining = [](int a, int b, int c) {
    const int la = detail::is_large(a), lb = detail::is_large(b), lc = detail::is_large(c);
    return lb == lc && (la + lb + lc == 0 || la + lb + lc == 3 || la != lb);
  };
  SidedResult res{Cube(tag), true};
  Cube::for_each_sorted_triple([&](int a, int b, int c) {
    const std::array<std::array<int, 3>, 6> perms = {
        {{a, b, c}, {b, c, a}, {c, a, b}, {b, a, c}, {a, c, b}, {c, b, a}}};
    std::vector<AlgElem> values;
    for (std::size_t k = 0; k < perms.size(); ++k) {
      const auto& pm = perms[k];
      if (!defining(pm[0], pm[1], pm[2])) continue;
      AlgElem v = raw(pm[0], pm[1], pm[2]);
      values.push_back(k < 3 ? v : -v);
    }
    AlgElem avg(tag);
    for (const auto& v : values) avg += v;
    avg *= Rational(1, static_cast<long long>(values.size()));
    for (const auto& v : values) res.consistent = res.consistent && v == avg;
    res.cube.set_antisymmetric(a, b, c, avg);
  });
  return res;
}

/// Sided action; throws BlockInconsistency when the defining cubies do not
/// extend to a totally antisymmetric image.
inline Cube sided_action(const Mat6& theta, const Cube& cube) {
  SidedResult r = sided_action_checked(theta, cube);
  if (!r.consistent) {
    throw BlockInconsistency("sided_action: defining cubie images are not antisymmetric");
  }
  return std::move(r.cube);
}

inline Cube sided_action(const E7Elem& theta, const Cube& cube) {
  return sided_action(block_form(theta), cube);
}

/// K_a^b = P_acd P_efg eps^cdefgb: first index of the first factor free,
/// last slot of the volume element free, everything else contracted.
inline Mat6 pstar_tensor(const Cube& cube) {
  const AlgebraTag tag = cube.tag();
  Mat6 k(tag);
  // sparse list of nonzero entries
  struct Entry {
    int a, b, c;
    const AlgElem* v;
  };
  std::vector<Entry> nz;
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      for (int c = 0; c < 6; ++c) {
        if (!cube(a, b, c).is_zero()) nz.push_back({a, b, c, &cube(a, b, c)});
      }
    }
  }
  for (const auto& x : nz) {
    for (const auto& y : nz) {
      const std::array<int, 5> used = {x.b, x.c, y.a, y.b, y.c};
      int missing = 15;
      bool distinct = true;
      for (int i = 0; i < 5 && distinct; ++i) {
        for (int j = i + 1; j < 5; ++j) distinct = distinct && used[i] != used[j];
        missing -= used[i];
      }
      if (!distinct) continue;
      const int e = eps6(x.b, x.c, y.a, y.b, y.c, missing);
      AlgElem t(tag);
      t.add_product(*x.v, *y.v);
      k(x.a, missing) += Rational(e) * t;
    }
  }
  return k;
}

/// P_gab P_cde P_fhi P_jkl eps^abcdef eps^ghijkl, contracted as
/// K_g^f K_f^g with K from pstar_tensor (products kept in the printed order,
/// which is immaterial for commutative K).
inline AlgElem quartic_contraction(const Cube& cube) {
  const Mat6 k = pstar_tensor(cube);
  AlgElem s(cube.tag());
  for (int g = 0; g < 6; ++g) {
    for (int f = 0; f < 6; ++f) s.add_product(k(g, f), k(f, g));
  }
  return s;
}

/// quartic_contraction as a number; R and C only.
inline Rational quartic_tensor(const Cube& cube) {
  if (cube.tag().level() > 1) {
    throw UnsupportedInput("quartic_tensor: only defined over R and C");
  }
  const AlgElem s = quartic_contraction(cube);
  if (!s.is_real()) throw std::domain_error("quartic_tensor: contraction is not real");
  return s[0];
}

}  // namespace e7sym
