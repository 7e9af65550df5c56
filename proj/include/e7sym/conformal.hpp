#pragma once

// e6 acting on H3(K), e7 = e6 + translations + conformal translations +
// dilation acting on the minimal representation (X, Y, p, q), the quartic
// invariant, and the exact bracket/closure machinery built on matrixization.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "e7sym/jordan.hpp"
#include "e7sym/linalg.hpp"

namespace e7sym {

enum class E6Kind {
  boost,     // tracefree Hermitian matrix
  rotation,  // tracefree anti-Hermitian matrix
  matrix,    // any other tracefree matrix (linear combinations)
  derived,   // operator pair with no 3x3 matrix form (nested brackets)
};

inline const char* to_string(E6Kind k) {
  switch (k) {
    case E6Kind::boost: return "boost";
    case E6Kind::rotation: return "rotation";
    case E6Kind::matrix: return "matrix";
    case E6Kind::derived: return "derived";
  }
  return "?";
}

/// An element of e6 carried as its action on H3(K) together with the dual
/// action, both as matrices in the HermMat basis.
struct E6Op {
  AlgebraTag tag;
  QMatrix act;
  QMatrix dual;
  E6Kind kind = E6Kind::derived;
  std::optional<Mat3> matrix;  // present unless kind == derived

  [[nodiscard]] bool has_matrix() const { return matrix.has_value(); }

  static E6Op zero(AlgebraTag tag) { return from_matrix(Mat3(tag)); }

  /// phi acts by X -> phi X + X phi^dagger; its dual phi' = -phi^dagger acts
  /// the same way.
  static E6Op from_matrix(const Mat3& phi) {
    if (!phi.full_trace().is_zero()) {
      throw std::invalid_argument("E6Op::from_matrix: matrix must be tracefree");
    }
    const AlgebraTag tag = phi.tag();
    const Mat3 phid = phi.dagger();
    const Mat3 dual_phi = -phid;
    E6Op op;
    op.tag = tag;
    op.act = matrix_of_map(tag, [&](const HermMat& x) {
      return HermMat(phi * x.mat() + x.mat() * phid);
    });
    op.dual = matrix_of_map(tag, [&](const HermMat& y) {
      return HermMat(dual_phi * y.mat() + y.mat() * dual_phi.dagger());
    });
    if (phi.is_hermitian()) {
      op.kind = E6Kind::boost;
    } else if (phi.is_antihermitian()) {
      op.kind = E6Kind::rotation;
    } else {
      op.kind = E6Kind::matrix;
    }
    op.matrix = phi;
    return op;
  }

  /// Operator without matrix form; the dual is fixed by
  /// tr(phi(X) o Y) = -tr(X o phi'(Y)), i.e. dual = -G^{-1} act^T G.
  static E6Op from_act(AlgebraTag tag, const QMatrix& act) {
    E6Op op;
    op.tag = tag;
    op.act = act;
    op.dual = dual_of(tag, act);
    op.kind = E6Kind::derived;
    return op;
  }

  static QMatrix dual_of(AlgebraTag tag, const QMatrix& act) {
    const QMatrix g = trace_form_gram(tag);
    QMatrix ginv = g;
    for (std::size_t i = 0; i < g.rows(); ++i) ginv(i, i) = g(i, i).inverse();
    return -(ginv * act.transpose() * g);
  }

  /// Action and dual stacked block-diagonally; brackets of these are the
  /// simultaneous brackets of the pair.
  [[nodiscard]] QMatrix stacked() const {
    const std::size_t n = act.rows();
    QMatrix s(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        s(i, j) = act(i, j);
        s(n + i, n + j) = dual(i, j);
      }
    }
    return s;
  }

  static E6Op from_stacked(AlgebraTag tag, const QMatrix& s) {
    const std::size_t n = s.rows() / 2;
    E6Op op;
    op.tag = tag;
    op.act = QMatrix(n, n);
    op.dual = QMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        op.act(i, j) = s(i, j);
        op.dual(i, j) = s(n + i, n + j);
      }
    }
    op.kind = E6Kind::derived;
    return op;
  }

  [[nodiscard]] HermMat apply(const HermMat& x) const { return e7sym::apply(act, x); }
  [[nodiscard]] HermMat apply_dual(const HermMat& y) const { return e7sym::apply(dual, y); }
};

/// Linear combination sum c_i ops_i; keeps a matrix form if every op with a
/// nonzero coefficient has one.
inline E6Op combine(AlgebraTag tag, const std::vector<E6Op>& ops,
                    const std::vector<Rational>& coefs) {
  if (ops.size() != coefs.size()) throw std::invalid_argument("combine: length mismatch");
  const int n = HermMat::real_dim(tag);
  E6Op out;
  out.tag = tag;
  out.act = QMatrix(n, n);
  out.dual = QMatrix(n, n);
  Mat3 m(tag);
  bool matrix_form = true;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (coefs[i].is_zero()) continue;
    require_same(tag, ops[i].tag, "combine");
    out.act += coefs[i] * ops[i].act;
    out.dual += coefs[i] * ops[i].dual;
    if (ops[i].has_matrix()) {
      m += coefs[i] * *ops[i].matrix;
    } else {
      matrix_form = false;
    }
  }
  if (matrix_form) {
    out.matrix = m;
    out.kind = m.is_hermitian() ? E6Kind::boost
               : m.is_antihermitian() ? E6Kind::rotation
                                      : E6Kind::matrix;
  } else {
    out.kind = E6Kind::derived;
  }
  return out;
}

/// Boosts then rotations, each matrixized from X -> phi X + X phi^dagger.
///   boosts:    diag(1,-1,0), diag(0,1,-1), then for positions (2,3), (1,3),
///              (1,2) and each unit u the Hermitian matrix with e_u there
///              (3k + 2 in total)
///   rotations: the anti-Hermitian off-diagonal units in the same order,
///              then diag(e_u,-e_u,0), diag(0,e_u,-e_u) for u = 1..k-1
///              (5k - 2 in total)
inline std::vector<E6Op> e6_generator_basis(AlgebraTag tag) {
  const int k = tag.dim();
  std::vector<E6Op> out;
  out.push_back(E6Op::from_matrix(Mat3::diagonal(tag, 1, -1, 0)));
  out.push_back(E6Op::from_matrix(Mat3::diagonal(tag, 0, 1, -1)));
  for (const auto& [r, c] : HermMat::kOffDiagonal) {
    for (int u = 0; u < k; ++u) {
      Mat3 m(tag);
      m(r, c) = AlgElem::unit(tag, u);
      m(c, r) = conj(m(r, c));
      out.push_back(E6Op::from_matrix(m));
    }
  }
  for (const auto& [r, c] : HermMat::kOffDiagonal) {
    for (int u = 0; u < k; ++u) {
      Mat3 m(tag);
      m(r, c) = AlgElem::unit(tag, u);
      m(c, r) = -conj(m(r, c));
      out.push_back(E6Op::from_matrix(m));
    }
  }
  for (int u = 1; u < k; ++u) {
    for (int d = 0; d < 2; ++d) {
      Mat3 m(tag);
      m(d, d) = AlgElem::unit(tag, u);
      m(d + 1, d + 1) = -AlgElem::unit(tag, u);
      out.push_back(E6Op::from_matrix(m));
    }
  }
  return out;
}

inline int e6_boost_count(AlgebraTag tag) { return 3 * tag.dim() + 2; }
inline int e6_rotation_count(AlgebraTag tag) { return 5 * tag.dim() - 2; }

/// The Lie algebra spanned by the e6 generators under simultaneous brackets.
struct E6Algebra {
  AlgebraTag tag;
  std::vector<E6Op> basis;  // generators first, then derived elements
  std::size_t generator_count = 0;
  [[nodiscard]] std::size_t dimension() const { return basis.size(); }
  [[nodiscard]] std::size_t derived_count() const { return basis.size() - generator_count; }
};

inline E6Algebra e6_closure(AlgebraTag tag) {
  const std::vector<E6Op> gens = e6_generator_basis(tag);
  std::vector<QMatrix> stacked;
  stacked.reserve(gens.size());
  for (const auto& g : gens) stacked.push_back(g.stacked());
  const Closure<Rational> cl = close_under_bracket(stacked);
  E6Algebra out;
  out.tag = tag;
  out.generator_count = cl.generator_count;
  // close_under_bracket keeps independent generators in order; map them back
  // so that their matrix forms survive.
  std::size_t g = 0;
  for (std::size_t i = 0; i < cl.basis.size(); ++i) {
    if (i < cl.generator_count) {
      while (!(gens[g].stacked() == cl.basis[i])) ++g;
      out.basis.push_back(gens[g++]);
    } else {
      out.basis.push_back(E6Op::from_stacked(tag, cl.basis[i]));
    }
  }
  return out;
}

/// Minimal representation element P = (X, Y, p, q); real dimension 6k + 8.
struct FreudVec {
  HermMat X;
  HermMat Y;
  Rational p;
  Rational q;

  static FreudVec zero(AlgebraTag tag) { return {HermMat(tag), HermMat(tag), 0, 0}; }

  [[nodiscard]] AlgebraTag tag() const { return X.tag(); }
  static int real_dim(AlgebraTag tag) { return 2 * HermMat::real_dim(tag) + 2; }

  /// Coordinates: X, then Y (HermMat basis each), then p, then q.
  [[nodiscard]] std::vector<Rational> coords() const {
    std::vector<Rational> v = X.coords();
    const auto y = Y.coords();
    v.insert(v.end(), y.begin(), y.end());
    v.push_back(p);
    v.push_back(q);
    return v;
  }

  static FreudVec from_coords(AlgebraTag tag, const std::vector<Rational>& v) {
    if (static_cast<int>(v.size()) != real_dim(tag)) {
      throw std::invalid_argument("FreudVec::from_coords: expected " +
                                  std::to_string(real_dim(tag)) + " coordinates");
    }
    const int n = HermMat::real_dim(tag);
    return {HermMat::from_coords(tag, {v.begin(), v.begin() + n}),
            HermMat::from_coords(tag, {v.begin() + n, v.begin() + 2 * n}), v[2 * n],
            v[2 * n + 1]};
  }

  static FreudVec basis_element(AlgebraTag tag, int index) {
    std::vector<Rational> v(real_dim(tag));
    v.at(index) = 1;
    return from_coords(tag, v);
  }

  FreudVec& operator+=(const FreudVec& o) {
    X += o.X;
    Y += o.Y;
    p += o.p;
    q += o.q;
    return *this;
  }
  friend FreudVec operator+(FreudVec a, const FreudVec& b) { return a += b; }
  friend FreudVec operator*(const Rational& s, const FreudVec& a) {
    return {s * a.X, s * a.Y, s * a.p, s * a.q};
  }
  friend bool operator==(const FreudVec& a, const FreudVec& b) = default;
};

/// Theta = (phi, rho, A, B).
struct E7Elem {
  E6Op phi;
  Rational rho;
  HermMat A;
  HermMat B;

  [[nodiscard]] AlgebraTag tag() const { return A.tag(); }

  static E7Elem zero(AlgebraTag tag) { return {E6Op::zero(tag), 0, HermMat(tag), HermMat(tag)}; }
  static E7Elem from_e6(E6Op phi) {
    const AlgebraTag tag = phi.tag;
    return {std::move(phi), 0, HermMat(tag), HermMat(tag)};
  }
  static E7Elem dilation(AlgebraTag tag, const Rational& rho = 1) {
    E7Elem t = zero(tag);
    t.rho = rho;
    return t;
  }
  static E7Elem translation(const HermMat& a) {
    E7Elem t = zero(a.tag());
    t.A = a;
    return t;
  }
  static E7Elem conformal_translation(const HermMat& b) {
    E7Elem t = zero(b.tag());
    t.B = b;
    return t;
  }
};

/// The Freudenthal action:
///   X -> phi(X) + rho X / 3 + 2 B*Y + A q
///   Y -> 2 A*X + phi'(Y) - rho Y / 3 + B p
///   p -> tr(A o Y) - rho p
///   q -> tr(B o X) + rho q
inline FreudVec freudenthal_action(const E7Elem& theta, const FreudVec& v) {
  require_same(theta.tag(), v.tag(), "freudenthal_action");
  require_same(theta.phi.tag, v.tag(), "freudenthal_action");
  const Rational third(1, 3);
  FreudVec out;
  out.X = theta.phi.apply(v.X) + (third * theta.rho) * v.X +
          Rational(2) * freudenthal_product(theta.B, v.Y) + v.q * theta.A;
  out.Y = Rational(2) * freudenthal_product(theta.A, v.X) + theta.phi.apply_dual(v.Y) -
          (third * theta.rho) * v.Y + v.p * theta.B;
  out.p = trace_form(theta.A, v.Y) - theta.rho * v.p;
  out.q = trace_form(theta.B, v.X) + theta.rho * v.q;
  return out;
}

/// Matrix of the action in the FreudVec basis; columns are images of basis
/// vectors. Built blockwise from the component maps (the same formulas as
/// freudenthal_action, which the tests cross-check).
inline QMatrix matrixize(const E7Elem& theta) {
  const AlgebraTag tag = theta.tag();
  const int n = HermMat::real_dim(tag);
  const int dim = FreudVec::real_dim(tag);
  QMatrix m(dim, dim);
  const Rational third(1, 3);
  const int ip = 2 * n, iq = 2 * n + 1;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m(i, j) = theta.phi.act(i, j);
      m(n + i, n + j) = theta.phi.dual(i, j);
    }
    m(i, i) += third * theta.rho;
    m(n + i, n + i) -= third * theta.rho;
  }
  const bool has_a = !theta.A.is_zero();
  const bool has_b = !theta.B.is_zero();
  if (has_a || has_b) {
    const auto a = theta.A.coords();
    const auto b = theta.B.coords();
    const QMatrix g = trace_form_gram(tag);
    for (int j = 0; j < n; ++j) {
      const HermMat e = HermMat::basis_element(tag, j);
      if (has_b) {
        const auto col = (Rational(2) * freudenthal_product(theta.B, e)).coords();
        for (int i = 0; i < n; ++i) m(i, n + j) = col[i];  // Y -> X
        m(iq, j) = b[j] * g(j, j);                          // X -> q
        m(n + j, ip) = b[j];                                // p -> Y
      }
      if (has_a) {
        const auto col = (Rational(2) * freudenthal_product(theta.A, e)).coords();
        for (int i = 0; i < n; ++i) m(n + i, j) = col[i];  // X -> Y
        m(ip, n + j) = a[j] * g(j, j);                      // Y -> p
        m(j, iq) = a[j];                                    // q -> X
      }
    }
  }
  m(ip, ip) = -theta.rho;
  m(iq, iq) = theta.rho;
  return m;
}

/// Lie algebra basis of e7 in the order: e6 closure basis, translations
/// (0,0,E_i,0), conformal translations (0,0,0,E_i), dilation.
inline std::vector<E7Elem> e7_basis(const E6Algebra& e6) {
  const AlgebraTag tag = e6.tag;
  std::vector<E7Elem> out;
  for (const auto& op : e6.basis) out.push_back(E7Elem::from_e6(op));
  const int n = HermMat::real_dim(tag);
  for (int i = 0; i < n; ++i) out.push_back(E7Elem::translation(HermMat::basis_element(tag, i)));
  for (int i = 0; i < n; ++i) {
    out.push_back(E7Elem::conformal_translation(HermMat::basis_element(tag, i)));
  }
  out.push_back(E7Elem::dilation(tag));
  return out;
}

inline std::vector<E7Elem> e7_basis(AlgebraTag tag) { return e7_basis(e6_closure(tag)); }

/// Commutator of the matrixized actions.
inline QMatrix bracket(const QMatrix& m1, const QMatrix& m2) { return matrix_commutator(m1, m2); }
inline QMatrix bracket(const E7Elem& t1, const E7Elem& t2) {
  return bracket(matrixize(t1), matrixize(t2));
}

/// Everything needed to work in e7 over one algebra, computed once.
class E7Structure {
 public:
  explicit E7Structure(AlgebraTag tag)
      : tag_(tag),
        e6_(e6_closure(tag)),
        basis_(e7_basis(e6_)),
        span_(static_cast<std::size_t>(FreudVec::real_dim(tag)) * FreudVec::real_dim(tag)) {
    matrices_.reserve(basis_.size());
    for (const auto& t : basis_) {
      matrices_.push_back(matrixize(t));
      if (!span_.insert(matrices_.back().data())) {
        throw std::logic_error("e7 basis is linearly dependent");
      }
    }
  }

  [[nodiscard]] AlgebraTag tag() const { return tag_; }
  [[nodiscard]] const E6Algebra& e6() const { return e6_; }
  [[nodiscard]] const std::vector<E7Elem>& basis() const { return basis_; }
  [[nodiscard]] const std::vector<QMatrix>& matrices() const { return matrices_; }
  [[nodiscard]] std::size_t dimension() const { return basis_.size(); }

  /// Index of the first translation / conformal translation / the dilation.
  [[nodiscard]] std::size_t translation_offset() const { return e6_.dimension(); }
  [[nodiscard]] std::size_t conformal_offset() const {
    return e6_.dimension() + HermMat::real_dim(tag_);
  }
  [[nodiscard]] std::size_t dilation_index() const { return basis_.size() - 1; }

  /// Coordinates of a representation matrix in the e7 basis, or nullopt if
  /// it lies outside the span.
  [[nodiscard]] std::optional<std::vector<Rational>> coordinates(const QMatrix& m) const {
    return span_.coordinates(m.data());
  }
  [[nodiscard]] bool contains(const QMatrix& m) const { return span_.contains(m.data()); }

  /// The e7 element with the given coordinates.
  [[nodiscard]] E7Elem element(const std::vector<Rational>& coords) const {
    if (coords.size() != basis_.size()) throw std::invalid_argument("E7Structure: bad coords");
    const std::size_t d6 = e6_.dimension();
    E7Elem t = E7Elem::zero(tag_);
    t.phi = combine(tag_, e6_.basis, {coords.begin(), coords.begin() + d6});
    const int n = HermMat::real_dim(tag_);
    std::vector<Rational> a(coords.begin() + d6, coords.begin() + d6 + n);
    std::vector<Rational> b(coords.begin() + d6 + n, coords.begin() + d6 + 2 * n);
    t.A = HermMat::from_coords(tag_, a);
    t.B = HermMat::from_coords(tag_, b);
    t.rho = coords.back();
    return t;
  }

 private:
  AlgebraTag tag_;
  E6Algebra e6_;
  std::vector<E7Elem> basis_;
  std::vector<QMatrix> matrices_;
  SpanBasis<Rational> span_;
};

/// P * P = (<X,Y>, -tr(X o Y - pq I)/4, -(Y*Y - pX)/2, (X*X - qY)/2).
inline E7Elem super_freudenthal(const FreudVec& v) {
  const AlgebraTag tag = v.tag();
  E7Elem t;
  t.phi = E6Op::from_act(tag, angle_operator(v.X, v.Y));
  const HermMat pq_i = (v.p * v.q) * HermMat::identity(tag);
  t.rho = Rational(-1, 4) * trace(jordan_product(v.X, v.Y) - pq_i);
  t.A = Rational(-1, 2) * (freudenthal_product(v.Y, v.Y) - v.p * v.X);
  t.B = Rational(1, 2) * (freudenthal_product(v.X, v.X) - v.q * v.Y);
  return t;
}

/// J = tr((X*X) o (Y*Y)) - p det X - q det Y - (tr(X o Y) - pq)^2 / 4.
inline Rational quartic(const FreudVec& v) {
  const HermMat xx = freudenthal_product(v.X, v.X);
  const HermMat yy = freudenthal_product(v.Y, v.Y);
  const Rational s = trace_form(v.X, v.Y) - v.p * v.q;
  const Rational det_x = Rational(1, 3) * trace_form(xx, v.X);
  const Rational det_y = Rational(1, 3) * trace_form(yy, v.Y);
  return trace_form(xx, yy) - v.p * det_x - v.q * det_y - Rational(1, 4) * s * s;
}

/// Coefficients c0..c4 of t -> f(t) for a polynomial of degree <= 4, recovered
/// exactly from its values at t = 0, 1, -1, 2, -2.
template <typename Fn>
std::vector<Rational> quartic_polynomial_coefficients(Fn&& f) {
  const std::array<int, 5> ts = {0, 1, -1, 2, -2};
  QMatrix vander(5, 5);
  std::vector<Rational> values(5);
  for (int i = 0; i < 5; ++i) {
    Rational pw = 1;
    for (int j = 0; j < 5; ++j) {
      vander(i, j) = pw;
      pw *= ts[i];
    }
    values[i] = f(Rational(ts[i]));
  }
  return *solve(vander, values);
}

/// The t-linear coefficient of quartic(P + t Theta(P)); zero exactly when
/// Theta preserves the quartic invariant to first order at P.
inline Rational quartic_first_order_change(const FreudVec& v, const FreudVec& image) {
  const auto coeffs = quartic_polynomial_coefficients(
      [&](const Rational& t) { return quartic(v + t * image); });
  return coeffs[1];
}

}  // namespace e7sym
