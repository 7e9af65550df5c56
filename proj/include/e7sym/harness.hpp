#pragma once

// Verification driver: one check per acceptance criterion and algebra, a
// JSON-lines report, and structure-constant export.

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "e7sym/conformal.hpp"
#include "e7sym/cubie.hpp"
#include "e7sym/json_io.hpp"
#include "e7sym/random.hpp"

namespace e7sym::harness {

using nlohmann::json;

enum class Status { pass, fail, witness };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::witness: return "witness";
  }
  return "?";
}

struct CheckResult {
  std::string check_id;
  AlgebraTag algebra;
  Status status = Status::fail;
  std::string detail;
  json data;  // null when there is nothing to attach
};

inline json to_json(const CheckResult& r) {
  json j = {{"check_id", r.check_id},
            {"algebra", std::string(1, r.algebra.letter())},
            {"status", to_string(r.status)},
            {"detail", r.detail}};
  if (!r.data.is_null()) j["data"] = r.data;
  return j;
}

/// Suite names in criterion order. The check id is "C<nn>.<suite>".
inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "dims",   "e6",          "repdim", "quartic",    "lemma1",           "lemma2",    "lemma3",
      "theorem", "naive-equiv", "jacobi", "symplectic", "tensor-constants", "identities"};
  return names;
}

inline std::string check_id(std::size_t criterion) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "C%02zu.", criterion);
  return buf + suite_names().at(criterion - 1);
}

struct RunConfig {
  std::uint64_t seed = 1;
  int samples = 20;
  std::vector<AlgebraTag> algebras = {kAllAlgebras.begin(), kAllAlgebras.end()};
  std::vector<std::string> suites = suite_names();
  int jobs = 1;  // concurrency only; never changes the report
};

namespace detail {

inline std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent stream per (criterion, algebra), so results do not depend on
/// which checks run or in what order.
inline std::uint64_t task_seed(std::uint64_t seed, std::size_t criterion, AlgebraTag tag) {
  return splitmix(splitmix(seed) ^ (criterion * 16 + static_cast<std::uint64_t>(tag.level())));
}

template <typename T>
T expected_for(AlgebraTag tag, std::array<T, 4> values) {
  return values[tag.level()];
}

inline json mat6_json(const Mat6& m) {
  json a = json::array();
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) a.push_back(io::to_json(m(i, j)));
  }
  return a;
}

/// Counts failures and keeps the first one for the report.
struct Tally {
  long checked = 0;
  long failed = 0;
  std::string first;
  void record(bool ok, const std::function<std::string()>& describe) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first = describe();
  }
  [[nodiscard]] bool ok() const { return failed == 0; }
  [[nodiscard]] std::string summary(const std::string& what) const {
    std::string s = what + ": " + std::to_string(checked - failed) + "/" + std::to_string(checked);
    if (failed != 0) s += " (first failure: " + first + ")";
    return s;
  }
  [[nodiscard]] json to_json() const { return {{"checked", checked}, {"failed", failed}}; }
};

/// Hermitian matrix whose entries lie in span{1, e1}, a commutative subalgebra.
inline HermMat commuting_herm(Sampler& rng, AlgebraTag tag) {
  std::vector<Rational> v = rng.herm(tag).coords();
  const int k = tag.dim();
  for (int pos = 0; pos < 3; ++pos) {
    for (int u = 2; u < k; ++u) v[3 + pos * k + u] = 0;
  }
  return HermMat::from_coords(tag, v);
}

/// Hermitian basis elements with real entries: E11, E22, E33 and the three
/// off-diagonal real units.
inline std::vector<int> real_herm_basis_indices(AlgebraTag tag) {
  const int k = tag.dim();
  return {0, 1, 2, 3, 3 + k, 3 + 2 * k};
}

}  // namespace detail

/// Label for an e7 basis element, stable across runs.
inline std::string basis_label(const E7Structure& e7, std::size_t i) {
  const std::size_t d6 = e7.e6().dimension();
  const int n = HermMat::real_dim(e7.tag());
  if (i < d6) return std::string("e6[") + std::to_string(i) + "]:" + to_string(e7.e6().basis[i].kind);
  if (i < d6 + n) return "A[" + std::to_string(i - d6) + "]";
  if (i < d6 + 2 * n) return "B[" + std::to_string(i - d6 - n) + "]";
  return "dilation";
}

/// Rewrites Theta through its e7 coordinates, which recovers a 3x3 matrix
/// form for phi whenever the e6 basis elements involved have one.
inline E7Elem canonical_form(const E7Structure& e7, const E7Elem& theta) {
  const auto c = e7.coordinates(matrixize(theta));
  if (!c) throw std::logic_error("canonical_form: element is outside e7");
  return e7.element(*c);
}

/// Matrix of naive_action(theta, .) on totally antisymmetric cubes, in
/// Cube::coords coordinates (columns are images of coordinate vectors).
inline QMatrix naive_action_matrix(const Mat6& theta) {
  const AlgebraTag tag = theta.tag();
  const int k = tag.dim();
  std::array<int, 216> slot{};
  slot.fill(-1);
  int t = 0;
  Cube::for_each_sorted_triple([&](int a, int b, int c) { slot[36 * a + 6 * b + c] = t++; });
  QMatrix m(20 * k, 20 * k);
  int col_triple = 0;
  Cube::for_each_sorted_triple([&](int a0, int b0, int c0) {
    const std::array<std::array<int, 3>, 6> perms = {
        {{a0, b0, c0}, {b0, c0, a0}, {c0, a0, b0}, {b0, a0, c0}, {a0, c0, b0}, {c0, b0, a0}}};
    for (int u = 0; u < k; ++u) {
      std::vector<AlgElem> out(216, AlgElem(tag));
      const AlgElem eu = AlgElem::unit(tag, u);
      for (std::size_t pk = 0; pk < perms.size(); ++pk) {
        const auto [x, y, z] = perms[pk];
        const AlgElem v = pk < 3 ? eu : -eu;
        for (int r = 0; r < 6; ++r) {
          if (!theta(r, x).is_zero()) out[36 * r + 6 * y + z].add_product(theta(r, x), v);
          if (!theta(r, y).is_zero()) out[36 * x + 6 * r + z].add_product(theta(r, y), v);
          if (!theta(r, z).is_zero()) out[36 * x + 6 * y + r].add_product(theta(r, z), v);
        }
      }
      const int col = col_triple * k + u;
      for (int key = 0; key < 216; ++key) {
        if (slot[key] < 0) continue;
        for (int w = 0; w < k; ++w) m(slot[key] * k + w, col) = out[key][w];
      }
    }
    ++col_triple;
  });
  return m;
}

/// Shared per-algebra data, built once per run.
class Context {
 public:
  explicit Context(const RunConfig& cfg) {
    std::vector<std::future<std::shared_ptr<const E7Structure>>> futs;
    for (const auto& tag : cfg.algebras) {
      const auto policy = cfg.jobs > 1 ? std::launch::async : std::launch::deferred;
      futs.push_back(std::async(policy, [tag] { return std::make_shared<const E7Structure>(tag); }));
    }
    for (std::size_t i = 0; i < futs.size(); ++i) e7_[cfg.algebras[i].level()] = futs[i].get();
  }
  [[nodiscard]] const E7Structure& e7(AlgebraTag tag) const { return *e7_.at(tag.level()); }

 private:
  std::map<int, std::shared_ptr<const E7Structure>> e7_;
};

// ---------------------------------------------------------------------------
// Checks, one per criterion.

inline CheckResult check_dims(const Context& ctx, AlgebraTag tag, Sampler&, int) {
  const E7Structure& e7 = ctx.e7(tag);
  const auto closure = close_under_bracket(e7.matrices());
  const std::size_t expected = detail::expected_for<std::size_t>(tag, {21, 35, 66, 133});
  const bool ok = closure.dimension() == expected && e7.dimension() == expected;
  return {check_id(1), tag, ok ? Status::pass : Status::fail,
          "bracket closure of the matrixized e7 basis has dimension " +
              std::to_string(closure.dimension()) + " (expected " + std::to_string(expected) + ")",
          {{"dimension", closure.dimension()},
           {"basis_size", e7.dimension()},
           {"expected", expected},
           {"representation_dim", FreudVec::real_dim(tag)}}};
}

inline CheckResult check_e6(const Context& ctx, AlgebraTag tag, Sampler&, int) {
  const E6Algebra& e6 = ctx.e7(tag).e6();
  std::size_t boosts = 0, rotations = 0;
  for (std::size_t i = 0; i < e6.generator_count; ++i) {
    boosts += e6.basis[i].kind == E6Kind::boost;
    rotations += e6.basis[i].kind == E6Kind::rotation;
  }
  const std::size_t want_dim = detail::expected_for<std::size_t>(tag, {8, 16, 35, 78});
  const std::size_t want_derived = detail::expected_for<std::size_t>(tag, {0, 0, 3, 14});
  const bool ok = e6.dimension() == want_dim && e6.derived_count() == want_derived &&
                  boosts == static_cast<std::size_t>(e6_boost_count(tag)) &&
                  rotations == static_cast<std::size_t>(e6_rotation_count(tag)) &&
                  boosts + rotations == e6.generator_count;
  std::ostringstream d;
  d << boosts << " boosts + " << rotations << " rotations close to " << e6.dimension()
    << " with " << e6.derived_count() << " derived elements (expected " << want_dim << ", "
    << want_derived << ")";
  return {check_id(2), tag, ok ? Status::pass : Status::fail, d.str(),
          {{"boosts", boosts},
           {"rotations", rotations},
           {"dimension", e6.dimension()},
           {"derived", e6.derived_count()}}};
}

inline CheckResult check_repdim(const Context& ctx, AlgebraTag tag, Sampler& rng, int) {
  const int want = detail::expected_for<int>(tag, {14, 20, 32, 56});
  const int dim = FreudVec::real_dim(tag);
  const auto& mats = ctx.e7(tag).matrices();
  bool ok = dim == want && mats.front().rows() == static_cast<std::size_t>(want);
  const FreudVec v = rng.freudvec(tag);
  ok = ok && FreudVec::from_coords(tag, v.coords()) == v;
  return {check_id(3), tag, ok ? Status::pass : Status::fail,
          "FreudVec real dimension " + std::to_string(dim) + " (expected " + std::to_string(want) +
              ")",
          {{"dimension", dim}}};
}

inline CheckResult check_quartic(const Context& ctx, AlgebraTag tag, Sampler& rng, int samples) {
  const E7Structure& e7 = ctx.e7(tag);
  std::vector<FreudVec> ps;
  for (int s = 0; s < samples; ++s) ps.push_back(rng.freudvec(tag));
  detail::Tally tally;
  for (std::size_t i = 0; i < e7.dimension(); ++i) {
    for (int s = 0; s < samples; ++s) {
      const Rational d = quartic_first_order_change(ps[s], freudenthal_action(e7.basis()[i], ps[s]));
      tally.record(d.is_zero(), [&] {
        return basis_label(e7, i) + ", sample " + std::to_string(s) + ": change " + d.to_string();
      });
    }
  }
  return {check_id(4), tag, tally.ok() ? Status::pass : Status::fail,
          tally.summary("first-order change of the quartic vanishes"), tally.to_json()};
}

inline CheckResult check_lemma1(const Context& ctx, AlgebraTag tag, Sampler& rng, int samples) {
  const E6Algebra& e6 = ctx.e7(tag).e6();
  std::vector<HermMat> xs;
  for (int s = 0; s < samples; ++s) xs.push_back(rng.herm(tag));
  detail::Tally tally;
  std::size_t generators = 0;
  for (std::size_t i = 0; i < e6.dimension(); ++i) {
    const E6Op& op = e6.basis[i];
    if (!op.has_matrix()) continue;
    ++generators;
    for (int s = 0; s < samples; ++s) {
      tally.record(hodge(op.apply(xs[s])) == e6_cubie_action(*op.matrix, xs[s]),
                   [&] { return "e6[" + std::to_string(i) + "], sample " + std::to_string(s); });
    }
  }
  json data = tally.to_json();
  data["generators"] = generators;
  return {check_id(5), tag, tally.ok() ? Status::pass : Status::fail,
          tally.summary("cubie image of phi(X) matches the contraction formula over " +
                        std::to_string(generators) + " matrix-kind generators"),
          data};
}

inline CheckResult check_lemma2(const Context&, AlgebraTag tag, Sampler& rng, int samples) {
  detail::Tally cube_tally, component_tally;
  for (int s = 0; s < samples; ++s) {
    Rational rho = rng.rational();
    if (rho.is_zero()) rho = 1;
    const E7Elem theta = E7Elem::dilation(tag, rho);
    const FreudVec p = rng.freudvec(tag);
    const FreudVec img = freudenthal_action(theta, p);
    const Cube lhs = naive_action(theta, assemble_cube(p));
    cube_tally.record(lhs == assemble_cube(img), [&] { return "sample " + std::to_string(s); });
    const Rational third(1, 3);
    const FreudVec want{(third * rho) * p.X, (-third * rho) * p.Y, -rho * p.p, rho * p.q};
    component_tally.record(lhs.totally_antisymmetric() && extract_freudvec(lhs) == want,
                           [&] { return "sample " + std::to_string(s); });
  }
  const bool ok = cube_tally.ok() && component_tally.ok();
  return {check_id(6), tag, ok ? Status::pass : Status::fail,
          cube_tally.summary("dilation: naive action equals assembled action") + "; " +
              component_tally.summary("image is (X/3, -Y/3, -p, q) times rho") +
              "; note: the q image is rho*q, as the action formula gives (a printed "
              "\"q -> +rho p\" would contradict it)",
          {{"cube", cube_tally.to_json()}, {"components", component_tally.to_json()}}};
}

inline CheckResult check_lemma3(const Context&, AlgebraTag tag, Sampler& rng, int samples) {
  detail::Tally tally;
  auto check = [&](const E7Elem& theta, const FreudVec& p, const std::string& what) {
    tally.record(naive_action(theta, assemble_cube(p)) ==
                     assemble_cube(freudenthal_action(theta, p)),
                 [&] { return what; });
  };
  for (int s = 0; s < samples; ++s) {
    const FreudVec p = rng.freudvec(tag);
    check(E7Elem::translation(rng.real_herm(tag)), p, "random real A, sample " + std::to_string(s));
    check(E7Elem::conformal_translation(rng.real_herm(tag)), p,
          "random real B, sample " + std::to_string(s));
    for (int i : detail::real_herm_basis_indices(tag)) {
      const HermMat e = HermMat::basis_element(tag, i);
      check(E7Elem::translation(e), p, "A = basis " + std::to_string(i));
      check(E7Elem::conformal_translation(e), p, "B = basis " + std::to_string(i));
    }
  }
  return {check_id(7), tag, tally.ok() ? Status::pass : Status::fail,
          tally.summary("real translations: naive action equals assembled action"),
          tally.to_json()};
}

inline CheckResult check_theorem(const Context& ctx, AlgebraTag tag, Sampler& rng, int samples) {
  const E7Structure& e7 = ctx.e7(tag);
  const E6Algebra& e6 = e7.e6();

  // elements covered by the lemmas
  std::vector<E7Elem> covered;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < e6.dimension(); ++i) {
    if (!e6.basis[i].has_matrix()) continue;
    covered.push_back(E7Elem::from_e6(e6.basis[i]));
    labels.push_back(basis_label(e7, i));
  }
  covered.push_back(E7Elem::dilation(tag));
  labels.emplace_back("dilation");
  for (int i : detail::real_herm_basis_indices(tag)) {
    covered.push_back(E7Elem::translation(HermMat::basis_element(tag, i)));
    labels.push_back("A[" + std::to_string(i) + "]");
    covered.push_back(E7Elem::conformal_translation(HermMat::basis_element(tag, i)));
    labels.push_back("B[" + std::to_string(i) + "]");
  }

  detail::Tally sided;
  std::vector<FreudVec> ps;
  for (int s = 0; s < samples; ++s) ps.push_back(rng.freudvec(tag));
  for (std::size_t t = 0; t < covered.size(); ++t) {
    const Mat6 block = block_form(covered[t]);
    for (int s = 0; s < samples; ++s) {
      const SidedResult r = sided_action_checked(block, assemble_cube(ps[s]));
      const bool ok = r.consistent && r.cube == assemble_cube(freudenthal_action(covered[t], ps[s]));
      sided.record(ok, [&] {
        return labels[t] + ", sample " + std::to_string(s) +
               (r.consistent ? "" : " (defining cubies inconsistent)");
      });
    }
  }

  // [(0,0,I,0), (Q,0,0,0)] against (0,0,Q,0) for every boost basis element Q
  detail::Tally commutator;
  std::set<std::string> factors;
  const QMatrix ti = matrixize(E7Elem::translation(HermMat::identity(tag)));
  for (std::size_t i = 0; i < e6.generator_count; ++i) {
    if (e6.basis[i].kind != E6Kind::boost) continue;
    const HermMat q(*e6.basis[i].matrix);
    const QMatrix lhs = bracket(ti, matrixize(E7Elem::from_e6(e6.basis[i])));
    const QMatrix rhs = matrixize(E7Elem::translation(q));
    // record the proportionality factor, if any
    std::optional<Rational> lambda;
    for (std::size_t k = 0; k < rhs.data().size() && !lambda; ++k) {
      if (!rhs.data()[k].is_zero()) lambda = lhs.data()[k] / rhs.data()[k];
    }
    if (lambda && lhs == rhs * *lambda) {
      factors.insert(lambda->to_string());
    } else {
      factors.insert("none");
    }
    commutator.record(lhs == rhs, [&] {
      return basis_label(e7, i) + ": bracket is " +
             (lambda && lhs == rhs * *lambda ? lambda->to_string() : std::string("not a multiple")) +
             " times (0,0,Q,0)";
    });
  }

  std::vector<QMatrix> gens;
  for (const auto& t : covered) gens.push_back(matrixize(t));
  const auto closure = close_under_bracket(gens);
  const bool closes = closure.dimension() == e7.dimension();

  const bool ok = sided.ok() && commutator.ok() && closes;
  std::string detail = sided.summary("sided action equals assembled action") + "; " +
                       commutator.summary("[(0,0,I,0),(Q,0,0,0)] = (0,0,Q,0) for boosts Q") +
                       "; observed factor(s):";
  for (const auto& f : factors) detail += " " + f;
  detail += "; closure of the covered elements has dimension " +
            std::to_string(closure.dimension()) + " of " + std::to_string(e7.dimension());
  return {check_id(8), tag, ok ? Status::pass : Status::fail, detail,
          {{"sided", sided.to_json()},
           {"commutator", commutator.to_json()},
           {"commutator_factors", std::vector<std::string>(factors.begin(), factors.end())},
           {"covered_elements", covered.size()},
           {"closure_dimension", closure.dimension()}}};
}

inline CheckResult check_naive_equiv(const Context& ctx, AlgebraTag tag, Sampler& rng, int samples) {
  const E7Structure& e7 = ctx.e7(tag);
  std::vector<FreudVec> ps;
  for (int s = 0; s < samples; ++s) ps.push_back(rng.freudvec(tag));
  detail::Tally tally;
  std::size_t used = 0;
  for (std::size_t i = 0; i < e7.dimension(); ++i) {
    const E7Elem& theta = e7.basis()[i];
    if (!theta.phi.has_matrix()) continue;
    ++used;
    const Mat6 block = block_form(theta);
    for (int s = 0; s < samples; ++s) {
      tally.record(naive_action(block, assemble_cube(ps[s])) ==
                       assemble_cube(freudenthal_action(theta, ps[s])),
                   [&] { return basis_label(e7, i) + ", sample " + std::to_string(s); });
    }
  }
  json data = tally.to_json();
  data["basis_elements"] = used;
  return {check_id(9), tag, tally.ok() ? Status::pass : Status::fail,
          tally.summary("naive action equals assembled action over " + std::to_string(used) +
                        " basis elements"),
          data};
}

inline CheckResult check_jacobi(const Context& ctx, AlgebraTag tag, Sampler&, int) {
  const E7Structure& e7 = ctx.e7(tag);
  std::vector<std::size_t> idx;
  std::vector<QMatrix> lin;
  const std::size_t n = 20 * static_cast<std::size_t>(tag.dim());
  SpanBasis<Rational> span(n * n);
  for (std::size_t i = 0; i < e7.dimension(); ++i) {
    if (!e7.basis()[i].phi.has_matrix()) continue;
    idx.push_back(i);
    lin.push_back(naive_action_matrix(block_form(e7.basis()[i])));
    span.insert(lin.back().data());
  }
  const bool expect_witness = tag.level() >= 2;
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < lin.size(); ++a) {
    for (std::size_t b = a + 1; b < lin.size(); ++b) {
      ++pairs;
      const QMatrix c = matrix_commutator(lin[a], lin[b]);
      if (span.contains(c.data())) continue;
      const std::size_t i = idx[a], j = idx[b];
      json data = {{"theta1", {{"e7_basis_index", i}, {"label", basis_label(e7, i)},
                               {"block", detail::mat6_json(block_form(e7.basis()[i]))}}},
                   {"theta2", {{"e7_basis_index", j}, {"label", basis_label(e7, j)},
                               {"block", detail::mat6_json(block_form(e7.basis()[j]))}}},
                   {"span_rank", span.rank()},
                   {"pairs_examined", pairs}};
      return {check_id(10), tag, expect_witness ? Status::witness : Status::fail,
              "commutator of the naive actions of " + basis_label(e7, i) + " and " +
                  basis_label(e7, j) + " leaves the span (rank " + std::to_string(span.rank()) +
                  ") of naive-action images of the basis",
              data};
    }
  }
  return {check_id(10), tag, expect_witness ? Status::fail : Status::pass,
          "all " + std::to_string(pairs) +
              " commutators of naive-action images stay in their span (rank " +
              std::to_string(span.rank()) + ")",
          {{"span_rank", span.rank()}, {"pairs_examined", pairs}}};
}

inline CheckResult check_symplectic(const Context& ctx, AlgebraTag tag, Sampler&, int) {
  const E7Structure& e7 = ctx.e7(tag);
  detail::Tally tally;
  for (std::size_t i = 0; i < e7.dimension(); ++i) {
    if (!e7.basis()[i].phi.has_matrix()) continue;
    tally.record(symplectic_defect(block_form(e7.basis()[i])).is_zero(),
                 [&] { return basis_label(e7, i); });
  }
  return {check_id(11), tag, tally.ok() ? Status::pass : Status::fail,
          tally.summary("Theta Omega + Omega Theta^dagger = 0"), tally.to_json()};
}

inline CheckResult check_tensor_constants(const Context& ctx, AlgebraTag tag, Sampler& rng,
                                          int samples) {
  const E7Structure& e7 = ctx.e7(tag);
  // determination sample: the first P with nonzero quartic
  FreudVec p0 = rng.freudvec(tag);
  while (quartic(p0).is_zero()) p0 = rng.freudvec(tag);
  const Mat6 k0 = pstar_tensor(assemble_cube(p0));
  const Mat6 b0 = block_form(canonical_form(e7, super_freudenthal(p0)));
  std::optional<Rational> c;
  for (int i = 0; i < 6 && !c; ++i) {
    for (int j = 0; j < 6 && !c; ++j) {
      if (!b0(i, j).is_zero()) {
        for (int u = 0; u < tag.dim(); ++u) {
          if (!b0(i, j)[u].is_zero()) {
            c = k0(i, j)[u] / b0(i, j)[u];
            break;
          }
        }
      }
    }
  }
  const Rational cp = quartic_tensor(assemble_cube(p0)) / quartic(p0);

  detail::Tally k_tally, j_tally;
  for (int s = 0; s < samples; ++s) {
    const FreudVec p = rng.freudvec(tag);
    const Cube cube = assemble_cube(p);
    const Mat6 b = block_form(canonical_form(e7, super_freudenthal(p)));
    k_tally.record(c && pstar_tensor(cube) == *c * b, [&] { return "sample " + std::to_string(s); });
    j_tally.record(quartic_tensor(cube) == cp * quartic(p),
                   [&] { return "sample " + std::to_string(s); });
  }
  const bool ok = c.has_value() && k_tally.ok() && j_tally.ok();
  return {check_id(12), tag, ok ? Status::pass : Status::fail,
          "c = " + (c ? c->to_string() : std::string("undetermined")) + ", c' = " +
              cp.to_string() + "; " + k_tally.summary("P*P contraction = c * block(P*P)") + "; " +
              j_tally.summary("quartic contraction = c' * quartic"),
          {{"c", c ? json(c->to_string()) : json(nullptr)},
           {"c_prime", cp.to_string()},
           {"pstar", k_tally.to_json()},
           {"quartic", j_tally.to_json()}}};
}

inline CheckResult check_identities(const Context& ctx, AlgebraTag tag, Sampler& rng,
                                    int samples) {
  const E6Algebra& e6 = ctx.e7(tag).e6();
  const EpsilonReport eps = epsilon_identity_suite();

  detail::Tally duality;
  for (std::size_t i = 0; i < e6.dimension(); ++i) {
    const E6Op& op = e6.basis[i];
    if (op.has_matrix()) {
      const E6Op minus_dagger = E6Op::from_matrix(-op.matrix->dagger());
      duality.record(op.dual == minus_dagger.act,
                     [&] { return "e6[" + std::to_string(i) + "]: dual is not -phi^dagger"; });
    }
    const HermMat x = rng.herm(tag), y = rng.herm(tag);
    duality.record((trace_form(op.apply(x), y) + trace_form(x, op.apply_dual(y))).is_zero(),
                   [&] { return "e6[" + std::to_string(i) + "]: trace form not preserved"; });
  }

  detail::Tally composition, alternative, freud_identity, commuting;
  for (int s = 0; s < samples; ++s) {
    const AlgElem x = rng.element(tag), y = rng.element(tag);
    composition.record(norm(x * y) == norm(x) * norm(y),
                       [&] { return "sample " + std::to_string(s); });
    alternative.record(associator(x, x, y).is_zero() && associator(y, x, x).is_zero(),
                       [&] { return "sample " + std::to_string(s); });

    const HermMat a = rng.herm(tag), b = rng.herm(tag), xm = rng.herm(tag);
    const HermMat lhs = -freudenthal_product(jordan_product(a, b), xm);
    const HermMat rhs =
        jordan_product(b - trace(b) * HermMat::identity(tag), freudenthal_product(a, xm)) +
        freudenthal_product(a, jordan_product(b, xm));
    freud_identity.record(lhs == rhs, [&] { return "sample " + std::to_string(s); });

    const HermMat cx = detail::commuting_herm(rng, tag), cy = detail::commuting_herm(rng, tag);
    commuting.record(cubie_freudenthal_commuting(cx, cy) == freudenthal_product(cx, cy),
                     [&] { return "sample " + std::to_string(s); });
  }

  const bool ok = eps.ok() && duality.ok() && composition.ok() && alternative.ok() &&
                  freud_identity.ok() && commuting.ok();
  std::ostringstream d;
  d << "epsilon identities " << (eps.ok() ? "hold" : "FAIL") << " (full contraction "
    << eps.full_contraction << ", printed six-term expansion differs at "
    << eps.printed_form_mismatches << " index tuples); " << duality.summary("duality") << "; "
    << composition.summary("norm(xy) = norm(x) norm(y)") << "; "
    << alternative.summary("alternativity") << "; "
    << freud_identity.summary("-(A o B)*X = (B - tr(B) I) o (A*X) + A*(B o X)") << "; "
    << commuting.summary("commuting-case Freudenthal contraction");
  return {check_id(13), tag, ok ? Status::pass : Status::fail, d.str(),
          {{"epsilon",
            {{"full_contraction", eps.full_contraction},
             {"single_free", eps.single_free_ok},
             {"double_free", eps.double_free_ok},
             {"expansion", eps.expansion_ok},
             {"printed_form_mismatches", eps.printed_form_mismatches}}},
           {"duality", duality.to_json()},
           {"composition", composition.to_json()},
           {"alternativity", alternative.to_json()},
           {"freudenthal_identity", freud_identity.to_json()},
           {"commuting_case", commuting.to_json()}}};
}

using CheckFn = CheckResult (*)(const Context&, AlgebraTag, Sampler&, int);

struct CheckSpec {
  CheckFn fn;
  int min_level;
  int max_level;
};

/// Criterion number (1-based) to implementation and the algebras it covers.
inline const std::vector<CheckSpec>& check_table() {
  static const std::vector<CheckSpec> table = {
      {check_dims, 0, 3},        {check_e6, 0, 3},         {check_repdim, 0, 3},
      {check_quartic, 0, 3},     {check_lemma1, 0, 3},     {check_lemma2, 0, 3},
      {check_lemma3, 0, 3},      {check_theorem, 0, 3},    {check_naive_equiv, 0, 1},
      {check_jacobi, 0, 3},      {check_symplectic, 0, 3}, {check_tensor_constants, 0, 1},
      {check_identities, 0, 3}};
  return table;
}

/// Runs the selected suites. Results are ordered by criterion, then algebra,
/// whatever the concurrency level.
inline std::vector<CheckResult> verify_all(const RunConfig& cfg) {
  std::vector<AlgebraTag> algebras = cfg.algebras;
  std::sort(algebras.begin(), algebras.end(),
            [](AlgebraTag a, AlgebraTag b) { return a.level() < b.level(); });
  algebras.erase(std::unique(algebras.begin(), algebras.end()), algebras.end());
  for (const auto& s : cfg.suites) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), s) == names.end()) {
      throw std::invalid_argument("unknown suite '" + s + "'");
    }
  }
  RunConfig normalized = cfg;
  normalized.algebras = algebras;
  const Context ctx(normalized);

  struct Task {
    std::size_t criterion;
    AlgebraTag tag;
  };
  std::vector<Task> tasks;
  for (std::size_t c = 1; c <= suite_names().size(); ++c) {
    if (std::find(cfg.suites.begin(), cfg.suites.end(), suite_names()[c - 1]) == cfg.suites.end()) {
      continue;
    }
    const CheckSpec& spec = check_table()[c - 1];
    for (const auto& tag : algebras) {
      if (tag.level() >= spec.min_level && tag.level() <= spec.max_level) tasks.push_back({c, tag});
    }
  }

  auto run = [&](const Task& t) {
    Sampler rng(detail::task_seed(cfg.seed, t.criterion, t.tag));
    try {
      return check_table()[t.criterion - 1].fn(ctx, t.tag, rng, cfg.samples);
    } catch (const std::exception& e) {
      return CheckResult{check_id(t.criterion), t.tag, Status::fail,
                         std::string("exception: ") + e.what(), nullptr};
    }
  };

  std::vector<CheckResult> results(tasks.size());
  const std::size_t jobs = std::max(1, cfg.jobs);
  for (std::size_t start = 0; start < tasks.size(); start += jobs) {
    const std::size_t end = std::min(tasks.size(), start + jobs);
    if (jobs == 1) {
      results[start] = run(tasks[start]);
      continue;
    }
    std::vector<std::future<CheckResult>> futs;
    for (std::size_t i = start; i < end; ++i) {
      futs.push_back(std::async(std::launch::async, run, tasks[i]));
    }
    for (std::size_t i = start; i < end; ++i) results[i] = futs[i - start].get();
  }
  return results;
}

inline json summary_record(const RunConfig& cfg, const std::vector<CheckResult>& results) {
  int pass = 0, fail = 0, witness = 0;
  for (const auto& r : results) {
    pass += r.status == Status::pass;
    fail += r.status == Status::fail;
    witness += r.status == Status::witness;
  }
  std::string algebras;
  for (const auto& t : cfg.algebras) algebras += t.letter();
  return {{"summary",
           {{"checks", results.size()},
            {"pass", pass},
            {"fail", fail},
            {"witness", witness},
            {"seed", std::to_string(cfg.seed)},
            {"samples", cfg.samples},
            {"algebras", algebras},
            {"suites", cfg.suites}}}};
}

/// JSON lines: one record per check, then the summary.
inline void write_report(std::ostream& out, const RunConfig& cfg,
                         const std::vector<CheckResult>& results) {
  for (const auto& r : results) out << to_json(r).dump() << '\n';
  out << summary_record(cfg, results).dump() << '\n';
}

inline bool any_failed(const std::vector<CheckResult>& results) {
  return std::any_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.status == Status::fail; });
}

// ---------------------------------------------------------------------------
// Structure constants.

struct StructureConstant {
  std::size_t i, j, k;
  Rational value;
};

/// Nonzero c_ij^k with [Theta_i, Theta_j] = sum_k c_ij^k Theta_k over the e7
/// basis. Every bracket is computed in both orders and checked for
/// antisymmetry.
inline std::vector<StructureConstant> export_structure_constants(const E7Structure& e7) {
  const std::size_t n = e7.dimension();
  std::vector<std::vector<Rational>> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto c = e7.coordinates(bracket(e7.matrices()[i], e7.matrices()[j]));
      if (!c) {
        throw std::logic_error("export_structure_constants: bracket of " + basis_label(e7, i) +
                               " and " + basis_label(e7, j) + " leaves the span");
      }
      table[i * n + j] = *c;
    }
  }
  std::vector<StructureConstant> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& v = table[i * n + j][k];
        if (!(v == -table[j * n + i][k])) {
          throw std::logic_error("export_structure_constants: antisymmetry fails at " +
                                 std::to_string(i) + "," + std::to_string(j) + "," +
                                 std::to_string(k));
        }
        if (!v.is_zero()) out.push_back({i, j, k, v});
      }
    }
  }
  return out;
}

inline std::vector<StructureConstant> export_structure_constants(AlgebraTag tag) {
  return export_structure_constants(E7Structure(tag));
}

inline void write_structure_constants_csv(std::ostream& out,
                                          const std::vector<StructureConstant>& sc) {
  out << "i,j,k,value\n";
  for (const auto& s : sc) out << s.i << ',' << s.j << ',' << s.k << ',' << s.value.to_string() << '\n';
}

}  // namespace e7sym::harness
