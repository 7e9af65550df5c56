#pragma once

// Seeded sampling of exact test data. mt19937_64 output is fixed by the
// standard, and the mapping to values below avoids the implementation-defined
// distributions, so samples are identical on every platform.

#include <cstdint>
#include <random>

#include "e7sym/conformal.hpp"
#include "e7sym/jordan.hpp"

namespace e7sym {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  /// Uniform integer in [lo, hi].
  long long uniform(long long lo, long long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x = gen_();
    while (x >= limit) x = gen_();
    return lo + static_cast<long long>(x % span);
  }

  /// Numerator in [-9, 9], denominator in {1, 2, 3}.
  Rational rational() {
    const long long n = uniform(-9, 9);
    const long long d = uniform(1, 3);
    return {n, d};
  }

  AlgElem element(AlgebraTag tag) {
    AlgElem x(tag);
    for (int i = 0; i < tag.dim(); ++i) x[i] = rational();
    return x;
  }

  HermMat herm(AlgebraTag tag) {
    std::vector<Rational> v(HermMat::real_dim(tag));
    for (auto& r : v) r = rational();
    return HermMat::from_coords(tag, v);
  }

  /// Hermitian matrix with rational (real) entries only.
  HermMat real_herm(AlgebraTag tag) {
    return HermMat::from_coords(tag, embed_real(tag, real_coords()));
  }

  FreudVec freudvec(AlgebraTag tag) {
    HermMat x = herm(tag);
    HermMat y = herm(tag);
    Rational p = rational();
    Rational q = rational();
    return {std::move(x), std::move(y), p, q};
  }

  std::uint64_t raw() { return gen_(); }

 private:
  std::vector<Rational> real_coords() {
    std::vector<Rational> v(6);
    for (auto& r : v) r = rational();
    return v;
  }
  static std::vector<Rational> embed_real(AlgebraTag tag, const std::vector<Rational>& r) {
    const int k = tag.dim();
    std::vector<Rational> v(HermMat::real_dim(tag));
    for (int i = 0; i < 3; ++i) v[i] = r[i];
    for (int pos = 0; pos < 3; ++pos) v[3 + pos * k] = r[3 + pos];
    return v;
  }

  std::mt19937_64 gen_;
};

}  // namespace e7sym
