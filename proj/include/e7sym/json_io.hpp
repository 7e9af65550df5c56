#pragma once

// JSON encodings used by the CLI.
//
//   Rational    "num/den" (integers and "n" strings are accepted on input)
//   AlgElem     array of 2^level Rationals
//   HermMatJson array of 9 AlgElem arrays, row-major; all entries must have
//               the same length, which fixes the algebra
//   FreudVec    {"X": HermMatJson, "Y": HermMatJson, "p": Rational, "q": Rational}
//   Theta       {"algebra": "R|C|H|O", "phi": ..., "rho": Rational,
//                "A": HermMatJson, "B": HermMatJson}
//               phi is null/absent (zero), {"matrix": [9 AlgElem arrays]}
//               (tracefree 3x3), or {"e6_coords": [Rationals]} over the e6
//               closure basis. Alternatively {"algebra": ..., "e7_basis_index": i}
//               or {"algebra": ..., "e7_coords": [Rationals]}.
//   Cube        {"algebra": ..., "entries": [{"a","b","c" (1-based), "coeffs"}]}
//               listing nonzero entries; on input any subset of the
//               permutations of each triple may be given.

#include <nlohmann/json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "e7sym/conformal.hpp"
#include "e7sym/cubie.hpp"

namespace e7sym::io {

using nlohmann::json;

class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline json to_json(const Rational& r) { return r.to_string(); }

inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw FormatError("expected a rational as \"num/den\" or an integer, got " + j.dump());
}

inline json to_json(const AlgElem& x) {
  json a = json::array();
  for (const auto& c : x.coeffs()) a.push_back(to_json(c));
  return a;
}

inline AlgebraTag tag_for_length(std::size_t n) {
  switch (n) {
    case 1: return AlgebraTag::real();
    case 2: return AlgebraTag::complex();
    case 4: return AlgebraTag::quaternion();
    case 8: return AlgebraTag::octonion();
    default: throw FormatError("coefficient vector length must be 1, 2, 4 or 8, got " + std::to_string(n));
  }
}

inline AlgElem alg_from_json(const json& j, std::optional<AlgebraTag> expect = std::nullopt) {
  if (!j.is_array()) throw FormatError("expected a coefficient array, got " + j.dump());
  const AlgebraTag tag = tag_for_length(j.size());
  if (expect && *expect != tag) {
    throw FormatError(std::string("coefficient vector belongs to ") + tag.letter() +
                      ", expected " + expect->letter());
  }
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(rational_from_json(x));
  return {tag, std::move(c)};
}

inline json to_json(const Mat3& m) {
  json a = json::array();
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 3; ++k) a.push_back(to_json(m(i, k)));
  }
  return a;
}

inline Mat3 mat3_from_json(const json& j, std::optional<AlgebraTag> expect = std::nullopt) {
  if (!j.is_array() || j.size() != 9) {
    throw FormatError("expected an array of 9 coefficient vectors (row-major)");
  }
  const AlgebraTag tag = expect ? *expect : tag_for_length(j[0].size());
  Mat3 m(tag);
  for (int k = 0; k < 9; ++k) m(k / 3, k % 3) = alg_from_json(j[k], tag);
  return m;
}

inline json to_json(const HermMat& x) { return to_json(x.mat()); }

inline HermMat herm_from_json(const json& j, std::optional<AlgebraTag> expect = std::nullopt) {
  Mat3 m = mat3_from_json(j, expect);
  if (!m.is_hermitian()) throw FormatError("matrix is not Hermitian");
  return HermMat(std::move(m));
}

inline json to_json(const FreudVec& v) {
  return {{"X", to_json(v.X)}, {"Y", to_json(v.Y)}, {"p", to_json(v.p)}, {"q", to_json(v.q)}};
}

inline FreudVec freudvec_from_json(const json& j) {
  for (const char* key : {"X", "Y", "p", "q"}) {
    if (!j.contains(key)) throw FormatError(std::string("FreudVec: missing field '") + key + "'");
  }
  HermMat x = herm_from_json(j["X"]);
  HermMat y = herm_from_json(j["Y"], x.tag());
  return {std::move(x), std::move(y), rational_from_json(j["p"]), rational_from_json(j["q"])};
}

inline AlgebraTag algebra_from_json(const json& j) {
  if (!j.contains("algebra")) throw FormatError("missing field 'algebra'");
  return AlgebraTag::from_letter(j["algebra"].get<std::string>());
}

/// True when decoding the Theta file needs the e7 basis (basis index, e7
/// coordinates or e6 coordinates).
inline bool theta_needs_structure(const json& j) {
  return j.contains("e7_basis_index") || j.contains("e7_coords") ||
         (j.contains("phi") && j["phi"].is_object() && j["phi"].contains("e6_coords"));
}

/// Reads a Theta file. e7 may be null when theta_needs_structure is false.
inline E7Elem theta_from_json(const json& j, const E7Structure* e7) {
  const AlgebraTag tag = algebra_from_json(j);
  if (theta_needs_structure(j)) {
    if (e7 == nullptr) throw std::logic_error("theta_from_json: e7 structure required");
    require_same(tag, e7->tag(), "theta_from_json");
  }
  if (j.contains("e7_basis_index")) {
    const auto i = j["e7_basis_index"].get<std::size_t>();
    if (i >= e7->dimension()) throw FormatError("e7_basis_index out of range");
    return e7->basis()[i];
  }
  if (j.contains("e7_coords")) {
    std::vector<Rational> c;
    for (const auto& x : j["e7_coords"]) c.push_back(rational_from_json(x));
    if (c.size() != e7->dimension()) throw FormatError("e7_coords has the wrong length");
    return e7->element(c);
  }
  E7Elem t = E7Elem::zero(tag);
  if (j.contains("phi") && !j["phi"].is_null()) {
    const json& phi = j["phi"];
    if (phi.contains("matrix")) {
      t.phi = E6Op::from_matrix(mat3_from_json(phi["matrix"], tag));
    } else if (phi.contains("e6_coords")) {
      std::vector<Rational> c;
      for (const auto& x : phi["e6_coords"]) c.push_back(rational_from_json(x));
      if (c.size() != e7->e6().dimension()) throw FormatError("e6_coords has the wrong length");
      t.phi = combine(tag, e7->e6().basis, c);
    } else {
      throw FormatError("phi must contain 'matrix' or 'e6_coords'");
    }
  }
  if (j.contains("rho")) t.rho = rational_from_json(j["rho"]);
  if (j.contains("A")) t.A = herm_from_json(j["A"], tag);
  if (j.contains("B")) t.B = herm_from_json(j["B"], tag);
  return t;
}

inline E7Elem theta_from_json(const json& j, const E7Structure& e7) {
  return theta_from_json(j, &e7);
}

/// Builds the e7 structure only if the file refers to it.
inline E7Elem theta_from_json(const json& j) {
  if (!theta_needs_structure(j)) return theta_from_json(j, nullptr);
  const E7Structure e7(algebra_from_json(j));
  return theta_from_json(j, &e7);
}

inline json to_json(const Cube& c) {
  json entries = json::array();
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      for (int d = 0; d < 6; ++d) {
        if (c(a, b, d).is_zero()) continue;
        entries.push_back({{"a", a + 1}, {"b", b + 1}, {"c", d + 1}, {"coeffs", to_json(c(a, b, d))}});
      }
    }
  }
  return {{"algebra", std::string(1, c.tag().letter())}, {"entries", entries}};
}

inline Cube cube_from_json(const json& j) {
  const AlgebraTag tag = algebra_from_json(j);
  Cube cube(tag);
  std::vector<bool> seen(216, false);
  for (const auto& e : j.at("entries")) {
    const int a = e.at("a").get<int>() - 1, b = e.at("b").get<int>() - 1,
              c = e.at("c").get<int>() - 1;
    if (a < 0 || a > 5 || b < 0 || b > 5 || c < 0 || c > 5) {
      throw FormatError("cube index out of range 1..6");
    }
    const AlgElem x = alg_from_json(e.at("coeffs"), tag);
    const int s = permutation_sign<3>({a, b, c});
    if (s == 0) {
      if (!x.is_zero()) throw FormatError("cube entry with a repeated index must be zero");
      continue;
    }
    // store under the sorted triple
    std::array<int, 3> t = {a, b, c};
    std::sort(t.begin(), t.end());
    const AlgElem v = s > 0 ? x : -x;
    const int key = 36 * t[0] + 6 * t[1] + t[2];
    if (seen[key] && !(cube(t[0], t[1], t[2]) == v)) {
      throw FormatError("cube entries are not totally antisymmetric");
    }
    seen[key] = true;
    cube.set_antisymmetric(t[0], t[1], t[2], v);
  }
  return cube;
}

}  // namespace e7sym::io
