#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qtanner/bit_matrix.hpp"
#include "qtanner/types.hpp"

namespace qtanner {

enum class CodeFamily { Rep2, Ham6, Ham8, Custom };

inline const char* to_string(CodeFamily f) {
  switch (f) {
    case CodeFamily::Rep2: return "rep2";
    case CodeFamily::Ham6: return "ham6";
    case CodeFamily::Ham8: return "ham8";
    case CodeFamily::Custom: return "custom";
  }
  return "?";
}

inline std::optional<CodeFamily> family_from_string(std::string_view s) {
  if (s == "rep2") return CodeFamily::Rep2;
  if (s == "ham6") return CodeFamily::Ham6;
  if (s == "ham8") return CodeFamily::Ham8;
  if (s == "custom") return CodeFamily::Custom;
  return std::nullopt;
}

// A short binary code given by a parity-check matrix H (C = ker H) and a
// generator matrix G whose rows span C (equivalently ker G = C^perp).
// `perm` records the column permutation applied to the canonical form:
// canonical column c sits at position perm[c].
struct LocalCode {
  std::size_t n = 0;
  BitMatrix h, g;
  CodeFamily family = CodeFamily::Custom;
  std::vector<std::uint32_t> perm;

  friend bool operator==(const LocalCode&, const LocalCode&) = default;
};

namespace detail {
inline std::vector<std::uint32_t> identity_perm(std::size_t n) {
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline void check_local_code(const BitMatrix& h, const BitMatrix& g) {
  if (h.cols() != g.cols()) throw input_error("LocalCode: H and G length mismatch");
  if (multiply(h, transpose(g)) != BitMatrix(h.rows(), g.rows()))
    throw input_error("LocalCode: H*G^T != 0");
  // rows of G must span ker(H) exactly
  const std::size_t dim_c = h.cols() - rank(h);
  if (rank(g) != dim_c) throw input_error("LocalCode: rank(G) != n - rank(H)");
}
}  // namespace detail

// The canonical parity-check and generator matrices as printed: identity
// block on one side, complement pattern on the other.
inline LocalCode canonical(CodeFamily family) {
  switch (family) {
    case CodeFamily::Rep2: {
      const BitMatrix hg = BitMatrix::from_strings({"11"});
      return {2, hg, hg, CodeFamily::Rep2, detail::identity_perm(2)};
    }
    case CodeFamily::Ham6:
      return {6, BitMatrix::from_strings({"100011", "010101", "001110"}),
              BitMatrix::from_strings({"011100", "101010", "110001"}), CodeFamily::Ham6,
              detail::identity_perm(6)};
    case CodeFamily::Ham8:
      return {8,
              BitMatrix::from_strings({"10000111", "01001011", "00101101", "00011110"}),
              BitMatrix::from_strings({"01111000", "10110100", "11010010", "11100001"}),
              CodeFamily::Ham8, detail::identity_perm(8)};
    case CodeFamily::Custom: break;
  }
  throw input_error("canonical: unknown or custom family");
}

// Canonical code with columns permuted (canonical column c -> position perm[c]).
inline LocalCode permuted(CodeFamily family, const std::vector<std::uint32_t>& perm) {
  LocalCode base = canonical(family);
  if (perm.size() != base.n) throw input_error("permuted: wrong permutation length");
  return {base.n, apply_column_permutation(base.h, perm), apply_column_permutation(base.g, perm),
          family, perm};
}

inline LocalCode custom_code(const BitMatrix& h, const BitMatrix& g) {
  detail::check_local_code(h, g);
  return {h.cols(), h, g, CodeFamily::Custom, detail::identity_perm(h.cols())};
}

// All column permutations of the canonical code, deduplicated by code
// equality (row space of G), one representative permutation each. Returned
// in lexicographic order of RREF(G). rep2 admits a single code.
inline std::vector<LocalCode> distinct_permuted_codes(CodeFamily family) {
  if (family == CodeFamily::Rep2) return {canonical(family)};
  if (family == CodeFamily::Custom)
    throw input_error("distinct_permuted_codes: custom family has no canonical orbit");
  const LocalCode base = canonical(family);
  std::map<BitMatrix, std::vector<std::uint32_t>> reps;  // RREF(G) -> first perm
  std::vector<std::uint32_t> perm = detail::identity_perm(base.n);
  do {
    const BitMatrix key = rref(apply_column_permutation(base.g, perm)).r;
    reps.try_emplace(key, perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<LocalCode> out;
  out.reserve(reps.size());
  for (const auto& [key, p] : reps) out.push_back(permuted(family, p));
  return out;
}

// Exhaustive minimum weight of the row space (fine for dim <= ~20).
inline Distance exhaustive_min_weight(const BitMatrix& gens) {
  const RrefResult rr = rref(gens);
  const std::size_t k = rr.pivots.size();
  if (k == 0) return Distance::infinite();
  if (k > 24) throw precondition_error("exhaustive_min_weight: dimension too large");
  BitVector acc(gens.cols());
  std::size_t best = gens.cols() + 1;
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << k); ++i) {
    // Gray code: flip the row indexed by the lowest set bit of i.
    const int bit = std::countr_zero(i);
    acc.xor_in(rr.r.row_vector(static_cast<std::size_t>(bit)));
    best = std::min(best, acc.weight());
  }
  return Distance::finite(static_cast<std::uint32_t>(best));
}

// Distance of the code C = rowspace(G) and of its dual C^perp = rowspace(H).
inline Distance code_distance(const LocalCode& c) { return exhaustive_min_weight(c.g); }
inline Distance dual_distance(const LocalCode& c) { return exhaustive_min_weight(c.h); }

// Intersections C_0 ∩ C_1 and C_0^perp ∩ C_1^perp with exact dimensions and
// exhaustively computed distances; the zero space has infinite distance.
struct IntersectionData {
  std::size_t k01 = 0, k01_perp = 0;
  Distance d01, d01_perp;
  BitMatrix basis01, basis01_perp;  // RREF bases
};

inline IntersectionData intersection_data(const LocalCode& c0, const LocalCode& c1) {
  if (c0.n != c1.n) throw input_error("intersection_data: length mismatch");
  IntersectionData out;
  out.basis01 = rref(intersect_row_spaces(c0.g, c1.g)).r;
  out.basis01_perp = rref(intersect_row_spaces(c0.h, c1.h)).r;
  out.k01 = out.basis01.rows();
  out.k01_perp = out.basis01_perp.rows();
  out.d01 = exhaustive_min_weight(out.basis01);
  out.d01_perp = exhaustive_min_weight(out.basis01_perp);
  return out;
}

// Lower bound on the stabilizer generator weight:
// w >= max(d0^perp*d0', d1^perp*d1', d0*d1'^perp, d1*d0'^perp).
inline std::uint32_t generator_weight_bound(const LocalCode& c0, const LocalCode& c1,
                                            const LocalCode& c0p, const LocalCode& c1p) {
  const auto product = [](Distance a, Distance b) -> std::uint64_t {
    if (!a.is_finite() || !b.is_finite()) return 0;  // empty code: no generators from it
    return static_cast<std::uint64_t>(a.value()) * b.value();
  };
  const std::uint64_t w = std::max({product(dual_distance(c0), code_distance(c0p)),
                                    product(dual_distance(c1), code_distance(c1p)),
                                    product(code_distance(c0), dual_distance(c1p)),
                                    product(code_distance(c1), dual_distance(c0p))});
  return static_cast<std::uint32_t>(w);
}

}  // namespace qtanner
