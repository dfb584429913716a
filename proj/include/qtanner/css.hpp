#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qtanner/bit_matrix.hpp"
#include "qtanner/group.hpp"
#include "qtanner/local_code.hpp"
#include "qtanner/rng.hpp"
#include "qtanner/types.hpp"

namespace qtanner {

// Selection of one local code in a serializable spec: a built-in family plus
// an optional column permutation, or inline custom matrices.
struct LocalCodeSel {
  CodeFamily family = CodeFamily::Rep2;
  std::vector<std::uint32_t> perm;  // empty = canonical column order
  BitMatrix custom_h, custom_g;     // used when family == Custom

  static LocalCodeSel builtin(CodeFamily f, std::vector<std::uint32_t> p = {}) {
    LocalCodeSel s;
    s.family = f;
    s.perm = std::move(p);
    return s;
  }
  static LocalCodeSel custom(BitMatrix h, BitMatrix g) {
    LocalCodeSel s;
    s.family = CodeFamily::Custom;
    s.custom_h = std::move(h);
    s.custom_g = std::move(g);
    return s;
  }

  LocalCode resolve() const {
    if (family == CodeFamily::Custom) return custom_code(custom_h, custom_g);
    if (perm.empty()) return canonical(family);
    return permuted(family, perm);
  }

  std::string key() const {
    std::string s = to_string(family);
    if (family == CodeFamily::Custom) {
      s += "[h=";
      for (std::size_t r = 0; r < custom_h.rows(); ++r) {
        if (r) s += ";";
        s += custom_h.row_vector(r).str();
      }
      s += ",g=";
      for (std::size_t r = 0; r < custom_g.rows(); ++r) {
        if (r) s += ";";
        s += custom_g.row_vector(r).str();
      }
      s += "]";
    } else if (!perm.empty()) {
      s += "[";
      for (std::size_t i = 0; i < perm.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(perm[i]);
      }
      s += "]";
    }
    return s;
  }

  friend bool operator==(const LocalCodeSel&, const LocalCodeSel&) = default;
};

// The serializable identity of one quantum Tanner code: group, ordered
// multisets A and B, and the four local-code selections.
struct CodeSpec {
  GroupDesc group;
  std::vector<std::uint32_t> a, b;  // element indices in constructor order
  LocalCodeSel c0, c1, c0p, c1p;
  std::string comment;

  // Canonical identity string; excludes the free-form comment.
  std::string key() const {
    std::string s = group.str() + "|A=";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    s += "|B=";
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
    s += "|c0=" + c0.key() + "|c1=" + c1.key() + "|c0p=" + c0p.key() + "|c1p=" + c1p.key();
    return s;
  }
  std::uint64_t hash() const { return fnv1a64(key()); }

  friend bool operator==(const CodeSpec&, const CodeSpec&) = default;
};

// A CodeSpec with the group table and local codes materialized.
struct BuiltSpec {
  FiniteGroup group;
  std::vector<std::uint32_t> a, b;
  LocalCode c0, c1, c0p, c1p;
};

inline BuiltSpec resolve(const CodeSpec& spec) {
  BuiltSpec r{spec.group.build(), spec.a,           spec.b,
              spec.c0.resolve(),  spec.c1.resolve(), spec.c0p.resolve(),
              spec.c1p.resolve()};
  if (r.a.size() != r.c0.n || r.a.size() != r.c1.n)
    throw input_error("CodeSpec: |A| must equal the A-side local code length");
  if (r.b.size() != r.c0p.n || r.b.size() != r.c1p.n)
    throw input_error("CodeSpec: |B| must equal the B-side local code length");
  for (std::uint32_t g : r.a)
    if (g >= r.group.order()) throw input_error("CodeSpec: A contains an invalid element");
  for (std::uint32_t g : r.b)
    if (g >= r.group.order()) throw input_error("CodeSpec: B contains an invalid element");
  return r;
}

// CSS code with the (i, j, g) qubit indexing of the lift: qubit (i, j, g)
// lives at column ((i*n_b) + j)*|G| + g, g fastest. Base codes have |G| = 1.
// Immutable after construction; the stabilizer row-space caches are built
// once on first use and shared by copies.
class CssCode {
public:
  CssCode() = default;
  CssCode(BitMatrix hx, BitMatrix hz, std::size_t n_a, std::size_t n_b, std::size_t group_order,
          std::string provenance)
      : hx_(std::move(hx)), hz_(std::move(hz)), n_a_(n_a), n_b_(n_b), group_order_(group_order),
        provenance_(std::move(provenance)) {
    if (hx_.cols() != hz_.cols()) throw input_error("CssCode: Hx and Hz widths disagree");
    if (hx_.cols() != n_a_ * n_b_ * group_order_)
      throw input_error("CssCode: column count does not match (i,j,g) indexing");
  }

  const BitMatrix& hx() const { return hx_; }
  const BitMatrix& hz() const { return hz_; }
  std::size_t n() const { return hx_.cols(); }
  std::size_t n_a() const { return n_a_; }
  std::size_t n_b() const { return n_b_; }
  std::size_t group_order() const { return group_order_; }
  const std::string& provenance() const { return provenance_; }

  std::size_t column_of(std::size_t i, std::size_t j, std::size_t g) const {
    return (i * n_b_ + j) * group_order_ + g;
  }
  struct Triple {
    std::size_t i, j, g;
  };
  Triple triple_of(std::size_t col) const {
    return {col / (n_b_ * group_order_), (col / group_order_) % n_b_, col % group_order_};
  }

  bool css_valid() const {
    return multiply(hx_, transpose(hz_)) == BitMatrix(hx_.rows(), hz_.rows());
  }

  // Cached RREF of the named check matrix's row space.
  const RowSpace& stabilizer_space(Side side) const {
    auto& slot = side == Side::X ? cache_->x : cache_->z;
    auto& flag = side == Side::X ? cache_->x_once : cache_->z_once;
    std::call_once(flag, [&] { slot = RowSpace(side == Side::X ? hx_ : hz_); });
    return slot;
  }

private:
  struct Cache {
    std::once_flag x_once, z_once;
    RowSpace x, z;
  };

  BitMatrix hx_, hz_;
  std::size_t n_a_ = 0, n_b_ = 0, group_order_ = 1;
  std::string provenance_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Unlifted base CSS code on the n_A x n_B grid:
//   Hx = [H0 x G0' ; H1 x G1'],  Hz = [G0 x H1' ; G1 x H0'].
inline CssCode build_base(const LocalCode& c0, const LocalCode& c1, const LocalCode& c0p,
                          const LocalCode& c1p) {
  if (c0.n != c1.n) throw input_error("build_base: A-side lengths disagree");
  if (c0p.n != c1p.n) throw input_error("build_base: B-side lengths disagree");
  BitMatrix hx = stack_vertical({kron(c0.h, c0p.g), kron(c1.h, c1p.g)});
  BitMatrix hz = stack_vertical({kron(c0.g, c1p.h), kron(c1.g, c0p.h)});
  return CssCode(std::move(hx), std::move(hz), c0.n, c0p.n, 1, "base");
}

namespace detail {

// Lifted block (X ⊗ Y ⊗ I_|G|) * P, with P the column permutation
// (i,j,g) -> (i,j, fiber(i,j,g)). Row (r, g0) gets a 1 at column
// (i,j, fiber(i,j,g0)) for every set entry (i,j) of X ⊗ Y.
template <typename Fiber>
BitMatrix lift_block(const BitMatrix& x, const BitMatrix& y, std::size_t group_order,
                     Fiber&& fiber) {
  const std::size_t q = group_order;
  const std::size_t nb = y.cols();
  BitMatrix out(x.rows() * y.rows() * q, x.cols() * y.cols() * q);
  for (std::size_t rx = 0; rx < x.rows(); ++rx)
    for (std::size_t ry = 0; ry < y.rows(); ++ry) {
      const std::size_t base_row = (rx * y.rows() + ry) * q;
      for (std::size_t i = 0; i < x.cols(); ++i) {
        if (!x.get(rx, i)) continue;
        for (std::size_t j = 0; j < nb; ++j) {
          if (!y.get(ry, j)) continue;
          for (std::size_t g0 = 0; g0 < q; ++g0)
            out.set(base_row + g0, (i * nb + j) * q + fiber(i, j, g0), true);
        }
      }
    }
  return out;
}

}  // namespace detail

// Lifted quantum Tanner code:
//   Hx = [H0 x G0' x I ; (H1 x G1' x I) L_A R_B]
//   Hz = [(G0 x H1' x I) R_B ; (G1 x H0' x I) L_A]
// with L_A: (i,j,g) -> (i,j,a_i g) and R_B: (i,j,g) -> (i,j,g b_j^-1).
// The permutations are applied as column maps of the kron blocks, never
// materialized as |G|^2 matrices.
inline CssCode build_lifted(const BuiltSpec& s, std::string provenance = "") {
  if (s.a.size() != s.c0.n || s.a.size() != s.c1.n)
    throw input_error("build_lifted: |A| and A-side code lengths disagree");
  if (s.b.size() != s.c0p.n || s.b.size() != s.c1p.n)
    throw input_error("build_lifted: |B| and B-side code lengths disagree");
  const FiniteGroup& grp = s.group;
  const std::size_t q = grp.order();
  for (std::uint32_t g : s.a)
    if (g >= q) throw input_error("build_lifted: A element out of range");
  for (std::uint32_t g : s.b)
    if (g >= q) throw input_error("build_lifted: B element out of range");
  std::vector<std::uint32_t> b_inv(s.b.size());
  for (std::size_t j = 0; j < s.b.size(); ++j) b_inv[j] = grp.inv(s.b[j]);

  const auto id = [&](std::size_t, std::size_t, std::size_t g0) { return g0; };
  const auto la_rb = [&](std::size_t i, std::size_t j, std::size_t g0) {
    return grp.mul(grp.mul(s.a[i], static_cast<std::uint32_t>(g0)), b_inv[j]);
  };
  const auto rb = [&](std::size_t, std::size_t j, std::size_t g0) {
    return grp.mul(static_cast<std::uint32_t>(g0), b_inv[j]);
  };
  const auto la = [&](std::size_t i, std::size_t, std::size_t g0) {
    return grp.mul(s.a[i], static_cast<std::uint32_t>(g0));
  };

  BitMatrix hx = stack_vertical({detail::lift_block(s.c0.h, s.c0p.g, q, id),
                                 detail::lift_block(s.c1.h, s.c1p.g, q, la_rb)});
  BitMatrix hz = stack_vertical({detail::lift_block(s.c0.g, s.c1p.h, q, rb),
                                 detail::lift_block(s.c1.g, s.c0p.h, q, la)});
  return CssCode(std::move(hx), std::move(hz), s.c0.n, s.c0p.n, q, std::move(provenance));
}

inline CssCode build_lifted(const CodeSpec& spec) {
  return build_lifted(resolve(spec), spec.key());
}

// Exact dimension k = n - rk(Hx) - rk(Hz). Recomputes CSS validity first and
// fails hard on violation: a corrupted spec must never produce a parameter.
inline std::size_t dimension(const CssCode& code) {
  if (!code.css_valid()) throw integrity_error("dimension: Hx*Hz^T != 0");
  return code.n() - rank(code.hx()) - rank(code.hz());
}

// Closed-form base-code parameters. The dimension is
// k = k01*k01' + k01perp*k01'perp. The distance is the minimum over the
// logical families that are actually populated:
//   dZ = min(d01 when k01*k01' > 0, d01'perp when k01perp*k01'perp > 0)
//   dX = min(d01' when k01*k01' > 0, d01perp when k01perp*k01'perp > 0)
// For local codes where each intersection is zero or populated on both
// sides at once (all the built-in families), this is exactly
// min(d01, d01', d01perp, d01'perp).
struct BaseParams {
  std::size_t k = 0;
  Distance d, d_x, d_z;
  IntersectionData a_side, b_side;
};

inline BaseParams base_params_lemma(const LocalCode& c0, const LocalCode& c1,
                                    const LocalCode& c0p, const LocalCode& c1p) {
  BaseParams out;
  out.a_side = intersection_data(c0, c1);
  out.b_side = intersection_data(c0p, c1p);
  const bool family1 = out.a_side.k01 > 0 && out.b_side.k01 > 0;
  const bool family2 = out.a_side.k01_perp > 0 && out.b_side.k01_perp > 0;
  out.k = out.a_side.k01 * out.b_side.k01 + out.a_side.k01_perp * out.b_side.k01_perp;
  out.d_z = out.d_x = Distance::infinite();
  if (family1) {
    out.d_z = min(out.d_z, out.a_side.d01);
    out.d_x = min(out.d_x, out.b_side.d01);
  }
  if (family2) {
    out.d_z = min(out.d_z, out.b_side.d01_perp);
    out.d_x = min(out.d_x, out.a_side.d01_perp);
  }
  out.d = min(out.d_x, out.d_z);
  return out;
}

// Theorem fast path: when |B| = 2, both B-side codes are the length-2
// repetition code, and right multiplication by b1^-1 b2 acts transitively,
// the lifted dimension equals k01 + k01perp of the A side.
inline std::size_t theorem1_dimension(const BuiltSpec& s) {
  if (s.b.size() != 2)
    throw precondition_error("theorem1_dimension: requires |B| = 2");
  const BitMatrix rep = BitMatrix::from_strings({"11"});
  if (s.c0p.h != rep || s.c0p.g != rep || s.c1p.h != rep || s.c1p.g != rep)
    throw precondition_error("theorem1_dimension: B-side codes must be the repetition code");
  const std::uint32_t step = s.group.mul(s.group.inv(s.b[0]), s.b[1]);
  if (!is_right_transitive(s.group, step))
    throw precondition_error("theorem1_dimension: right multiplication by b1^-1 b2 is not transitive");
  const IntersectionData a_side = intersection_data(s.c0, s.c1);
  return a_side.k01 + a_side.k01_perp;
}

// Parity checks of the four classical slice Tanner codes:
//   [0] A-slice  [H0 x I ; (H1 x I) L_A]   (n_A |G| bits, Z-side candidates)
//   [1] A-slice  [G0 x I ; (G1 x I) L_A]
//   [2] B-slice  [G0' x I ; (G1' x I) R_B] (n_B |G| bits)
//   [3] B-slice  [H0' x I ; (H1' x I) R_B] (X-side candidates)
// Here L_A and R_B are the single-slice block permutations.
inline std::array<BitMatrix, 4> slice_check_matrices(const BuiltSpec& s) {
  const FiniteGroup& grp = s.group;
  const std::size_t q = grp.order();

  const auto single = [&](const BitMatrix& m0, const BitMatrix& m1, bool left,
                          const std::vector<std::uint32_t>& elems) {
    const std::size_t n = m0.cols();
    BitMatrix out((m0.rows() + m1.rows()) * q, n * q);
    for (std::size_t r = 0; r < m0.rows(); ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (m0.get(r, c))
          for (std::size_t g = 0; g < q; ++g) out.set(r * q + g, c * q + g, true);
    const std::size_t row_base = m0.rows() * q;
    for (std::size_t r = 0; r < m1.rows(); ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (m1.get(r, c))
          for (std::size_t g = 0; g < q; ++g) {
            const std::uint32_t h =
                left ? grp.mul(elems[c], static_cast<std::uint32_t>(g))
                     : grp.mul(static_cast<std::uint32_t>(g), grp.inv(elems[c]));
            out.set(row_base + r * q + g, c * q + h, true);
          }
    return out;
  };

  return {single(s.c0.h, s.c1.h, true, s.a), single(s.c0.g, s.c1.g, true, s.a),
          single(s.c0p.g, s.c1p.g, false, s.b), single(s.c0p.h, s.c1p.h, false, s.b)};
}

}  // namespace qtanner
