#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qtanner/bit_matrix.hpp"
#include "qtanner/css.hpp"
#include "qtanner/types.hpp"

namespace qtanner {

// Which half of the base-code symplectic basis a pair belongs to.
// Intersection pairs: Xbar_{p,q} = e_{i_p} x v_q (single row),
//                     Zbar_{p,q} = u_p x e_{j_q} (single column).
// DualIntersection:   Xbar~_{r,s} = u~_r x e_{j~_s} (single column),
//                     Zbar~_{r,s} = e_{i~_r} x v~_s (single row).
enum class LogicalFamily { Intersection, DualIntersection };

struct LogicalPair {
  BitVector x_op, z_op;
  LogicalFamily family = LogicalFamily::Intersection;
  std::uint32_t p = 0, q = 0;  // indices into the family's pivot bases
};

struct LogicalBasis {
  std::size_t n = 0;
  std::vector<LogicalPair> pairs;
};

// v is a nontrivial logical on the given side: for Z, v in ker(Hx) and
// v not in rowspace(Hz); symmetric for X. Membership uses the code's cached
// stabilizer RREFs.
inline bool is_nontrivial_logical(const CssCode& code, const BitVector& v, Side side) {
  if (v.size() != code.n()) throw input_error("is_nontrivial_logical: length mismatch");
  const BitMatrix& check = side == Side::Z ? code.hx() : code.hz();
  if (!mul_vec(check, v).is_zero()) return false;
  const RowSpace& stab = code.stabilizer_space(side == Side::Z ? Side::Z : Side::X);
  return !stab.contains(v);
}

namespace detail {
// u x e_j for u of length n_a placed in grid column j, and e_i x v for v of
// length n_b placed in grid row i, under column index i*n_b + j.
inline BitVector grid_column_embed(const BitVector& u, std::size_t n_b, std::size_t j) {
  BitVector out(u.size() * n_b);
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u.get(i)) out.set(i * n_b + j, true);
  return out;
}
inline BitVector grid_row_embed(std::size_t n_a, const BitVector& v, std::size_t i) {
  BitVector out(n_a * v.size());
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v.get(j)) out.set(i * v.size() + j, true);
  return out;
}
}  // namespace detail

// The explicit symplectic basis of the base code, built from RREF pivot
// bases of C01, C01', C01^perp and C01'^perp. The pairing matrix of the
// result is exactly the identity, ordered with all Intersection pairs
// (p major, q minor) before all DualIntersection pairs.
inline LogicalBasis base_logical_basis(const LocalCode& c0, const LocalCode& c1,
                                       const LocalCode& c0p, const LocalCode& c1p) {
  if (c0.n != c1.n || c0p.n != c1p.n) throw input_error("base_logical_basis: length mismatch");
  const std::size_t n_a = c0.n, n_b = c0p.n;
  const RrefResult u = rref(intersect_row_spaces(c0.g, c1.g));        // C01
  const RrefResult v = rref(intersect_row_spaces(c0p.g, c1p.g));      // C01'
  const RrefResult up = rref(intersect_row_spaces(c0.h, c1.h));       // C01^perp
  const RrefResult vp = rref(intersect_row_spaces(c0p.h, c1p.h));     // C01'^perp

  LogicalBasis out;
  out.n = n_a * n_b;
  for (std::uint32_t p = 0; p < u.r.rows(); ++p)
    for (std::uint32_t q = 0; q < v.r.rows(); ++q) {
      LogicalPair pair;
      pair.family = LogicalFamily::Intersection;
      pair.p = p;
      pair.q = q;
      pair.x_op = detail::grid_row_embed(n_a, v.r.row_vector(q), u.pivots[p]);
      pair.z_op = detail::grid_column_embed(u.r.row_vector(p), n_b, v.pivots[q]);
      out.pairs.push_back(std::move(pair));
    }
  for (std::uint32_t r = 0; r < up.r.rows(); ++r)
    for (std::uint32_t s = 0; s < vp.r.rows(); ++s) {
      LogicalPair pair;
      pair.family = LogicalFamily::DualIntersection;
      pair.p = r;
      pair.q = s;
      pair.x_op = detail::grid_column_embed(up.r.row_vector(r), n_b, vp.pivots[s]);
      pair.z_op = detail::grid_row_embed(n_a, vp.r.row_vector(s), up.pivots[r]);
      out.pairs.push_back(std::move(pair));
    }
  return out;
}

// For odd |G| with dim(lifted) = dim(base), each base logical w expands to
// w x 1_G (|G| copies along the fiber); kernel membership carries over and
// the pairing matrix stays the identity mod 2. Both facts are re-checked
// here and certify the expanded operators nontrivial.
inline LogicalBasis replicate_base_logicals(const LogicalBasis& base, const BuiltSpec& spec,
                                            const CssCode& lifted) {
  const std::size_t q = spec.group.order();
  if (q % 2 == 0) throw precondition_error("replicate_base_logicals: |G| must be odd");
  if (base.n * q != lifted.n())
    throw precondition_error("replicate_base_logicals: basis/code size mismatch");
  const CssCode base_code = build_base(spec.c0, spec.c1, spec.c0p, spec.c1p);
  if (dimension(lifted) != dimension(base_code))
    throw precondition_error("replicate_base_logicals: lifted and base dimensions differ");

  auto expand = [&](const BitVector& w) {
    BitVector out(lifted.n());
    for (std::size_t cell = 0; cell < w.size(); ++cell)
      if (w.get(cell))
        for (std::size_t g = 0; g < q; ++g) out.set(cell * q + g, true);
    return out;
  };

  LogicalBasis out;
  out.n = lifted.n();
  for (const LogicalPair& pair : base.pairs) {
    LogicalPair lifted_pair;
    lifted_pair.family = pair.family;
    lifted_pair.p = pair.p;
    lifted_pair.q = pair.q;
    lifted_pair.x_op = expand(pair.x_op);
    lifted_pair.z_op = expand(pair.z_op);
    if (!mul_vec(lifted.hz(), lifted_pair.x_op).is_zero() ||
        !mul_vec(lifted.hx(), lifted_pair.z_op).is_zero())
      throw integrity_error("replicate_base_logicals: expanded operator left the kernel");
    out.pairs.push_back(std::move(lifted_pair));
  }
  // Pairing certificate: |G| * <x_s, z_t> = delta_{s,t} mod 2.
  for (std::size_t s = 0; s < out.pairs.size(); ++s)
    for (std::size_t t = 0; t < out.pairs.size(); ++t)
      if (out.pairs[s].x_op.dot_parity(out.pairs[t].z_op) != (s == t))
        throw integrity_error("replicate_base_logicals: pairing certificate failed");
  return out;
}

// Embeds a classical slice codeword into the lifted code. Side A: a kernel
// vector of slice matrix [0] on n_A|G| bits placed at grid column j* gives a
// Z-side candidate in ker(Hx). Side B: a kernel vector of slice matrix [3]
// on n_B|G| bits placed at grid row i* gives an X-side candidate in ker(Hz).
// Candidates are not necessarily nontrivial.
inline BitVector slice_logical(const BuiltSpec& spec, const CssCode& lifted, Side side,
                               std::size_t slice_index, const BitVector& codeword) {
  const std::size_t q = spec.group.order();
  const auto slices = slice_check_matrices(spec);
  const BitMatrix& check = side == Side::Z ? slices[0] : slices[3];
  if (codeword.size() != check.cols())
    throw input_error("slice_logical: codeword length does not match the slice");
  if (!mul_vec(check, codeword).is_zero())
    throw input_error("slice_logical: codeword fails the slice Tanner checks");

  BitVector out(lifted.n());
  if (side == Side::Z) {
    if (slice_index >= spec.c0p.n) throw input_error("slice_logical: column index out of range");
    for (std::size_t i = 0; i < spec.c0.n; ++i)
      for (std::size_t g = 0; g < q; ++g)
        if (codeword.get(i * q + g)) out.set(lifted.column_of(i, slice_index, g), true);
    if (!mul_vec(lifted.hx(), out).is_zero())
      throw integrity_error("slice_logical: embedded word not in ker(Hx)");
  } else {
    if (slice_index >= spec.c0.n) throw input_error("slice_logical: row index out of range");
    for (std::size_t j = 0; j < spec.c0p.n; ++j)
      for (std::size_t g = 0; g < q; ++g)
        if (codeword.get(j * q + g)) out.set(lifted.column_of(slice_index, j, g), true);
    if (!mul_vec(lifted.hz(), out).is_zero())
      throw integrity_error("slice_logical: embedded word not in ker(Hz)");
  }
  return out;
}

}  // namespace qtanner
