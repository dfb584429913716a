#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "qtanner/bit_matrix.hpp"
#include "qtanner/types.hpp"

namespace qtanner {

// Permutation on 0..n-1 stored as its image table.
using Permutation = std::vector<std::uint32_t>;

// compose(p, q) = p ∘ q: apply q first, then p.
inline Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) out[i] = p[q[i]];
  return out;
}

inline BitMatrix permutation_matrix(const Permutation& p) {
  BitMatrix m(p.size(), p.size());
  for (std::size_t g = 0; g < p.size(); ++g) m.set(g, p[g], true);
  return m;
}

// Finite group as an explicit multiplication table over element indices
// 0..order-1. Immutable after construction; all group axioms are verified
// when the table is built.
class FiniteGroup {
public:
  FiniteGroup(std::vector<std::uint16_t> mul_table, std::vector<std::string> labels,
              std::string name)
      : order_(labels.size()), mul_(std::move(mul_table)), labels_(std::move(labels)),
        name_(std::move(name)) {
    if (order_ == 0 || mul_.size() != order_ * order_)
      throw input_error("FiniteGroup: table shape does not match label count");
    validate();
  }

  std::size_t order() const { return order_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * order_ + b]; }
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
  std::uint32_t identity() const { return identity_; }
  const std::string& label(std::uint32_t g) const { return labels_[g]; }
  const std::string& name() const { return name_; }

  std::optional<std::uint32_t> index_of_label(const std::string& s) const {
    for (std::uint32_t g = 0; g < order_; ++g)
      if (labels_[g] == s) return g;
    return std::nullopt;
  }

  std::size_t element_order(std::uint32_t g) const {
    std::size_t k = 1;
    std::uint32_t x = g;
    while (x != identity_) {
      x = mul(x, g);
      ++k;
    }
    return k;
  }

private:
  void validate() {
    for (std::uint16_t v : mul_)
      if (v >= order_) throw input_error("FiniteGroup: table entry out of range");
    // Latin square
    for (std::size_t r = 0; r < order_; ++r) {
      std::vector<bool> seen_row(order_, false), seen_col(order_, false);
      for (std::size_t c = 0; c < order_; ++c) {
        if (seen_row[mul_[r * order_ + c]]) throw input_error("FiniteGroup: row not a permutation");
        seen_row[mul_[r * order_ + c]] = true;
        if (seen_col[mul_[c * order_ + r]]) throw input_error("FiniteGroup: col not a permutation");
        seen_col[mul_[c * order_ + r]] = true;
      }
    }
    // identity
    bool found = false;
    for (std::uint32_t e = 0; e < order_; ++e) {
      bool ok = true;
      for (std::uint32_t g = 0; g < order_ && ok; ++g)
        ok = mul(e, g) == g && mul(g, e) == g;
      if (ok) {
        identity_ = e;
        found = true;
        break;
      }
    }
    if (!found) throw input_error("FiniteGroup: no identity element");
    // inverses
    inv_.assign(order_, 0);
    for (std::uint32_t g = 0; g < order_; ++g) {
      bool ok = false;
      for (std::uint32_t h = 0; h < order_; ++h)
        if (mul(g, h) == identity_ && mul(h, g) == identity_) {
          inv_[g] = h;
          ok = true;
          break;
        }
      if (!ok) throw input_error("FiniteGroup: missing inverse");
    }
    // associativity, exhaustive for the orders used here
    if (order_ <= 256) {
      for (std::uint32_t a = 0; a < order_; ++a)
        for (std::uint32_t b = 0; b < order_; ++b)
          for (std::uint32_t c = 0; c < order_; ++c)
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
              throw input_error("FiniteGroup: table is not associative");
    }
  }

  std::size_t order_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> inv_;
  std::uint32_t identity_ = 0;
  std::vector<std::string> labels_;
  std::string name_;
};

inline FiniteGroup from_table(const std::vector<std::vector<std::uint16_t>>& rows,
                              std::vector<std::string> labels = {},
                              std::string name = "table") {
  const std::size_t n = rows.size();
  std::vector<std::uint16_t> flat;
  flat.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw input_error("from_table: table must be square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  if (labels.empty())
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  if (labels.size() != n) throw input_error("from_table: label count mismatch");
  return FiniteGroup(std::move(flat), std::move(labels), std::move(name));
}

// Additive cyclic group of order m; identity 0, labels "0".."m-1".
inline FiniteGroup cyclic(std::size_t m) {
  if (m == 0) throw input_error("cyclic: order must be at least 1");
  std::vector<std::uint16_t> t(m * m);
  std::vector<std::string> labels(m);
  for (std::size_t a = 0; a < m; ++a) {
    labels[a] = std::to_string(a);
    for (std::size_t b = 0; b < m; ++b) t[a * m + b] = static_cast<std::uint16_t>((a + b) % m);
  }
  return FiniteGroup(std::move(t), std::move(labels), "C" + std::to_string(m));
}

// Componentwise product; element (g,h) has index g*|H| + h.
inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t n = g.order() * h.order();
  std::vector<std::uint16_t> t(n * n);
  std::vector<std::string> labels(n);
  auto idx = [&](std::uint32_t a, std::uint32_t b) { return a * h.order() + b; };
  for (std::uint32_t a = 0; a < g.order(); ++a)
    for (std::uint32_t b = 0; b < h.order(); ++b) {
      labels[idx(a, b)] = "(" + g.label(a) + "," + h.label(b) + ")";
      for (std::uint32_t c = 0; c < g.order(); ++c)
        for (std::uint32_t d = 0; d < h.order(); ++d)
          t[idx(a, b) * n + idx(c, d)] =
              static_cast<std::uint16_t>(idx(g.mul(a, c), h.mul(b, d)));
    }
  return FiniteGroup(std::move(t), std::move(labels), g.name() + "x" + h.name());
}

// Quaternion group {±1, ±i, ±j, ±k}; element 0 is +1.
inline FiniteGroup quaternion8() {
  // element index = basis*2 + sign, basis in {1,i,j,k}, sign 0:+ 1:-
  // basis multiplication with result sign: 1*x=x, i*i=-1, i*j=k, j*k=i, k*i=j
  static constexpr int basis_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  // sign_mul[a][b]=1 means an extra minus: i*i=j*j=k*k=-1, j*i=-k, k*j=-i, i*k=-j
  std::vector<std::uint16_t> t(64);
  for (int a = 0; a < 4; ++a)
    for (int sa = 0; sa < 2; ++sa)
      for (int b = 0; b < 4; ++b)
        for (int sb = 0; sb < 2; ++sb) {
          const int basis = basis_mul[a][b];
          const int sign = (sa ^ sb) ^ sign_mul[a][b];
          t[static_cast<std::size_t>(a * 2 + sa) * 8 + (b * 2 + sb)] =
              static_cast<std::uint16_t>(basis * 2 + sign);
        }
  std::vector<std::string> labels{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return FiniteGroup(std::move(t), std::move(labels), "Q8");
}

enum class Twist { Trivial, Nontrivial };

// Order-16 group <a, b | a^4 = b^4 = 1, b a b^-1 = a^t> with t = -1 for the
// nontrivial twist (C4 ⋊ C4) and t = 1 for C4 x C4. Element a^p b^q has
// index p*4 + q.
inline FiniteGroup semidirect_c4_c4(Twist twist) {
  std::vector<std::uint16_t> t(256);
  std::vector<std::string> labels(16);
  auto idx = [](int p, int q) { return p * 4 + q; };
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) {
      labels[idx(p, q)] = "a" + std::to_string(p) + "b" + std::to_string(q);
      for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s) {
          // (a^p b^q)(a^r b^s) = a^(p + r*t^q) b^(q+s), t^q = (-1)^q nontrivial
          const int tw = (twist == Twist::Nontrivial && (q & 1)) ? -1 : 1;
          const int pp = ((p + tw * r) % 4 + 4) % 4;
          const int qq = (q + s) % 4;
          t[static_cast<std::size_t>(idx(p, q)) * 16 + idx(r, s)] =
              static_cast<std::uint16_t>(idx(pp, qq));
        }
    }
  return FiniteGroup(std::move(t), std::move(labels),
                     twist == Twist::Nontrivial ? "C4:C4" : "C4xC4");
}

// (λ_a)_{g,h} = δ_{h,ag}: as a column permutation, column g moves to a·g.
inline Permutation left_regular_perm(const FiniteGroup& grp, std::uint32_t a) {
  Permutation p(grp.order());
  for (std::uint32_t g = 0; g < grp.order(); ++g) p[g] = grp.mul(a, g);
  return p;
}

// (ρ_b)_{g,h} = δ_{h,g b^-1}: column g moves to g·b^-1.
inline Permutation right_regular_perm(const FiniteGroup& grp, std::uint32_t b) {
  Permutation p(grp.order());
  const std::uint32_t binv = grp.inv(b);
  for (std::uint32_t g = 0; g < grp.order(); ++g) p[g] = grp.mul(g, binv);
  return p;
}

// Right multiplication by x is a single |G|-cycle iff x has full order.
inline bool is_right_transitive(const FiniteGroup& grp, std::uint32_t x) {
  return grp.element_order(x) == grp.order();
}

// All automorphisms of a small group, as permutations of element indices.
// Found by picking a minimal generating tuple greedily, then backtracking
// over images with matching element orders. Intended for the dedup
// quotients, where |G| stays small.
inline std::vector<Permutation> automorphisms(const FiniteGroup& grp) {
  const std::size_t n = grp.order();
  // Greedy generating tuple: keep adding the first element outside the span.
  std::vector<std::uint32_t> gens;
  std::vector<bool> span(n, false);
  span[grp.identity()] = true;
  std::size_t span_size = 1;
  auto close = [&](std::uint32_t seed) {
    std::vector<std::uint32_t> frontier{seed};
    if (!span[seed]) {
      span[seed] = true;
      ++span_size;
    }
    while (!frontier.empty()) {
      std::vector<std::uint32_t> next;
      for (std::uint32_t g = 0; g < n; ++g)
        if (span[g])
          for (std::uint32_t h = 0; h < n; ++h)
            if (span[h]) {
              const std::uint32_t p = grp.mul(g, h);
              if (!span[p]) {
                span[p] = true;
                ++span_size;
                next.push_back(p);
              }
            }
      frontier = std::move(next);
    }
  };
  for (std::uint32_t g = 0; g < n && span_size < n; ++g)
    if (!span[g]) {
      gens.push_back(g);
      close(g);
    }

  // Words expressing every element in terms of the generators, via BFS.
  std::vector<std::vector<std::uint32_t>> word(n);
  std::vector<bool> have(n, false);
  have[grp.identity()] = true;
  std::vector<std::uint32_t> queue{grp.identity()};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const std::uint32_t g = queue[qi];
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      const std::uint32_t h = grp.mul(g, gens[gi]);
      if (!have[h]) {
        have[h] = true;
        word[h] = word[g];
        word[h].push_back(static_cast<std::uint32_t>(gi));
        queue.push_back(h);
      }
    }
  }

  std::vector<std::size_t> orders(n);
  for (std::uint32_t g = 0; g < n; ++g) orders[g] = grp.element_order(g);

  std::vector<Permutation> out;
  std::vector<std::uint32_t> images(gens.size());
  auto build = [&](auto&& self, std::size_t depth) -> void {
    if (depth == gens.size()) {
      Permutation phi(n);
      for (std::uint32_t g = 0; g < n; ++g) {
        std::uint32_t v = grp.identity();
        for (std::uint32_t gi : word[g]) v = grp.mul(v, images[gi]);
        phi[g] = v;
      }
      std::vector<bool> hit(n, false);
      for (std::uint32_t v : phi) {
        if (hit[v]) return;
        hit[v] = true;
      }
      for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
          if (phi[grp.mul(a, b)] != grp.mul(phi[a], phi[b])) return;
      out.push_back(std::move(phi));
      return;
    }
    for (std::uint32_t img = 0; img < n; ++img)
      if (orders[img] == orders[gens[depth]]) {
        images[depth] = img;
        self(self, depth + 1);
      }
  };
  if (gens.empty())
    out.push_back(Permutation{static_cast<std::uint32_t>(grp.identity())});
  else
    build(build, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Serializable group descriptors (the CodeSpec's "group" field).

struct GroupDesc {
  enum class Kind { Cyclic, Product, Quaternion8, SemidirectC4C4, Table };

  Kind kind = Kind::Cyclic;
  std::size_t m = 1;                             // Cyclic
  std::shared_ptr<const GroupDesc> left, right;  // Product
  Twist twist = Twist::Nontrivial;               // SemidirectC4C4
  std::vector<std::vector<std::uint16_t>> table; // Table

  static GroupDesc cyclic(std::size_t m) {
    GroupDesc d;
    d.kind = Kind::Cyclic;
    d.m = m;
    return d;
  }
  static GroupDesc product(GroupDesc a, GroupDesc b) {
    GroupDesc d;
    d.kind = Kind::Product;
    d.left = std::make_shared<GroupDesc>(std::move(a));
    d.right = std::make_shared<GroupDesc>(std::move(b));
    return d;
  }
  static GroupDesc quaternion8() {
    GroupDesc d;
    d.kind = Kind::Quaternion8;
    return d;
  }
  static GroupDesc semidirect_c4_c4(Twist t) {
    GroupDesc d;
    d.kind = Kind::SemidirectC4C4;
    d.twist = t;
    return d;
  }
  static GroupDesc from_table(std::vector<std::vector<std::uint16_t>> rows) {
    GroupDesc d;
    d.kind = Kind::Table;
    d.table = std::move(rows);
    return d;
  }

  FiniteGroup build() const {
    switch (kind) {
      case Kind::Cyclic: return qtanner::cyclic(m);
      case Kind::Product: return qtanner::direct_product(left->build(), right->build());
      case Kind::Quaternion8: return qtanner::quaternion8();
      case Kind::SemidirectC4C4: return qtanner::semidirect_c4_c4(twist);
      case Kind::Table: return qtanner::from_table(table);
    }
    throw input_error("GroupDesc: unknown kind");
  }

  std::string str() const {
    switch (kind) {
      case Kind::Cyclic: return "cyclic(" + std::to_string(m) + ")";
      case Kind::Product: return "product(" + left->str() + "," + right->str() + ")";
      case Kind::Quaternion8: return "quaternion8";
      case Kind::SemidirectC4C4:
        return std::string("semidirect_c4_c4(") +
               (twist == Twist::Nontrivial ? "nontrivial" : "trivial") + ")";
      case Kind::Table: {
        std::string s = "table(";
        for (std::size_t r = 0; r < table.size(); ++r) {
          if (r) s += ";";
          for (std::size_t c = 0; c < table[r].size(); ++c) {
            if (c) s += ",";
            s += std::to_string(table[r][c]);
          }
        }
        return s + ")";
      }
    }
    throw input_error("GroupDesc: unknown kind");
  }

  friend bool operator==(const GroupDesc& a, const GroupDesc& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
      case Kind::Cyclic: return a.m == b.m;
      case Kind::Product: return *a.left == *b.left && *a.right == *b.right;
      case Kind::Quaternion8: return true;
      case Kind::SemidirectC4C4: return a.twist == b.twist;
      case Kind::Table: return a.table == b.table;
    }
    return false;
  }

  // Unit-multiplier automorphisms exist in closed form for cyclic groups;
  // everything else goes through the generic search.
  std::vector<Permutation> automorphisms_of(const FiniteGroup& grp) const {
    if (kind == Kind::Cyclic) {
      std::vector<Permutation> out;
      for (std::uint32_t u = 1; u < grp.order(); ++u) {
        if (std::gcd<std::size_t>(u, grp.order()) != 1) continue;
        Permutation p(grp.order());
        for (std::uint32_t g = 0; g < grp.order(); ++g)
          p[g] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(u) * g) % grp.order());
        out.push_back(std::move(p));
      }
      if (grp.order() == 1) out.push_back(Permutation{0});
      return out;
    }
    return qtanner::automorphisms(grp);
  }
};

}  // namespace qtanner
