#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "k3sextic/int_matrix.hpp"
#include "k3sextic/lattice.hpp"

namespace k3sextic {

// representative of r mod `modulus` in [0, modulus)
inline Rat mod_reduce(const Rat& r, int modulus) {
  Rat m(modulus);
  Rat q = r / m;
  Int fl = floor_div(q.get_num(), q.get_den());
  return r - m * Rat(fl);
}

/// The finite group A_L = L*/L of a nondegenerate lattice, with its torsion
/// forms: q: A_L -> Q/2Z (even lattices) and b: A_L x A_L -> Q/Z.
struct DiscriminantGroup {
  std::vector<Int> invariant_factors;  // > 1, each divides the next
  RatMatrix generators;                // rows: coords in the lattice basis, order = factor
  std::optional<std::vector<Rat>> q_values;  // q(g_i) in [0, 2); even lattices only
  std::optional<RatMatrix> b_matrix;         // b(g_i, g_j) in [0, 1)

  Int order() const {
    Int n = 1;
    for (const Int& f : invariant_factors) n *= f;
    return n;
  }

  bool is_trivial() const { return invariant_factors.empty(); }

  /// k when the group is (Z/2)^k, otherwise nullopt.
  std::optional<std::size_t> elementary_two_rank() const {
    for (const Int& f : invariant_factors)
      if (f != 2) return std::nullopt;
    return invariant_factors.size();
  }
};

/// Invariant factors and generators of L*/L via the Smith normal form of the
/// Gram matrix. Generator choice is an SNF artifact; only the isomorphism
/// type and the torsion form values on generators are contractual.
inline DiscriminantGroup discriminant_group(const Lattice& l) {
  const std::size_t n = l.rank();
  auto [d, u, v] = smith_normal_form(l.gram());
  for (std::size_t i = 0; i < n; ++i)
    if (d(i, i) == 0) throw std::invalid_argument("degenerate Gram matrix");

  DiscriminantGroup out;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < n; ++i)
    if (d(i, i) > 1) {
      out.invariant_factors.push_back(d(i, i));
      kept.push_back(i);
    }
  // generator for factor d_i: (column i of v) / d_i, of exact order d_i in L*/L
  out.generators = RatMatrix(kept.size(), n);
  for (std::size_t r = 0; r < kept.size(); ++r)
    for (std::size_t j = 0; j < n; ++j)
      out.generators(r, j) = make_rat(v(j, kept[r]), d(kept[r], kept[r]));

  RatMatrix gram_q = to_rational(l.gram());
  RatMatrix pair = out.generators * gram_q * transpose(out.generators);
  RatMatrix b(kept.size(), kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i)
    for (std::size_t j = 0; j < kept.size(); ++j) b(i, j) = mod_reduce(pair(i, j), 1);
  out.b_matrix = std::move(b);
  if (l.is_even()) {
    std::vector<Rat> q(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) q[i] = mod_reduce(pair(i, i), 2);
    out.q_values = std::move(q);
  }
  return out;
}

}  // namespace k3sextic
