#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>

#include "k3sextic/int_matrix.hpp"
#include "k3sextic/lattice.hpp"

namespace k3sextic {

/// A sublattice of an ambient lattice, given by the ambient coordinates of
/// its basis vectors (rows of `basis`, linearly independent over Q).
struct Embedding {
  Lattice ambient;
  IntMatrix basis;

  Embedding(Lattice amb, IntMatrix b) : ambient(std::move(amb)), basis(std::move(b)) {
    if (basis.cols() != ambient.rank())
      throw std::invalid_argument("basis width must match ambient rank");
    if (rational_rank(basis) != basis.rows())
      throw std::invalid_argument("basis rows must be linearly independent");
  }

  std::size_t rank() const { return basis.rows(); }

  /// Gram matrix the sublattice inherits: basis * G * basis^T.
  Lattice induced() const {
    return Lattice(basis * ambient.gram() * transpose(basis));
  }
};

namespace detail {
inline void require_nondegenerate_ambient(const Embedding& e) {
  if (!e.ambient.is_nondegenerate())
    throw std::invalid_argument("ambient lattice is degenerate");
}
}  // namespace detail

/// Primitive closure: all ambient vectors with a nonzero multiple in the
/// rational span of the sublattice. Idempotent; basis rows come out in HNF.
inline Embedding saturate(const Embedding& e) {
  detail::require_nondegenerate_ambient(e);
  IntMatrix perp = kernel_basis(e.basis);       // dot-orthogonal complement of the row span
  IntMatrix closure = kernel_basis(perp);       // its kernel is the saturation
  return Embedding(e.ambient, std::move(closure));
}

/// Saturated sublattice {x : phi(x, s) = 0 for all s in the image}.
inline Embedding orthogonal_complement(const Embedding& e) {
  detail::require_nondegenerate_ambient(e);
  return Embedding(e.ambient, kernel_basis(e.basis * e.ambient.gram()));
}

/// Index [outer : inner] for sublattices of the same ambient with equal
/// rational span and inner contained in outer. Throws on span mismatch or
/// non-containment.
inline Int sublattice_index(const Embedding& inner, const Embedding& outer) {
  if (!(inner.ambient == outer.ambient))
    throw std::invalid_argument("sublattices of different ambient lattices");
  if (inner.rank() != outer.rank())
    throw std::invalid_argument("rational span mismatch (ranks differ)");
  const std::size_t k = inner.rank();
  if (k == 0) return 1;
  // coefficients of inner rows in terms of outer rows: inner = C * outer
  RatMatrix outer_q = to_rational(outer.basis);
  RatMatrix dot = outer_q * transpose(outer_q);
  auto dot_inv = inverse(dot);
  if (!dot_inv) throw std::logic_error("outer basis rows are dependent");
  RatMatrix c = to_rational(inner.basis) * transpose(outer_q) * *dot_inv;
  if (!(c * outer_q == to_rational(inner.basis)))
    throw std::invalid_argument("rational span mismatch");
  if (!is_integral(c))
    throw std::invalid_argument("inner sublattice is not contained in outer");
  Int det = determinant(to_integer(c));
  return abs(det);
}

/// True iff the sublattice equals its primitive closure.
inline bool is_primitive(const Embedding& e) {
  return sublattice_index(e, saturate(e)) == 1;
}

}  // namespace k3sextic
