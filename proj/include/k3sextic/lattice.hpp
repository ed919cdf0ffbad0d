#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "k3sextic/int_matrix.hpp"

namespace k3sextic {

/// An integral lattice: free Z-module of finite rank with a symmetric
/// integer-valued bilinear form, stored as the Gram matrix on a fixed basis.
/// There is no ambient Euclidean space anywhere; all geometry lives in the
/// Gram matrix.
class Lattice {
 public:
  explicit Lattice(IntMatrix gram) : gram_(std::move(gram)) {
    if (!gram_.is_symmetric())
      throw std::invalid_argument("Gram matrix must be symmetric");
  }

  std::size_t rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }

  bool is_even() const {
    for (std::size_t i = 0; i < rank(); ++i)
      if (gram_(i, i) % 2 != 0) return false;
    return true;
  }

  Int det() const { return determinant(gram_); }
  bool is_nondegenerate() const { return det() != 0; }

  /// phi(v, w) for coordinate vectors in this basis.
  Int inner(const std::vector<Int>& v, const std::vector<Int>& w) const {
    if (v.size() != rank() || w.size() != rank())
      throw std::invalid_argument("vector length mismatch");
    Int acc = 0;
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j) acc += v[i] * gram_(i, j) * w[j];
    return acc;
  }

  Int norm(const std::vector<Int>& v) const { return inner(v, v); }

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.gram_ == b.gram_;
  }

 private:
  IntMatrix gram_;
};

/// Hyperbolic plane U, Gram [[0,1],[1,0]].
inline Lattice make_u() { return Lattice(IntMatrix(2, 2, {0, 1, 1, 0})); }

// E8 Gram on the standard root basis: 2s on the diagonal, -1 for each edge
// of the Dynkin diagram (Bourbaki numbering: chain 1-3-4-5-6-7-8, node 2
// attached to 4). A copy in serialized form lives in data/e8_gram.lat.
inline IntMatrix e8_gram() {
  return IntMatrix(8, 8,
                   {
                       2,  0,  -1, 0,  0,  0,  0,  0,   //
                       0,  2,  0,  -1, 0,  0,  0,  0,   //
                       -1, 0,  2,  -1, 0,  0,  0,  0,   //
                       0,  -1, -1, 2,  -1, 0,  0,  0,   //
                       0,  0,  0,  -1, 2,  -1, 0,  0,   //
                       0,  0,  0,  0,  -1, 2,  -1, 0,   //
                       0,  0,  0,  0,  0,  -1, 2,  -1,  //
                       0,  0,  0,  0,  0,  0,  -1, 2,   //
                   });
}

/// E8 with the given sign: +1 for the positive definite form, -1 for E8(-1).
inline Lattice make_e8(int sign = 1) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("E8 sign must be +1 or -1");
  IntMatrix g = e8_gram();
  if (sign == -1)
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) g(i, j) = -g(i, j);
  return Lattice(std::move(g));
}

/// Rank-one lattice <k>.
inline Lattice make_rank1(const Int& k) { return Lattice(IntMatrix(1, 1, {k})); }

inline Lattice direct_sum(const Lattice& a, const Lattice& b) {
  const std::size_t n = a.rank(), m = b.rank();
  IntMatrix g(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = a.gram()(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g(n + i, n + j) = b.gram()(i, j);
  return Lattice(std::move(g));
}

/// L(t): same module, form scaled by t.
inline Lattice twist(const Lattice& a, const Int& t) {
  if (t == 0) throw std::invalid_argument("twist by zero");
  IntMatrix g = a.gram();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) *= t;
  return Lattice(std::move(g));
}

/// The K3 lattice U^3 + E8(-1)^2: even, unimodular, signature (3,19).
inline Lattice make_k3() {
  Lattice l = direct_sum(direct_sum(make_u(), make_u()), make_u());
  l = direct_sum(l, make_e8(-1));
  return direct_sum(l, make_e8(-1));
}

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Inertia of the form, by exact symmetric pivoting over the rationals.
inline Signature signature(const Lattice& l) {
  RatMatrix a = to_rational(l.gram());
  const std::size_t n = a.rows();
  std::vector<bool> active(n, true);
  std::size_t remaining = n;
  Signature sig;
  while (remaining > 0) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n && p == n; ++i)
      if (active[i] && a(i, i) != 0) p = i;
    if (p != n) {
      if (a(p, p) > 0)
        ++sig.positive;
      else
        ++sig.negative;
      active[p] = false;
      --remaining;
      for (std::size_t i = 0; i < n; ++i) {
        if (!active[i] || a(i, p) == 0) continue;
        Rat f = a(i, p) / a(p, p);
        for (std::size_t j = 0; j < n; ++j)
          if (active[j]) a(i, j) -= f * a(p, j);
      }
      continue;
    }
    // all active diagonal entries vanish; look for a hyperbolic pair
    std::size_t i0 = n, j0 = n;
    for (std::size_t i = 0; i < n && i0 == n; ++i) {
      if (!active[i]) continue;
      for (std::size_t j = i + 1; j < n && i0 == n; ++j)
        if (active[j] && a(i, j) != 0) {
          i0 = i;
          j0 = j;
        }
    }
    if (i0 == n) {
      sig.zero += remaining;
      break;
    }
    // basis change e_i0 += e_j0 creates a nonzero diagonal entry 2*a(i0,j0)
    for (std::size_t k = 0; k < n; ++k)
      if (active[k]) a(i0, k) += a(j0, k);
    for (std::size_t k = 0; k < n; ++k)
      if (active[k]) a(k, i0) += a(k, j0);
  }
  return sig;
}

/// gcd of phi(v, w) over a basis of l; separates the two root orbits in the
/// polarized K3 lattice (divisibility 1 vs divisibility 2).
inline Int divisibility(const std::vector<Int>& v, const Lattice& l) {
  if (v.size() != l.rank()) throw std::invalid_argument("vector length mismatch");
  bool zero = true;
  for (const Int& e : v)
    if (e != 0) zero = false;
  if (zero) throw std::invalid_argument("divisibility of the zero vector");
  Int g = 0;
  for (std::size_t j = 0; j < l.rank(); ++j) {
    Int pairing = 0;
    for (std::size_t i = 0; i < l.rank(); ++i) pairing += v[i] * l.gram()(i, j);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), pairing.get_mpz_t());
  }
  return g;
}

}  // namespace k3sextic
