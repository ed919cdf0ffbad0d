#include "k3sextic/int_matrix.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <random>
#include <vector>

using namespace k3sextic;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                        int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

// Structural Hermite-form check: echelon, positive pivots, entries above a
// pivot in [0, pivot).
bool is_row_hnf(const IntMatrix& h) {
  std::size_t last_pivot_col = 0;
  bool seen_zero_row = false;
  bool first = true;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    std::size_t c = 0;
    while (c < h.cols() && h(r, c) == 0) ++c;
    if (c == h.cols()) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;
    if (!first && c <= last_pivot_col) return false;
    if (h(r, c) <= 0) return false;
    for (std::size_t rr = 0; rr < r; ++rr)
      if (h(rr, c) < 0 || h(rr, c) >= h(r, c)) return false;
    last_pivot_col = c;
    first = false;
  }
  return true;
}

// gcd of all k x k minors; the classical definition of the k-th determinantal
// divisor, used as an independent oracle for SNF invariant factors.
Int minor_gcd(const IntMatrix& a, std::size_t k) {
  std::vector<std::size_t> ri(k), ci(k);
  Int g = 0;
  std::vector<std::size_t> rows_sel, cols_sel;

  std::vector<std::vector<std::size_t>> row_subsets, col_subsets;
  auto gen_subsets = [](std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
      if (cur.size() == k) {
        out.push_back(cur);
        return;
      }
      for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        self(self, i + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    return out;
  };
  row_subsets = gen_subsets(a.rows(), k);
  col_subsets = gen_subsets(a.cols(), k);
  for (const auto& rs : row_subsets)
    for (const auto& cs : col_subsets) {
      IntMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(rs[i], cs[j]);
      Int det = determinant(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
    }
  return g;
}

}  // namespace

TEST_CASE("hermite normal form: identity and zero") {
  auto id = IntMatrix::identity(3);
  auto [h, u] = hermite_normal_form(id);
  CHECK(h == id);
  CHECK(u == id);

  IntMatrix z(2, 3);
  auto rz = hermite_normal_form(z);
  CHECK(rz.h == z);
  CHECK(rz.u == IntMatrix::identity(2));
}

TEST_CASE("hermite normal form: 2x2 hand-reduced") {
  // Row reduction by hand: swap, clear below, normalize signs, reduce above:
  // [[2,4],[1,3]] -> [[1,3],[2,4]] -> [[1,3],[0,-2]] -> [[1,3],[0,2]] -> [[1,1],[0,2]]
  IntMatrix a(2, 2, {2, 4, 1, 3});
  auto [h, u] = hermite_normal_form(a);
  CHECK(h == IntMatrix(2, 2, {1, 1, 0, 2}));
  CHECK(u * a == h);
  Int du = determinant(u);
  CHECK((du == 1 || du == -1));
  CHECK(is_row_hnf(h));
}

TEST_CASE("hermite normal form: idempotent and unimodular on random input") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t m = 1 + trial % 5, n = 1 + (trial * 7) % 5;
    IntMatrix a = random_matrix(rng, m, n, 9);
    auto [h, u] = hermite_normal_form(a);
    CHECK(u * a == h);
    Int du = determinant(u);
    CHECK((du == 1 || du == -1));
    CHECK(is_row_hnf(h));
    auto again = hermite_normal_form(h);
    CHECK(again.h == h);
  }
}

TEST_CASE("smith normal form: frozen small cases") {
  IntMatrix a(2, 2, {2, 0, 0, -2});
  auto r = smith_normal_form(a);
  CHECK(r.d == IntMatrix(2, 2, {2, 0, 0, 2}));
  CHECK(r.u * a * r.v == r.d);

  // Hand computation: min pivot 1 swaps into place, clears to diag(1, 4);
  // determinant 4 is preserved up to sign.
  IntMatrix b(2, 2, {2, 1, 0, 2});
  auto rb = smith_normal_form(b);
  CHECK(rb.d == IntMatrix(2, 2, {1, 0, 0, 4}));
  CHECK(rb.u * b * rb.v == rb.d);

  auto rid = smith_normal_form(IntMatrix::identity(4));
  CHECK(rid.d == IntMatrix::identity(4));
}

TEST_CASE("smith normal form: axioms on random matrices") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t m = 1 + trial % 5, n = 1 + (trial * 3) % 5;
    IntMatrix a = random_matrix(rng, m, n, 9);
    auto [d, u, v] = smith_normal_form(a);
    CHECK(u * a * v == d);
    Int du = determinant(u), dv = determinant(v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    Int prev = 0;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) {
      CHECK(d(i, i) >= 0);
      if (prev != 0) CHECK((d(i, i) == 0 || d(i, i) % prev == 0));
      if (d(i, i) == 0 && i + 1 < std::min(d.rows(), d.cols()))
        CHECK(d(i + 1, i + 1) == 0);
      prev = d(i, i);
    }
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j)
        if (i != j) CHECK(d(i, j) == 0);
    if (m == n) {
      Int det = determinant(a);
      Int prod = 1;
      for (std::size_t i = 0; i < n; ++i) prod *= d(i, i);
      CHECK(abs(det) == prod);
    }
  }
}

TEST_CASE("smith normal form: invariant factors match gcd-of-minors oracle") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 25; ++trial) {
    IntMatrix a = random_matrix(rng, 4, 4, 9);
    auto [d, u, v] = smith_normal_form(a);
    Int prev_divisor = 1;
    for (std::size_t k = 1; k <= 4; ++k) {
      Int dk = minor_gcd(a, k);
      // product d_1 ... d_k equals the k-th determinantal divisor
      Int prod = 1;
      for (std::size_t i = 0; i < k; ++i) prod *= d(i, i);
      CHECK(prod == dk);
      if (dk == 0) break;
      prev_divisor = dk;
    }
  }
}

TEST_CASE("determinant: frozen values") {
  CHECK(determinant(IntMatrix(3, 3, {2, 0, 0, 0, -2, 0, 0, 0, -2})) == 8);
  CHECK(determinant(IntMatrix(2, 2, {1, 2, 2, 4})) == 0);
  CHECK(determinant(IntMatrix(0, 0)) == 1);
  CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("determinant: agrees with cofactor expansion on random 4x4") {
  std::mt19937_64 rng(99);
  // cofactor oracle
  auto cofactor_det = [](auto&& self, const IntMatrix& a) -> Int {
    std::size_t n = a.rows();
    if (n == 0) return 1;
    if (n == 1) return a(0, 0);
    Int acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (a(0, j) == 0) continue;
      IntMatrix sub(n - 1, n - 1);
      for (std::size_t r = 1; r < n; ++r) {
        std::size_t cc = 0;
        for (std::size_t c = 0; c < n; ++c) {
          if (c == j) continue;
          sub(r - 1, cc++) = a(r, c);
        }
      }
      Int term = a(0, j) * self(self, sub);
      acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
  };
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix a = random_matrix(rng, 4, 4, 9);
    CHECK(determinant(a) == cofactor_det(cofactor_det, a));
  }
}

TEST_CASE("kernel basis: frozen examples") {
  CHECK(kernel_basis(IntMatrix::identity(3)).rows() == 0);
  CHECK(kernel_basis(IntMatrix(1, 2, {1, 1})) == IntMatrix(1, 2, {1, -1}));
  // brute force over the coefficient box [-4,4]^2 confirms (2,-1) generates
  CHECK(kernel_basis(IntMatrix(1, 2, {2, 4})) == IntMatrix(1, 2, {2, -1}));
}

TEST_CASE("kernel basis: saturated and annihilating on random input") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t m = 1 + trial % 4, n = 1 + (trial * 5) % 5;
    IntMatrix a = random_matrix(rng, m, n, 6);
    IntMatrix k = kernel_basis(a);
    CHECK(k.rows() == n - rational_rank(a));
    if (k.rows() > 0) {
      // rows annihilate a on the right: a * k^T = 0
      IntMatrix prod = a * transpose(k);
      CHECK(prod.is_zero());
      // saturation: all invariant factors 1
      auto [d, u, v] = smith_normal_form(k);
      for (std::size_t i = 0; i < k.rows(); ++i) CHECK(d(i, i) == 1);
    }
  }
}

TEST_CASE("rational solve: frozen examples") {
  auto x = solve_rational(IntMatrix::identity(2), {Rat(3), Rat(5, 2)});
  REQUIRE(x);
  CHECK((*x)[0] == 3);
  CHECK((*x)[1] == Rat(5, 2));

  auto y = solve_rational(IntMatrix(1, 1, {2}), {Rat(1)});
  REQUIRE(y);
  CHECK((*y)[0] == Rat(1, 2));

  // hyperbolic plane Gram [[0,1],[1,0]]
  auto z = solve_rational(IntMatrix(2, 2, {0, 1, 1, 0}), {Rat(1), Rat(0)});
  REQUIRE(z);
  CHECK((*z)[0] == 0);
  CHECK((*z)[1] == 1);

  // inconsistent degenerate system
  auto w = solve_rational(IntMatrix(2, 2, {1, 1, 1, 1}), {Rat(0), Rat(1)});
  CHECK(!w);

  // consistent degenerate system has a solution
  auto c = solve_rational(IntMatrix(2, 2, {1, 1, 1, 1}), {Rat(2), Rat(2)});
  REQUIRE(c);
  CHECK((*c)[0] + (*c)[1] == 2);
}

TEST_CASE("rational solve: random square nondegenerate round trip") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> dist(-9, 9);
  int done = 0;
  while (done < 30) {
    IntMatrix a = random_matrix(rng, 4, 4, 9);
    if (determinant(a) == 0) continue;
    std::vector<Rat> b(4);
    for (auto& e : b) {
      e = Rat(dist(rng), 1 + std::abs(dist(rng)));
      e.canonicalize();
    }
    auto x = solve_rational(a, b);
    REQUIRE(x);
    for (std::size_t i = 0; i < 4; ++i) {
      Rat acc = 0;
      for (std::size_t j = 0; j < 4; ++j) acc += Rat(a(i, j)) * (*x)[j];
      CHECK(acc == b[i]);
    }
    ++done;
  }
}

TEST_CASE("rational inverse") {
  RatMatrix a = to_rational(IntMatrix(2, 2, {0, 1, 1, 0}));
  auto inv = inverse(a);
  REQUIRE(inv);
  CHECK(*inv * a == RatMatrix::identity(2));
  CHECK(!inverse(to_rational(IntMatrix(2, 2, {1, 2, 2, 4}))));
}
