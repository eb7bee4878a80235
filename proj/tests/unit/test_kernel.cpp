#include <doctest.h>

#include <random>

#include "gr24adj/matrix.hpp"
#include "gr24adj/multipoly.hpp"
#include "gr24adj/quadext.hpp"
#include "gr24adj/rat.hpp"
#include "gr24adj/unipoly.hpp"

using namespace gr24;

TEST_CASE("rational parse and print round-trip") {
  CHECK(rat_to_string(parse_rat("-3/6")) == "-1/2");
  CHECK(rat_to_string(parse_rat("4/2")) == "2");
  CHECK(parse_rat("0/5") == 0);
  CHECK(!try_parse_rat("1.5"));
  CHECK(!try_parse_rat("2/0"));
  CHECK(!try_parse_rat(""));
  Rat r;
  CHECK(is_square(Rat(9, 4), &r));
  CHECK(r == Rat(3, 2));
  CHECK(!is_square(Rat(2)));
  CHECK(!is_square(Rat(-4)));
}

TEST_CASE("rat distributivity on random values") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-20, 20);
  for (int i = 0; i < 200; ++i) {
    Rat a(d(rng), 1 + std::abs(d(rng))), b(d(rng), 1 + std::abs(d(rng))),
        c(d(rng), 1 + std::abs(d(rng)));
    CHECK((a + b) * c == a * c + b * c);
  }
}

TEST_CASE("rref identity and rank-1") {
  Mat<Rat> id = Mat<Rat>::identity(2);
  auto [r1, p1] = rref(id);
  CHECK(r1 == id);
  CHECK(p1 == std::vector<std::size_t>{0, 1});

  Mat<Rat> m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 2;
  m(1, 1) = 4;
  auto [r2, p2] = rref(m);
  CHECK(p2 == std::vector<std::size_t>{0});
  CHECK(r2(0, 0) == 1);
  CHECK(r2(0, 1) == 2);
  CHECK(r2(1, 0) == 0);
  CHECK(r2(1, 1) == 0);
}

TEST_CASE("nullspace basics and rank-nullity on random matrices") {
  CHECK(nullspace(Mat<Rat>::identity(3)).empty());
  Mat<Rat> z(1, 3);
  CHECK(nullspace(z).size() == 3);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
    Mat<Rat> m(r, c);
    for (auto& x : m.a) x = d(rng);
    CHECK(rank(m) + nullspace(m).size() == c);
  }
}

// Floating-point rank estimate used as an independent oracle for exact rank.
static int float_rank_estimate(const Mat<Rat>& m) {
  std::vector<std::vector<double>> a(m.rows, std::vector<double>(m.cols));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) a[i][j] = to_double(m(i, j));
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t best = row;
    for (std::size_t i = row; i < m.rows; ++i)
      if (std::abs(a[i][col]) > std::abs(a[best][col])) best = i;
    if (std::abs(a[best][col]) < 1e-9) continue;
    std::swap(a[row], a[best]);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row) continue;
      double f = a[i][col] / a[row][col];
      for (std::size_t j = col; j < m.cols; ++j) a[i][j] -= f * a[row][j];
    }
    ++rank;
    ++row;
  }
  return rank;
}

TEST_CASE("exact rank agrees with floating rank oracle on 6x21 matrices") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 20; ++trial) {
    Mat<Rat> m(6, 21);
    for (auto& x : m.a) x = d(rng);
    CHECK((int)rank(m) == float_rank_estimate(m));
  }
}

TEST_CASE("unipoly divmod and gcd") {
  // (t-1)(t-2) = t^2 - 3t + 2
  UniPoly<Rat> p(std::vector<Rat>{2, -3, 1});
  UniPoly<Rat> q(std::vector<Rat>{-1, 1});
  auto [quo, rem] = divmod(p, q);
  CHECK(rem.zero());
  CHECK(quo == UniPoly<Rat>(std::vector<Rat>{-2, 1}));
  auto g = gcd(p, q);
  CHECK(g == UniPoly<Rat>(std::vector<Rat>{-1, 1}));
}

TEST_CASE("sturm_isolate basic cases") {
  UniPoly<Rat> p(std::vector<Rat>{2, -3, 1});  // roots 1, 2
  auto roots = sturm_isolate(p, Rat(0), Rat(3));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].lo <= 1);
  CHECK(1 <= roots[0].hi);
  CHECK(roots[1].lo <= 2);
  CHECK(2 <= roots[1].hi);

  UniPoly<Rat> noroot(std::vector<Rat>{1, 0, 1});  // t^2+1
  CHECK(sturm_isolate(noroot, Rat(-10), Rat(10)).empty());

  CHECK_THROWS(sturm_isolate(UniPoly<Rat>{}, Rat(0), Rat(1)));

  // 11 t^2 - 46 t - 13: one positive root, one negative
  UniPoly<Rat> ex(std::vector<Rat>{-13, -46, 11});
  auto pos = sturm_isolate(ex, Rat(0), Rat(1000000));
  REQUIRE(pos.size() == 1);
  auto all = sturm_isolate(ex, Rat(-1000000), Rat(1000000));
  REQUIRE(all.size() == 2);
  CHECK(all[0].hi <= 0);
}

// Independent oracle: real-root count of a squarefree polynomial of degree
// <= 3 from its discriminant, plus bisection confirmation that each isolating
// interval actually brackets a sign change.
static int discriminant_root_count(const UniPoly<Rat>& sf) {
  int n = sf.degree();
  if (n <= 0) return 0;
  if (n == 1) return 1;
  if (n == 2) {
    Rat a = sf.coeff(2), b = sf.coeff(1), c = sf.coeff(0);
    return (b * b - 4 * a * c).sign() > 0 ? 2 : 0;
  }
  Rat a = sf.coeff(3), b = sf.coeff(2), c = sf.coeff(1), d = sf.coeff(0);
  Rat disc = 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c -
             27 * a * a * d * d;
  return disc.sign() > 0 ? 3 : 1;
}

TEST_CASE("sturm root counts match an independent oracle on 1000 random cubics") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> d(-9, 9);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Rat> c(4);
    for (auto& x : c) x = d(rng);
    UniPoly<Rat> p(c);
    if (p.degree() < 1) continue;
    ++checked;
    // Cauchy bound for these coefficients is far below 100, so counting in
    // (-100, 100) counts all real roots.
    auto iso = sturm_isolate(p, Rat(-100), Rat(100));
    auto sf = squarefree_part(p);
    CHECK((int)iso.size() == discriminant_root_count(sf));
    for (auto& iv : iso) {
      if (iv.exact()) {
        CHECK(sf.eval(iv.lo) == 0);
      } else {
        CHECK(sf.eval(iv.lo).sign() * sf.eval(iv.hi).sign() == -1);
      }
    }
  }
  CHECK(checked > 900);
}

TEST_CASE("root interval refinement") {
  UniPoly<Rat> p(std::vector<Rat>{-2, 0, 1});  // t^2-2
  auto iso = sturm_isolate(p, Rat(0), Rat(2));
  REQUIRE(iso.size() == 1);
  auto sf = squarefree_part(p);
  refine_to_width(sf, iso[0], Rat(1, 1 << 20));
  CHECK(iso[0].hi - iso[0].lo < Rat(1, 1 << 20));
  CHECK(iso[0].lo * iso[0].lo < 2);
  CHECK(iso[0].hi * iso[0].hi > 2);
}

TEST_CASE("multipoly arithmetic and restriction") {
  // f = x0*x1 + x2^2 in 3 vars
  MultiPoly<Rat> f(3);
  f.add_term({1, 1, 0}, 1);
  f.add_term({0, 0, 2}, 1);
  CHECK(f.degree() == 2);
  CHECK(f.homogeneous());
  CHECK(f.eval({Rat(1), Rat(2), Rat(3)}) == 11);

  // restrict along x = t*(1,0,1) + u*(0,1,0): f -> t*u + t^2
  auto g = restrict_linear(f, {{Rat(1), Rat(0), Rat(1)}, {Rat(0), Rat(1), Rat(0)}});
  MultiPoly<Rat> expect(2);
  expect.add_term({1, 1}, 1);
  expect.add_term({2, 0}, 1);
  CHECK(g == expect);
}

TEST_CASE("restriction is a ring homomorphism on random inputs") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> d(-4, 4);
  std::vector<std::vector<Rat>> basis = {{Rat(1), Rat(d(rng)), Rat(0), Rat(2)},
                                         {Rat(0), Rat(1), Rat(d(rng)), Rat(-1)}};
  for (int trial = 0; trial < 20; ++trial) {
    MultiPoly<Rat> f(4), g(4);
    for (int k = 0; k < 4; ++k) {
      Expo e(4, 0);
      e[rng() % 4] += 1;
      e[rng() % 4] += 1;
      f.add_term(e, d(rng));
      Expo e2(4, 0);
      e2[rng() % 4] = 1;
      g.add_term(e2, d(rng));
    }
    CHECK(restrict_linear(f * g, basis) == restrict_linear(f, basis) * restrict_linear(g, basis));
  }
}

TEST_CASE("quadratic extension arithmetic and ordering") {
  // theta = sqrt(2): minimal polynomial t^2 - 2, isolating (1, 3/2)
  auto ctx = std::make_shared<const QuadCtx>(Rat(0), Rat(-2), Rat(1), Rat(3, 2));
  QuadExt th = QuadExt::theta(ctx);
  QuadExt x = th * th;
  CHECK(x == QuadExt(Rat(2)));
  QuadExt y = (QuadExt(1) + th) * (QuadExt(1) - th);  // 1 - 2 = -1
  CHECK(y == QuadExt(Rat(-1)));
  QuadExt inv = QuadExt(1) / (QuadExt(1) + th);  // sqrt(2)-1
  CHECK(inv * (QuadExt(1) + th) == QuadExt(1));
  CHECK((th - QuadExt(Rat(3, 2))).sgn() < 0);
  CHECK((th - QuadExt(Rat(7, 5))).sgn() > 0);
  CHECK(th.sgn() > 0);

  // Sturm isolation over the extension: (t - theta)(t + theta) = t^2 - 2
  UniPoly<QuadExt> p(std::vector<QuadExt>{QuadExt(Rat(-2)), QuadExt(0), QuadExt(1)});
  auto iso = sturm_isolate(p, QuadExt(Rat(-10)), QuadExt(Rat(10)));
  CHECK(iso.size() == 2);
}
