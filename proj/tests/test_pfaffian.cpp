#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include "pfq/builtins.hpp"
#include "pfq/pfaffian.hpp"

using namespace pfq;

namespace {

const QQ qq;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SkewP random_skew(int n, const VarContext& ctx, const GF& gf, Rng& rng, bool numeric) {
  SkewP m(n, ctx, gf);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (numeric) {
        m.set(i, j, PolyP::constant(ctx, gf, rng.uniform(gf.modulus())));
      } else {
        PolyP lin = PolyP::zero(ctx, gf);
        for (int v = 0; v < ctx.size(); ++v) {
          std::uint64_t c = rng.uniform(gf.modulus());
          if (c) lin = lin + PolyP::from_term(ctx, gf, Monomial::var(v), c);
        }
        m.set(i, j, lin);
      }
    }
  return m;
}

Matrix<GF> to_numeric(const SkewP& m) {
  const GF& gf = m.dom();
  Matrix<GF> num(m.size(), m.size(), gf);
  std::vector<std::uint64_t> origin(m.ctx().size(), 0);
  for (const auto& [ij, p] : m.upper()) {
    std::uint64_t v = p.is_zero() ? 0 : p.terms()[0].c;
    num.at(ij.first, ij.second) = v;
    num.at(ij.second, ij.first) = gf.neg(v);
  }
  return num;
}

}  // namespace

TEST_CASE("pfaffian of tiny matrices") {
  VarContext ctx = VarContext::pluecker(4);
  SkewQ m(2, ctx, qq);
  m.set(0, 1, parse_poly("x01", ctx, qq));
  CHECK(m.pfaffian() == parse_poly("x01", ctx, qq));

  SkewQ g(4, ctx, qq);
  int v = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) g.set(i, j, PolyQ::variable(ctx, qq, v++));
  CHECK(g.pfaffian() == parse_poly("x01*x23 - x02*x13 + x03*x12", ctx, qq));
  CHECK(g.sub_pfaffian(2, 3) == parse_poly("x01", ctx, qq));

  // the standard symplectic block matrix has Pfaffian +1
  SkewQ sympl(6, ctx, qq);
  for (int b = 0; b < 3; ++b) sympl.set(2 * b, 2 * b + 1, PolyQ::constant(ctx, qq, Rational(1)));
  CHECK(sympl.pfaffian() == PolyQ::constant(ctx, qq, Rational(1)));

  CHECK_THROWS_AS(SkewQ(3, ctx, qq).pfaffian(), Error);
  CHECK_THROWS_AS(g.odd_pfaffian_family(), Error);
  CHECK_THROWS_AS(g.sub_pfaffian(1, 1), Error);
  CHECK_THROWS_AS(g.sub_pfaffian(0, 9), Error);
}

TEST_CASE("m0 transcription and its Pfaffian") {
  SkewQ m0 = builtin_matrix_m0();
  CHECK(m0.size() == 8);
  CHECK(m0.ctx().names() == std::vector<std::string>{"x1", "x2", "x3", "x4", "x5"});

  // checksum of the transcription: all 28 upper slots against the printed
  // matrix, zeros included
  const char* expected[8][8] = {};
  auto E = [&](int i, int j, const char* s) { expected[i][j] = s; };
  E(0, 1, "x1"); E(0, 2, "x2"); E(0, 3, "x3"); E(0, 4, "x4"); E(0, 5, "x5"); E(0, 6, "x1"); E(0, 7, "0");
  E(1, 2, "0"); E(1, 3, "x5"); E(1, 4, "0"); E(1, 5, "0"); E(1, 6, "-x3"); E(1, 7, "-x1");
  E(2, 3, "x1"); E(2, 4, "x1"); E(2, 5, "0"); E(2, 6, "0"); E(2, 7, "-x4");
  E(3, 4, "x2"); E(3, 5, "0"); E(3, 6, "0"); E(3, 7, "0");
  E(4, 5, "x3"); E(4, 6, "x1"); E(4, 7, "0");
  E(5, 6, "x4"); E(5, 7, "x2");
  E(6, 7, "x5");
  int slots = 0, nonzero = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) {
      ++slots;
      PolyQ entry = m0.entry(i, j);
      CHECK(entry == parse_poly(expected[i][j], m0.ctx(), qq));
      if (!entry.is_zero()) {
        ++nonzero;
        CHECK(entry.is_homogeneous());
        CHECK(entry.homogeneous_degree() == 1);
      }
    }
  CHECK(slots == 28);
  CHECK(nonzero == 18);
  CHECK(m0.entries_linear());

  // Pf(M0) = -F0 under our sign convention; 20 terms of degree 4
  PolyQ pf = m0.pfaffian();
  PolyQ f0 = builtin_poly("f0");
  CHECK(pf == -f0);
  CHECK(pf.term_count() == 20);
  CHECK(pf.homogeneous_degree() == 4);

  // every 6x6 sub-Pfaffian is a cubic form (each matching is a product of
  // three linear entries)
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) {
      PolyQ s = m0.sub_pfaffian(i, j);
      if (!s.is_zero()) {
        CHECK(s.is_homogeneous());
        CHECK(s.homogeneous_degree() == 3);
      }
    }
}

TEST_CASE("shipped data files match the builtins") {
  SkewQ from_file = parse_matrix_json(slurp(std::string(PFQ_SOURCE_DIR) + "/data/m0.json"));
  SkewQ m0 = builtin_matrix_m0();
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) CHECK(from_file.entry(i, j) == m0.entry(i, j));

  PolyQ f0_file = parse_poly(slurp(std::string(PFQ_SOURCE_DIR) + "/data/f0.txt"),
                             VarContext::numbered(5), qq);
  CHECK(f0_file == builtin_poly("f0"));
}

TEST_CASE("odd pfaffian families") {
  VarContext c3 = VarContext({"a", "b", "c"});
  SkewQ m(3, c3, qq);
  m.set(0, 1, parse_poly("a", c3, qq));
  m.set(0, 2, parse_poly("b", c3, qq));
  m.set(1, 2, parse_poly("c", c3, qq));
  auto fam = m.odd_pfaffian_family();
  REQUIRE(fam.size() == 3);
  CHECK(fam[0] == parse_poly("c", c3, qq));
  CHECK(fam[1] == parse_poly("b", c3, qq));
  CHECK(fam[2] == parse_poly("a", c3, qq));

  VarContext c21 = VarContext::pluecker(7);
  SkewQ zero7(7, c21, qq);
  for (const auto& f : zero7.odd_pfaffian_family()) CHECK(f.is_zero());

  SkewQ gen7(7, c21, qq);
  int v = 0;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) gen7.set(i, j, PolyQ::variable(c21, qq, v++));
  auto cubics = gen7.odd_pfaffian_family();
  REQUIRE(cubics.size() == 7);
  for (const auto& f : cubics) {
    CHECK(f.term_count() == 15);  // 5!! perfect matchings of 6 points
    CHECK(f.is_homogeneous());
    CHECK(f.homogeneous_degree() == 3);
  }
}

TEST_CASE("Pf^2 = det and congruence covariance over GF(p)") {
  GF gf(31991);
  VarContext ctx = VarContext::numbered(1);
  Rng rng(1234);
  for (int rep = 0; rep < 40; ++rep) {
    int n = 2 * (1 + static_cast<int>(rng.uniform(4)));  // 2, 4, 6, 8
    SkewP m = random_skew(n, ctx, gf, rng, true);
    Matrix<GF> num = to_numeric(m);
    std::uint64_t pf = pfaffian_numeric(num);
    CHECK(gf.mul(pf, pf) == determinant_numeric(num));

    // congruence: Pf(A^T M A) = det(A) Pf(M)
    Matrix<GF> a(n, n, gf);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a.at(i, j) = rng.uniform(gf.modulus());
    Matrix<GF> c(n, n, gf);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::uint64_t s = 0;
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l)
            s = gf.add(s, gf.mul(gf.mul(a.at(k, i), num.at(k, l)), a.at(l, j)));
        c.at(i, j) = s;
      }
    CHECK(pfaffian_numeric(c) == gf.mul(determinant_numeric(a), pf));
  }
}

TEST_CASE("row expansion identity on a symbolic 6x6") {
  VarContext ctx = VarContext::pluecker(6);
  SkewQ m(6, ctx, qq);
  int v = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) m.set(i, j, PolyQ::variable(ctx, qq, v++));
  PolyQ expansion = PolyQ::zero(ctx, qq);
  int sign = 1;
  for (int j = 1; j < 6; ++j) {
    PolyQ term = m.entry(0, j) * m.pfaffian_of_mask(0b111111u & ~1u & ~(1u << j));
    expansion = sign > 0 ? expansion + term : expansion - term;
    sign = -sign;
  }
  CHECK(expansion == m.pfaffian());
}

TEST_CASE("Pf_r7 of the 8x8 Pluecker matrix avoids the x_p7 variables") {
  VarContext ctx = VarContext::pluecker(8);
  SkewQ m(8, ctx, qq);
  int v = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) m.set(i, j, PolyQ::variable(ctx, qq, v++));
  for (int r = 0; r < 7; ++r) {
    PolyQ pf = m.sub_pfaffian(r, 7);
    CHECK(pf.term_count() == 15);
    for (const auto& t : pf.terms())
      for (int i = 0; i < ctx.size(); ++i)
        if (t.m.e[i]) CHECK(ctx.name(i).back() != '7');
  }
}

TEST_CASE("jacobian span rank") {
  GF gf(31991);
  SkewP m0 = reduce_mod(builtin_matrix_m0(), gf);
  CHECK(jacobian_span_rank(m0) == 70);
  GF gf2(104729);
  CHECK(jacobian_span_rank(reduce_mod(builtin_matrix_m0(), gf2)) == 70);

  VarContext ctx = VarContext::numbered(5);
  SkewP zero(8, ctx, gf);
  CHECK(jacobian_span_rank(zero) == 0);

  // dominance of the Pfaffian map: generic pencils hit full rank
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Rng rng(seed);
    SkewP m = random_skew(8, ctx, gf, rng, false);
    CHECK(jacobian_span_rank(m) == 70);
  }
}

TEST_CASE("point sampling") {
  GF g5(5);
  PolyP fermat5 = reduce_mod(builtin_poly("fermat"), g5);
  auto all = enumerate_projective_zeros(fermat5);
  CHECK(all.size() == 256);  // 4^5 affine zeros / 4 scalings

  GF gf(31991);
  PolyP f0 = reduce_mod(builtin_poly("f0"), gf);
  auto pts = sample_points_on_quartic(f0, 10, 1);
  CHECK(pts.size() == 10);
  for (const auto& p : pts) CHECK(f0.evaluate(p) == 0);

  // determinism in (p, seed)
  auto again = sample_points_on_quartic(f0, 10, 1);
  CHECK(pts == again);
  auto other = sample_points_on_quartic(f0, 10, 2);
  CHECK(pts != other);
}

TEST_CASE("sampling exhausts honestly on tiny fields") {
  GF g5(5);
  PolyP fermat5 = reduce_mod(builtin_poly("fermat"), g5);
  // only 256 projective points exist; asking for more must fail loudly
  CHECK_THROWS_AS(sample_points_on_quartic(fermat5, 300, 1), Error);
}

TEST_CASE("concurrent reads of one matrix are consistent") {
  GF gf(31991);
  SkewP m0 = reduce_mod(builtin_matrix_m0(), gf);
  PolyP expected = m0.pfaffian();
  int expected_rank = jacobian_span_rank(m0);
  std::vector<std::thread> workers;
  std::atomic<int> bad{0};
  for (int w = 0; w < 4; ++w) {
    workers.emplace_back([&] {
      for (int rep = 0; rep < 5; ++rep) {
        if (!(m0.pfaffian() == expected)) ++bad;
        if (jacobian_span_rank(m0) != expected_rank) ++bad;
      }
    });
  }
  for (auto& t : workers) t.join();
  CHECK(bad == 0);
}

TEST_CASE("kernel classification on and off the quartic") {
  GF gf(31991);
  SkewP m0 = reduce_mod(builtin_matrix_m0(), gf);
  PolyP f0 = reduce_mod(builtin_poly("f0"), gf);

  // (1,1,0,0,0) is off X0: only the term x1^3 x2 survives
  std::vector<std::uint64_t> off = {1, 1, 0, 0, 0};
  REQUIRE(f0.evaluate(off) != 0);
  KernelClassification kc_off = classify_kernel(m0, off);
  CHECK(kc_off.rank == 8);
  CHECK(kc_off.kernel_dim == 0);
  CHECK_FALSE(kc_off.pluecker.has_value());

  for (const auto& p : sample_points_on_quartic(f0, 25, 3)) {
    KernelClassification kc = classify_kernel(m0, p);
    CHECK(kc.rank == 6);
    CHECK(kc.kernel_dim == 2);
    CHECK(kc.grassmann_ok);
    REQUIRE(kc.pluecker.has_value());
    CHECK(kc.pluecker->size() == 28);
  }
}
