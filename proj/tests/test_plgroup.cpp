#include <doctest.h>

#include <random>

#include "cyclicover/plmap.hpp"
#include "cyclicover/rational.hpp"
#include "test_helpers.hpp"

using namespace cyclicover;
using cyclicover::testing::Rng;

namespace {

mpq_class q(const std::string &s) { return parse_rational(s); }

GroupSpec spec23() { return GroupSpec::make(1, SlopeBasis::make({2, 3})); }
GroupSpec spec2() { return GroupSpec::make(1, SlopeBasis::make({2})); }

SlopeExponent exp23(std::int64_t a, std::int64_t b) { return {{a, b}}; }

// g and h of the worked F(1, Z[1/6], <2,3>) example
PLMap sample_g() { return irreducibility_witness(spec23(), exp23(1, 0)); }
PLMap sample_h() { return independence_witness(spec23(), exp23(1, 0), End::Left); }

} // namespace

TEST_CASE("slope basis construction") {
  SlopeBasis b = SlopeBasis::make({2, 3});
  CHECK(b.primes() == std::vector<std::int64_t>{2, 3});
  CHECK(b.ring_modulus() == 6);

  SlopeBasis big = SlopeBasis::make({6, 10, 15}); // rank 3 over primes 2,3,5
  CHECK(big.primes() == std::vector<std::int64_t>{2, 3, 5});

  CHECK_THROWS_AS(SlopeBasis::make({2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(SlopeBasis::make({}), std::invalid_argument);
  try {
    SlopeBasis::make({2, 8}); // 2^3 = 8 is a relation
    FAIL("expected a dependence rejection");
  } catch (const std::invalid_argument &e) {
    std::string msg = e.what();
    CHECK(msg.find("dependent") != std::string::npos);
    CHECK(msg.find("= 1") != std::string::npos);
  }
}

TEST_CASE("slope membership") {
  SlopeBasis b = SlopeBasis::make({2, 3});
  CHECK(slope_membership(2, b) == exp23(1, 0));
  CHECK(slope_membership(1, b) == exp23(0, 0));
  CHECK(slope_membership(12, b) == exp23(2, 1));
  CHECK(slope_membership(q("1/2"), b) == exp23(-1, 0));
  CHECK(slope_membership(q("3/2"), b) == exp23(-1, 1));
  CHECK_FALSE(slope_membership(5, b).has_value());
  CHECK_FALSE(slope_membership(q("7/2"), b).has_value());
  CHECK_THROWS_AS(slope_membership(0, b), std::invalid_argument);
  CHECK_THROWS_AS(slope_membership(-2, b), std::invalid_argument);

  // 6 = 2 * 3 is reachable over primes but not over the basis {4, 9}
  SlopeBasis sq = SlopeBasis::make({4, 9});
  CHECK(slope_membership(36, sq) == exp23(1, 1));
  CHECK_FALSE(slope_membership(6, sq).has_value());

  SUBCASE("membership inverts evaluation on random exponents") {
    Rng rng(51);
    std::uniform_int_distribution<int> e(-5, 5);
    for (int i = 0; i < 500; ++i) {
      SlopeExponent v = exp23(e(rng), e(rng));
      auto back = slope_membership(v.value(b), b);
      REQUIRE(back.has_value());
      CHECK(*back == v);
    }
  }
}

TEST_CASE("group spec ring condition") {
  CHECK(GroupSpec::make(q("3/2"), SlopeBasis::make({2, 3})).ell == q("3/2"));
  CHECK_THROWS_AS(GroupSpec::make(q("1/5"), SlopeBasis::make({2, 3})),
                  std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::make(0, SlopeBasis::make({2})), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::make(q("-1"), SlopeBasis::make({2})), std::invalid_argument);
}

TEST_CASE("plmap construction and canonical form") {
  PLMap id = PLMap::identity(1);
  CHECK(id.breakpoints().size() == 2);
  // collinear interior points are dropped
  PLMap same = PLMap::from_breakpoints(
      1, {{0, 0}, {q("1/4"), q("1/4")}, {q("1/2"), q("1/2")}, {1, 1}});
  CHECK(same == id);

  CHECK_THROWS_AS(PLMap::from_breakpoints(1, {{0, 0}, {1, q("1/2")}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      PLMap::from_breakpoints(1, {{0, 0}, {q("1/2"), q("1/2")}, {q("1/2"), 1}, {1, 1}}),
      std::invalid_argument);
}

TEST_CASE("worked example maps") {
  PLMap g = sample_g();
  std::vector<std::pair<mpq_class, mpq_class>> expect_g = {
      {0, 0}, {q("1/12"), q("1/6")}, {q("5/6"), q("11/12")}, {1, 1}};
  CHECK(g.breakpoints() == expect_g);
  CHECK(g.slope_at_zero() == 2);
  CHECK(g.slope_at_ell() == q("1/2"));
  CHECK(lambda_char(g, spec23().basis) == exp23(1, 0));
  CHECK(rho_char(g, spec23().basis) == exp23(-1, 0));

  PLMap h = sample_h();
  std::vector<std::pair<mpq_class, mpq_class>> expect_h = {
      {0, 0}, {q("5/72"), q("5/36")}, {q("25/36"), q("55/72")}, {q("5/6"), q("5/6")}, {1, 1}};
  CHECK(h.breakpoints() == expect_h);
  CHECK(lambda_char(h, spec23().basis) == exp23(1, 0));
  CHECK(rho_char(h, spec23().basis) == exp23(0, 0));

  CHECK(validate(g, spec23()).valid);
  CHECK(validate(h, spec23()).valid);
  CHECK(validate(PLMap::identity(1), spec23()).valid);
  CHECK(lambda_char(PLMap::identity(1), spec23().basis) == exp23(0, 0));
  CHECK(rho_char(PLMap::identity(1), spec23().basis) == exp23(0, 0));
}

TEST_CASE("validation reports violations as data") {
  GroupSpec spec = spec23();
  // breakpoint with denominator 5
  ValidationReport bad_ring = validate_breakpoints(
      1, {{0, 0}, {q("1/5"), q("1/2")}, {1, 1}}, spec);
  CHECK_FALSE(bad_ring.valid);
  REQUIRE_FALSE(bad_ring.violations.empty());
  CHECK(bad_ring.violations[0].find("1/5") != std::string::npos);

  // slope 5 segment
  ValidationReport bad_slope = validate_breakpoints(
      1, {{0, 0}, {q("1/6"), q("5/6")}, {1, 1}}, spec);
  CHECK_FALSE(bad_slope.valid);
  bool mentions_slope = false;
  for (const auto &v : bad_slope.violations)
    mentions_slope = mentions_slope || v.find("slope") != std::string::npos;
  CHECK(mentions_slope);

  // non-canonical duplicate slope across consecutive segments
  ValidationReport dup = validate_breakpoints(
      1, {{0, 0}, {q("1/2"), q("1/2")}, {1, 1}}, spec);
  CHECK_FALSE(dup.valid);

  // wrong endpoints
  CHECK_FALSE(validate_breakpoints(1, {{0, 0}, {1, q("1/2")}}, spec).valid);
}

TEST_CASE("composition and inversion") {
  GroupSpec spec = spec23();
  PLMap g = sample_g();
  PLMap id = PLMap::identity(1);
  CHECK(compose(g, id) == g);
  CHECK(compose(id, g) == g);
  CHECK(compose(g, g.inverse()) == id);
  CHECK(g.inverse().inverse() == g);
  CHECK(g.inverse().slope_at_zero() == q("1/2"));
  CHECK(lambda_char(g.inverse(), spec.basis) == exp23(-1, 0));

  PLMap g2 = compose(g, g);
  CHECK(g2.slope_at_zero() == 4);
  CHECK(lambda_char(g2, spec.basis) == exp23(2, 0));
  CHECK(validate(g2, spec).valid);

  PLMap other = PLMap::identity(q("3/2"));
  CHECK_THROWS_AS(compose(g, other), std::invalid_argument);
}

TEST_CASE("fixed point sets") {
  PLMap id = PLMap::identity(1);
  CHECK(id.fixed_points() ==
        std::vector<std::pair<mpq_class, mpq_class>>{{0, 1}});

  PLMap g = sample_g();
  CHECK(g.fixed_points() ==
        std::vector<std::pair<mpq_class, mpq_class>>{{0, 0}, {1, 1}});

  PLMap h = sample_h(); // identity on [5/6, 1]
  CHECK(h.fixed_points() ==
        std::vector<std::pair<mpq_class, mpq_class>>{{0, 0}, {q("5/6"), 1}});
}

TEST_CASE("irreducibility witness") {
  PLMap g = sample_g();
  CHECK(g.breakpoints()[1] == std::make_pair(q("1/12"), q("1/6")));
  CHECK(g.breakpoints()[2] == std::make_pair(q("5/6"), q("11/12")));

  PLMap f = irreducibility_witness(spec2(), {{1}});
  std::vector<std::pair<mpq_class, mpq_class>> expect = {
      {0, 0}, {q("1/4"), q("1/2")}, {q("1/2"), q("3/4")}, {1, 1}};
  CHECK(f.breakpoints() == expect);

  CHECK_THROWS_AS(irreducibility_witness(spec23(), exp23(0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(irreducibility_witness(spec23(), exp23(-1, 0)), std::invalid_argument);
}

TEST_CASE("independence witnesses at both ends") {
  GroupSpec spec = spec23();
  SlopeExponent third = exp23(0, -1); // nu = 1/3 takes the nu < 1 branch
  PLMap h = independence_witness(spec, third, End::Left);
  CHECK(lambda_char(h, spec.basis) == third);
  CHECK(rho_char(h, spec.basis) == exp23(0, 0));
  // scaled construction: first breakpoint (ltilde/6, nu ltilde/6) with
  // ltilde = 5/6
  CHECK(h.breakpoints()[1] == std::make_pair(q("5/36"), q("5/108")));
  CHECK(validate(h, spec).valid);

  PLMap r = independence_witness(spec, exp23(1, 0), End::Right);
  CHECK(rho_char(r, spec.basis) == exp23(1, 0));
  CHECK(lambda_char(r, spec.basis) == exp23(0, 0));
  CHECK(r.slope_at_zero() == 1);
  CHECK(validate(r, spec).valid);

  PLMap rh = independence_witness(spec, exp23(-1, 0), End::Right); // nu = 1/2
  CHECK(rho_char(rh, spec.basis) == exp23(-1, 0));
  CHECK(lambda_char(rh, spec.basis) == exp23(0, 0));
  CHECK(validate(rh, spec).valid);

  CHECK_THROWS_AS(independence_witness(spec, exp23(0, 0), End::Left),
                  std::invalid_argument);
}

TEST_CASE("independence certificates") {
  IndependenceCertificate c23 = independence_certificate(spec23());
  CHECK(c23.pass);
  CHECK(c23.witnesses.size() == 4); // nu in {2,3} x two ends
  CHECK(c23.irreducible_ok);

  IndependenceCertificate cf = independence_certificate(spec2());
  CHECK(cf.pass);
  CHECK(cf.witnesses.size() == 2);

  IndependenceCertificate c32 =
      independence_certificate(GroupSpec::make(q("3/2"), SlopeBasis::make({2, 3})));
  CHECK(c32.pass);

  // three-element basis over the primes 2, 3, 5
  IndependenceCertificate c3 =
      independence_certificate(GroupSpec::make(1, SlopeBasis::make({6, 10, 15})));
  CHECK(c3.pass);
  CHECK(c3.witnesses.size() == 6);
}

TEST_CASE("exceptional character descriptors") {
  auto [lam, rho] = exceptional_characters(spec23());
  CHECK(lam.functional == "lambda");
  CHECK(rho.functional == "rho");
  CHECK(lam.basis == std::vector<std::int64_t>{2, 3});
  CHECK(lam.weights == std::vector<std::string>{"log(2)", "log(3)"});

  auto [flam, frho] = exceptional_characters(spec2());
  CHECK(flam.basis.size() == 1);
}

TEST_CASE("group laws and character homomorphisms on random products") {
  GroupSpec spec = spec23();
  std::vector<PLMap> pool;
  for (std::int64_t i = 0; i < 2; ++i) {
    SlopeExponent nu = exp23(i == 0, i == 1);
    pool.push_back(independence_witness(spec, nu, End::Left));
    pool.push_back(independence_witness(spec, nu, End::Right));
    pool.push_back(irreducibility_witness(spec, nu));
    pool.push_back(pool[pool.size() - 2].inverse());
  }
  Rng rng(52);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  auto random_elem = [&] {
    PLMap f = PLMap::identity(spec.ell);
    std::uniform_int_distribution<int> len(1, 4);
    int n = len(rng);
    for (int i = 0; i < n; ++i)
      f = compose(f, pool[pick(rng)]);
    return f;
  };

  PLMap id = PLMap::identity(spec.ell);
  for (int i = 0; i < 500; ++i) {
    PLMap f = random_elem(), g = random_elem(), h = random_elem();
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    CHECK(compose(f, id) == f);
    CHECK(compose(f.inverse(), f) == id);
    CHECK(validate(compose(f, g), spec).valid); // closure

    CHECK(slope_exponent_add(lambda_char(f, spec.basis), lambda_char(g, spec.basis)) ==
          lambda_char(compose(f, g), spec.basis));
    CHECK(slope_exponent_add(rho_char(f, spec.basis), rho_char(g, spec.basis)) ==
          rho_char(compose(f, g), spec.basis));
    CHECK(lambda_char(f.inverse(), spec.basis) ==
          slope_exponent_neg(lambda_char(f, spec.basis)));
  }
}

TEST_CASE("witness coordinates stay in the ring") {
  for (const GroupSpec &spec :
       {spec23(), spec2(), GroupSpec::make(q("3/2"), SlopeBasis::make({2, 3}))}) {
    IndependenceCertificate cert = independence_certificate(spec);
    for (const auto &w : cert.witnesses)
      for (const auto &[x, y] : w.map.breakpoints()) {
        CHECK(in_ring(x, spec.basis));
        CHECK(in_ring(y, spec.basis));
      }
  }
}

TEST_CASE("plmap json round trip") {
  PLMap h = sample_h();
  PLMap back = plmap_from_json(plmap_to_json(h));
  CHECK(back == h);
  CHECK(plmap_to_json(h).find("\"5/72\"") != std::string::npos);
  CHECK_THROWS_AS(plmap_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(plmap_from_json("{\"ell\":\"1\"}"), std::invalid_argument);

  Rng rng(53);
  GroupSpec spec = spec23();
  for (int i = 0; i < 100; ++i) {
    PLMap f = compose(sample_g(), i % 2 ? sample_h() : sample_h().inverse());
    CHECK(plmap_from_json(plmap_to_json(f)) == f);
  }
}

TEST_CASE("svg rendering is deterministic and well formed") {
  PLMap g = sample_g();
  std::string svg = plmap_to_svg(g);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("width=\"400\"") != std::string::npos);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg == plmap_to_svg(g));
}
