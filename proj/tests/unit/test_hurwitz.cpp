#include "oracles.hpp"

#include <sblf/errors.hpp>
#include <sblf/hurwitz.hpp>

#include <doctest.h>

#include <random>

using namespace sblf;

namespace {

oracle::Mat t_product(const std::vector<std::int64_t>& n) {
  oracle::Mat out;
  for (std::int64_t ni : n) out = oracle::mul(out, oracle::twist(ni, 1));
  return out;
}

oracle::Mat signed_x1(int s) {
  const oracle::Mat m = oracle::x1(-5 * s + 6);
  return s % 2 ? m : oracle::neg(m);
}

}  // namespace

TEST_CASE("systems accept only conjugates of X1") {
  CHECK_NOTHROW(HurwitzSystem({generator(Generator::X1), generator(Generator::X2)}));
  CHECK_THROWS_AS(HurwitzSystem({generator(Generator::A)}), InputError);
  CHECK_THROWS_AS(HurwitzSystem({generator(Generator::X1).inverse()}), InputError);
}

TEST_CASE("S and T products") {
  for (int r = 0; r <= 20; ++r) CHECK(total_monodromy(make_S(static_cast<std::size_t>(r))) == x1_power(r));
  for (int s = 2; s <= 14; ++s) {
    const NormalForm t = make_T_s(s);
    REQUIRE(t.twists.size() == static_cast<std::size_t>(s));
    CHECK(t.twists.front() == 2 * s - 3);
    CHECK(t.twists.back() == -2 * s + 3);
    CHECK(oracle::same(t_product(t.twists), total_monodromy(t.expand())));
    CHECK(oracle::same(signed_x1(s), total_monodromy(t.expand())));
  }
  CHECK(make_T_s(2).twists == std::vector<std::int64_t>{1, -1});
  CHECK(make_T_s(4).twists == std::vector<std::int64_t>{5, 2, -2, -5});
  CHECK_THROWS_AS(make_T_s(1), InputError);
  CHECK(total_monodromy(NormalForm{0, {1, -1}}.expand()) == -x1_power(-4));
}

TEST_CASE("the T-tilde system") {
  const NormalForm tilde{0, {10, 6, 1, -2, -6, -11}};
  const auto bc = is_sblf_compatible(tilde.expand());
  REQUIRE(bc);
  CHECK(bc->sign == Sign::Minus);
  CHECK(bc->m == -24);
  CHECK_FALSE(is_sblf_compatible(NormalForm{0, {1, 2}}.expand()));
}

TEST_CASE("elementary transformations") {
  const HurwitzSystem w = NormalForm{2, {3, 1, 0}}.expand();
  for (std::size_t i = 1; i < w.size(); ++i) {
    const HurwitzSystem f = elementary_transformation(w, i, Direction::Forward);
    const HurwitzSystem b = elementary_transformation(w, i, Direction::Backward);
    CHECK(total_monodromy(f) == total_monodromy(w));
    CHECK(total_monodromy(b) == total_monodromy(w));
    CHECK(elementary_transformation(f, i, Direction::Backward) == w);
    CHECK(elementary_transformation(b, i, Direction::Forward) == w);
    CHECK(f[i - 1] == w[i]);
    CHECK(f[i] == w[i].inverse() * w[i - 1] * w[i]);
    CHECK(b[i] == w[i - 1]);
  }
  CHECK_THROWS_AS(elementary_transformation(w, 0, Direction::Forward), InputError);
  CHECK_THROWS_AS(elementary_transformation(w, w.size(), Direction::Forward), InputError);
}

TEST_CASE("simultaneous conjugation") {
  const HurwitzSystem w = NormalForm{1, {2, 0}}.expand();
  const Sl2Matrix g = generator(Generator::A);
  const HurwitzSystem c = simultaneous_conjugation(w, g);
  for (std::size_t i = 0; i < w.size(); ++i) CHECK(c[i] == g.inverse() * w[i] * g);
  CHECK(total_monodromy(c) == g.inverse() * total_monodromy(w) * g);
}

TEST_CASE("the twist target sequence") {
  for (int s = 3; s <= 12; ++s) {
    const HurwitzSystem target = lemma45_target(s);
    CHECK(target.size() == static_cast<std::size_t>(s));
    CHECK(target[0] == twist_matrix(Curve(2, 1)));
    CHECK(target[target.size() - 1] == twist_matrix(Curve(1, -1)));
    CHECK(total_monodromy(target) == total_monodromy(make_T_s(s).expand()));
  }
  CHECK_THROWS_AS(lemma45_target(2), InputError);
}

TEST_CASE("normal forms") {
  const NormalForm nf = parse_normal_form("S2 T(3,-1,0)");
  CHECK(nf.k == 2);
  CHECK(nf.twists == std::vector<std::int64_t>{3, -1, 0});
  CHECK(to_string(nf) == "S2 T(3,-1,0)");
  CHECK(parse_normal_form("T(1,-1)").k == 0);
  CHECK(parse_normal_form("S4").twists.empty());
  CHECK(to_string(parse_normal_form("S0 T(1,-1)")) == "S0 T(1,-1)");
  CHECK_THROWS_AS(parse_normal_form(""), InputError);
  CHECK_THROWS_AS(parse_normal_form("S T(1)"), InputError);
  CHECK_THROWS_AS(parse_normal_form("Q3"), InputError);
  const HurwitzSystem w = nf.expand();
  CHECK(w.size() == 5);
  CHECK(w[0] == generator(Generator::X1));
  CHECK(w[2] == twist_matrix(Curve(3, 1)));
}

TEST_CASE("system files") {
  const HurwitzSystem w = parse_system("# header\nX1\nX2  # comment\n\nT(2)\n[[-1,-1],[4,3]]\n");
  REQUIRE(w.size() == 4);
  CHECK(w[1] == generator(Generator::X2));
  CHECK(w[2] == twist_matrix(Curve(2, 1)));
  CHECK(w[3] == twist_matrix(Curve(2, 1)));
  CHECK(parse_system(to_string(w)) == w);
  try {
    parse_system("X1\nX7\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_system("[[2,1],[1,1]]\n"), InputError);
}
