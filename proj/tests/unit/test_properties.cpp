#include "oracles.hpp"

#include <sblf/classify.hpp>
#include <sblf/hurwitz.hpp>
#include <sblf/pslword.hpp>
#include <sblf/sl2z.hpp>

#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

using namespace sblf;

namespace {

Sl2Matrix random_matrix(std::mt19937_64& rng, int max_length) {
  Sl2Matrix m;
  for (int i : oracle::random_letters(rng, max_length)) m *= oracle::to_sl2(oracle::letter(i));
  return m;
}

Curve random_curve(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coord(-40, 40);
  while (true) {
    const int p = coord(rng);
    const int q = coord(rng);
    if (std::gcd(p, q) == 1) return Curve(p, q);
  }
}

HurwitzSystem random_system(std::mt19937_64& rng, std::size_t length) {
  std::vector<Sl2Matrix> elements;
  for (std::size_t i = 0; i < length; ++i) elements.push_back(twist_matrix(random_curve(rng)));
  return HurwitzSystem(elements);
}

Integer det(const Sl2Matrix& m) { return m.a() * m.d() - m.b() * m.c(); }

}  // namespace

TEST_CASE("products stay in SL(2,Z)") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const Sl2Matrix m = random_matrix(rng, 200);
    CHECK(det(m) == 1);
    CHECK(det(m.inverse()) == 1);
    CHECK(det(m.pow(5)) == 1);
  }
}

TEST_CASE("relators") {
  const Sl2Matrix x1 = generator(Generator::X1);
  const Sl2Matrix x2 = generator(Generator::X2);
  CHECK((x1 * x2).pow(6).is_identity());
  CHECK((x1 * x2 * x1 * x2.inverse() * x1.inverse() * x2.inverse()).is_identity());
  CHECK(x2 * x1.pow(2) * x2 * x1.pow(2) == -Sl2Matrix());
}

TEST_CASE("twists transform under conjugation") {
  std::mt19937_64 rng(102);
  for (int trial = 0; trial < 300; ++trial) {
    const Curve c = random_curve(rng);
    const Sl2Matrix m = random_matrix(rng, 20);
    CHECK(twist_matrix(act(c, m)) == m.inverse() * twist_matrix(c) * m);
  }
}

TEST_CASE("apply_twist is the row action of the twist") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 1000; ++trial) {
    const Curve c = random_curve(rng);
    const Curve g = random_curve(rng);
    CHECK(apply_twist(c, g) == act(g, twist_matrix(c)));
  }
}

TEST_CASE("parabolic decomposition round-trips") {
  std::mt19937_64 rng(104);
  std::uniform_int_distribution<int> k(-50, 50);
  for (int trial = 0; trial < 300; ++trial) {
    const Curve c = random_curve(rng);
    const int e = k(rng);
    if (e == 0) continue;
    const auto d = decompose_parabolic(twist_power(c, e));
    REQUIRE(d);
    CHECK(d->curve == c);
    CHECK(d->exponent == e);
  }
}

TEST_CASE("boundary classes of large powers") {
  for (long m : {-1000000L, -999983L, -1L, 0L, 7L, 1000000L}) {
    const auto plus = as_plus_minus_x1_power(x1_power(m));
    const auto minus = as_plus_minus_x1_power(-x1_power(m));
    REQUIRE(plus);
    REQUIRE(minus);
    CHECK(plus->sign == Sign::Plus);
    CHECK(plus->m == m);
    CHECK(minus->sign == Sign::Minus);
    CHECK(minus->m == m);
  }
}

TEST_CASE("word invariants") {
  std::mt19937_64 rng(105);
  for (int trial = 0; trial < 500; ++trial) {
    const std::vector<int> letters = oracle::random_letters(rng, 30);
    Sl2Matrix m;
    for (int i : letters) m *= oracle::to_sl2(oracle::letter(i));
    const SignedElement e = matrix_to_signed_word(m);
    CHECK(evaluate(e) == m);
    // a second factorization of the same element, padded with (X1 X2)^6
    Sl2Matrix padded;
    for (int i : letters) padded *= oracle::to_sl2(oracle::letter(i));
    padded *= (generator(Generator::X1) * generator(Generator::X2)).pow(6);
    CHECK(matrix_to_signed_word(padded) == e);
    CHECK(PslWord::reduce(e.word.letters()) == e.word);
  }
  for (int n = -100; n <= 100; ++n) {
    CHECK(as_x1_power_psl(matrix_to_signed_word(x1_power(n)).word) == Integer(n));
  }
}

TEST_CASE("reduction is idempotent and shortening") {
  std::mt19937_64 rng(106);
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<int> len(0, 40);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Letter> raw(static_cast<std::size_t>(len(rng)));
    for (Letter& l : raw) l = static_cast<Letter>(pick(rng));
    const PslWord w = PslWord::reduce(raw);
    CHECK(w.size() <= raw.size());
    CHECK(PslWord::reduce(w.letters()) == w);
  }
}

TEST_CASE("moves preserve products and the conjugacy class of each element") {
  std::mt19937_64 rng(107);
  std::uniform_int_distribution<int> dir(0, 1);
  for (int trial = 0; trial < 2000; ++trial) {
    const HurwitzSystem w = random_system(rng, 5);
    std::uniform_int_distribution<std::size_t> pos(1, w.size() - 1);
    const HurwitzSystem moved =
        elementary_transformation(w, pos(rng), dir(rng) ? Direction::Forward : Direction::Backward);
    CHECK(total_monodromy(moved) == total_monodromy(w));
    for (const Sl2Matrix& m : moved.elements()) CHECK(is_conjugate_to_x1(m));
  }
}

TEST_CASE("compatibility is invariant under moves and X1 conjugation only") {
  std::mt19937_64 rng(108);
  const HurwitzSystem w = make_T_s(5).expand();
  const auto bc = is_sblf_compatible(w);
  REQUIRE(bc);
  std::uniform_int_distribution<std::size_t> pos(1, w.size() - 1);
  HurwitzSystem v = w;
  for (int i = 0; i < 20; ++i) {
    v = elementary_transformation(v, pos(rng), i % 3 ? Direction::Forward : Direction::Backward);
    CHECK(is_sblf_compatible(v) == bc);
    CHECK(is_sblf_compatible(simultaneous_conjugation(v, x1_power(i - 10))) == bc);
  }
  CHECK_FALSE(is_sblf_compatible(simultaneous_conjugation(w, generator(Generator::A))));
}

TEST_CASE("solution sets are closed under reversal") {
  for (int s = 2; s <= 5; ++s) {
    std::set<DifferenceTuple> all;
    for (const EquationSolution& sol : t_part_equation_solutions(s, 25)) all.insert(sol.differences);
    for (const DifferenceTuple& d : all) CHECK(all.count(DifferenceTuple(d.rbegin(), d.rend())));
  }
}

TEST_CASE("pairs with difference two multiply to -X1^-4") {
  for (std::int64_t n = -50; n <= 50; ++n) {
    CHECK(twist_matrix(Curve(n + 2, 1)) * twist_matrix(Curve(n, 1)) == -x1_power(-4));
  }
}

TEST_CASE("classification invariants") {
  for (int r = 0; r <= 5; ++r) {
    for (const ClassificationEntry& e : classify_sblf(r, 25)) {
      for (const ManifoldName& n : e.candidates) {
        CHECK(chi_of_name(n) == r + 2);
        CHECK_FALSE(is_positive_definite_simply_connected(n));
      }
    }
  }
  for (int s = 2; s <= 5; ++s) {
    CHECK(filter_irreducible(t_part_equation_solutions(s, 25)) == filter_irreducible(t_part_equation_solutions(s, 40)));
  }
}
