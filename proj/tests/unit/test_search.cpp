#include <sblf/errors.hpp>
#include <sblf/hurwitz.hpp>
#include <sblf/search.hpp>

#include <doctest.h>

#include <random>

using namespace sblf;

TEST_CASE("moves and replay") {
  const HurwitzSystem w = NormalForm{1, {3, 0}}.expand();
  CHECK(apply(w, Move::forward(1)) == elementary_transformation(w, 1, Direction::Forward));
  CHECK(apply(w, Move::backward(2)) == elementary_transformation(w, 2, Direction::Backward));
  const Sl2Matrix g = generator(Generator::X1).pow(3);
  CHECK(apply(w, Move::conjugate(g)) == simultaneous_conjugation(w, g));
  CHECK(replay(w, {}) == w);
  CHECK(replay(w, {Move::forward(1), Move::backward(1)}) == w);
  CHECK(to_string(Move::forward(1)) == "forward 1");
  CHECK(to_string(Move::backward(3)) == "backward 3");
}

TEST_CASE("a single backward move") {
  const HurwitzSystem lhs({twist_matrix(Curve(1, 1)), generator(Generator::X2)});
  const HurwitzSystem rhs({generator(Generator::X1), twist_matrix(Curve(1, 1))});
  const SearchResult r = bounded_equivalence_search(lhs, rhs);
  REQUIRE(r.moves);
  CHECK(r.moves->size() == 1);
  CHECK(r.moves->front() == Move::backward(1));
  CHECK(replay(lhs, *r.moves) == rhs);
}

TEST_CASE("search results replay exactly") {
  std::mt19937_64 rng(21);
  const HurwitzSystem start = make_T_s(4).expand();
  std::uniform_int_distribution<std::size_t> pos(1, start.size() - 1);
  for (int trial = 0; trial < 10; ++trial) {
    HurwitzSystem target = start;
    for (int i = 0; i < 3; ++i) {
      target = elementary_transformation(target, pos(rng), trial % 2 ? Direction::Forward : Direction::Backward);
    }
    target = simultaneous_conjugation(target, generator(Generator::X1).pow(trial - 5));
    const SearchResult r = bounded_equivalence_search(start, target);
    REQUIRE(r.moves);
    CHECK(replay(start, *r.moves) == target);
  }
}

TEST_CASE("full conjugation scope") {
  const HurwitzSystem w = make_T_s(3).expand();
  const HurwitzSystem target = simultaneous_conjugation(w, generator(Generator::A));
  SearchBudget none;
  none.scope = ConjugationScope::None;
  none.max_states = 2000;
  const SearchResult missed = bounded_equivalence_search(w, target, none);
  CHECK_FALSE(missed.moves);
  SearchBudget full;
  full.scope = ConjugationScope::Full;
  const SearchResult found = bounded_equivalence_search(w, target, full);
  REQUIRE(found.moves);
  CHECK(replay(w, *found.moves) == target);
}

TEST_CASE("canonical forms") {
  const HurwitzSystem w = NormalForm{0, {3, 4, -3}}.expand();
  for (ConjugationScope scope : {ConjugationScope::None, ConjugationScope::X1Powers, ConjugationScope::Full}) {
    const CanonicalForm c = canonicalize(w, scope);
    CHECK(simultaneous_conjugation(w, c.conjugator) == c.system);
  }
  const CanonicalForm a = canonicalize(w, ConjugationScope::X1Powers);
  const CanonicalForm b =
      canonicalize(simultaneous_conjugation(w, generator(Generator::X1).pow(7)), ConjugationScope::X1Powers);
  CHECK(a.system == b.system);
  const CanonicalForm fa = canonicalize(w, ConjugationScope::Full);
  const CanonicalForm fb = canonicalize(simultaneous_conjugation(w, Sl2Matrix(2, 3, 1, 2)), ConjugationScope::Full);
  CHECK(fa.system == fb.system);
}

TEST_CASE("budget exhaustion is not a negative answer") {
  SearchBudget tiny;
  tiny.max_states = 5;
  const SearchResult r =
      bounded_equivalence_search(NormalForm{0, {10, 6, 1, -2, -6, -11}}.expand(), make_T_s(6).expand(), tiny);
  CHECK_FALSE(r.moves);
  CHECK(r.exhausted);
  CHECK_THROWS_AS(bounded_equivalence_search(make_S(2), make_S(3)), InputError);
}

TEST_CASE("Matsumoto normalization") {
  const HurwitzSystem target = matsumoto_target(12);
  CHECK(total_monodromy(target).is_identity());
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> pos(1, 11);
  for (int trial = 0; trial < 5; ++trial) {
    HurwitzSystem w = target;
    for (int i = 0; i < 4; ++i) {
      w = elementary_transformation(w, pos(rng), i % 2 ? Direction::Backward : Direction::Forward);
    }
    const SearchResult r = matsumoto_normalize(w);
    REQUIRE(r.moves);
    CHECK(replay(w, *r.moves) == target);
    for (const Move& m : *r.moves) CHECK(m.kind != Move::Kind::Conjugate);
  }
  CHECK_THROWS_AS(matsumoto_normalize(make_S(3)), InputError);
}
