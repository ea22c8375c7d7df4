#pragma once

#include "sblf/hurwitz.hpp"
#include "sblf/integer.hpp"
#include "sblf/sl2z.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace sblf {

struct Move {
  enum class Kind { Forward, Backward, Conjugate };

  Kind kind = Kind::Forward;
  std::size_t position = 0;  // 1-based, elementary transformations only
  Sl2Matrix conjugator;      // conjugation only

  static Move forward(std::size_t position) { return {Kind::Forward, position, {}}; }
  static Move backward(std::size_t position) { return {Kind::Backward, position, {}}; }
  static Move conjugate(Sl2Matrix g) { return {Kind::Conjugate, 0, std::move(g)}; }

  friend bool operator==(const Move&, const Move&) = default;
};

HurwitzSystem apply(const HurwitzSystem& w, const Move& move);
HurwitzSystem replay(const HurwitzSystem& w, const std::vector<Move>& moves);
std::string to_string(const Move& move);

enum class ConjugationScope { None, X1Powers, Full };

struct SearchBudget {
  static constexpr long kDefaultMaxStates = 100000;
  static constexpr long kDefaultMaxEntry = 1000000;

  Integer max_entry = kDefaultMaxEntry;
  std::size_t max_states = kDefaultMaxStates;
  ConjugationScope scope = ConjugationScope::X1Powers;
};

struct SearchResult {
  std::optional<std::vector<Move>> moves;
  std::size_t states_explored = 0;
  bool exhausted = false;
};

/// Canonical representative of w modulo the conjugations allowed by scope, and the g with
/// simultaneous_conjugation(w, g) equal to it.
struct CanonicalForm {
  HurwitzSystem system;
  Sl2Matrix conjugator;
};

CanonicalForm canonicalize(const HurwitzSystem& w, ConjugationScope scope);

/// Bidirectional breadth-first search over elementary transformations, with states taken
/// modulo the budget's conjugation scope. A returned move list replays w1 to exactly w2.
SearchResult bounded_equivalence_search(const HurwitzSystem& w1, const HurwitzSystem& w2,
                                        const SearchBudget& budget = {});

/// (X1, X2, ..., X1, X2) of the given even length.
HurwitzSystem matsumoto_target(std::size_t length);

/// Elementary transformations only. Throws InputError unless the product is +-E.
SearchResult matsumoto_normalize(const HurwitzSystem& w, const SearchBudget& budget = {});

}  // namespace sblf
