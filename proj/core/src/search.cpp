#include "sblf/search.hpp"

#include "sblf/errors.hpp"

#include <algorithm>
#include <unordered_map>

namespace sblf {

HurwitzSystem apply(const HurwitzSystem& w, const Move& move) {
  switch (move.kind) {
    case Move::Kind::Forward: return elementary_transformation(w, move.position, Direction::Forward);
    case Move::Kind::Backward:
      return elementary_transformation(w, move.position, Direction::Backward);
    case Move::Kind::Conjugate: return simultaneous_conjugation(w, move.conjugator);
  }
  return w;
}

HurwitzSystem replay(const HurwitzSystem& w, const std::vector<Move>& moves) {
  HurwitzSystem current = w;
  for (const Move& m : moves) current = apply(current, m);
  return current;
}

std::string to_string(const Move& move) {
  switch (move.kind) {
    case Move::Kind::Forward: return "forward " + std::to_string(move.position);
    case Move::Kind::Backward: return "backward " + std::to_string(move.position);
    case Move::Kind::Conjugate: return "conjugate " + to_string(move.conjugator);
  }
  return "?";
}

namespace {

// X1^c bringing the first non-X1 element T_(p,q) to 0 <= pq < q^2.
Sl2Matrix x1_power_normalizer(const HurwitzSystem& w) {
  for (const Sl2Matrix& m : w.elements()) {
    if (m.b() == 0) continue;
    const Integer pq = 1 - m.a();
    const Integer q2 = -m.b();
    return x1_power(-floor_div(pq, q2));
  }
  return Sl2Matrix();
}

// g with (p,q)·g = (1,0).
Sl2Matrix curve_to_x1(const Curve& c) {
  Integer g, x, y;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), c.p().get_mpz_t(), c.q().get_mpz_t());
  return Sl2Matrix(x, -c.q(), y, c.p());
}

}  // namespace

CanonicalForm canonicalize(const HurwitzSystem& w, ConjugationScope scope) {
  if (scope == ConjugationScope::None || w.empty()) return {w, Sl2Matrix()};
  Sl2Matrix g;
  HurwitzSystem current = w;
  if (scope == ConjugationScope::Full) {
    const auto parabolic = decompose_parabolic(w[0]);
    g = curve_to_x1(parabolic->curve);
    current = simultaneous_conjugation(current, g);
  }
  const Sl2Matrix h = x1_power_normalizer(current);
  if (!h.is_identity()) {
    current = simultaneous_conjugation(current, h);
    g *= h;
  }
  return {std::move(current), std::move(g)};
}

namespace {

struct NodeInfo {
  const HurwitzSystem* parent = nullptr;
  Move::Kind kind = Move::Kind::Forward;
  std::size_t position = 0;
};

using NodeMap = std::unordered_map<HurwitzSystem, NodeInfo, HurwitzSystemHash>;

struct Side {
  NodeMap nodes;
  std::vector<const HurwitzSystem*> frontier;
};

std::vector<Move> path_from_root(const NodeMap& nodes, const HurwitzSystem* node) {
  std::vector<Move> moves;
  while (true) {
    const NodeInfo& info = nodes.at(*node);
    if (!info.parent) break;
    moves.push_back(Move{info.kind, info.position, {}});
    node = info.parent;
  }
  std::reverse(moves.begin(), moves.end());
  return moves;
}

Move inverse_move(const Move& m) {
  return Move{m.kind == Move::Kind::Forward ? Move::Kind::Backward : Move::Kind::Forward,
              m.position,
              {}};
}

// Elementary-transformation path between canonical states, or none within budget.
struct RawPath {
  std::optional<std::vector<Move>> moves;
  std::size_t states = 0;
  bool exhausted = false;
};

RawPath bidirectional_bfs(const HurwitzSystem& start, const HurwitzSystem& goal,
                          const SearchBudget& budget) {
  RawPath result;
  if (start == goal) {
    result.moves = std::vector<Move>{};
    result.states = 1;
    return result;
  }
  Side sides[2];
  sides[0].frontier.push_back(&sides[0].nodes.emplace(start, NodeInfo{}).first->first);
  sides[1].frontier.push_back(&sides[1].nodes.emplace(goal, NodeInfo{}).first->first);
  const std::size_t n = start.size();

  auto total = [&] { return sides[0].nodes.size() + sides[1].nodes.size(); };

  while (!sides[0].frontier.empty() && !sides[1].frontier.empty()) {
    const int s = sides[0].frontier.size() <= sides[1].frontier.size() ? 0 : 1;
    Side& side = sides[s];
    const Side& other = sides[1 - s];
    std::vector<const HurwitzSystem*> next;
    for (const HurwitzSystem* state : side.frontier) {
      for (std::size_t pos = 1; pos < n; ++pos) {
        for (const Direction dir : {Direction::Forward, Direction::Backward}) {
          if (total() >= budget.max_states) {
            result.states = total();
            result.exhausted = true;
            return result;
          }
          HurwitzSystem child =
              canonicalize(elementary_transformation(*state, pos, dir), budget.scope).system;
          if (child.max_abs_entry() > budget.max_entry) continue;
          if (side.nodes.count(child)) continue;
          const Move::Kind kind =
              dir == Direction::Forward ? Move::Kind::Forward : Move::Kind::Backward;
          const auto inserted = side.nodes.emplace(std::move(child), NodeInfo{state, kind, pos});
          const HurwitzSystem* key = &inserted.first->first;
          next.push_back(key);
          const auto meet = other.nodes.find(*key);
          if (meet != other.nodes.end()) {
            std::vector<Move> a = path_from_root(sides[0].nodes, s == 0 ? key : &meet->first);
            std::vector<Move> b = path_from_root(sides[1].nodes, s == 1 ? key : &meet->first);
            for (auto it = b.rbegin(); it != b.rend(); ++it) a.push_back(inverse_move(*it));
            result.moves = std::move(a);
            result.states = total();
            return result;
          }
        }
      }
    }
    side.frontier = std::move(next);
  }
  result.states = total();
  return result;
}

}  // namespace

SearchResult bounded_equivalence_search(const HurwitzSystem& w1, const HurwitzSystem& w2,
                                        const SearchBudget& budget) {
  if (w1.size() != w2.size()) {
    throw InputError("systems of different lengths " + std::to_string(w1.size()) + " and " +
                     std::to_string(w2.size()) + " are never equivalent");
  }
  SearchResult result;
  if (w1 == w2) {
    result.moves = std::vector<Move>{};
    result.states_explored = 1;
    return result;
  }
  const CanonicalForm c1 = canonicalize(w1, budget.scope);
  const CanonicalForm c2 = canonicalize(w2, budget.scope);
  RawPath path = bidirectional_bfs(c1.system, c2.system, budget);
  result.states_explored = path.states;
  result.exhausted = path.exhausted;
  if (!path.moves) return result;

  std::vector<Move> moves = std::move(*path.moves);
  const HurwitzSystem reached = replay(w1, moves);
  const CanonicalForm cr = canonicalize(reached, budget.scope);
  const Sl2Matrix h = cr.conjugator * c2.conjugator.inverse();
  if (!h.is_plus_minus_identity()) moves.push_back(Move::conjugate(h));
  if (replay(w1, moves) != w2) {
    throw std::logic_error("search produced a move sequence that does not replay");
  }
  result.moves = std::move(moves);
  return result;
}

HurwitzSystem matsumoto_target(std::size_t length) {
  std::vector<Sl2Matrix> elements;
  for (std::size_t i = 0; i < length; ++i) {
    elements.push_back(generator(i % 2 == 0 ? Generator::X1 : Generator::X2));
  }
  return HurwitzSystem(std::move(elements));
}

SearchResult matsumoto_normalize(const HurwitzSystem& w, const SearchBudget& budget) {
  if (!total_monodromy(w).is_plus_minus_identity()) {
    throw InputError("total monodromy " + to_string(total_monodromy(w)) + " is not +-E");
  }
  SearchBudget plain = budget;
  plain.scope = ConjugationScope::None;
  return bounded_equivalence_search(w, matsumoto_target(w.size()), plain);
}

}  // namespace sblf
