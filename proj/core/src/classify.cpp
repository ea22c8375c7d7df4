#include "sblf/classify.hpp"

#include "sblf/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

namespace sblf {

PslWord t_part_word(const DifferenceTuple& d) {
  PslWord w = x2_word();
  for (std::int64_t di : d) {
    w.append(x1_power_word(Integer(di)));
    w.append(x2_word());
  }
  return w;
}

NormalForm realize(const DifferenceTuple& d, std::size_t k) {
  NormalForm nf;
  nf.k = k;
  nf.twists.assign(d.size() + 1, 0);
  for (std::size_t i = d.size(); i-- > 0;) nf.twists[i] = nf.twists[i + 1] + d[i];
  return nf;
}

DifferenceTuple differences_of(std::span<const std::int64_t> twists) {
  DifferenceTuple d;
  for (std::size_t i = 0; i + 1 < twists.size(); ++i) d.push_back(twists[i] - twists[i + 1]);
  return d;
}

std::vector<EquationSolution> t_part_equation_solutions(int s, std::int64_t bound) {
  if (s < 2) throw InputError("the T-part equation needs s >= 2");
  if (bound < 1) throw InputError("the search bound must be at least 1");
  const Sl2Matrix x2 = generator(Generator::X2);
  std::vector<EquationSolution> out;
  DifferenceTuple prefix;

  // The last difference is forced: P X1^d X2 has upper-right entry q - p - q d for P = [[p,q],..].
  std::function<void(const Sl2Matrix&)> extend = [&](const Sl2Matrix& p) {
    if (prefix.size() + 1 == static_cast<std::size_t>(s - 1)) {
      const Integer& a = p.a();
      const Integer& b = p.b();
      if (b == 0) return;
      const Integer numerator = b - a;
      if (!mpz_divisible_p(numerator.get_mpz_t(), b.get_mpz_t())) return;
      const Integer d = numerator / b;
      if (abs(d) > bound) return;
      DifferenceTuple tuple = prefix;
      tuple.push_back(d.get_si());
      const auto power = as_x1_power_psl(t_part_word(tuple));
      if (power) out.push_back({std::move(tuple), *power});
      return;
    }
    for (std::int64_t d = -bound; d <= bound; ++d) {
      prefix.push_back(d);
      extend(p * x1_power(d) * x2);
      prefix.pop_back();
    }
  };
  extend(x2);
  std::sort(out.begin(), out.end(), [](const EquationSolution& l, const EquationSolution& r) {
    return l.differences < r.differences;
  });
  return out;
}

std::string to_string(ExclusionRule rule) {
  switch (rule) {
    case ExclusionRule::UnitDifference: return "unit-difference";
    case ExclusionRule::SplitPair: return "split-T2";
    case ExclusionRule::SplitTriple: return "split-T3";
    case ExclusionRule::SplitQuadruple: return "split-T4";
  }
  return "?";
}

namespace {

bool window_matches(const DifferenceTuple& d, std::size_t start,
                    std::initializer_list<std::int64_t> pattern) {
  if (start + pattern.size() > d.size()) return false;
  return std::equal(pattern.begin(), pattern.end(), d.begin() + static_cast<long>(start));
}

}  // namespace

std::optional<ExclusionWitness> find_exclusion(const DifferenceTuple& d) {
  const HurwitzSystem system = realize(d).expand();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] != 1) continue;
    ExclusionWitness w{ExclusionRule::UnitDifference, i + 1, 1, system, {}, std::nullopt};
    w.moves.push_back(Move::backward(i + 1));
    for (std::size_t j = i; j >= 1; --j) w.moves.push_back(Move::forward(j));
    return w;
  }
  struct Pattern {
    ExclusionRule rule;
    std::initializer_list<std::int64_t> values;
  };
  static const Pattern patterns[] = {
      {ExclusionRule::SplitPair, {2}},
      {ExclusionRule::SplitTriple, {3, 3}},
      {ExclusionRule::SplitQuadruple, {3, 4, 3}},
      {ExclusionRule::SplitQuadruple, {4, 3, 4}},
  };
  for (const Pattern& p : patterns) {
    if (p.values.size() >= d.size()) continue;
    for (std::size_t start = 0; start + p.values.size() <= d.size(); ++start) {
      if (!window_matches(d, start, p.values)) continue;
      Sl2Matrix product;
      for (std::size_t e = start; e <= start + p.values.size(); ++e) product *= system[e];
      return ExclusionWitness{p.rule,   start + 1, p.values.size(), system, {},
                              as_plus_minus_x1_power(product)};
    }
  }
  return std::nullopt;
}

std::vector<DifferenceTuple> filter_irreducible(std::span<const EquationSolution> solutions) {
  std::set<DifferenceTuple> kept;
  for (const EquationSolution& s : solutions) {
    if (!find_exclusion(s.differences)) kept.insert(s.differences);
  }
  return {kept.begin(), kept.end()};
}

int atom_chi(Atom atom) {
  switch (atom) {
    case Atom::S4: return 2;
    case Atom::S1xS3: return 0;
    case Atom::L: return 2;
    case Atom::LPrime: return 2;
    case Atom::S2xS2: return 4;
    case Atom::S2TwistedS2: return 4;
    case Atom::CP2: return 3;
    case Atom::CP2bar: return 3;
  }
  return 0;
}

std::string atom_name(Atom atom) {
  switch (atom) {
    case Atom::S4: return "S4";
    case Atom::S1xS3: return "S1xS3";
    case Atom::L: return "L(n)";
    case Atom::LPrime: return "L'(n)";
    case Atom::S2xS2: return "S2xS2";
    case Atom::S2TwistedS2: return "S2~S2";
    case Atom::CP2: return "CP2";
    case Atom::CP2bar: return "CP2bar";
  }
  return "?";
}

ManifoldName& ManifoldName::add(Atom atom, int count) {
  if (count < 0) throw InputError("negative multiplicity");
  if (count == 0) return *this;
  if (atom == Atom::S4) {
    if (atoms_.empty()) atoms_[Atom::S4] = 1;
    return *this;
  }
  atoms_.erase(Atom::S4);
  atoms_[atom] += count;
  return *this;
}

int ManifoldName::multiplicity(Atom atom) const {
  const auto it = atoms_.find(atom);
  return it == atoms_.end() ? 0 : it->second;
}

int ManifoldName::pieces() const {
  int total = 0;
  for (const auto& [atom, count] : atoms_) total += count;
  return total;
}

int chi_of_name(const ManifoldName& name) {
  if (name.pieces() == 0) return atom_chi(Atom::S4);
  int chi = 0;
  for (const auto& [atom, count] : name.atoms()) chi += count * atom_chi(atom);
  return chi - 2 * (name.pieces() - 1);
}

int euler_characteristic(int r) { return r + 2; }

bool is_positive_definite_simply_connected(const ManifoldName& name) {
  return name.multiplicity(Atom::CP2) > 0 && name.pieces() == name.multiplicity(Atom::CP2);
}

std::string to_string(const ManifoldName& name) {
  if (name.pieces() == 0) return atom_name(Atom::S4);
  std::string out;
  for (const auto& [atom, count] : name.atoms()) {
    if (!out.empty()) out += " # ";
    if (count > 1) out += std::to_string(count);
    out += atom_name(atom);
  }
  return out;
}

ManifoldName parse_manifold_name(std::string_view text) {
  static const Atom all[] = {Atom::S4,    Atom::S1xS3,       Atom::L,   Atom::LPrime,
                             Atom::S2xS2, Atom::S2TwistedS2, Atom::CP2, Atom::CP2bar};
  ManifoldName name;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('#', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view term = text.substr(start, end - start);
    while (!term.empty() && std::isspace(static_cast<unsigned char>(term.front()))) term.remove_prefix(1);
    while (!term.empty() && std::isspace(static_cast<unsigned char>(term.back()))) term.remove_suffix(1);
    if (!term.empty()) {
      std::size_t digits = 0;
      while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits]))) ++digits;
      const int count = digits ? std::stoi(std::string(term.substr(0, digits))) : 1;
      term.remove_prefix(digits);
      while (!term.empty() && std::isspace(static_cast<unsigned char>(term.front()))) term.remove_prefix(1);
      bool found = false;
      for (Atom a : all) {
        if (term == atom_name(a) || (a == Atom::L && term == "L") ||
            (a == Atom::LPrime && term == "L'")) {
          name.add(a, count);
          found = true;
          break;
        }
      }
      if (!found) throw InputError("unknown manifold atom '" + std::string(term) + "'");
    }
    start = end + 1;
  }
  return name;
}

NormalForm ClassificationEntry::representative() const {
  NormalForm nf;
  nf.k = k;
  for (const DifferenceTuple& b : blocks) {
    const NormalForm part = realize(b);
    nf.twists.insert(nf.twists.end(), part.twists.begin(), part.twists.end());
  }
  return nf;
}

SearchBudget recognition_budget() {
  SearchBudget budget;
  budget.max_states = 20000;
  return budget;
}

bool reduces_to_t_s(const DifferenceTuple& d, const SearchBudget& budget) {
  const int s = static_cast<int>(d.size()) + 1;
  if (s < 2) return false;
  const HurwitzSystem system = realize(d).expand();
  if (!is_sblf_compatible(system)) return false;
  return bounded_equivalence_search(system, make_T_s(s).expand(), budget).moves.has_value();
}

namespace {

std::vector<ManifoldName> s_only_names(std::size_t k) {
  const int kk = static_cast<int>(k);
  std::vector<ManifoldName> names;
  names.push_back(ManifoldName().add(Atom::CP2bar, kk));
  names.push_back(ManifoldName().add(Atom::L).add(Atom::CP2bar, kk));
  names.push_back(ManifoldName().add(Atom::LPrime).add(Atom::CP2bar, kk));
  names.push_back(ManifoldName().add(Atom::S1xS3).add(Atom::S2xS2).add(Atom::CP2bar, kk));
  names.push_back(ManifoldName().add(Atom::S1xS3).add(Atom::S2TwistedS2).add(Atom::CP2bar, kk));
  std::sort(names.begin(), names.end());
  return names;
}

// j blocks T_{s_i} with s = sum s_i, preceded by k copies of X1.
std::vector<ManifoldName> block_names(std::size_t k, std::size_t blocks, std::size_t s) {
  std::vector<ManifoldName> names;
  for (std::size_t twisted = 0; twisted <= blocks; ++twisted) {
    ManifoldName n;
    n.add(Atom::S2xS2, static_cast<int>(blocks - twisted));
    n.add(Atom::S2TwistedS2, static_cast<int>(twisted));
    n.add(Atom::CP2, static_cast<int>(s - 2 * blocks));
    n.add(Atom::CP2bar, static_cast<int>(k));
    names.push_back(n);
  }
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace

std::optional<std::vector<ManifoldName>> identify_manifold(const NormalForm& nf) {
  if (nf.twists.empty()) return s_only_names(nf.k);
  if (!is_sblf_compatible(nf.expand())) return std::nullopt;
  const DifferenceTuple d = differences_of(nf.twists);
  const std::size_t s = nf.twists.size();

  // Split the twists into consecutive blocks, each equivalent to some T_{s_i}; the difference
  // between adjacent blocks is unconstrained.
  std::map<std::pair<std::size_t, std::size_t>, bool> cache;
  auto recognized = [&](std::size_t first, std::size_t last) {
    const auto key = std::make_pair(first, last);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const DifferenceTuple part(d.begin() + static_cast<long>(first),
                               d.begin() + static_cast<long>(last));
    return cache[key] = reduces_to_t_s(part);
  };
  std::set<std::size_t> block_counts;
  std::function<void(std::size_t, std::size_t)> split = [&](std::size_t start, std::size_t count) {
    if (start == s) {
      block_counts.insert(count);
      return;
    }
    for (std::size_t end = start + 2; end <= s; ++end) {
      if (recognized(start, end - 1)) split(end, count + 1);
    }
  };
  split(0, 0);
  if (block_counts.empty()) return std::nullopt;
  std::set<ManifoldName> names;
  for (std::size_t j : block_counts) {
    for (const ManifoldName& n : block_names(nf.k, j, s)) names.insert(n);
  }
  return std::vector<ManifoldName>(names.begin(), names.end());
}

std::vector<ClassificationEntry> classify_sblf(int r, std::int64_t bound) {
  if (r < 0) throw InputError("r must be nonnegative");
  if (r > 5) throw Unsupported("classification is only available for r <= 5");
  std::vector<ClassificationEntry> entries;
  {
    ClassificationEntry e;
    e.r = r;
    e.k = static_cast<std::size_t>(r);
    e.candidates = s_only_names(e.k);
    e.gluing_undetermined = true;
    entries.push_back(std::move(e));
  }
  std::map<int, std::vector<DifferenceTuple>> irreducible;
  for (int s = 2; s <= r; ++s) {
    irreducible[s] = filter_irreducible(t_part_equation_solutions(s, bound));
  }
  std::map<DifferenceTuple, bool> recognized;
  auto is_recognized = [&](const DifferenceTuple& t) {
    auto it = recognized.find(t);
    if (it != recognized.end()) return it->second;
    return recognized[t] = reduces_to_t_s(t);
  };

  std::vector<int> parts;
  std::vector<DifferenceTuple> chosen;
  std::function<void(int, int)> choose_tuples;
  std::function<void(int)> compose = [&](int remaining) {
    if (remaining == 0 && !parts.empty()) {
      choose_tuples(0, 0);
      return;
    }
    for (int part = 2; part <= remaining; ++part) {
      parts.push_back(part);
      compose(remaining - part);
      parts.pop_back();
    }
  };
  choose_tuples = [&](int index, int) {
    if (static_cast<std::size_t>(index) == parts.size()) {
      ClassificationEntry e;
      e.r = r;
      int s = 0;
      for (int p : parts) s += p;
      e.k = static_cast<std::size_t>(r - s);
      e.blocks = chosen;
      e.identified = std::all_of(chosen.begin(), chosen.end(), is_recognized);
      if (e.identified) e.candidates = block_names(e.k, parts.size(), static_cast<std::size_t>(s));
      e.gluing_undetermined = e.candidates.size() > 1;
      entries.push_back(std::move(e));
      return;
    }
    for (const DifferenceTuple& t : irreducible[parts[index]]) {
      chosen.push_back(t);
      choose_tuples(index + 1, 0);
      chosen.pop_back();
    }
  };
  for (int s = 2; s <= r; ++s) compose(s);
  return entries;
}

std::string to_string(const DifferenceTuple& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(d[i]);
  }
  return out + ")";
}

}  // namespace sblf
