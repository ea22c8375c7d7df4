#pragma once

#include "sblf/hurwitz.hpp"
#include "sblf/integer.hpp"
#include "sblf/pslword.hpp"
#include "sblf/search.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sblf {

/// (n_1 - n_2, ..., n_{s-1} - n_s)
using DifferenceTuple = std::vector<std::int64_t>;

struct EquationSolution {
  DifferenceTuple differences;
  Integer power;

  friend bool operator==(const EquationSolution&, const EquationSolution&) = default;
};

/// x2 x1^{d_1} x2 ... x1^{d_{s-1}} x2
PslWord t_part_word(const DifferenceTuple& d);

/// T(n) with n_s = 0 realizing the differences.
NormalForm realize(const DifferenceTuple& d, std::size_t k = 0);

DifferenceTuple differences_of(std::span<const std::int64_t> twists);

/// All tuples of length s - 1 with entries in [-bound, bound] whose word is a power x1^n,
/// sorted lexicographically.
std::vector<EquationSolution> t_part_equation_solutions(int s, std::int64_t bound);

enum class ExclusionRule { UnitDifference, SplitPair, SplitTriple, SplitQuadruple };

struct ExclusionWitness {
  ExclusionRule rule;
  std::size_t window_start = 0;   // 1-based index of the first difference in the window
  std::size_t window_length = 0;  // number of differences in the window
  HurwitzSystem realization;
  std::vector<Move> moves;                    // unit-difference rule: X1 brought to the front
  std::optional<BoundaryClass> window_product;  // splitting rules: product of the window
};

std::optional<ExclusionWitness> find_exclusion(const DifferenceTuple& d);
std::vector<DifferenceTuple> filter_irreducible(std::span<const EquationSolution> solutions);
std::string to_string(ExclusionRule rule);

enum class Atom { S4, S1xS3, L, LPrime, S2xS2, S2TwistedS2, CP2, CP2bar };

int atom_chi(Atom atom);
std::string atom_name(Atom atom);

/// Connected sum of atoms with multiplicities; the empty sum is S4.
class ManifoldName {
 public:
  ManifoldName() = default;

  ManifoldName& add(Atom atom, int count = 1);
  int multiplicity(Atom atom) const;
  int pieces() const;
  const std::map<Atom, int>& atoms() const { return atoms_; }

  friend bool operator==(const ManifoldName&, const ManifoldName&) = default;
  friend auto operator<=>(const ManifoldName&, const ManifoldName&) = default;

 private:
  std::map<Atom, int> atoms_;
};

int chi_of_name(const ManifoldName& name);
int euler_characteristic(int r);
/// True for nonempty sums of CP2 alone.
bool is_positive_definite_simply_connected(const ManifoldName& name);
std::string to_string(const ManifoldName& name);
ManifoldName parse_manifold_name(std::string_view text);

struct ClassificationEntry {
  int r = 0;
  std::size_t k = 0;
  std::vector<DifferenceTuple> blocks;
  std::vector<ManifoldName> candidates;
  bool identified = true;
  bool gluing_undetermined = false;

  NormalForm representative() const;
};

/// Budget for certifying that a difference tuple is equivalent to T_s.
SearchBudget recognition_budget();

/// True when T(d) is equivalent to T_s, s = |d| + 1, under the given budget.
bool reduces_to_t_s(const DifferenceTuple& d, const SearchBudget& budget = recognition_budget());

std::optional<std::vector<ManifoldName>> identify_manifold(const NormalForm& nf);

/// Throws Unsupported for r > 5 and InputError for r < 0.
std::vector<ClassificationEntry> classify_sblf(int r, std::int64_t bound);

std::string to_string(const DifferenceTuple& d);

}  // namespace sblf
