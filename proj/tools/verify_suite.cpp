#include "verify_suite.hpp"

#include "fixtures.hpp"

#include <sblf/case_tables.hpp>
#include <sblf/chart.hpp>
#include <sblf/classify.hpp>
#include <sblf/errors.hpp>
#include <sblf/hurwitz.hpp>
#include <sblf/pslword.hpp>
#include <sblf/sl2z.hpp>

#include <algorithm>
#include <cstdio>
#include <iterator>
#include <random>
#include <set>
#include <sstream>

namespace sblf::cli {
namespace {

using sblf::to_string;

std::string two_digits(std::int64_t v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%02lld", static_cast<long long>(v));
  return buf;
}

std::string signed_power(Sign sign, const Integer& m) {
  return std::string(1, sign_char(sign)) + "X1^" + to_string(m);
}

Sl2Matrix signed_x1_power(Sign sign, const Integer& m) {
  const Sl2Matrix p = x1_power(m);
  return sign == Sign::Plus ? p : -p;
}

void check_products(Report& report) {
  for (int r = 0; r <= 50; ++r) {
    const Sl2Matrix w = total_monodromy(make_S(static_cast<std::size_t>(r)));
    report.add("01-s-product r=" + two_digits(r), "w(S_r)=X_1^r", w == x1_power(r),
               "w = " + to_string(w));
  }
  for (int s = 2; s <= 40; ++s) {
    const Sl2Matrix w = total_monodromy(make_T_s(s).expand());
    const Sign sign = s % 2 ? Sign::Plus : Sign::Minus;
    const Integer m = -5 * s + 6;
    report.add("01-t-product s=" + two_digits(s), "w(T_s)=(-1)^{s+1}X_1^{-5s+6}",
               w == signed_x1_power(sign, m), "expected " + signed_power(sign, m) + ", got " + to_string(w));
  }
  for (int s = 4; s <= 40; ++s) {
    const Sl2Matrix lhs = total_monodromy(make_T_s(s).expand());
    const Sl2Matrix rhs = x1_power(-5) * total_monodromy(make_T_s(s - 2).expand()) * x1_power(-5);
    report.add("02-t-recursion s=" + two_digits(s), "w(T_s)=X_1^{-5}w(T_{s-2})X_1^{-5}", lhs == rhs,
               to_string(lhs));
  }
}

struct LetterChoice {
  Sl2Matrix matrix;
  PslWord word;
};

std::vector<LetterChoice> letter_choices() {
  return {{generator(Generator::X1), x1_word()},
          {generator(Generator::X1).inverse(), word_inverse(x1_word())},
          {generator(Generator::X2), x2_word()},
          {generator(Generator::X2).inverse(), word_inverse(x2_word())}};
}

std::vector<int> random_letters(std::mt19937_64& rng, int max_length) {
  std::uniform_int_distribution<int> len(0, max_length);
  std::uniform_int_distribution<int> pick(0, 3);
  std::vector<int> out(static_cast<std::size_t>(len(rng)));
  for (int& x : out) x = pick(rng);
  return out;
}

PslWord random_word(std::mt19937_64& rng, int max_length) {
  const auto choices = letter_choices();
  PslWord w;
  for (int i : random_letters(rng, max_length)) w.append(choices[static_cast<std::size_t>(i)].word);
  return w;
}

void check_words(Report& report, std::mt19937_64& rng) {
  const auto choices = letter_choices();
  std::size_t roundtrip_failures = 0;
  std::size_t canonical_failures = 0;
  // (X1 X2)^6 and X1 X2 X1 X2^-1 X1^-1 X2^-1, as letter indices
  const std::vector<std::vector<int>> relators = {{0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2}, {0, 2, 0, 3, 1, 3}};
  for (int trial = 0; trial < 10000; ++trial) {
    const std::vector<int> letters = random_letters(rng, 30);
    Sl2Matrix m;
    PslWord direct;
    for (int i : letters) {
      m *= choices[static_cast<std::size_t>(i)].matrix;
      direct.append(choices[static_cast<std::size_t>(i)].word);
    }
    const SignedElement e = matrix_to_signed_word(m);
    if (evaluate(e) != m) ++roundtrip_failures;

    std::vector<int> padded = letters;
    const auto& rel = relators[static_cast<std::size_t>(trial % 2)];
    std::uniform_int_distribution<std::size_t> at(0, padded.size());
    padded.insert(padded.begin() + static_cast<std::ptrdiff_t>(at(rng)), rel.begin(), rel.end());
    PslWord other;
    for (int i : padded) other.append(choices[static_cast<std::size_t>(i)].word);
    if (other != direct || e.word != direct) ++canonical_failures;
  }
  report.add("03-word-roundtrip", "w(A)=+-[w]", roundtrip_failures == 0,
             "10000 random elements, " + std::to_string(roundtrip_failures) + " failures");
  report.add("03-word-canonical", "(X_1X_2)^6=E", canonical_failures == 0,
             "10000 relator insertions, " + std::to_string(canonical_failures) + " disagreements");

  std::size_t involution = 0;
  std::size_t anti = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const PslWord u = random_word(rng, 20);
    const PslWord v = random_word(rng, 20);
    if (t_map(t_map(u)) != u) ++involution;
    if (t_map(word_multiply(u, v)) != word_multiply(t_map(v), t_map(u))) ++anti;
  }
  report.add("04-t-involution", "t^2=id", involution == 0,
             "1000 random words, " + std::to_string(involution) + " failures");
  report.add("04-t-antihomomorphism", "t(uv)=t(v)t(u)", anti == 0,
             "1000 random pairs, " + std::to_string(anti) + " failures");
  report.add("04-t-x1", "t(x_1)=x_1", t_map(x1_word()) == x1_word(), "t(x1) = " + to_string(t_map(x1_word())));
  const PslWord expected = word_multiply(word_multiply(word_inverse(x1_word()), x2_word()), x1_word());
  report.add("04-t-x2", "t(x_2)=x_1^{-1}x_2x_1", t_map(x2_word()) == expected,
             "t(x2) = " + to_string(t_map(x2_word())));
}

std::string tuple_list(const std::vector<DifferenceTuple>& tuples) {
  std::string out = "{";
  for (std::size_t i = 0; i < tuples.size(); ++i) out += (i ? "," : "") + to_string(tuples[i]);
  return out + "}";
}

std::vector<DifferenceTuple> filtered(int s, std::int64_t bound) {
  return filter_irreducible(t_part_equation_solutions(s, bound));
}

void check_solutions(Report& report, const SuiteConfig& config) {
  const std::vector<std::vector<DifferenceTuple>> expected = {
      {{2}},
      {{3, 3}},
      {{3, 4, 3}, {4, 3, 4}},
      {{3, 4, 4, 3}, {3, 5, 3, 4}, {4, 3, 5, 3}}};
  std::vector<std::vector<DifferenceTuple>> at_bound;
  for (int s = 2; s <= 5; ++s) {
    at_bound.push_back(filtered(s, config.bound));
    const auto& want = expected[static_cast<std::size_t>(s - 2)];
    report.add("05-solutions s=" + two_digits(s), "irreducible solutions of w(T(n))=+-X_1^m",
               at_bound.back() == want,
               "bound " + std::to_string(config.bound) + ": " + tuple_list(at_bound.back()) + ", expected " +
                   tuple_list(want));
  }
  bool stable = true;
  for (int s = 2; s <= 5; ++s) {
    if (filtered(s, config.stability_bound) != at_bound[static_cast<std::size_t>(s - 2)]) stable = false;
  }
  report.add("05-stability", "solution sets independent of the bound", stable,
             "bounds " + std::to_string(config.bound) + " and " + std::to_string(config.stability_bound));

  const auto& five = at_bound[3];
  const auto& want5 = expected[3];
  std::vector<DifferenceTuple> extra;
  std::set_difference(five.begin(), five.end(), want5.begin(), want5.end(), std::back_inserter(extra));
  for (const DifferenceTuple& d : extra) {
    const bool reduced = reduces_to_t_s(d);
    report.add("05-extra " + to_string(d), "T(n) equivalent to T_s",
               reduced ? Status::Pass : Status::Inconclusive,
               reduced ? "equivalent to T_5 by elementary transformations and conjugation"
                       : "no equivalence to T_5 found within the recognition budget");
  }

  const auto raw = t_part_equation_solutions(3, config.bound);
  bool has11 = false, has33 = false;
  for (const auto& sol : raw) {
    has11 |= sol.differences == DifferenceTuple{1, 1};
    has33 |= sol.differences == DifferenceTuple{3, 3};
  }
  report.add("06-raw-s3", "unfiltered s=3 solutions", has11 && has33,
             std::to_string(raw.size()) + " raw solutions, (1,1) " + (has11 ? "present" : "missing") +
                 ", (3,3) " + (has33 ? "present" : "missing"));
  const auto witness = find_exclusion({1, 1});
  bool replay_ok = false;
  std::string detail = "no exclusion found";
  if (witness && witness->rule == ExclusionRule::UnitDifference) {
    const HurwitzSystem moved = replay(witness->realization, witness->moves);
    replay_ok = moved[0] == generator(Generator::X1) &&
                total_monodromy(moved) == total_monodromy(witness->realization);
    detail = std::to_string(witness->moves.size()) + " moves bring X1 to the front of " +
             to_string(realize({1, 1}));
  }
  report.add("06-unit-difference", "n_i-n_{i+1}=1 excluded", replay_ok, detail);
}

void check_curves(Report& report) {
  auto iterate = [](std::int64_t p0, int l) {
    Curve g(p0, 1);
    for (int j = 1; j <= l; ++j) g = apply_twist(Curve(2, 2 * j - 1), g);
    return g;
  };
  for (std::int64_t k = 3; k <= 12; ++k) {
    std::size_t checked = 0;
    bool ok = true;
    for (std::int64_t l = 1; l <= k - 3; ++l, ++checked) {
      const Curve want(4 * k - 10 - 4 * l, 4 * l * k - 4 * l * l - 10 * l + 1);
      ok &= iterate(4 * k - 10, static_cast<int>(l)) == want;
    }
    report.add("07-scc1 k=" + two_digits(k), "gamma_{4k-10-4l,4lk-4l^2-10l+1}", ok,
               std::to_string(checked) + " values of l");
    checked = 0;
    ok = true;
    for (std::int64_t l = 1; l <= k - 2; ++l, ++checked) {
      const Curve want(4 * k - 7 - 4 * l, 4 * l * k - 4 * l * l - 7 * l + 1);
      ok &= iterate(4 * k - 7, static_cast<int>(l)) == want;
    }
    report.add("07-scc2 k=" + two_digits(k), "gamma_{4k-7-4l,4lk-4l^2-7l+1}", ok,
               std::to_string(checked) + " values of l");
  }
  for (int s = 3; s <= 15; ++s) {
    const Sl2Matrix lhs = total_monodromy(lemma45_target(s));
    const Sl2Matrix rhs = total_monodromy(make_T_s(s).expand());
    const auto bl = as_plus_minus_x1_power(lhs);
    const auto br = as_plus_minus_x1_power(rhs);
    const bool ok = bl && br && *bl == *br;
    report.add("07-target-product s=" + two_digits(s), "w(T_{2,1}...T_{1,s-1}T_{1,-1})=w(T_s)", ok,
               "target " + (bl ? to_string(*bl) : to_string(lhs)) + ", T_s " + (br ? to_string(*br) : to_string(rhs)));
  }
}

std::string case_list(const std::vector<int>& cases) {
  std::string out = "(";
  for (std::size_t i = 0; i < cases.size(); ++i) out += (i ? "," : "") + std::to_string(cases[i]);
  return out + ")";
}

void check_case_tables(Report& report, const SuiteConfig& config) {
  const CaseTableReport result = verify_case_tables(config.case_n_min, config.case_n_max);
  const std::string range =
      "n in [" + std::to_string(config.case_n_min) + "," + std::to_string(config.case_n_max) + "]";
  for (const CaseIdentity& id : case_identities()) {
    std::size_t bad = 0;
    for (const CaseMismatch& m : result.mismatches) {
      if (m.table == id.table && std::find(id.cases.begin(), id.cases.end(), m.case_number) != id.cases.end()) {
        ++bad;
      }
    }
    report.add("08-case-" + std::to_string(id.table) + " " + case_list(id.cases), id.raw + " = " + id.simplified,
               bad == 0, range + ", " + std::to_string(bad) + " mismatches");
  }
  std::string listed;
  for (const auto& [table, c] : result.stated_disagreements) {
    listed += (listed.empty() ? "" : " ") + std::to_string(table) + ":(" + std::to_string(c) + ")";
  }
  report.add("08-printed-simplifications", "simplified forms as printed with the tables",
             result.stated_disagreements.empty(),
             listed.empty() ? "all printed forms agree" : "printed form differs from the raw word in " + listed);
}

std::string codes(const std::vector<Violation>& vs) {
  std::set<std::string> c;
  for (const Violation& v : vs) c.insert(v.code());
  std::string out;
  for (const std::string& x : c) out += (out.empty() ? "" : ",") + x;
  return out.empty() ? "none" : out;
}

void check_charts(Report& report) {
  const auto d = decompose_boundary(parse_boundary_sequence(fixtures::kExampleBoundarySequence));
  report.add("09-example-boundary", "((1,-1),(1,-1),(1,-1),(1,-1),(2,+1),...)",
             d && d->singletons() == 4 && d->combs() == 1,
             d ? std::to_string(d->singletons()) + " singletons, " + std::to_string(d->combs()) + " combs"
               : "no decomposition");
  const std::pair<const char*, std::pair<std::string_view, const char*>> cases[] = {
      {"09-invalid degree5", {fixtures::kDegreeFiveChart, "C1"}},
      {"09-invalid outward", {fixtures::kOutwardLeafChart, "C4"}},
      {"09-invalid boundary", {fixtures::kBadBoundaryChart, "C8"}},
      {"09-valid comb", {fixtures::kCombChart, "none"}}};
  for (const auto& [id, data] : cases) {
    const std::string got = codes(validate(parse_chart(data.first)));
    report.add(id, "chart conditions (1)-(8)", got == data.second,
               std::string("expected ") + data.second + ", got " + got);
  }
}

void check_names(Report& report, const SuiteConfig& config) {
  for (int r = 0; r <= 5; ++r) {
    std::size_t names = 0;
    bool chi_ok = true;
    bool definite = false;
    for (const ClassificationEntry& e : classify_sblf(r, config.bound)) {
      for (const ManifoldName& n : e.candidates) {
        ++names;
        chi_ok &= chi_of_name(n) == euler_characteristic(r);
        definite |= is_positive_definite_simply_connected(n);
      }
    }
    report.add("10-chi r=" + two_digits(r), "chi=r+2", chi_ok,
               std::to_string(names) + " names, chi " + std::to_string(euler_characteristic(r)));
    report.add("10-definite r=" + two_digits(r), "no positive definite #kCP2", !definite,
               definite ? "a sum of CP2 appears" : "none");
  }
}

void check_probes(Report& report, const SuiteConfig& config, std::mt19937_64& rng) {
  const NormalForm tilde{0, {10, 6, 1, -2, -6, -11}};
  const HurwitzSystem w = tilde.expand();
  const auto bc = is_sblf_compatible(w);
  report.add("11-t6-tilde product", "w(T~_6)=-X_1^{-24}",
             bc && bc->sign == Sign::Minus && bc->m == -24,
             bc ? to_string(*bc) : "not a +-X1 power");
  const SearchResult sr = bounded_equivalence_search(w, make_T_s(6).expand(), config.budget);
  report.add("11-t6-tilde equivalence", "T~_6 versus T_6", sr.moves ? Status::Pass : Status::Inconclusive,
             sr.moves ? std::to_string(sr.moves->size()) + " moves"
                      : "no equivalence within " + std::to_string(sr.states_explored) + " states");

  const HurwitzSystem target = matsumoto_target(12);
  std::uniform_int_distribution<std::size_t> pos(1, target.size() - 1);
  std::uniform_int_distribution<int> dir(0, 1);
  std::uniform_int_distribution<int> count(1, 6);
  for (int trial = 1; trial <= 8; ++trial) {
    HurwitzSystem scrambled = target;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
      scrambled = elementary_transformation(scrambled, pos(rng), dir(rng) ? Direction::Forward : Direction::Backward);
    }
    const SearchResult r = matsumoto_normalize(scrambled, config.budget);
    const bool ok = r.moves && replay(scrambled, *r.moves) == target;
    report.add("12-matsumoto trial=" + two_digits(trial), "(X_1X_2)^6=E", ok,
               std::to_string(n) + " scrambling moves, " +
                   (r.moves ? std::to_string(r.moves->size()) + " moves back" : std::string("not recovered")) +
                   ", " + std::to_string(r.states_explored) + " states");
  }
}

}  // namespace

Report verify_paper_suite(const SuiteConfig& config) {
  Report report;
  report.suite = "verify-paper";
  std::mt19937_64 rng(config.seed);
  check_products(report);
  check_words(report, rng);
  check_solutions(report, config);
  check_curves(report);
  check_case_tables(report, config);
  check_charts(report);
  check_names(report, config);
  check_probes(report, config, rng);
  report.sort();
  return report;
}

}  // namespace sblf::cli
