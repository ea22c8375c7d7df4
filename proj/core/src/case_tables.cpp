#include "sblf/case_tables.hpp"

#include "sblf/errors.hpp"
#include "sblf/integer.hpp"

#include <cctype>
#include <sstream>

namespace sblf {

namespace {

// Accepts an optional sign, integers, and at most one `n` term: n+1, -n-1, -n+1, 2, -1.
AffineLetter parse_exponent(int gen, std::string_view e, const std::string& token) {
  AffineLetter letter{gen, 0, 0};
  std::size_t i = 0;
  bool any = false;
  while (i < e.size()) {
    int sign = 1;
    if (e[i] == '+' || e[i] == '-') {
      sign = e[i] == '-' ? -1 : 1;
      ++i;
    }
    std::size_t start = i;
    while (i < e.size() && std::isdigit(static_cast<unsigned char>(e[i]))) ++i;
    const bool has_digits = i > start;
    const std::int64_t coef = has_digits ? std::stoll(std::string(e.substr(start, i - start))) : 1;
    if (i < e.size() && e[i] == 'n') {
      letter.alpha += sign * coef;
      ++i;
    } else if (has_digits) {
      letter.beta += sign * coef;
    } else {
      throw InputError("malformed exponent in '" + token + "'");
    }
    any = true;
  }
  if (!any) throw InputError("empty exponent in '" + token + "'");
  return letter;
}

}  // namespace

std::vector<AffineLetter> parse_affine_word(std::string_view text) {
  std::vector<AffineLetter> word;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token.size() < 2 || token[0] != 'X' || (token[1] != '1' && token[1] != '2')) {
      throw InputError("unknown factor '" + token + "'");
    }
    const int gen = token[1] - '0';
    if (token.size() == 2) {
      word.push_back({gen, 0, 1});
      continue;
    }
    if (token[2] != '^') throw InputError("unknown factor '" + token + "'");
    std::string_view e = std::string_view(token).substr(3);
    if (!e.empty() && e.front() == '(' && e.back() == ')') e = e.substr(1, e.size() - 2);
    word.push_back(parse_exponent(gen, e, token));
  }
  return word;
}

Sl2Matrix evaluate_affine_word(const std::vector<AffineLetter>& word, std::int64_t n) {
  Sl2Matrix product;
  for (const AffineLetter& l : word) {
    const Integer e = Integer(l.alpha) * n + l.beta;
    product *= l.generator == 1 ? x1_power(e) : x2_power(e);
  }
  return product;
}

const std::vector<CaseIdentity>& case_identities() {
  static const std::string up = "X1^(n+1) X2 X1^(-n-1)";
  static const std::string same = "X1^n X2 X1^-n";
  static const std::string down = "X1^(n-1) X2 X1^(-n+1)";
  static const std::string same_stated = "X1^n X2 X1^n";
  static const std::vector<CaseIdentity> table = {
      {24, {1, 2}, "X1^(n+1) X2 X1^(-n-1)", up, up},
      {24, {3, 4}, "X1^(n+1) X2 X1 X2 X1^-1 X2^-1 X1^(-n-1)", "X1", "X1"},
      {24, {5, 6}, "X1^(n+1) X2 X1 X2 X1 X2 X1^-1 X2^-1 X1^-1 X2^-1 X1^(-n-1)", same, down},
      {24, {7}, "X1^n X2 X1^-n", same, same_stated},
      {24, {8, 9}, "X1^n X2 X1 X2 X1^-1 X2^-1 X1^-n", "X1", "X1"},
      {24, {10, 11}, "X1^n X2 X1 X2 X1 X2 X1^-1 X2^-1 X1^-1 X2^-1 X1^-n", down, down},
      {24, {12}, "X1^n X2 X1 X2 X1 X2 X1 X2 X1^-1 X2^-1 X1^-1 X2^-1 X1^-1 X2^-1 X1^-n", same,
       same_stated},
      {24, {13, 14}, "X1^(n-1) X2 X1^(-n+1)", down, down},
      {24, {15, 16}, "X1^(n-1) X2^-1 X1^-1 X2 X1 X2 X1^(-n+1)", "X1", "X1"},
      {24, {17, 18}, "X1^(n-1) X2^-1 X1^-1 X2^-1 X1^-1 X2 X1 X2 X1 X2 X1^(-n+1)", same,
       same_stated},
      {24, {19}, "X1^n X2 X1^-n", same, same_stated},
      {24, {20, 21}, "X1^n X2^-1 X1^-1 X2 X1 X2 X1^-n", "X1", "X1"},
      {24, {22, 23}, "X1^n X2^-1 X1^-1 X2^-1 X1^-1 X2 X1 X2 X1 X2 X1^-n", up, up},
      {24, {24}, "X1^n X2^-1 X1^-1 X2^-1 X1^-1 X2^-1 X1^-1 X2 X1 X2 X1 X2 X1 X2 X1^-n", same,
       same_stated},
      {12, {1}, "X1", "X1", "X1"},
      {12, {2}, "X1^(n+1) X2 X1^(-n-1)", up, up},
      {12, {3}, "X1^(n+1) X2 X1 X2^-1 X1^(-n-1)", same, same},
      {12, {4}, "X1^(n+1) X2 X1 X2 X1^-1 X2^-1 X1^(-n-1)", "X1", "X1"},
      {12, {5}, "X1^(n+1) X2 X1 X2 X1 X2^-1 X1^-1 X2^-1 X1^(-n-1)", up, up},
      {12, {6}, "X1^(n+1) X2 X1 X2 X1 X2 X1^-1 X2^-1 X1^-1 X2^-1 X1^(-n-1)", same, same},
      {12, {7}, "X1^n X2 X1^-n", same, same},
      {12, {8}, "X1^n X2 X1 X2^-1 X1^-n", down, down},
      {12, {9}, "X1^n X2 X1 X2 X1^-1 X2^-1 X1^-n", "X1", "X1"},
      {12, {10}, "X1^n X2 X1 X2 X1 X2^-1 X1^-1 X2^-1 X1^-n", same, same},
      {12, {11}, "X1^n X2 X1 X2 X1 X2 X1^-1 X2^-1 X1^-1 X2^-1 X1^-n", down, down},
      {12, {12}, "X1^n X2 X1 X2 X1 X2 X1 X2^-1 X1^-1 X2^-1 X1^-1 X2^-1 X1^-n", "X1", "X1"},
  };
  return table;
}

CaseTableReport verify_case_tables(std::int64_t n_min, std::int64_t n_max) {
  if (n_min > n_max) throw InputError("empty n range");
  CaseTableReport report;
  for (const CaseIdentity& id : case_identities()) {
    const auto raw = parse_affine_word(id.raw);
    const auto simplified = parse_affine_word(id.simplified);
    const auto stated = parse_affine_word(id.stated_simplified);
    bool stated_ok = true;
    for (std::int64_t n = n_min; n <= n_max; ++n) {
      const Sl2Matrix lhs = evaluate_affine_word(raw, n);
      const Sl2Matrix rhs = evaluate_affine_word(simplified, n);
      report.identities_checked += id.cases.size();
      if (lhs != rhs) {
        for (int c : id.cases) {
          report.mismatches.push_back({id.table, c, n, to_string(rhs), to_string(lhs)});
        }
      }
      if (lhs != evaluate_affine_word(stated, n)) stated_ok = false;
    }
    report.cases_covered += id.cases.size();
    if (!stated_ok) {
      for (int c : id.cases) report.stated_disagreements.emplace_back(id.table, c);
    }
  }
  return report;
}

}  // namespace sblf
