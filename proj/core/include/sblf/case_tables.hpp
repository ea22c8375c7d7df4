#pragma once

#include "sblf/sl2z.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sblf {

/// X1 or X2 raised to alpha*n + beta.
struct AffineLetter {
  int generator = 1;
  std::int64_t alpha = 0;
  std::int64_t beta = 1;
};

/// Space separated factors such as `X1`, `X2^-1`, `X1^n`, `X1^(n+1)`, `X1^(-n-1)`.
std::vector<AffineLetter> parse_affine_word(std::string_view text);
Sl2Matrix evaluate_affine_word(const std::vector<AffineLetter>& word, std::int64_t n);

struct CaseIdentity {
  int table = 24;           // 24 or 12
  std::vector<int> cases;   // case numbers sharing the raw word
  std::string raw;
  std::string simplified;        // verified simplification
  std::string stated_simplified;  // simplification as printed alongside the tables
};

const std::vector<CaseIdentity>& case_identities();

struct CaseMismatch {
  int table;
  int case_number;
  std::int64_t n;
  std::string expected;
  std::string actual;
};

struct CaseTableReport {
  std::size_t identities_checked = 0;
  std::size_t cases_covered = 0;
  std::vector<CaseMismatch> mismatches;
  /// Cases whose printed simplification disagrees with the raw word for some n in range.
  std::vector<std::pair<int, int>> stated_disagreements;

  bool ok() const { return mismatches.empty(); }
};

CaseTableReport verify_case_tables(std::int64_t n_min, std::int64_t n_max);

}  // namespace sblf
