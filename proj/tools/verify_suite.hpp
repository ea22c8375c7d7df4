#pragma once

#include "report.hpp"

#include <sblf/search.hpp>

#include <cstdint>

namespace sblf::cli {

struct SuiteConfig {
  std::int64_t bound = 25;
  std::int64_t stability_bound = 40;
  SearchBudget budget;
  std::uint64_t seed = 20240521;
  std::int64_t case_n_min = -10;
  std::int64_t case_n_max = 10;
};

/// Replays every tabulated identity and search probe; rows sorted by id.
Report verify_paper_suite(const SuiteConfig& config);

}  // namespace sblf::cli
