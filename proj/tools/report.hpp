#pragma once

#include <string>
#include <vector>

namespace sblf::cli {

enum class Status { Pass, Fail, Inconclusive };

std::string to_string(Status status);

struct ReportRow {
  std::string id;
  std::string anchor;
  Status status = Status::Pass;
  std::string detail;
};

struct Report {
  std::string suite;
  std::vector<ReportRow> rows;

  void add(std::string id, std::string anchor, Status status, std::string detail);
  void add(std::string id, std::string anchor, bool ok, std::string detail);
  /// Rows ordered by id.
  void sort();
  bool any_fail() const;
  std::size_t count(Status status) const;

  std::string render_text() const;
  /// One JSON object per line with fields id, anchor, status, detail.
  std::string render_machine() const;
};

}  // namespace sblf::cli
