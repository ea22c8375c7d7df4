#include "report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace sblf::cli {

std::string to_string(Status status) {
  switch (status) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

void Report::add(std::string id, std::string anchor, Status status, std::string detail) {
  rows.push_back({std::move(id), std::move(anchor), status, std::move(detail)});
}

void Report::add(std::string id, std::string anchor, bool ok, std::string detail) {
  add(std::move(id), std::move(anchor), ok ? Status::Pass : Status::Fail, std::move(detail));
}

void Report::sort() {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ReportRow& l, const ReportRow& r) { return l.id < r.id; });
}

bool Report::any_fail() const { return count(Status::Fail) > 0; }

std::size_t Report::count(Status status) const {
  return static_cast<std::size_t>(std::count_if(
      rows.begin(), rows.end(), [status](const ReportRow& r) { return r.status == status; }));
}

std::string Report::render_text() const {
  std::size_t id_width = 2;
  for (const ReportRow& r : rows) id_width = std::max(id_width, r.id.size());
  std::ostringstream out;
  for (const ReportRow& r : rows) {
    std::string status = to_string(r.status);
    out << status << std::string(13 - status.size(), ' ') << r.id
        << std::string(id_width - r.id.size() + 2, ' ') << r.detail << '\n';
  }
  out << suite << ": " << count(Status::Pass) << " pass, " << count(Status::Fail) << " fail, "
      << count(Status::Inconclusive) << " inconclusive\n";
  return out.str();
}

std::string Report::render_machine() const {
  std::ostringstream out;
  for (const ReportRow& r : rows) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["anchor"] = r.anchor;
    j["status"] = to_string(r.status);
    j["detail"] = r.detail;
    out << j.dump() << '\n';
  }
  return out.str();
}

}  // namespace sblf::cli
