#pragma once

#include "sblf/integer.hpp"
#include "sblf/pslword.hpp"
#include "sblf/sl2z.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sblf {

using ChartId = std::int64_t;

/// `interior` leaves the degree open; the numbered kinds pin it.
enum class VertexKind { Interior, Interior1, Interior6, Interior12, Boundary };

struct ChartVertex {
  ChartId id = 0;
  VertexKind kind = VertexKind::Interior;

  friend bool operator==(const ChartVertex&, const ChartVertex&) = default;
};

struct ChartEdge {
  ChartId id = 0;
  ChartId tail = 0;
  ChartId head = 0;
  int label = 1;

  friend bool operator==(const ChartEdge&, const ChartEdge&) = default;
};

struct Hoop {
  ChartId id = 0;
  int label = 1;

  friend bool operator==(const Hoop&, const Hoop&) = default;
};

/// Combinatorial map: rotations give the cyclic edge order at interior vertices and
/// `boundary` the cyclic order of vertices on the boundary circle.
struct Chart {
  std::map<ChartId, ChartVertex> vertices;
  std::map<ChartId, ChartEdge> edges;
  std::map<ChartId, Hoop> hoops;
  std::map<ChartId, std::vector<ChartId>> rotations;
  std::vector<ChartId> boundary;

  /// Edge ids with an endpoint at v, in id order.
  std::vector<ChartId> incident_edges(ChartId v) const;
  std::size_t degree(ChartId v) const { return incident_edges(v).size(); }

  friend bool operator==(const Chart&, const Chart&) = default;
};

/// Throws ParseError with line and column on malformed or dangling records.
Chart parse_chart(std::string_view text);
std::string serialize(const Chart& chart);
std::string to_string(VertexKind kind);

struct Violation {
  int condition = 0;
  std::string element;
  std::string message;

  std::string code() const { return "C" + std::to_string(condition); }
};

std::vector<Violation> validate(const Chart& chart);

struct BoundaryPoint {
  int label = 1;
  Sign sign = Sign::Plus;

  friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;
};

using BoundarySeq = std::vector<BoundaryPoint>;

/// Reads (label, sign) at each boundary vertex in boundary order. Throws InputError when a
/// boundary vertex does not have exactly one incident edge.
BoundarySeq boundary_sequence(const Chart& chart);

struct BoundaryBlock {
  std::size_t start = 0;   // index in the original sequence
  std::size_t length = 0;  // 1 or 6
};

struct BoundaryDecomposition {
  std::size_t rotation = 0;
  std::vector<BoundaryBlock> blocks;

  std::size_t singletons() const;
  std::size_t combs() const;
};

std::optional<BoundaryDecomposition> decompose_boundary(const BoundarySeq& seq);

struct Crossing {
  ChartId edge = 0;
  Sign sign = Sign::Plus;
};

using PathCrossing = std::vector<Crossing>;

/// Tokens `<id>+` or `<id>-`.
PathCrossing parse_path(std::string_view text);

Sl2Matrix intersection_matrix(const Chart& chart, const PathCrossing& path);
/// Throws InputError for an id that is neither an edge nor a hoop.
SignedElement intersection_word(const Chart& chart, const PathCrossing& path);

BoundarySeq parse_boundary_sequence(std::string_view text);
std::string to_string(const BoundarySeq& seq);

}  // namespace sblf
