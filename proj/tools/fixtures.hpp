#pragma once

#include <string_view>

namespace sblf::fixtures {

/// Valid chart: a degree-12 vertex fed from twelve boundary vertices, a leaf,
/// a boundary-to-boundary edge and a hoop.
extern const std::string_view kCombChart;
/// Two degree-6 vertices joined by six edges; no boundary.
extern const std::string_view kHexagonPairChart;
/// Interior vertex of degree 5.
extern const std::string_view kDegreeFiveChart;
/// Interior degree-1 vertex whose edge points outward.
extern const std::string_view kOutwardLeafChart;
/// A lone 2-labeled boundary vertex.
extern const std::string_view kBadBoundaryChart;

/// ((1,-1)^4, (2,+1),(1,+1),(2,+1),(1,+1),(2,+1),(1,+1))
extern const std::string_view kExampleBoundarySequence;

}  // namespace sblf::fixtures
