#include "sblf/chart.hpp"

#include "sblf/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace sblf {

std::vector<ChartId> Chart::incident_edges(ChartId v) const {
  std::vector<ChartId> out;
  for (const auto& [id, e] : edges) {
    if (e.tail == v || e.head == v) out.push_back(id);
  }
  return out;
}

std::string to_string(VertexKind kind) {
  switch (kind) {
    case VertexKind::Interior: return "interior";
    case VertexKind::Interior1: return "interior-1";
    case VertexKind::Interior6: return "interior-6";
    case VertexKind::Interior12: return "interior-12";
    case VertexKind::Boundary: return "boundary";
  }
  return "?";
}

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#')
      ++i;
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

struct Where {
  std::size_t line;
  std::size_t column;
};

class ChartParser {
 public:
  Chart parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      record(line_no, tokenize(line));
    }
    resolve();
    return std::move(chart_);
  }

 private:
  [[noreturn]] static void fail(Where at, const std::string& message) {
    throw ParseError(at.line, at.column, message);
  }

  static ChartId id_at(std::size_t line, const Token& t) {
    try {
      std::int64_t value = 0;
      if (!fits_int64(parse_integer(t.text), value)) fail({line, t.column}, "id out of range");
      return value;
    } catch (const ParseError&) {
      throw;
    } catch (const InputError&) {
      fail({line, t.column}, "expected an integer, got '" + t.text + "'");
    }
  }

  void expect_count(std::size_t line, const std::vector<Token>& t, std::size_t n,
                    const char* usage) {
    if (t.size() != n) {
      const std::size_t col = t.size() > n ? t[n].column : t.back().column + t.back().text.size();
      fail({line, col}, std::string("malformed record, expected `") + usage + "`");
    }
  }

  void record(std::size_t line, const std::vector<Token>& t) {
    if (t.empty()) return;
    const std::string& kind = t[0].text;
    if (kind == "vertex") {
      expect_count(line, t, 3, "vertex <id> <kind>");
      ChartVertex v{id_at(line, t[1]), VertexKind::Interior};
      static const std::pair<const char*, VertexKind> kinds[] = {
          {"interior", VertexKind::Interior},     {"interior-1", VertexKind::Interior1},
          {"interior-6", VertexKind::Interior6},  {"interior-12", VertexKind::Interior12},
          {"boundary", VertexKind::Boundary}};
      bool known = false;
      for (const auto& [name, k] : kinds) {
        if (t[2].text == name) {
          v.kind = k;
          known = true;
        }
      }
      if (!known) fail({line, t[2].column}, "unknown vertex kind '" + t[2].text + "'");
      if (!chart_.vertices.emplace(v.id, v).second)
        fail({line, t[1].column}, "duplicate vertex id " + t[1].text);
    } else if (kind == "edge") {
      expect_count(line, t, 5, "edge <id> <tail> <head> <label>");
      ChartEdge e{id_at(line, t[1]), id_at(line, t[2]), id_at(line, t[3]), 0};
      const ChartId label = id_at(line, t[4]);
      if (label < -1000 || label > 1000) fail({line, t[4].column}, "label out of range");
      e.label = static_cast<int>(label);
      if (e.tail == e.head) fail({line, t[3].column}, "edge " + t[1].text + " is a loop");
      claim_crossable(line, t[1], e.id);
      chart_.edges.emplace(e.id, e);
      endpoints_[e.id] = {{line, t[2].column}, {line, t[3].column}};
    } else if (kind == "hoop") {
      expect_count(line, t, 3, "hoop <id> <label>");
      Hoop h{id_at(line, t[1]), 0};
      const ChartId label = id_at(line, t[2]);
      if (label < -1000 || label > 1000) fail({line, t[2].column}, "label out of range");
      h.label = static_cast<int>(label);
      claim_crossable(line, t[1], h.id);
      chart_.hoops.emplace(h.id, h);
    } else if (kind == "rot") {
      if (t.size() < 2) fail({line, t[0].column + 3}, "malformed record, expected `rot <vertex> <edge>...`");
      const ChartId v = id_at(line, t[1]);
      if (chart_.rotations.count(v)) fail({line, t[1].column}, "duplicate rotation for vertex " + t[1].text);
      std::vector<ChartId> order;
      for (std::size_t i = 2; i < t.size(); ++i) {
        order.push_back(id_at(line, t[i]));
        rot_refs_.push_back({order.back(), {line, t[i].column}});
      }
      chart_.rotations.emplace(v, std::move(order));
      vertex_refs_.push_back({v, {line, t[1].column}});
    } else if (kind == "boundary") {
      if (seen_boundary_) fail({line, t[0].column}, "duplicate boundary record");
      seen_boundary_ = true;
      for (std::size_t i = 1; i < t.size(); ++i) {
        chart_.boundary.push_back(id_at(line, t[i]));
        vertex_refs_.push_back({chart_.boundary.back(), {line, t[i].column}});
      }
    } else {
      fail({line, t[0].column}, "unknown record '" + kind + "'");
    }
  }

  void claim_crossable(std::size_t line, const Token& t, ChartId id) {
    if (!crossable_.insert(id).second) fail({line, t.column}, "duplicate edge or hoop id " + t.text);
  }

  void resolve() {
    for (const auto& [id, e] : chart_.edges) {
      const auto& [tail_at, head_at] = endpoints_.at(id);
      if (!chart_.vertices.count(e.tail))
        fail(tail_at, "edge " + std::to_string(id) + " references unknown vertex " + std::to_string(e.tail));
      if (!chart_.vertices.count(e.head))
        fail(head_at, "edge " + std::to_string(id) + " references unknown vertex " + std::to_string(e.head));
    }
    for (const auto& [v, at] : vertex_refs_) {
      if (!chart_.vertices.count(v)) fail(at, "unknown vertex " + std::to_string(v));
    }
    for (const auto& [e, at] : rot_refs_) {
      if (!chart_.edges.count(e)) fail(at, "unknown edge " + std::to_string(e));
    }
  }

  Chart chart_;
  bool seen_boundary_ = false;
  std::set<ChartId> crossable_;
  std::map<ChartId, std::pair<Where, Where>> endpoints_;
  std::vector<std::pair<ChartId, Where>> vertex_refs_;
  std::vector<std::pair<ChartId, Where>> rot_refs_;
};

}  // namespace

Chart parse_chart(std::string_view text) { return ChartParser().parse(text); }

std::string serialize(const Chart& chart) {
  std::ostringstream out;
  for (const auto& [id, v] : chart.vertices) out << "vertex " << id << ' ' << to_string(v.kind) << '\n';
  for (const auto& [id, e] : chart.edges)
    out << "edge " << id << ' ' << e.tail << ' ' << e.head << ' ' << e.label << '\n';
  for (const auto& [id, h] : chart.hoops) out << "hoop " << id << ' ' << h.label << '\n';
  for (const auto& [v, order] : chart.rotations) {
    out << "rot " << v;
    for (ChartId e : order) out << ' ' << e;
    out << '\n';
  }
  if (!chart.boundary.empty()) {
    out << "boundary";
    for (ChartId v : chart.boundary) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

namespace {

std::string vertex_name(ChartId v) { return "vertex " + std::to_string(v); }

bool alternating(const std::vector<int>& labels) {
  const std::size_t n = labels.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i] == labels[(i + 1) % n]) return false;
  }
  return true;
}

bool three_in_three_out(const std::vector<bool>& inward) {
  for (std::size_t start = 0; start < 6; ++start) {
    bool ok = true;
    for (std::size_t i = 0; i < 6 && ok; ++i) ok = inward[(start + i) % 6] == (i < 3);
    if (ok) return true;
  }
  return false;
}

void check_rotation(const Chart& chart, ChartId v, std::size_t degree, int condition,
                    std::vector<Violation>& out) {
  const auto rot = chart.rotations.find(v);
  if (rot == chart.rotations.end()) {
    out.push_back({condition, vertex_name(v), "degree-" + std::to_string(degree) + " vertex has no rotation"});
    return;
  }
  std::vector<ChartId> sorted = rot->second;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != chart.incident_edges(v)) {
    out.push_back({condition, vertex_name(v), "rotation does not list exactly the incident edges"});
    return;
  }
  std::vector<int> labels;
  std::vector<bool> inward;
  for (ChartId e : rot->second) {
    labels.push_back(chart.edges.at(e).label);
    inward.push_back(chart.edges.at(e).head == v);
  }
  if (!alternating(labels)) {
    out.push_back({condition, vertex_name(v), "labels do not alternate around the vertex"});
  }
  if (degree == 6 && !three_in_three_out(inward)) {
    out.push_back({condition, vertex_name(v), "edges are not three consecutive inward and three outward"});
  }
  if (degree == 12) {
    const auto in = std::count(inward.begin(), inward.end(), true);
    if (in != 0 && in != 12) {
      out.push_back({condition, vertex_name(v), "edges are neither all inward nor all outward"});
    }
  }
}

}  // namespace

std::vector<Violation> validate(const Chart& chart) {
  std::vector<Violation> out;
  bool boundary_degrees_ok = true;
  for (const auto& [id, v] : chart.vertices) {
    const std::size_t degree = chart.degree(id);
    if (v.kind == VertexKind::Boundary) {
      if (degree != 1) {
        out.push_back({2, vertex_name(id), "boundary vertex has degree " + std::to_string(degree)});
        boundary_degrees_ok = false;
      }
      continue;
    }
    const bool legal = degree == 1 || degree == 6 || degree == 12;
    const std::size_t pinned = v.kind == VertexKind::Interior1   ? 1
                               : v.kind == VertexKind::Interior6 ? 6
                               : v.kind == VertexKind::Interior12 ? 12
                                                                  : degree;
    if (!legal || pinned != degree) {
      out.push_back({1, vertex_name(id), "interior vertex of kind " + to_string(v.kind) +
                                             " has degree " + std::to_string(degree)});
      continue;
    }
    if (degree == 1) {
      const ChartEdge& e = chart.edges.at(chart.incident_edges(id).front());
      if (e.head != id) {
        out.push_back({4, vertex_name(id), "edge " + std::to_string(e.id) + " is oriented outward"});
      }
    } else {
      check_rotation(chart, id, degree, degree == 6 ? 5 : 6, out);
    }
  }
  for (const auto& [id, e] : chart.edges) {
    if (e.label != 1 && e.label != 2) {
      out.push_back({3, "edge " + std::to_string(id), "label " + std::to_string(e.label) + " is not 1 or 2"});
    }
  }
  for (const auto& [id, h] : chart.hoops) {
    if (h.label != 1 && h.label != 2) {
      out.push_back({3, "hoop " + std::to_string(id), "label " + std::to_string(h.label) + " is not 1 or 2"});
    }
  }
  if (boundary_degrees_ok) {
    std::set<ChartId> listed;
    bool order_ok = true;
    for (ChartId v : chart.boundary) {
      if (chart.vertices.at(v).kind != VertexKind::Boundary) {
        out.push_back({8, vertex_name(v), "boundary order lists an interior vertex"});
        order_ok = false;
      } else if (!listed.insert(v).second) {
        out.push_back({8, vertex_name(v), "boundary order lists the vertex twice"});
        order_ok = false;
      }
    }
    for (const auto& [id, v] : chart.vertices) {
      if (v.kind == VertexKind::Boundary && !listed.count(id)) {
        out.push_back({8, vertex_name(id), "boundary vertex missing from the boundary order"});
        order_ok = false;
      }
    }
    if (order_ok && !decompose_boundary(boundary_sequence(chart))) {
      out.push_back({8, "boundary", "boundary sequence " + to_string(boundary_sequence(chart)) +
                                        " has no decomposition into (1,e) and six-term combs"});
    }
  }
  return out;
}

BoundarySeq boundary_sequence(const Chart& chart) {
  BoundarySeq seq;
  for (ChartId v : chart.boundary) {
    const std::vector<ChartId> incident = chart.incident_edges(v);
    if (incident.size() != 1) {
      throw InputError("boundary vertex " + std::to_string(v) + " does not have degree 1");
    }
    const ChartEdge& e = chart.edges.at(incident.front());
    seq.push_back({e.label, e.tail == v ? Sign::Plus : Sign::Minus});
  }
  return seq;
}

std::size_t BoundaryDecomposition::singletons() const {
  return static_cast<std::size_t>(
      std::count_if(blocks.begin(), blocks.end(), [](const BoundaryBlock& b) { return b.length == 1; }));
}

std::size_t BoundaryDecomposition::combs() const { return blocks.size() - singletons(); }

namespace {

bool is_comb(const BoundarySeq& seq, std::size_t rotation, std::size_t start) {
  const std::size_t n = seq.size();
  const BoundaryPoint& first = seq[(rotation + start) % n];
  for (std::size_t i = 0; i < 6; ++i) {
    const BoundaryPoint& p = seq[(rotation + start + i) % n];
    if (p.sign != first.sign || (p.label != 1 && p.label != 2)) return false;
    if (i > 0 && p.label == seq[(rotation + start + i - 1) % n].label) return false;
  }
  return true;
}

}  // namespace

std::optional<BoundaryDecomposition> decompose_boundary(const BoundarySeq& seq) {
  const std::size_t n = seq.size();
  if (n == 0) return BoundaryDecomposition{};
  for (std::size_t rotation = 0; rotation < n; ++rotation) {
    // reachable[i]: positions 0..i-1 of the rotated sequence are covered.
    std::vector<int> via(n + 1, 0);
    std::vector<bool> reachable(n + 1, false);
    reachable[0] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (!reachable[i]) continue;
      if (seq[(rotation + i) % n].label == 1 && !reachable[i + 1]) {
        reachable[i + 1] = true;
        via[i + 1] = 1;
      }
      if (i + 6 <= n && !reachable[i + 6] && is_comb(seq, rotation, i)) {
        reachable[i + 6] = true;
        via[i + 6] = 6;
      }
    }
    if (!reachable[n]) continue;
    BoundaryDecomposition d;
    d.rotation = rotation;
    for (std::size_t i = n; i > 0; i -= static_cast<std::size_t>(via[i])) {
      const std::size_t len = static_cast<std::size_t>(via[i]);
      d.blocks.push_back({(rotation + i - len) % n, len});
    }
    std::reverse(d.blocks.begin(), d.blocks.end());
    return d;
  }
  return std::nullopt;
}

PathCrossing parse_path(std::string_view text) {
  PathCrossing path;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    const char s = token.back();
    if (token.size() < 2 || (s != '+' && s != '-')) {
      throw InputError("path crossing '" + token + "' must look like <id>+ or <id>-");
    }
    std::int64_t id = 0;
    if (!fits_int64(parse_integer(std::string_view(token).substr(0, token.size() - 1)), id)) {
      throw InputError("edge id out of range in '" + token + "'");
    }
    path.push_back({id, s == '+' ? Sign::Plus : Sign::Minus});
  }
  return path;
}

Sl2Matrix intersection_matrix(const Chart& chart, const PathCrossing& path) {
  Sl2Matrix product;
  for (const Crossing& c : path) {
    int label = 0;
    if (const auto e = chart.edges.find(c.edge); e != chart.edges.end()) {
      label = e->second.label;
    } else if (const auto h = chart.hoops.find(c.edge); h != chart.hoops.end()) {
      label = h->second.label;
    } else {
      throw InputError("path crosses unknown edge " + std::to_string(c.edge));
    }
    if (label != 1 && label != 2) {
      throw InputError("edge " + std::to_string(c.edge) + " has label " + std::to_string(label));
    }
    const Sl2Matrix x = generator(label == 1 ? Generator::X1 : Generator::X2);
    product *= c.sign == Sign::Plus ? x : x.inverse();
  }
  return product;
}

SignedElement intersection_word(const Chart& chart, const PathCrossing& path) {
  return matrix_to_signed_word(intersection_matrix(chart, path));
}

BoundarySeq parse_boundary_sequence(std::string_view text) {
  BoundarySeq seq;
  std::string cleaned;
  for (char ch : text) cleaned += (ch == '(' || ch == ')' || ch == ',') ? ' ' : ch;
  std::istringstream in(cleaned);
  std::string label, sign;
  while (in >> label) {
    if (!(in >> sign)) throw InputError("boundary sequence has a label without a sign");
    const Integer l = parse_integer(label);
    const Integer s = parse_integer(sign);
    if (l != 1 && l != 2) throw InputError("boundary label must be 1 or 2");
    if (s != 1 && s != -1) throw InputError("boundary sign must be +1 or -1");
    seq.push_back({static_cast<int>(l.get_si()), s == 1 ? Sign::Plus : Sign::Minus});
  }
  return seq;
}

std::string to_string(const BoundarySeq& seq) {
  std::string out = "(";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ',';
    out += "(" + std::to_string(seq[i].label) + "," + (seq[i].sign == Sign::Plus ? "+1" : "-1") + ")";
  }
  return out + ")";
}

}  // namespace sblf
