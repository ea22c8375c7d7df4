#include "sblf/hurwitz.hpp"

#include "sblf/errors.hpp"

#include <cctype>
#include <sstream>

namespace sblf {

HurwitzSystem::HurwitzSystem(std::vector<Sl2Matrix> elements) : elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!is_conjugate_to_x1(elements_[i])) {
      throw InputError("element " + std::to_string(i + 1) + " " + to_string(elements_[i]) +
                       " is not conjugate to X1");
    }
  }
}

Integer HurwitzSystem::max_abs_entry() const {
  Integer best = 0;
  for (const Sl2Matrix& m : elements_) {
    Integer e = m.max_abs_entry();
    if (e > best) best = e;
  }
  return best;
}

std::size_t HurwitzSystem::hash() const noexcept {
  std::size_t h = elements_.size();
  for (const Sl2Matrix& m : elements_) {
    h ^= m.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

HurwitzSystem NormalForm::expand() const {
  std::vector<Sl2Matrix> elements(k, generator(Generator::X1));
  const HurwitzSystem tail = make_T(twists);
  elements.insert(elements.end(), tail.elements().begin(), tail.elements().end());
  return HurwitzSystem(std::move(elements));
}

HurwitzSystem make_S(std::size_t r) {
  return HurwitzSystem(std::vector<Sl2Matrix>(r, generator(Generator::X1)));
}

HurwitzSystem make_T(std::span<const std::int64_t> n) {
  std::vector<Sl2Matrix> elements;
  elements.reserve(n.size());
  for (std::int64_t ni : n) elements.push_back(twist_matrix(Curve(Integer(ni), 1)));
  return HurwitzSystem(HurwitzSystem::Trusted{}, std::move(elements));
}

NormalForm make_T_s(int s) {
  if (s < 2) throw InputError("T_s requires s >= 2");
  NormalForm nf;
  nf.twists.push_back(2 * s - 3);
  for (int i = 2; i < s; ++i) nf.twists.push_back(2 * s + 2 - 4 * i);
  nf.twists.push_back(-2 * s + 3);
  return nf;
}

Sl2Matrix total_monodromy(const HurwitzSystem& w) {
  Sl2Matrix product;
  for (const Sl2Matrix& m : w.elements()) product *= m;
  return product;
}

HurwitzSystem elementary_transformation(const HurwitzSystem& w, std::size_t position,
                                        Direction direction) {
  if (position < 1 || position >= w.size()) {
    throw InputError("elementary transformation position " + std::to_string(position) +
                     " out of range for length " + std::to_string(w.size()));
  }
  std::vector<Sl2Matrix> elements = w.elements();
  Sl2Matrix& left = elements[position - 1];
  Sl2Matrix& right = elements[position];
  if (direction == Direction::Forward) {
    Sl2Matrix moved = right.inverse() * left * right;
    left = std::move(right);
    right = std::move(moved);
  } else {
    Sl2Matrix moved = left * right * left.inverse();
    right = std::move(left);
    left = std::move(moved);
  }
  return HurwitzSystem(HurwitzSystem::Trusted{}, std::move(elements));
}

HurwitzSystem simultaneous_conjugation(const HurwitzSystem& w, const Sl2Matrix& g) {
  const Sl2Matrix g_inv = g.inverse();
  std::vector<Sl2Matrix> elements;
  elements.reserve(w.size());
  for (const Sl2Matrix& m : w.elements()) elements.push_back(g_inv * m * g);
  return HurwitzSystem(HurwitzSystem::Trusted{}, std::move(elements));
}

std::optional<BoundaryClass> is_sblf_compatible(const HurwitzSystem& w) {
  return as_plus_minus_x1_power(total_monodromy(w));
}

HurwitzSystem lemma45_target(int s) {
  if (s < 3) throw InputError("the target sequence requires s >= 3");
  std::vector<Sl2Matrix> elements;
  for (int q = 1; q <= 2 * s - 5; q += 2) elements.push_back(twist_matrix(Curve(2, q)));
  elements.push_back(twist_matrix(Curve(1, s - 1)));
  elements.push_back(twist_matrix(Curve(1, -1)));
  return HurwitzSystem(std::move(elements));
}

namespace {

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(first, last - first + 1));
}

std::int64_t parse_int64(std::string_view text) {
  std::int64_t value = 0;
  if (!fits_int64(parse_integer(trim(text)), value)) {
    throw InputError("integer out of range: " + std::string(text));
  }
  return value;
}

std::vector<std::int64_t> parse_int_list(std::string_view inner) {
  std::vector<std::int64_t> out;
  if (trim(inner).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = inner.find(',', start);
    out.push_back(parse_int64(inner.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

NormalForm parse_normal_form(std::string_view text) {
  NormalForm nf;
  std::string rest = trim(text);
  bool seen_any = false;
  if (!rest.empty() && rest[0] == 'S') {
    std::size_t i = 1;
    while (i < rest.size() && std::isdigit(static_cast<unsigned char>(rest[i]))) ++i;
    if (i == 1) throw InputError("expected a count after 'S' in '" + std::string(text) + "'");
    nf.k = static_cast<std::size_t>(parse_int64(std::string_view(rest).substr(1, i - 1)));
    rest = trim(std::string_view(rest).substr(i));
    seen_any = true;
  }
  if (!rest.empty()) {
    if (rest.size() < 3 || rest[0] != 'T' || rest[1] != '(' || rest.back() != ')') {
      throw InputError("malformed normal form '" + std::string(text) + "'");
    }
    nf.twists = parse_int_list(std::string_view(rest).substr(2, rest.size() - 3));
    seen_any = true;
  }
  if (!seen_any) throw InputError("empty normal form");
  return nf;
}

std::string to_string(const NormalForm& nf) {
  std::string out = "S" + std::to_string(nf.k);
  if (!nf.twists.empty()) {
    out += " T(";
    for (std::size_t i = 0; i < nf.twists.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(nf.twists[i]);
    }
    out += ')';
  }
  return out;
}

HurwitzSystem parse_system(std::string_view text) {
  std::vector<Sl2Matrix> elements;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string item = trim(line);
    if (item.empty()) continue;
    try {
      if (item == "X1" || item == "X2") {
        elements.push_back(generator(item));
      } else if (item.size() > 3 && item.rfind("T(", 0) == 0 && item.back() == ')') {
        elements.push_back(twist_matrix(Curve(parse_int64(item.substr(2, item.size() - 3)), 1)));
      } else if (item[0] == '[') {
        elements.push_back(parse_matrix(item));
      } else {
        throw InputError("unrecognized element '" + item + "'");
      }
    } catch (const ParseError& e) {
      throw ParseError(line_no, e.column(), e.what());
    } catch (const InputError& e) {
      throw ParseError(line_no, 1, e.what());
    }
  }
  return HurwitzSystem(std::move(elements));
}

std::string to_string(const HurwitzSystem& w) {
  std::string out;
  for (const Sl2Matrix& m : w.elements()) out += to_string(m) + "\n";
  return out;
}

}  // namespace sblf
