#pragma once

#include "sblf/integer.hpp"
#include "sblf/sl2z.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sblf {

enum class Direction { Forward, Backward };

/// Ordered sequence of conjugates of X1.
class HurwitzSystem {
 public:
  HurwitzSystem() = default;
  /// Throws InputError if some element is not conjugate to X1.
  explicit HurwitzSystem(std::vector<Sl2Matrix> elements);

  const std::vector<Sl2Matrix>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const Sl2Matrix& operator[](std::size_t i) const { return elements_[i]; }

  Integer max_abs_entry() const;
  std::size_t hash() const noexcept;

  friend bool operator==(const HurwitzSystem&, const HurwitzSystem&) = default;

 private:
  struct Trusted {};
  HurwitzSystem(Trusted, std::vector<Sl2Matrix> elements) : elements_(std::move(elements)) {}

  std::vector<Sl2Matrix> elements_;

  friend HurwitzSystem elementary_transformation(const HurwitzSystem&, std::size_t, Direction);
  friend HurwitzSystem simultaneous_conjugation(const HurwitzSystem&, const Sl2Matrix&);
  friend HurwitzSystem make_T(std::span<const std::int64_t>);
};

struct HurwitzSystemHash {
  std::size_t operator()(const HurwitzSystem& w) const noexcept { return w.hash(); }
};

/// S_k T(n_1,...,n_s): k copies of X1 followed by the twists along (n_i, 1).
struct NormalForm {
  std::size_t k = 0;
  std::vector<std::int64_t> twists;

  HurwitzSystem expand() const;
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

HurwitzSystem make_S(std::size_t r);
HurwitzSystem make_T(std::span<const std::int64_t> n);
/// Throws InputError for s < 2.
NormalForm make_T_s(int s);

Sl2Matrix total_monodromy(const HurwitzSystem& w);

/// Position is 1-based: acts on the pair (i, i+1). Throws InputError out of range.
HurwitzSystem elementary_transformation(const HurwitzSystem& w, std::size_t position,
                                        Direction direction);

/// Replaces every element h by g^-1 h g.
HurwitzSystem simultaneous_conjugation(const HurwitzSystem& w, const Sl2Matrix& g);

std::optional<BoundaryClass> is_sblf_compatible(const HurwitzSystem& w);

/// (T_{2,1}, T_{2,3}, ..., T_{2,2s-5}, T_{1,s-1}, T_{1,-1}); throws InputError for s < 3.
HurwitzSystem lemma45_target(int s);

/// `S<k> T(n1,...,ns)`; either part may be omitted.
NormalForm parse_normal_form(std::string_view text);
std::string to_string(const NormalForm& nf);

/// One element per line: matrix literal, X1, X2, or T(n). `#` starts a comment.
HurwitzSystem parse_system(std::string_view text);
std::string to_string(const HurwitzSystem& w);

}  // namespace sblf
