#pragma once

// Compositions (ordered partitions) of n into positive parts, enumerated in
// lexicographic order: n=3 gives (1,1,1), (1,2), (2,1), (3).

#include <numeric>
#include <optional>
#include <vector>

#include "btq/errors.hpp"

namespace btq {

class Composition {
 public:
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) fail(errc::invalid_parameter, "composition must have at least one part");
    for (int p : parts_)
      if (p < 1) fail(errc::invalid_parameter, "composition parts must be positive");
  }

  const std::vector<int>& parts() const { return parts_; }
  int total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int length() const { return static_cast<int>(parts_.size()); }

  bool operator==(const Composition&) const = default;

 private:
  std::vector<int> parts_;
};

inline std::vector<Composition> compositions(int n, std::optional<int> length = std::nullopt) {
  if (n < 1) fail(errc::invalid_parameter, "compositions need n >= 1");
  if (length && (*length < 1 || *length > n)) return {};
  std::vector<Composition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      if (!length || static_cast<int>(cur.size()) == *length) out.emplace_back(cur);
      return;
    }
    if (length && static_cast<int>(cur.size()) >= *length) return;
    for (int p = 1; p <= rest; ++p) {
      cur.push_back(p);
      self(self, rest - p);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

}  // namespace btq
