#include "paveset/ground.hpp"

namespace paveset {

Subset Subset::of(int ground, const std::vector<int>& idx) {
  check_ground_size(ground);
  std::uint32_t bits = 0;
  for (int i : idx) {
    if (i < 0 || i >= ground)
      throw Error("GroundMismatch", "index " + std::to_string(i) + " outside ground of size " +
                                        std::to_string(ground));
    bits |= 1u << i;
  }
  return Subset(ground, bits);
}

std::vector<int> Subset::indices() const {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (member(i)) out.push_back(i);
  return out;
}

std::string Subset::str() const {
  std::string s = "{";
  bool first = true;
  for (int i : indices()) {
    if (!first) s += " ";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

}  // namespace paveset
