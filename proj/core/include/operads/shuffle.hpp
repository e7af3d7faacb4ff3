#pragma once

#include <vector>

#include "operads/labels.hpp"

namespace operads {

enum class ShuffleSource { First, Second };

// One interleaving of two ordered lists: the merged sequence with each
// entry tagged by the list it came from. Restricted to either tag, the
// original order is preserved.
struct Shuffle {
  std::vector<std::pair<ShuffleSource, Label>> items;

  std::vector<Label> merged() const {
    std::vector<Label> out;
    out.reserve(items.size());
    for (const auto& [src, l] : items) out.push_back(l);
    return out;
  }

  friend bool operator==(const Shuffle&, const Shuffle&) = default;
};

// All (a, b)-shuffles, binomial(|a|+|b|, |a|) of them, in a fixed order
// (entries of b are preferred first at each step).
std::vector<Shuffle> enumerate_shuffles(const std::vector<Label>& a, const std::vector<Label>& b);

}  // namespace operads
