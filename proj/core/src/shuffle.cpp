#include "operads/shuffle.hpp"

#include <algorithm>
#include <functional>

namespace operads {

std::vector<Shuffle> enumerate_shuffles(const std::vector<Label>& a, const std::vector<Label>& b) {
  for (const auto& x : a)
    if (std::find(b.begin(), b.end(), x) != b.end())
      throw std::invalid_argument("enumerate_shuffles: lists share the label " + x.str());

  std::vector<Shuffle> out;
  Shuffle current;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) {
    if (i == a.size() && j == b.size()) {
      out.push_back(current);
      return;
    }
    if (j < b.size()) {
      current.items.emplace_back(ShuffleSource::Second, b[j]);
      rec(i, j + 1);
      current.items.pop_back();
    }
    if (i < a.size()) {
      current.items.emplace_back(ShuffleSource::First, a[i]);
      rec(i + 1, j);
      current.items.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace operads
