#pragma once

#include <map>
#include <vector>

#include "operads/labels.hpp"

namespace operads {

// A labeled rooted tree with no planar structure. Identity is the pair
// (root, parent map); children are recovered on demand in canonical order
// (sorted by the smallest label in each child subtree), so two trees built
// from the same parent map always compare equal.
class RootedTree {
 public:
  RootedTree(Label root, std::map<Label, Label> parent);

  static RootedTree single(Label root);

  const Label& root() const { return root_; }
  const std::map<Label, Label>& parent_map() const { return parent_; }

  FiniteSet vertices() const;
  std::size_t size() const { return parent_.size() + 1; }
  bool contains(const Label& v) const;

  const Label& parent(const Label& v) const;  // error on the root
  std::vector<Label> children(const Label& v) const;

  friend bool operator==(const RootedTree&, const RootedTree&) = default;
  friend auto operator<=>(const RootedTree&, const RootedTree&) = default;

 private:
  Label root_;
  std::map<Label, Label> parent_;
};

std::string to_text(const RootedTree& t);  // "root(child,...)" in canonical order

RootedTree relabel(const RootedTree& t, const Bijection& sigma);

// All rooted trees on the given nonempty vertex set; n^(n-1) of them.
std::vector<RootedTree> enumerate_rooted_trees(const FiniteSet& vertices);

}  // namespace operads
