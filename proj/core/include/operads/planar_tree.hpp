#pragma once

#include <map>
#include <vector>

#include "operads/labels.hpp"

namespace operads {

// A labeled planar rooted tree: every vertex carries an ordered list of
// children, and that order is part of the value.
class PlanarRootedTree {
 public:
  // children must have an entry for every vertex (leaves map to the empty
  // list); entries reachable only as children are filled in as leaves.
  PlanarRootedTree(Label root, std::map<Label, std::vector<Label>> children);

  static PlanarRootedTree single(Label root);

  const Label& root() const { return root_; }
  const std::map<Label, std::vector<Label>>& children_map() const { return children_; }

  FiniteSet vertices() const;
  std::size_t size() const { return children_.size(); }
  bool contains(const Label& v) const { return children_.count(v) > 0; }

  const std::vector<Label>& children(const Label& v) const;
  const Label& parent(const Label& v) const;  // error on the root

  friend bool operator==(const PlanarRootedTree&, const PlanarRootedTree&) = default;
  friend auto operator<=>(const PlanarRootedTree&, const PlanarRootedTree&) = default;

 private:
  Label root_;
  std::map<Label, std::vector<Label>> children_;
};

std::string to_text(const PlanarRootedTree& t);  // "root(child,...)" in planar order

// Label-free encoding of the underlying planar shape, e.g. "(()())".
std::string shape_key(const PlanarRootedTree& t);

PlanarRootedTree relabel(const PlanarRootedTree& t, const Bijection& sigma);

// All planar rooted trees on the given nonempty vertex set;
// n! * catalan(n-1) of them.
std::vector<PlanarRootedTree> enumerate_planar_rooted_trees(const FiniteSet& vertices);

// A planar binary tree: a leaf, or an ordered pair of planar binary trees.
class PlanarBinaryTree {
 public:
  static PlanarBinaryTree leaf();

  bool is_leaf() const { return children_.empty(); }
  const PlanarBinaryTree& left() const;
  const PlanarBinaryTree& right() const;
  std::size_t leaf_count() const;

  friend bool operator==(const PlanarBinaryTree& a, const PlanarBinaryTree& b) {
    return a.children_ == b.children_;
  }
  friend bool operator<(const PlanarBinaryTree& a, const PlanarBinaryTree& b);

  friend PlanarBinaryTree graft_vee(PlanarBinaryTree left, PlanarBinaryTree right);

 private:
  PlanarBinaryTree() = default;
  std::vector<PlanarBinaryTree> children_;  // empty or exactly two
};

// The free magma product: the two-leaf tree with its branches replaced by
// the operands.
PlanarBinaryTree graft_vee(PlanarBinaryTree left, PlanarBinaryTree right);

std::string to_text(const PlanarBinaryTree& t);  // leaf "|", node "(l v r)"

// All planar binary trees with the given number of leaves; catalan(n-1).
std::vector<PlanarBinaryTree> enumerate_binary_trees(std::size_t leaves);

// Rotation correspondence onto planar rooted trees: a leaf becomes a single
// vertex, and the image of (l v r) is the image of r with the image of l
// attached as the new leftmost child of its root. Vertices get synthetic
// labels in order of creation; only the shape is meaningful.
PlanarRootedTree knuth_phi(const PlanarBinaryTree& t);

}  // namespace operads
