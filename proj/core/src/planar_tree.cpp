#include "operads/planar_tree.hpp"

#include <algorithm>
#include <functional>

namespace operads {

PlanarRootedTree::PlanarRootedTree(Label root, std::map<Label, std::vector<Label>> children)
    : root_(std::move(root)), children_(std::move(children)) {
  children_.try_emplace(root_);
  for (const auto& [v, kids] : children_)
    for (const auto& k : kids) children_.try_emplace(k);
  // every vertex except the root must appear exactly once as a child
  std::map<Label, std::size_t> seen;
  for (const auto& [v, kids] : children_)
    for (const auto& k : kids) {
      if (!children_.count(k)) throw std::invalid_argument("planar tree: unknown child " + k.str());
      ++seen[k];
    }
  if (seen.count(root_)) throw std::invalid_argument("planar tree: root appears as a child");
  if (seen.size() != children_.size() - 1)
    throw std::invalid_argument("planar tree: disconnected or repeated vertices");
  for (const auto& [v, n] : seen)
    if (n != 1) throw std::invalid_argument("planar tree: vertex " + v.str() + " has several parents");
}

PlanarRootedTree PlanarRootedTree::single(Label root) {
  return PlanarRootedTree(std::move(root), {});
}

FiniteSet PlanarRootedTree::vertices() const {
  std::vector<Label> out;
  out.reserve(children_.size());
  for (const auto& [v, kids] : children_) out.push_back(v);
  return FiniteSet(std::move(out));
}

const std::vector<Label>& PlanarRootedTree::children(const Label& v) const {
  auto it = children_.find(v);
  if (it == children_.end()) throw std::invalid_argument("children: " + v.str() + " not a vertex");
  return it->second;
}

const Label& PlanarRootedTree::parent(const Label& v) const {
  for (const auto& [p, kids] : children_)
    if (std::find(kids.begin(), kids.end(), v) != kids.end()) return p;
  throw std::invalid_argument("parent: " + v.str() + " is the root or not a vertex");
}

std::string to_text(const PlanarRootedTree& t) {
  std::function<std::string(const Label&)> rec = [&](const Label& v) {
    const auto& kids = t.children(v);
    if (kids.empty()) return v.str();
    std::string out = v.str() + "(";
    for (std::size_t i = 0; i < kids.size(); ++i) {
      if (i) out += ",";
      out += rec(kids[i]);
    }
    return out + ")";
  };
  return rec(t.root());
}

std::string shape_key(const PlanarRootedTree& t) {
  std::function<std::string(const Label&)> rec = [&](const Label& v) {
    std::string out = "(";
    for (const auto& k : t.children(v)) out += rec(k);
    return out + ")";
  };
  return rec(t.root());
}

PlanarRootedTree relabel(const PlanarRootedTree& t, const Bijection& sigma) {
  if (sigma.domain() != t.vertices())
    throw std::invalid_argument("relabel: bijection domain does not match the vertex set");
  std::map<Label, std::vector<Label>> children;
  for (const auto& [v, kids] : t.children_map()) {
    std::vector<Label> mapped;
    mapped.reserve(kids.size());
    for (const auto& k : kids) mapped.push_back(sigma(k));
    children.emplace(sigma(v), std::move(mapped));
  }
  return PlanarRootedTree(sigma(t.root()), std::move(children));
}

namespace {

struct Shape {
  std::vector<Shape> kids;
};

// all planar shapes with n vertices
std::vector<Shape> planar_shapes(std::size_t n) {
  std::vector<Shape> out;
  if (n == 1) {
    out.push_back({});
    return out;
  }
  // split the n-1 non-root vertices into an ordered nonempty forest
  std::function<std::vector<std::vector<Shape>>(std::size_t)> forests =
      [&](std::size_t m) -> std::vector<std::vector<Shape>> {
    std::vector<std::vector<Shape>> result;
    if (m == 0) {
      result.push_back({});
      return result;
    }
    for (std::size_t first = 1; first <= m; ++first) {
      for (const auto& head : planar_shapes(first)) {
        for (const auto& rest : forests(m - first)) {
          std::vector<Shape> combo;
          combo.push_back(head);
          combo.insert(combo.end(), rest.begin(), rest.end());
          result.push_back(std::move(combo));
        }
      }
    }
    return result;
  };
  for (auto& kids : forests(n - 1)) out.push_back({std::move(kids)});
  return out;
}

void fill_labels(const Shape& shape, const std::vector<Label>& order, std::size_t& next,
                 std::map<Label, std::vector<Label>>& children, Label& my_label) {
  my_label = order[next++];
  std::vector<Label> kid_labels;
  kid_labels.reserve(shape.kids.size());
  for (const auto& kid : shape.kids) {
    Label kl;
    fill_labels(kid, order, next, children, kl);
    kid_labels.push_back(kl);
  }
  children[my_label] = std::move(kid_labels);
}

}  // namespace

std::vector<PlanarRootedTree> enumerate_planar_rooted_trees(const FiniteSet& vertices) {
  if (vertices.empty())
    throw std::invalid_argument("enumerate_planar_rooted_trees: empty vertex set");
  const std::size_t n = vertices.size();
  std::vector<Label> order = vertices.labels();
  std::vector<PlanarRootedTree> out;
  for (const auto& shape : planar_shapes(n)) {
    std::sort(order.begin(), order.end());
    do {
      std::map<Label, std::vector<Label>> children;
      std::size_t next = 0;
      Label root;
      fill_labels(shape, order, next, children, root);
      out.emplace_back(root, std::move(children));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

PlanarBinaryTree PlanarBinaryTree::leaf() { return PlanarBinaryTree(); }

const PlanarBinaryTree& PlanarBinaryTree::left() const {
  if (is_leaf()) throw std::invalid_argument("left: tree is a leaf");
  return children_[0];
}

const PlanarBinaryTree& PlanarBinaryTree::right() const {
  if (is_leaf()) throw std::invalid_argument("right: tree is a leaf");
  return children_[1];
}

std::size_t PlanarBinaryTree::leaf_count() const {
  if (is_leaf()) return 1;
  return children_[0].leaf_count() + children_[1].leaf_count();
}

bool operator<(const PlanarBinaryTree& a, const PlanarBinaryTree& b) {
  return a.children_ < b.children_;
}

PlanarBinaryTree graft_vee(PlanarBinaryTree left, PlanarBinaryTree right) {
  PlanarBinaryTree out;
  out.children_.push_back(std::move(left));
  out.children_.push_back(std::move(right));
  return out;
}

std::string to_text(const PlanarBinaryTree& t) {
  if (t.is_leaf()) return "|";
  return "(" + to_text(t.left()) + " v " + to_text(t.right()) + ")";
}

std::vector<PlanarBinaryTree> enumerate_binary_trees(std::size_t leaves) {
  if (leaves == 0) throw std::invalid_argument("enumerate_binary_trees: zero leaves");
  if (leaves == 1) return {PlanarBinaryTree::leaf()};
  std::vector<PlanarBinaryTree> out;
  for (std::size_t l = 1; l < leaves; ++l) {
    for (const auto& left : enumerate_binary_trees(l))
      for (const auto& right : enumerate_binary_trees(leaves - l))
        out.push_back(graft_vee(left, right));
  }
  return out;
}

namespace {

PlanarRootedTree phi_rec(const PlanarBinaryTree& t, std::size_t& next) {
  if (t.is_leaf()) return PlanarRootedTree::single(Label("v" + std::to_string(++next)));
  PlanarRootedTree limg = phi_rec(t.left(), next);
  PlanarRootedTree rimg = phi_rec(t.right(), next);
  auto children = rimg.children_map();
  for (const auto& [v, kids] : limg.children_map()) children.emplace(v, kids);
  auto& root_kids = children[rimg.root()];
  root_kids.insert(root_kids.begin(), limg.root());
  return PlanarRootedTree(rimg.root(), std::move(children));
}

}  // namespace

PlanarRootedTree knuth_phi(const PlanarBinaryTree& t) {
  std::size_t next = 0;
  return phi_rec(t, next);
}

}  // namespace operads
