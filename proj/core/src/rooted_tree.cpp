#include "operads/rooted_tree.hpp"

#include <algorithm>
#include <functional>

namespace operads {

namespace {

// parent maps every non-root vertex into the vertex set, with no cycles
bool valid_parent_map(const Label& root, const std::map<Label, Label>& parent) {
  if (parent.count(root)) return false;
  for (const auto& [child, par] : parent) {
    if (par != root && !parent.count(par)) return false;
    // walk to the root; a cycle would loop longer than the vertex count
    std::size_t steps = 0;
    Label cur = child;
    while (cur != root) {
      auto it = parent.find(cur);
      if (it == parent.end()) return false;
      cur = it->second;
      if (++steps > parent.size()) return false;
    }
  }
  return true;
}

}  // namespace

RootedTree::RootedTree(Label root, std::map<Label, Label> parent)
    : root_(std::move(root)), parent_(std::move(parent)) {
  if (!valid_parent_map(root_, parent_))
    throw std::invalid_argument("rooted tree: parent map is not a tree rooted at " + root_.str());
}

RootedTree RootedTree::single(Label root) { return RootedTree(std::move(root), {}); }

FiniteSet RootedTree::vertices() const {
  std::vector<Label> out;
  out.reserve(size());
  out.push_back(root_);
  for (const auto& [child, par] : parent_) out.push_back(child);
  return FiniteSet(std::move(out));
}

bool RootedTree::contains(const Label& v) const { return v == root_ || parent_.count(v) > 0; }

const Label& RootedTree::parent(const Label& v) const {
  auto it = parent_.find(v);
  if (it == parent_.end()) throw std::invalid_argument("parent: " + v.str() + " is the root or not a vertex");
  return it->second;
}

std::vector<Label> RootedTree::children(const Label& v) const {
  if (!contains(v)) throw std::invalid_argument("children: " + v.str() + " not a vertex");
  std::vector<Label> out;
  for (const auto& [child, par] : parent_)
    if (par == v) out.push_back(child);
  // canonical order: by the smallest label in each child subtree
  std::map<Label, Label> min_desc;
  std::function<Label(const Label&)> subtree_min = [&](const Label& w) -> Label {
    auto it = min_desc.find(w);
    if (it != min_desc.end()) return it->second;
    Label m = w;
    for (const auto& [child, par] : parent_)
      if (par == w) m = std::min(m, subtree_min(child));
    min_desc.emplace(w, m);
    return m;
  };
  std::sort(out.begin(), out.end(),
            [&](const Label& a, const Label& b) { return subtree_min(a) < subtree_min(b); });
  return out;
}

std::string to_text(const RootedTree& t) {
  std::function<std::string(const Label&)> rec = [&](const Label& v) {
    auto kids = t.children(v);
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

RootedTree relabel(const RootedTree& t, const Bijection& sigma) {
  if (sigma.domain() != t.vertices())
    throw std::invalid_argument("relabel: bijection domain does not match the vertex set");
  std::map<Label, Label> parent;
  for (const auto& [child, par] : t.parent_map()) parent.emplace(sigma(child), sigma(par));
  return RootedTree(sigma(t.root()), std::move(parent));
}

std::vector<RootedTree> enumerate_rooted_trees(const FiniteSet& vertices) {
  if (vertices.empty()) throw std::invalid_argument("enumerate_rooted_trees: empty vertex set");
  std::vector<RootedTree> out;
  for (const auto& root : vertices) {
    std::vector<Label> rest;
    for (const auto& v : vertices)
      if (v != root) rest.push_back(v);
    std::map<Label, Label> parent;
    std::function<void(std::size_t)> assign = [&](std::size_t i) {
      if (i == rest.size()) {
        if (valid_parent_map(root, parent)) out.emplace_back(root, parent);
        return;
      }
      for (const auto& p : vertices) {
        parent[rest[i]] = p;
        assign(i + 1);
      }
      parent.erase(rest[i]);
    };
    assign(0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace operads
