#pragma once

#include <map>
#include <variant>

#include "operads/operad.hpp"
#include "operads/partition.hpp"

namespace operads {

using BlockTree = std::variant<RootedTree, PlanarRootedTree>;

std::string to_text(const BlockTree& t);

// An element of "trees of blocks": a partition of the ground set, a tree
// whose vertices are the blocks, and one inner-operad basis element per
// block over exactly that block's labels. Blocks are named by their
// smallest element; the tree and the value map both use those names.
class CompositionElement {
 public:
  CompositionElement(Partition partition, BlockTree tree, std::map<Label, QElem> values);

  const FiniteSet& ground() const { return partition_.ground(); }
  const Partition& partition() const { return partition_; }
  const BlockTree& tree() const { return tree_; }
  const std::map<Label, QElem>& values() const { return values_; }

  const QElem& value_at(const Label& block_name) const;
  bool planar() const { return std::holds_alternative<PlanarRootedTree>(tree_); }
  Label tree_root() const;

  friend bool operator==(const CompositionElement&, const CompositionElement&) = default;
  friend auto operator<=>(const CompositionElement&, const CompositionElement&) = default;

 private:
  Partition partition_;
  BlockTree tree_;
  std::map<Label, QElem> values_;
};

// Canonical one-line form, also valid JSON:
//   {"blocks":[["1","2"],["3"]],"tree":"b0(b1)","values":{"b0":...,"b1":...}}
// with blocks in canonical order and the tree written over b0,b1,...
std::string to_text(const CompositionElement& x);

// Block-level substitution for non-planar block trees. The block of x
// containing s merges with the root block of y; the merged block's value is
// the inner composition of the two block values (expanded bilinearly when
// the inner operad returns a sum), and every other block rides along.
LinComb<CompositionElement> box_compose(const CompositionElement& x, const Label& s,
                                        const CompositionElement& y, const OperadInstance& q);

// Planar counterpart: one term per interleaving of the child lists meeting
// at the merged block, times the inner composition of the block values.
LinComb<CompositionElement> diamond_compose(const CompositionElement& x, const Label& s,
                                            const CompositionElement& y,
                                            const OperadInstance& q);

CompositionElement relabel_composition(const CompositionElement& x, const Bijection& sigma);

// Sum over partitions of |outer basis on the blocks| * product of inner
// basis sizes per block.
Integer composition_dimension(const OperadInstance& outer, const OperadInstance& inner,
                              const FiniteSet& ground);

// Every composition element with outer trees from `outer` and block values
// from `inner`; the count equals composition_dimension.
std::vector<CompositionElement> enumerate_composition_elements(const OperadInstance& outer,
                                                               const OperadInstance& inner,
                                                               const FiniteSet& ground);

// A plain tree as a composition element: singleton blocks, each carrying
// the inner operad's unit.
CompositionElement singleton_lift(const RootedTree& t, const OperadInstance& q);
CompositionElement singleton_lift(const PlanarRootedTree& t, const OperadInstance& q);

// The two block compositions packaged as operads, generically over the
// inner operad; this is what the law checker exercises.
class BoxOperad {
 public:
  using Element = CompositionElement;

  explicit BoxOperad(OperadInstance inner) : inner_(std::move(inner)), outer_(nap_operad()) {}

  std::string name() const { return "box:" + inner_.name(); }
  const OperadInstance& inner() const { return inner_; }

  std::vector<Element> basis(const FiniteSet& ground) const {
    if (ground.empty()) return {};
    return enumerate_composition_elements(outer_, inner_, ground);
  }
  LinComb<Element> compose(const Element& x, const Label& s, const Element& y) const {
    return box_compose(x, s, y, inner_);
  }
  Element relabel(const Element& x, const Bijection& sigma) const {
    return relabel_composition(x, sigma);
  }
  Element unit(const Label& s) const;

 private:
  OperadInstance inner_;
  OperadInstance outer_;
};

class DiamondOperad {
 public:
  using Element = CompositionElement;

  explicit DiamondOperad(OperadInstance inner)
      : inner_(std::move(inner)), outer_(shuffle_mag_operad()) {}

  std::string name() const { return "diamond:" + inner_.name(); }
  const OperadInstance& inner() const { return inner_; }

  std::vector<Element> basis(const FiniteSet& ground) const {
    if (ground.empty()) return {};
    return enumerate_composition_elements(outer_, inner_, ground);
  }
  LinComb<Element> compose(const Element& x, const Label& s, const Element& y) const {
    return diamond_compose(x, s, y, inner_);
  }
  Element relabel(const Element& x, const Bijection& sigma) const {
    return relabel_composition(x, sigma);
  }
  Element unit(const Label& s) const;

 private:
  OperadInstance inner_;
  OperadInstance outer_;
};

}  // namespace operads
