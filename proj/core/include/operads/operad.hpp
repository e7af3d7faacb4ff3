#pragma once

#include <functional>
#include <optional>
#include <variant>

#include "operads/lincomb.hpp"
#include "operads/planar_tree.hpp"
#include "operads/rooted_tree.hpp"
#include "operads/shuffle.hpp"

namespace operads {

// Partial compositions on labeled trees. Each one substitutes a tree for a
// chosen vertex s; they differ in how the branches that used to arrive at s
// reconnect to the inserted tree.

// All branches of s reattach to the root of v.
RootedTree nap_compose(const RootedTree& u, const Label& s, const RootedTree& v);

// Sum over every reattachment function f from the children of s to the
// vertices of v: the subtree hanging off child c moves under f(c). The
// number of terms, counted with multiplicity, is |Ver(v)|^(#children of s).
LinComb<RootedTree> prelie_compose(const RootedTree& u, const Label& s, const RootedTree& v);

// Planar: v's root takes s's slot among its siblings; at the root of v the
// original children stay leftmost, then the former children of s follow,
// each list keeping its own order.
PlanarRootedTree mag_compose(const PlanarRootedTree& u, const Label& s, const PlanarRootedTree& v);

// Sum over all interleavings of the two child lists that meet at the merged
// vertex. The plain planar composition is the single interleaving that
// keeps all of u's root children first.
LinComb<PlanarRootedTree> shuffle_mag_compose(const PlanarRootedTree& t, const Label& s,
                                              const PlanarRootedTree& u);

// Planar substitution of v for vertex s of u with an explicit arrangement
// of the two child lists that meet at the root of v; the arrangement must
// use exactly those children.
PlanarRootedTree planar_graft(const PlanarRootedTree& u, const Label& s,
                              const PlanarRootedTree& v,
                              const std::vector<Label>& merged_root_children);

// Both sides of the root-exchange identity
//   (t o_s u) o_{root u} v == relabel((t o_s v) o_{root v} u, root u -> root v)
// which holds for the first composition above but not for every operad.
std::pair<RootedTree, RootedTree> nap_root_exchange_sides(const RootedTree& t, const Label& s,
                                                          const RootedTree& u,
                                                          const RootedTree& v);

// The identity-except-one-point bijection used on the right side of the
// root-exchange identity: from_root -> to_root on the given ground set.
Bijection root_swap_bijection(const FiniteSet& domain, const Label& from_root,
                              const Label& to_root);

// Basis element of the one-dimensional operad: nothing but a ground set.
struct ComElement {
  FiniteSet ground;

  friend bool operator==(const ComElement&, const ComElement&) = default;
  friend auto operator<=>(const ComElement&, const ComElement&) = default;
};

std::string to_text(const ComElement& e);

// A basis element of some positive operad, whichever one is in play.
using QElem = std::variant<RootedTree, PlanarRootedTree, ComElement>;

FiniteSet ground_of(const QElem& e);
Label root_of(const QElem& e);  // error for ComElement, which has no root
QElem relabel_qelem(const QElem& e, const Bijection& sigma);
std::string to_text(const QElem& e);

// Runtime description of a positive operad with a finite basis over every
// label set: basis enumerator, partial composition extended to formal sums,
// relabeling action, and units. The generic block compositions and the law
// checker consume any instance.
class OperadInstance {
 public:
  using Element = QElem;
  using BasisFn = std::function<std::vector<QElem>(const FiniteSet&)>;
  using ComposeFn = std::function<LinComb<QElem>(const QElem&, const Label&, const QElem&)>;
  using UnitFn = std::function<QElem(const Label&)>;

  OperadInstance(std::string name, BasisFn basis, ComposeFn compose, UnitFn unit)
      : name_(std::move(name)),
        basis_(std::move(basis)),
        compose_(std::move(compose)),
        unit_(std::move(unit)) {}

  const std::string& name() const { return name_; }

  // Empty for the empty label set (positivity).
  std::vector<QElem> basis(const FiniteSet& s) const {
    return s.empty() ? std::vector<QElem>{} : basis_(s);
  }

  LinComb<QElem> compose(const QElem& x, const Label& s, const QElem& y) const {
    return compose_(x, s, y);
  }

  QElem relabel(const QElem& x, const Bijection& sigma) const { return relabel_qelem(x, sigma); }

  QElem unit(const Label& s) const { return unit_(s); }

 private:
  std::string name_;
  BasisFn basis_;
  ComposeFn compose_;
  UnitFn unit_;
};

OperadInstance nap_operad();
OperadInstance prelie_operad();
OperadInstance mag_operad();
OperadInstance shuffle_mag_operad();
// The one-dimensional operad: a single basis element over every nonempty
// set, with the composition forced. The smallest fixture for generic code.
OperadInstance com_operad();

// The four tree operads.
std::vector<OperadInstance> operad_instances();

// Lookup by name: nap | prelie | mag | shmag | com.
std::optional<OperadInstance> operad_by_name(const std::string& name);

}  // namespace operads
