#include "operads/operad.hpp"

#include <algorithm>
#include <functional>

namespace operads {

namespace {

void check_compose_preconditions(const FiniteSet& uv, const Label& s, const FiniteSet& vv,
                                 const char* what) {
  if (!uv.contains(s))
    throw std::invalid_argument(std::string(what) + ": vertex " + s.str() + " not in " + to_text(uv));
  if (!uv.minus(s).disjoint_from(vv))
    throw std::invalid_argument(std::string(what) + ": vertex sets " + to_text(uv.minus(s)) +
                                " and " + to_text(vv) + " overlap");
}

}  // namespace

RootedTree nap_compose(const RootedTree& u, const Label& s, const RootedTree& v) {
  check_compose_preconditions(u.vertices(), s, v.vertices(), "nap_compose");
  std::map<Label, Label> parent;
  for (const auto& [x, p] : u.parent_map()) {
    if (x == s) continue;
    parent.emplace(x, p == s ? v.root() : p);
  }
  for (const auto& [x, p] : v.parent_map()) parent.emplace(x, p);
  if (s != u.root()) parent.emplace(v.root(), u.parent(s));
  return RootedTree(s == u.root() ? v.root() : u.root(), std::move(parent));
}

LinComb<RootedTree> prelie_compose(const RootedTree& u, const Label& s, const RootedTree& v) {
  check_compose_preconditions(u.vertices(), s, v.vertices(), "prelie_compose");
  const std::vector<Label> branches = u.children(s);
  const std::vector<Label> targets = v.vertices().labels();
  const Label new_root = s == u.root() ? v.root() : u.root();

  LinComb<RootedTree> out;
  std::map<Label, Label> attach;  // branch -> chosen vertex of v
  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (i == branches.size()) {
      std::map<Label, Label> parent;
      for (const auto& [x, p] : u.parent_map()) {
        if (x == s) continue;
        parent.emplace(x, p == s ? attach.at(x) : p);
      }
      for (const auto& [x, p] : v.parent_map()) parent.emplace(x, p);
      if (s != u.root()) parent.emplace(v.root(), u.parent(s));
      out.add_term(RootedTree(new_root, std::move(parent)), 1);
      return;
    }
    for (const auto& w : targets) {
      attach[branches[i]] = w;
      assign(i + 1);
    }
  };
  assign(0);
  return out;
}

PlanarRootedTree planar_graft(const PlanarRootedTree& u, const Label& s,
                              const PlanarRootedTree& v,
                              const std::vector<Label>& merged_root_children) {
  check_compose_preconditions(u.vertices(), s, v.vertices(), "planar_graft");
  {
    std::vector<Label> expected = v.children(v.root());
    const auto& from_s = u.children(s);
    expected.insert(expected.end(), from_s.begin(), from_s.end());
    std::vector<Label> got = merged_root_children;
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    if (expected != got)
      throw std::invalid_argument("planar_graft: arrangement does not use the two child lists");
  }
  std::map<Label, std::vector<Label>> children;
  for (const auto& [x, kids] : u.children_map()) {
    if (x == s) continue;
    std::vector<Label> nk = kids;
    std::replace(nk.begin(), nk.end(), s, v.root());
    children.emplace(x, std::move(nk));
  }
  for (const auto& [x, kids] : v.children_map()) {
    if (x == v.root())
      children[x] = merged_root_children;
    else
      children.emplace(x, kids);
  }
  return PlanarRootedTree(s == u.root() ? v.root() : u.root(), std::move(children));
}

PlanarRootedTree mag_compose(const PlanarRootedTree& u, const Label& s,
                             const PlanarRootedTree& v) {
  check_compose_preconditions(u.vertices(), s, v.vertices(), "mag_compose");
  std::vector<Label> merged = v.children(v.root());
  const auto& from_s = u.children(s);
  merged.insert(merged.end(), from_s.begin(), from_s.end());
  return planar_graft(u, s, v, merged);
}

LinComb<PlanarRootedTree> shuffle_mag_compose(const PlanarRootedTree& t, const Label& s,
                                              const PlanarRootedTree& u) {
  check_compose_preconditions(t.vertices(), s, u.vertices(), "shuffle_mag_compose");
  LinComb<PlanarRootedTree> out;
  for (const auto& h : enumerate_shuffles(t.children(s), u.children(u.root())))
    out.add_term(planar_graft(t, s, u, h.merged()), 1);
  return out;
}

Bijection root_swap_bijection(const FiniteSet& domain, const Label& from_root,
                              const Label& to_root) {
  std::map<Label, Label> m;
  for (const auto& l : domain) m.emplace(l, l == from_root ? to_root : l);
  return Bijection(domain, std::move(m));
}

std::pair<RootedTree, RootedTree> nap_root_exchange_sides(const RootedTree& t, const Label& s,
                                                          const RootedTree& u,
                                                          const RootedTree& v) {
  RootedTree lhs = nap_compose(nap_compose(t, s, u), u.root(), v);
  RootedTree inner = nap_compose(nap_compose(t, s, v), v.root(), u);
  Bijection phi = root_swap_bijection(inner.vertices(), u.root(), v.root());
  return {std::move(lhs), relabel(inner, phi)};
}

std::string to_text(const ComElement& e) { return to_text(e.ground); }

FiniteSet ground_of(const QElem& e) {
  return std::visit(
      [](const auto& x) -> FiniteSet {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ComElement>)
          return x.ground;
        else
          return x.vertices();
      },
      e);
}

Label root_of(const QElem& e) {
  return std::visit(
      [](const auto& x) -> Label {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ComElement>)
          throw std::invalid_argument("root_of: element has no root vertex");
        else
          return x.root();
      },
      e);
}

QElem relabel_qelem(const QElem& e, const Bijection& sigma) {
  return std::visit(
      [&](const auto& x) -> QElem {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ComElement>) {
          if (sigma.domain() != x.ground)
            throw std::invalid_argument("relabel: bijection domain does not match the ground set");
          return ComElement{sigma.codomain()};
        } else {
          return relabel(x, sigma);
        }
      },
      e);
}

std::string to_text(const QElem& e) {
  return std::visit([](const auto& x) { return to_text(x); }, e);
}

namespace {

const RootedTree& as_rooted(const QElem& e, const char* what) {
  if (const auto* t = std::get_if<RootedTree>(&e)) return *t;
  throw std::invalid_argument(std::string(what) + ": operand " + to_text(e) +
                              " is not a rooted tree");
}

const PlanarRootedTree& as_planar(const QElem& e, const char* what) {
  if (const auto* t = std::get_if<PlanarRootedTree>(&e)) return *t;
  throw std::invalid_argument(std::string(what) + ": operand " + to_text(e) +
                              " is not a planar rooted tree");
}

std::vector<QElem> rooted_basis(const FiniteSet& s) {
  std::vector<QElem> out;
  for (auto& t : enumerate_rooted_trees(s)) out.emplace_back(std::move(t));
  return out;
}

std::vector<QElem> planar_basis(const FiniteSet& s) {
  std::vector<QElem> out;
  for (auto& t : enumerate_planar_rooted_trees(s)) out.emplace_back(std::move(t));
  return out;
}

QElem rooted_unit(const Label& s) { return RootedTree::single(s); }
QElem planar_unit(const Label& s) { return PlanarRootedTree::single(s); }

}  // namespace

OperadInstance nap_operad() {
  return OperadInstance(
      "nap", rooted_basis,
      [](const QElem& x, const Label& s, const QElem& y) {
        return LinComb<QElem>::term(
            nap_compose(as_rooted(x, "nap"), s, as_rooted(y, "nap")));
      },
      rooted_unit);
}

OperadInstance prelie_operad() {
  return OperadInstance(
      "prelie", rooted_basis,
      [](const QElem& x, const Label& s, const QElem& y) {
        return prelie_compose(as_rooted(x, "prelie"), s, as_rooted(y, "prelie"))
            .map([](const RootedTree& t) { return QElem(t); });
      },
      rooted_unit);
}

OperadInstance mag_operad() {
  return OperadInstance(
      "mag", planar_basis,
      [](const QElem& x, const Label& s, const QElem& y) {
        return LinComb<QElem>::term(
            mag_compose(as_planar(x, "mag"), s, as_planar(y, "mag")));
      },
      planar_unit);
}

OperadInstance shuffle_mag_operad() {
  return OperadInstance(
      "shmag", planar_basis,
      [](const QElem& x, const Label& s, const QElem& y) {
        return shuffle_mag_compose(as_planar(x, "shmag"), s, as_planar(y, "shmag"))
            .map([](const PlanarRootedTree& t) { return QElem(t); });
      },
      planar_unit);
}

OperadInstance com_operad() {
  return OperadInstance(
      "com",
      [](const FiniteSet& s) { return std::vector<QElem>{ComElement{s}}; },
      [](const QElem& x, const Label& s, const QElem& y) {
        const auto* a = std::get_if<ComElement>(&x);
        const auto* b = std::get_if<ComElement>(&y);
        if (!a || !b) throw std::invalid_argument("com: operands must be plain ground sets");
        return LinComb<QElem>::term(ComElement{glue_sets(a->ground, s, b->ground)});
      },
      [](const Label& s) { return QElem(ComElement{FiniteSet{s}}); });
}

std::vector<OperadInstance> operad_instances() {
  return {nap_operad(), prelie_operad(), mag_operad(), shuffle_mag_operad()};
}

std::optional<OperadInstance> operad_by_name(const std::string& name) {
  if (name == "nap") return nap_operad();
  if (name == "prelie") return prelie_operad();
  if (name == "mag") return mag_operad();
  if (name == "shmag") return shuffle_mag_operad();
  if (name == "com") return com_operad();
  return std::nullopt;
}

}  // namespace operads
