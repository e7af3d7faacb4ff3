#include "operads/composition.hpp"

#include <algorithm>
#include <functional>

namespace operads {

std::string to_text(const BlockTree& t) {
  return std::visit([](const auto& x) { return to_text(x); }, t);
}

namespace {

FiniteSet block_tree_vertices(const BlockTree& t) {
  return std::visit([](const auto& x) { return x.vertices(); }, t);
}

BlockTree relabel_block_tree(const BlockTree& t, const Bijection& sigma) {
  return std::visit([&](const auto& x) { return BlockTree(relabel(x, sigma)); }, t);
}

}  // namespace

CompositionElement::CompositionElement(Partition partition, BlockTree tree,
                                       std::map<Label, QElem> values)
    : partition_(std::move(partition)), tree_(std::move(tree)), values_(std::move(values)) {
  const FiniteSet names = partition_.block_names();
  if (block_tree_vertices(tree_) != names)
    throw std::invalid_argument("composition element: tree vertices " +
                                to_text(block_tree_vertices(tree_)) +
                                " are not the block names " + to_text(names));
  for (const auto& block : partition_.blocks()) {
    auto it = values_.find(block.min());
    if (it == values_.end())
      throw std::invalid_argument("composition element: no value for block " + to_text(block));
    if (ground_of(it->second) != block)
      throw std::invalid_argument("composition element: value for block " + to_text(block) +
                                  " lives over " + to_text(ground_of(it->second)));
  }
  if (values_.size() != partition_.block_count())
    throw std::invalid_argument("composition element: stray block values");
}

const QElem& CompositionElement::value_at(const Label& block_name) const {
  auto it = values_.find(block_name);
  if (it == values_.end())
    throw std::invalid_argument("composition element: no block named " + block_name.str());
  return it->second;
}

Label CompositionElement::tree_root() const {
  return std::visit([](const auto& x) { return x.root(); }, tree_);
}

std::string to_text(const CompositionElement& x) {
  const auto& blocks = x.partition().blocks();
  std::map<Label, Label> rename;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    rename.emplace(blocks[i].min(), Label("b" + std::to_string(i)));
  const Bijection to_indices(x.partition().block_names(), rename);

  std::string out = "{\"blocks\":[";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += ",";
    out += "[";
    bool first = true;
    for (const auto& l : blocks[i]) {
      if (!first) out += ",";
      out += "\"" + l.str() + "\"";
      first = false;
    }
    out += "]";
  }
  out += "],\"tree\":\"" + to_text(relabel_block_tree(x.tree(), to_indices)) + "\",\"values\":{";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += ",";
    out += "\"b" + std::to_string(i) + "\":\"" + to_text(x.value_at(blocks[i].min())) + "\"";
  }
  return out + "}}";
}

namespace {

// Shared bookkeeping of box/diamond: locate the two blocks being merged,
// glue the partitions, and rename the root block of y's tree to the merged
// block's name.
struct MergePlan {
  Label x_block_name;        // name of the block of x containing s
  Label y_root_name;         // name of the root block of y
  FiniteSet merged_block;    // (C_s minus s) united with y's root block
  Partition partition;       // glued partition
  std::map<Label, QElem> base_values;  // every block except the merged one
};

MergePlan plan_merge(const CompositionElement& x, const Label& s, const CompositionElement& y,
                     const char* what) {
  if (!x.ground().contains(s))
    throw std::invalid_argument(std::string(what) + ": " + s.str() + " not in " +
                                to_text(x.ground()));
  if (!x.ground().minus(s).disjoint_from(y.ground()))
    throw std::invalid_argument(std::string(what) + ": ground sets overlap");

  const FiniteSet& c_s = x.partition().block_containing(s);
  const FiniteSet& b_root = y.partition().block_containing(y.tree_root());
  MergePlan plan{c_s.min(), b_root.min(), c_s.minus(s).united(b_root),
                 glue_partitions(x.partition(), s, y.partition(), b_root), {}};
  for (const auto& block : x.partition().blocks())
    if (block != c_s) plan.base_values.emplace(block.min(), x.value_at(block.min()));
  for (const auto& block : y.partition().blocks())
    if (block != b_root) plan.base_values.emplace(block.min(), y.value_at(block.min()));
  return plan;
}

Bijection rename_one(const FiniteSet& vertices, const Label& from, const Label& to) {
  std::map<Label, Label> m;
  for (const auto& v : vertices) m.emplace(v, v == from ? to : v);
  return Bijection(vertices, std::move(m));
}

}  // namespace

LinComb<CompositionElement> box_compose(const CompositionElement& x, const Label& s,
                                        const CompositionElement& y, const OperadInstance& q) {
  const auto* xt = std::get_if<RootedTree>(&x.tree());
  const auto* yt = std::get_if<RootedTree>(&y.tree());
  if (!xt || !yt)
    throw std::invalid_argument("box_compose: operands must carry non-planar block trees");

  const MergePlan plan = plan_merge(x, s, y, "box_compose");
  RootedTree block_tree = nap_compose(*xt, plan.x_block_name, *yt);
  if (plan.merged_block.min() != plan.y_root_name)
    block_tree = relabel(block_tree, rename_one(block_tree.vertices(), plan.y_root_name,
                                                plan.merged_block.min()));

  const LinComb<QElem> merged =
      q.compose(x.value_at(plan.x_block_name), s, y.value_at(plan.y_root_name));
  LinComb<CompositionElement> out;
  for (const auto& [elem, coeff] : merged.terms()) {
    auto values = plan.base_values;
    values.emplace(plan.merged_block.min(), elem);
    out.add_term(CompositionElement(plan.partition, block_tree, std::move(values)), coeff);
  }
  return out;
}

LinComb<CompositionElement> diamond_compose(const CompositionElement& x, const Label& s,
                                            const CompositionElement& y,
                                            const OperadInstance& q) {
  const auto* xt = std::get_if<PlanarRootedTree>(&x.tree());
  const auto* yt = std::get_if<PlanarRootedTree>(&y.tree());
  if (!xt || !yt)
    throw std::invalid_argument("diamond_compose: operands must carry planar block trees");

  const MergePlan plan = plan_merge(x, s, y, "diamond_compose");
  const LinComb<QElem> merged =
      q.compose(x.value_at(plan.x_block_name), s, y.value_at(plan.y_root_name));

  LinComb<CompositionElement> out;
  for (const auto& h :
       enumerate_shuffles(xt->children(plan.x_block_name), yt->children(yt->root()))) {
    PlanarRootedTree block_tree = planar_graft(*xt, plan.x_block_name, *yt, h.merged());
    if (plan.merged_block.min() != plan.y_root_name)
      block_tree = relabel(block_tree, rename_one(block_tree.vertices(), plan.y_root_name,
                                                  plan.merged_block.min()));
    for (const auto& [elem, coeff] : merged.terms()) {
      auto values = plan.base_values;
      values.emplace(plan.merged_block.min(), elem);
      out.add_term(CompositionElement(plan.partition, block_tree, std::move(values)), coeff);
    }
  }
  return out;
}

CompositionElement relabel_composition(const CompositionElement& x, const Bijection& sigma) {
  if (sigma.domain() != x.ground())
    throw std::invalid_argument("relabel_composition: bijection domain does not match ground");

  std::vector<FiniteSet> new_blocks;
  std::map<Label, Label> name_map;
  std::map<Label, QElem> new_values;
  for (const auto& block : x.partition().blocks()) {
    std::vector<Label> mapped;
    mapped.reserve(block.size());
    for (const auto& l : block) mapped.push_back(sigma(l));
    FiniteSet image(std::move(mapped));
    name_map.emplace(block.min(), image.min());
    new_values.emplace(image.min(),
                       relabel_qelem(x.value_at(block.min()), sigma.restricted_to(block)));
    new_blocks.push_back(std::move(image));
  }
  const Bijection tree_map(x.partition().block_names(), std::move(name_map));
  return CompositionElement(Partition(sigma.codomain(), std::move(new_blocks)),
                            relabel_block_tree(x.tree(), tree_map), std::move(new_values));
}

Integer composition_dimension(const OperadInstance& outer, const OperadInstance& inner,
                              const FiniteSet& ground) {
  if (ground.empty()) throw std::invalid_argument("composition_dimension: empty ground set");
  Integer total = 0;
  for (const auto& partition : enumerate_partitions(ground)) {
    Integer product = Integer(outer.basis(partition.block_names()).size());
    for (const auto& block : partition.blocks()) product *= Integer(inner.basis(block).size());
    total += product;
  }
  return total;
}

std::vector<CompositionElement> enumerate_composition_elements(const OperadInstance& outer,
                                                               const OperadInstance& inner,
                                                               const FiniteSet& ground) {
  if (ground.empty())
    throw std::invalid_argument("enumerate_composition_elements: empty ground set");
  std::vector<CompositionElement> out;
  for (const auto& partition : enumerate_partitions(ground)) {
    const auto& blocks = partition.blocks();
    std::vector<std::vector<QElem>> per_block;
    per_block.reserve(blocks.size());
    for (const auto& block : blocks) per_block.push_back(inner.basis(block));

    for (const auto& outer_elem : outer.basis(partition.block_names())) {
      BlockTree tree = std::visit(
          [](const auto& t) -> BlockTree {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, ComElement>)
              throw std::invalid_argument(
                  "enumerate_composition_elements: outer operad must be a tree operad");
            else
              return BlockTree(t);
          },
          outer_elem);

      std::vector<std::size_t> pick(blocks.size(), 0);
      while (true) {
        std::map<Label, QElem> values;
        for (std::size_t i = 0; i < blocks.size(); ++i)
          values.emplace(blocks[i].min(), per_block[i][pick[i]]);
        out.emplace_back(partition, tree, std::move(values));

        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == per_block[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
      }
    }
  }
  return out;
}

namespace {

std::map<Label, QElem> unit_values(const FiniteSet& vertices, const OperadInstance& q) {
  std::map<Label, QElem> values;
  for (const auto& v : vertices) values.emplace(v, q.unit(v));
  return values;
}

}  // namespace

CompositionElement singleton_lift(const RootedTree& t, const OperadInstance& q) {
  return CompositionElement(Partition::singletons(t.vertices()), t,
                            unit_values(t.vertices(), q));
}

CompositionElement singleton_lift(const PlanarRootedTree& t, const OperadInstance& q) {
  return CompositionElement(Partition::singletons(t.vertices()), t,
                            unit_values(t.vertices(), q));
}

CompositionElement BoxOperad::unit(const Label& s) const {
  return CompositionElement(Partition::singletons(FiniteSet{s}), RootedTree::single(s),
                            {{s, inner_.unit(s)}});
}

CompositionElement DiamondOperad::unit(const Label& s) const {
  return CompositionElement(Partition::singletons(FiniteSet{s}), PlanarRootedTree::single(s),
                            {{s, inner_.unit(s)}});
}

}  // namespace operads
