#include "operads/partition.hpp"

#include <algorithm>

namespace operads {

Partition::Partition(FiniteSet ground, std::vector<FiniteSet> blocks)
    : ground_(std::move(ground)), blocks_(std::move(blocks)) {
  std::size_t total = 0;
  for (const auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("partition: empty block");
    if (!b.subset_of(ground_)) throw std::invalid_argument("partition: block " + to_text(b) + " outside ground");
    total += b.size();
  }
  if (total != ground_.size()) throw std::invalid_argument("partition: blocks do not partition the ground set");
  std::sort(blocks_.begin(), blocks_.end(),
            [](const FiniteSet& a, const FiniteSet& b) { return a.min() < b.min(); });
}

Partition Partition::singletons(const FiniteSet& ground) {
  std::vector<FiniteSet> blocks;
  blocks.reserve(ground.size());
  for (const auto& l : ground) blocks.push_back(FiniteSet{l});
  return Partition(ground, std::move(blocks));
}

Partition Partition::single_block(const FiniteSet& ground) {
  if (ground.empty()) throw std::invalid_argument("partition: single block of empty set");
  return Partition(ground, {ground});
}

const FiniteSet& Partition::block_containing(const Label& l) const {
  for (const auto& b : blocks_)
    if (b.contains(l)) return b;
  throw std::invalid_argument("partition: " + l.str() + " not in ground set");
}

FiniteSet Partition::block_names() const {
  std::vector<Label> names;
  names.reserve(blocks_.size());
  for (const auto& b : blocks_) names.push_back(b.min());
  return FiniteSet(std::move(names));
}

std::string to_text(const Partition& p) {
  std::string out = "{";
  bool first = true;
  for (const auto& b : p.blocks()) {
    if (!first) out += ",";
    out += to_text(b);
    first = false;
  }
  return out + "}";
}

std::vector<Partition> enumerate_partitions(const FiniteSet& ground) {
  std::vector<std::vector<FiniteSet>> partial = {{}};
  // insert labels one at a time: into an existing block or as a new block
  for (const auto& l : ground) {
    std::vector<std::vector<FiniteSet>> next;
    for (const auto& blocks : partial) {
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        auto grown = blocks;
        grown[i] = grown[i].united(FiniteSet{l});
        next.push_back(std::move(grown));
      }
      auto extended = blocks;
      extended.push_back(FiniteSet{l});
      next.push_back(std::move(extended));
    }
    partial = std::move(next);
  }
  std::vector<Partition> out;
  out.reserve(partial.size());
  for (auto& blocks : partial) out.emplace_back(ground, std::move(blocks));
  std::sort(out.begin(), out.end());
  return out;
}

Partition glue_partitions(const Partition& pi, const Label& s, const Partition& rho,
                          const FiniteSet& rho_root_block) {
  const auto& rho_blocks = rho.blocks();
  if (std::find(rho_blocks.begin(), rho_blocks.end(), rho_root_block) == rho_blocks.end())
    throw std::invalid_argument("glue_partitions: designated block " + to_text(rho_root_block) +
                                " is not a block of " + to_text(rho));
  const FiniteSet& c_s = pi.block_containing(s);
  const FiniteSet merged = c_s.minus(s).united(rho_root_block);

  std::vector<FiniteSet> blocks;
  for (const auto& b : pi.blocks())
    if (b != c_s) blocks.push_back(b);
  for (const auto& b : rho_blocks)
    if (b != rho_root_block) blocks.push_back(b);
  blocks.push_back(merged);
  return Partition(glue_sets(pi.ground(), s, rho.ground()), std::move(blocks));
}

}  // namespace operads
