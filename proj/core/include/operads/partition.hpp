#pragma once

#include <vector>

#include "operads/labels.hpp"

namespace operads {

// A set partition: nonempty pairwise-disjoint blocks covering the ground
// set, kept sorted by smallest element so equal partitions compare equal.
class Partition {
 public:
  Partition(FiniteSet ground, std::vector<FiniteSet> blocks);

  static Partition singletons(const FiniteSet& ground);
  static Partition single_block(const FiniteSet& ground);

  const FiniteSet& ground() const { return ground_; }
  const std::vector<FiniteSet>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }

  const FiniteSet& block_containing(const Label& l) const;

  // The smallest elements of the blocks, one per block.
  FiniteSet block_names() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  FiniteSet ground_;
  std::vector<FiniteSet> blocks_;
};

std::string to_text(const Partition& p);

// All partitions of the ground set, in a fixed deterministic order.
std::vector<Partition> enumerate_partitions(const FiniteSet& ground);

// Partition of glue_sets(S, s, T): keeps the blocks of pi except the one
// containing s, the blocks of rho except rho_root_block, and merges those
// two into (C_s minus {s}) united rho_root_block.
Partition glue_partitions(const Partition& pi, const Label& s, const Partition& rho,
                          const FiniteSet& rho_root_block);

}  // namespace operads
