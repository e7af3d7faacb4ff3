#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace operads {

// Total order used everywhere labels are sorted: maximal digit runs compare
// as numbers, other characters compare bytewise, and ties between distinct
// spellings ("01" vs "1") fall back to the raw string. Hence "2" < "10" and
// "1" < "a" < "b".
int natural_compare(const std::string& a, const std::string& b);

// An atom naming a vertex, a set element, or a block. Compares in natural
// order, not raw byte order.
class Label {
 public:
  Label() = default;
  Label(std::string text) : text_(std::move(text)) {}
  Label(const char* text) : text_(text) {}

  const std::string& str() const { return text_; }
  bool empty() const { return text_.empty(); }

  friend bool operator==(const Label& a, const Label& b) { return a.text_ == b.text_; }
  friend std::strong_ordering operator<=>(const Label& a, const Label& b) {
    const int c = natural_compare(a.text_, b.text_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  std::string text_;
};

// An ordered set of distinct labels; iteration follows the label order.
class FiniteSet {
 public:
  FiniteSet() = default;
  FiniteSet(std::initializer_list<Label> labels);
  explicit FiniteSet(std::vector<Label> labels);

  bool contains(const Label& l) const;
  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::vector<Label>& labels() const { return labels_; }

  // Smallest label; the canonical name of a partition block.
  const Label& min() const;

  auto begin() const { return labels_.begin(); }
  auto end() const { return labels_.end(); }

  FiniteSet minus(const Label& l) const;
  FiniteSet united(const FiniteSet& other) const;
  bool disjoint_from(const FiniteSet& other) const;
  bool subset_of(const FiniteSet& other) const;

  friend bool operator==(const FiniteSet&, const FiniteSet&) = default;
  friend auto operator<=>(const FiniteSet&, const FiniteSet&) = default;

 private:
  std::vector<Label> labels_;  // sorted, no duplicates
};

std::string to_text(const FiniteSet& s);

// (S minus {s}) union T. T may reuse the removed label s itself; any other
// overlap between S\{s} and T is an error.
FiniteSet glue_sets(const FiniteSet& s_set, const Label& s, const FiniteSet& t_set);

// A bijective relabeling map between two finite sets.
class Bijection {
 public:
  Bijection(const FiniteSet& domain, std::map<Label, Label> mapping);

  static Bijection identity(const FiniteSet& s);
  static Bijection from_pairs(std::initializer_list<std::pair<Label, Label>> pairs);

  const FiniteSet& domain() const { return domain_; }
  const FiniteSet& codomain() const { return codomain_; }
  const std::map<Label, Label>& mapping() const { return map_; }

  const Label& operator()(const Label& l) const;

  Bijection inverse() const;
  // x -> next(this(x)); this->codomain must equal next.domain.
  Bijection then(const Bijection& next) const;
  Bijection restricted_to(const FiniteSet& sub) const;
  // Union of two maps with disjoint domains and disjoint codomains.
  Bijection united(const Bijection& other) const;

 private:
  FiniteSet domain_;
  FiniteSet codomain_;
  std::map<Label, Label> map_;
};

}  // namespace operads
