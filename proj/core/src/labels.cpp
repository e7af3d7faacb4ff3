#include "operads/labels.hpp"

#include <algorithm>
#include <cctype>

namespace operads {

int natural_compare(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
    const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
    if (da && db) {
      std::size_t ia = i, jb = j;
      while (ia < a.size() && std::isdigit(static_cast<unsigned char>(a[ia]))) ++ia;
      while (jb < b.size() && std::isdigit(static_cast<unsigned char>(b[jb]))) ++jb;
      // strip leading zeros, then longer run of significant digits wins
      std::size_t pa = i, pb = j;
      while (pa + 1 < ia && a[pa] == '0') ++pa;
      while (pb + 1 < jb && b[pb] == '0') ++pb;
      const std::size_t la = ia - pa, lb = jb - pb;
      if (la != lb) return la < lb ? -1 : 1;
      for (std::size_t k = 0; k < la; ++k) {
        if (a[pa + k] != b[pb + k]) return a[pa + k] < b[pb + k] ? -1 : 1;
      }
      i = ia;
      j = jb;
    } else {
      if (a[i] != b[j]) return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]) ? -1 : 1;
      ++i;
      ++j;
    }
  }
  if (i < a.size()) return 1;
  if (j < b.size()) return -1;
  // numerically equal but different spellings ("01" vs "1"): raw order
  return a.compare(b) < 0 ? -1 : (a == b ? 0 : 1);
}

FiniteSet::FiniteSet(std::initializer_list<Label> labels) : FiniteSet(std::vector<Label>(labels)) {}

FiniteSet::FiniteSet(std::vector<Label> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
}

bool FiniteSet::contains(const Label& l) const {
  return std::binary_search(labels_.begin(), labels_.end(), l);
}

const Label& FiniteSet::min() const {
  if (labels_.empty()) throw std::invalid_argument("min of empty set");
  return labels_.front();
}

FiniteSet FiniteSet::minus(const Label& l) const {
  std::vector<Label> out;
  out.reserve(labels_.size());
  for (const auto& x : labels_)
    if (x != l) out.push_back(x);
  return FiniteSet(std::move(out));
}

FiniteSet FiniteSet::united(const FiniteSet& other) const {
  std::vector<Label> out;
  out.reserve(labels_.size() + other.labels_.size());
  std::merge(labels_.begin(), labels_.end(), other.labels_.begin(), other.labels_.end(),
             std::back_inserter(out));
  return FiniteSet(std::move(out));
}

bool FiniteSet::disjoint_from(const FiniteSet& other) const {
  auto i = labels_.begin();
  auto j = other.labels_.begin();
  while (i != labels_.end() && j != other.labels_.end()) {
    if (*i == *j) return false;
    if (*i < *j)
      ++i;
    else
      ++j;
  }
  return true;
}

bool FiniteSet::subset_of(const FiniteSet& other) const {
  return std::includes(other.labels_.begin(), other.labels_.end(), labels_.begin(), labels_.end());
}

std::string to_text(const FiniteSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& l : s) {
    if (!first) out += ",";
    out += l.str();
    first = false;
  }
  out += "}";
  return out;
}

FiniteSet glue_sets(const FiniteSet& s_set, const Label& s, const FiniteSet& t_set) {
  if (!s_set.contains(s)) throw std::invalid_argument("glue_sets: " + s.str() + " not in " + to_text(s_set));
  const FiniteSet rest = s_set.minus(s);
  if (!rest.disjoint_from(t_set))
    throw std::invalid_argument("glue_sets: " + to_text(rest) + " overlaps " + to_text(t_set));
  return rest.united(t_set);
}

Bijection::Bijection(const FiniteSet& domain, std::map<Label, Label> mapping)
    : domain_(domain), map_(std::move(mapping)) {
  if (map_.size() != domain_.size()) throw std::invalid_argument("bijection: mapping not total on domain");
  std::vector<Label> image;
  image.reserve(map_.size());
  for (const auto& [from, to] : map_) {
    if (!domain_.contains(from)) throw std::invalid_argument("bijection: " + from.str() + " not in domain");
    image.push_back(to);
  }
  codomain_ = FiniteSet(std::move(image));
  if (codomain_.size() != domain_.size()) throw std::invalid_argument("bijection: mapping not injective");
}

Bijection Bijection::identity(const FiniteSet& s) {
  std::map<Label, Label> m;
  for (const auto& l : s) m.emplace(l, l);
  return Bijection(s, std::move(m));
}

Bijection Bijection::from_pairs(std::initializer_list<std::pair<Label, Label>> pairs) {
  std::vector<Label> dom;
  std::map<Label, Label> m;
  for (const auto& [from, to] : pairs) {
    dom.push_back(from);
    m.emplace(from, to);
  }
  return Bijection(FiniteSet(std::move(dom)), std::move(m));
}

const Label& Bijection::operator()(const Label& l) const {
  auto it = map_.find(l);
  if (it == map_.end()) throw std::invalid_argument("bijection: " + l.str() + " not in domain");
  return it->second;
}

Bijection Bijection::inverse() const {
  std::map<Label, Label> m;
  for (const auto& [from, to] : map_) m.emplace(to, from);
  return Bijection(codomain_, std::move(m));
}

Bijection Bijection::then(const Bijection& next) const {
  if (codomain_ != next.domain_) throw std::invalid_argument("bijection composition: domain mismatch");
  std::map<Label, Label> m;
  for (const auto& [from, to] : map_) m.emplace(from, next(to));
  return Bijection(domain_, std::move(m));
}

Bijection Bijection::restricted_to(const FiniteSet& sub) const {
  if (!sub.subset_of(domain_)) throw std::invalid_argument("bijection restriction: not a subset of domain");
  std::map<Label, Label> m;
  for (const auto& l : sub) m.emplace(l, (*this)(l));
  return Bijection(sub, std::move(m));
}

Bijection Bijection::united(const Bijection& other) const {
  if (!domain_.disjoint_from(other.domain_) || !codomain_.disjoint_from(other.codomain_))
    throw std::invalid_argument("bijection union: domains or codomains overlap");
  std::map<Label, Label> m = map_;
  m.insert(other.map_.begin(), other.map_.end());
  return Bijection(domain_.united(other.domain_), std::move(m));
}

}  // namespace operads
