#include "operads/lawcheck.hpp"

#include <algorithm>
#include <array>

namespace operads {

std::string law_name(LawId law) {
  switch (law) {
    case LawId::A1: return "A1";
    case LawId::A2: return "A2";
    case LawId::N1: return "N1";
    case LawId::N2: return "N2";
    case LawId::U1: return "U1";
    case LawId::U2: return "U2";
    case LawId::EQ1: return "EQ1";
  }
  return "?";
}

std::optional<LawId> law_from_name(const std::string& name) {
  for (LawId law : {LawId::A1, LawId::A2, LawId::N1, LawId::N2, LawId::U1, LawId::U2, LawId::EQ1})
    if (law_name(law) == name) return law;
  return std::nullopt;
}

namespace {

FiniteSet alphabet_prefix(const std::vector<Label>& pool, int n, const char* which) {
  if (n < 0 || static_cast<std::size_t>(n) > pool.size())
    throw std::invalid_argument(std::string("sweep alphabet ") + which + " has only " +
                                std::to_string(pool.size()) + " labels");
  return FiniteSet(std::vector<Label>(pool.begin(), pool.begin() + n));
}

}  // namespace

FiniteSet sweep_s(int n) { return alphabet_prefix({"1", "2", "3", "4", "5", "6"}, n, "S"); }
FiniteSet sweep_t(int n) { return alphabet_prefix({"a", "b", "c", "d", "e", "f"}, n, "T"); }
FiniteSet sweep_r(int n) { return alphabet_prefix({"x", "y", "z"}, n, "R"); }
FiniteSet sweep_s_primed(int n) {
  return alphabet_prefix({"7", "8", "9", "10", "11", "12"}, n, "S'");
}
FiniteSet sweep_t_primed(int n) { return alphabet_prefix({"g", "h", "i", "j", "k", "l"}, n, "T'"); }

std::vector<Bijection> all_bijections(const FiniteSet& from, const FiniteSet& to) {
  if (from.size() != to.size())
    throw std::invalid_argument("all_bijections: sets have different sizes");
  std::vector<Label> image = to.labels();
  std::sort(image.begin(), image.end());
  std::vector<Bijection> out;
  do {
    std::map<Label, Label> m;
    for (std::size_t i = 0; i < image.size(); ++i) m.emplace(from.labels()[i], image[i]);
    out.emplace_back(from, std::move(m));
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

std::string to_text(const LawReport& report) {
  std::string out = law_name(report.law) + " " + report.subject + ": " +
                    (report.holds ? "holds" : "counterexample") + " (" +
                    std::to_string(report.instances) + " instances)";
  if (report.witness) out += "\n  at " + *report.witness;
  return out;
}

LawReport check_eq1(const OperadInstance& q, const Bounds& bounds) {
  LawReport report = detail::make_report(LawId::EQ1, q.name());
  const auto triples = detail::size_triples(bounds);

  long long planned = 0;
  std::vector<std::tuple<int, int, int, std::vector<QElem>, std::vector<QElem>, std::vector<QElem>>>
      bases;
  for (const auto& [ns, nt, nr] : triples) {
    auto xs = q.basis(sweep_s(ns));
    auto us = q.basis(sweep_t(nt));
    auto vs = q.basis(sweep_r(nr));
    planned += static_cast<long long>(xs.size()) * us.size() * vs.size() * ns;
    bases.emplace_back(ns, nt, nr, std::move(xs), std::move(us), std::move(vs));
  }
  detail::guard_instances(planned, bounds);

  for (const auto& [ns, nt, nr, xs, us, vs] : bases) {
    const FiniteSet s_set = sweep_s(ns);
    const FiniteSet t_set = sweep_t(nt);
    const FiniteSet r_set = sweep_r(nr);
    for (const auto& x : xs)
      for (const auto& u : us)
        for (const auto& v : vs) {
          const Label root_u = root_of(u);
          const Label root_v = root_of(v);
          for (const auto& s : s_set) {
            ++report.instances;
            const auto lhs = q.compose(x, s, u).flat_map(
                [&](const QElem& e) { return q.compose(e, root_u, v); });
            const auto inner = q.compose(x, s, v).flat_map(
                [&](const QElem& e) { return q.compose(e, root_v, u); });
            const FiniteSet ground = glue_sets(glue_sets(s_set, s, r_set), root_v, t_set);
            const Bijection phi = root_swap_bijection(ground, root_u, root_v);
            const auto rhs = inner.map([&](const QElem& e) { return q.relabel(e, phi); });
            if (lhs != rhs) {
              report.holds = false;
              report.witness = detail::law_witness({{"t", to_text(x)},
                                                    {"u", to_text(u)},
                                                    {"v", to_text(v)},
                                                    {"s", s.str()}},
                                                   lhs, rhs);
              return report;
            }
          }
        }
  }
  return report;
}

std::vector<LawReport> check_composition_operad(CompositionKind kind, const OperadInstance& q,
                                                const Bounds& comp_bounds,
                                                const Bounds& q_bounds) {
  for (const auto& rep : check_axiom_suite(q, q_bounds)) {
    if (!rep.holds)
      throw std::runtime_error("inner operad " + q.name() + " fails " + law_name(rep.law) +
                               "; refusing to check the composition built on it\n  at " +
                               rep.witness.value_or(""));
  }
  if (kind == CompositionKind::Box) return check_axiom_suite(BoxOperad(q), comp_bounds);
  return check_axiom_suite(DiamondOperad(q), comp_bounds);
}

// ---------------------------------------------------------------------------
// Edge-list oracle. Trees are flattened to (child, parent) pairs, spliced by
// plain list rewriting, and rebuilt through the validating constructors; the
// planar variants carry an explicit slot per edge.

namespace {

struct EdgeList {
  Label root;
  std::vector<std::pair<Label, Label>> edges;  // (child, parent)
};

EdgeList to_edges(const RootedTree& t) {
  EdgeList out{t.root(), {}};
  for (const auto& [c, p] : t.parent_map()) out.edges.emplace_back(c, p);
  return out;
}

RootedTree from_edges(const EdgeList& e) {
  std::map<Label, Label> parent;
  for (const auto& [c, p] : e.edges)
    if (!parent.emplace(c, p).second)
      throw std::logic_error("oracle: vertex " + c.str() + " acquired two parents");
  return RootedTree(e.root, std::move(parent));
}

// Replace vertex s of u by v; edges formerly into s go to target(child).
EdgeList splice(const EdgeList& u, const Label& s, const EdgeList& v,
                const std::function<Label(const Label&)>& target) {
  EdgeList out{u.root == s ? v.root : u.root, {}};
  for (const auto& [c, p] : u.edges) {
    if (c == s)
      out.edges.emplace_back(v.root, p);
    else if (p == s)
      out.edges.emplace_back(c, target(c));
    else
      out.edges.emplace_back(c, p);
  }
  out.edges.insert(out.edges.end(), v.edges.begin(), v.edges.end());
  return out;
}

struct SlottedEdgeList {
  Label root;
  std::vector<std::tuple<Label, Label, int>> edges;  // (child, parent, slot)
};

SlottedEdgeList to_slotted(const PlanarRootedTree& t) {
  SlottedEdgeList out{t.root(), {}};
  for (const auto& [v, kids] : t.children_map())
    for (std::size_t i = 0; i < kids.size(); ++i)
      out.edges.emplace_back(kids[i], v, static_cast<int>(i));
  return out;
}

PlanarRootedTree from_slotted(const SlottedEdgeList& e) {
  std::map<Label, std::vector<std::pair<int, Label>>> grouped;
  grouped[e.root];
  for (const auto& [c, p, slot] : e.edges) {
    grouped[c];
    grouped[p].emplace_back(slot, c);
  }
  std::map<Label, std::vector<Label>> children;
  for (auto& [v, slots] : grouped) {
    std::sort(slots.begin(), slots.end());
    auto& kids = children[v];
    for (const auto& [slot, c] : slots) kids.push_back(c);
  }
  return PlanarRootedTree(e.root, std::move(children));
}

// Planar splice: s's slot is taken over by v's root; the slots of the edges
// formerly into s and of those into v's root are reassigned by slot_of.
SlottedEdgeList splice_slotted(const SlottedEdgeList& u, const Label& s, const SlottedEdgeList& v,
                               const std::function<int(const Label&, int, bool)>& slot_of) {
  SlottedEdgeList out{u.root == s ? v.root : u.root, {}};
  for (const auto& [c, p, slot] : u.edges) {
    if (c == s)
      out.edges.emplace_back(v.root, p, slot);
    else if (p == s)
      out.edges.emplace_back(c, v.root, slot_of(c, slot, true));
    else
      out.edges.emplace_back(c, p, slot);
  }
  for (const auto& [c, p, slot] : v.edges) {
    if (p == v.root)
      out.edges.emplace_back(c, p, slot_of(c, slot, false));
    else
      out.edges.emplace_back(c, p, slot);
  }
  return out;
}

int count_children(const SlottedEdgeList& e, const Label& v) {
  int n = 0;
  for (const auto& [c, p, slot] : e.edges)
    if (p == v) ++n;
  return n;
}

LinComb<QElem> oracle_nap(const RootedTree& u, const Label& s, const RootedTree& v) {
  const EdgeList spliced =
      splice(to_edges(u), s, to_edges(v), [&](const Label&) { return v.root(); });
  return LinComb<QElem>::term(from_edges(spliced));
}

LinComb<QElem> oracle_prelie(const RootedTree& u, const Label& s, const RootedTree& v) {
  const EdgeList ue = to_edges(u);
  const EdgeList ve = to_edges(v);
  std::vector<Label> branches;
  for (const auto& [c, p] : ue.edges)
    if (p == s) branches.push_back(c);
  const std::vector<Label> targets = v.vertices().labels();

  LinComb<QElem> out;
  long long total = 1;
  for (std::size_t i = 0; i < branches.size(); ++i) total *= static_cast<long long>(targets.size());
  for (long long code = 0; code < total; ++code) {
    // mixed-radix digits of code pick a target vertex per branch
    std::map<Label, Label> choice;
    long long rest = code;
    for (const auto& b : branches) {
      choice.emplace(b, targets[rest % targets.size()]);
      rest /= targets.size();
    }
    const EdgeList spliced = splice(ue, s, ve, [&](const Label& c) { return choice.at(c); });
    out.add_term(from_edges(spliced), 1);
  }
  return out;
}

LinComb<QElem> oracle_mag(const PlanarRootedTree& u, const Label& s, const PlanarRootedTree& v) {
  const SlottedEdgeList ue = to_slotted(u);
  const SlottedEdgeList ve = to_slotted(v);
  const int m = count_children(ve, v.root());
  const SlottedEdgeList spliced = splice_slotted(
      ue, s, ve, [&](const Label&, int slot, bool from_u) { return from_u ? m + slot : slot; });
  return LinComb<QElem>::term(from_slotted(spliced));
}

LinComb<QElem> oracle_shuffle_mag(const PlanarRootedTree& t, const Label& s,
                                  const PlanarRootedTree& u) {
  const SlottedEdgeList te = to_slotted(t);
  const SlottedEdgeList ue = to_slotted(u);
  const int k = count_children(te, s);
  const int m = count_children(ue, u.root());
  const int n = m + k;

  LinComb<QElem> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    // bits of mask are the slots given to the branches formerly at s
    std::vector<int> s_slots, u_slots;
    for (int i = 0; i < n; ++i) (mask & (1u << i) ? s_slots : u_slots).push_back(i);
    const SlottedEdgeList spliced =
        splice_slotted(te, s, ue, [&](const Label&, int slot, bool from_t) {
          return from_t ? s_slots[slot] : u_slots[slot];
        });
    out.add_term(from_slotted(spliced), 1);
  }
  return out;
}

}  // namespace

LinComb<QElem> brute_force_oracle_compose(const std::string& kind, const QElem& t, const Label& s,
                                          const QElem& u) {
  if (kind == "nap" || kind == "prelie") {
    const auto* a = std::get_if<RootedTree>(&t);
    const auto* b = std::get_if<RootedTree>(&u);
    if (!a || !b) throw std::invalid_argument("oracle " + kind + ": operands must be rooted trees");
    return kind == "nap" ? oracle_nap(*a, s, *b) : oracle_prelie(*a, s, *b);
  }
  if (kind == "mag" || kind == "shmag") {
    const auto* a = std::get_if<PlanarRootedTree>(&t);
    const auto* b = std::get_if<PlanarRootedTree>(&u);
    if (!a || !b)
      throw std::invalid_argument("oracle " + kind + ": operands must be planar rooted trees");
    return kind == "mag" ? oracle_mag(*a, s, *b) : oracle_shuffle_mag(*a, s, *b);
  }
  throw std::invalid_argument("oracle: unknown composition " + kind);
}

// ---------------------------------------------------------------------------
// Named sweeps with expected verdicts.

std::string to_text(const SuiteEntry& entry) {
  std::string out = law_name(entry.report.law) + " " + entry.report.subject + ": " +
                    (entry.report.holds ? "holds" : "counterexample") + " (" +
                    std::to_string(entry.report.instances) + " instances)";
  if (!entry.report.holds && !entry.expected_holds) out += " [expected]";
  if (!entry.as_expected()) out += " [UNEXPECTED]";
  if (entry.report.witness) out += "\n  at " + *entry.report.witness;
  return out;
}

std::vector<SuiteEntry> run_suite(const std::string& name, const SuiteOptions& options,
                                  const std::function<void(const SuiteEntry&)>& on_entry) {
  std::vector<SuiteEntry> entries;
  const auto emit = [&](SuiteEntry entry) {
    if (on_entry) on_entry(entry);
    entries.push_back(std::move(entry));
  };
  const auto plain = [&](const OperadInstance& op) {
    for (auto& rep : check_axiom_suite(op, options.tree_bounds))
      emit({op.name(), std::move(rep), true});
  };
  const auto eq1 = [&](const OperadInstance& op, bool expected_holds) {
    emit({op.name(), check_eq1(op, options.tree_bounds), expected_holds});
  };
  const auto comp = [&](CompositionKind kind, const OperadInstance& q) {
    const std::string subject = (kind == CompositionKind::Box ? "box:" : "diamond:") + q.name();
    for (auto& rep : check_composition_operad(kind, q, options.comp_bounds, options.tree_bounds))
      emit({subject, std::move(rep), true});
  };
  const auto comp_all = [&](CompositionKind kind) {
    for (const auto& q : {com_operad(), nap_operad(), shuffle_mag_operad()}) comp(kind, q);
  };

  if (name == "com") {
    plain(com_operad());
  } else if (name == "nap") {
    plain(nap_operad());
    eq1(nap_operad(), true);
  } else if (name == "prelie") {
    plain(prelie_operad());
    eq1(prelie_operad(), false);
  } else if (name == "mag") {
    plain(mag_operad());
    eq1(mag_operad(), false);
  } else if (name == "shmag") {
    plain(shuffle_mag_operad());
    eq1(shuffle_mag_operad(), true);
  } else if (name == "eq1") {
    eq1(nap_operad(), true);
    eq1(prelie_operad(), false);
    eq1(mag_operad(), false);
    eq1(shuffle_mag_operad(), true);
  } else if (name == "box") {
    comp_all(CompositionKind::Box);
  } else if (name == "diamond") {
    comp_all(CompositionKind::Diamond);
  } else if (name == "all") {
    plain(com_operad());
    for (const auto& op : operad_instances()) plain(op);
    eq1(nap_operad(), true);
    eq1(prelie_operad(), false);
    eq1(mag_operad(), false);
    eq1(shuffle_mag_operad(), true);
    comp_all(CompositionKind::Box);
    comp_all(CompositionKind::Diamond);
  } else {
    throw std::invalid_argument("unknown suite: " + name);
  }
  return entries;
}

bool suite_passed(const std::vector<SuiteEntry>& entries) {
  return std::all_of(entries.begin(), entries.end(),
                     [](const SuiteEntry& e) { return e.as_expected(); });
}

}  // namespace operads
