#pragma once

#include <concepts>
#include <functional>
#include <optional>
#include <sstream>
#include <tuple>

#include "operads/composition.hpp"
#include "operads/operad.hpp"

namespace operads {

// Anything with a basis enumerator, a partial composition returning formal
// sums, a relabeling action, and units. OperadInstance models this, and so
// do BoxOperad and DiamondOperad.
template <typename Q>
concept Operad = requires(const Q& q, const typename Q::Element& e, const Label& l,
                          const FiniteSet& fs, const Bijection& b) {
  { q.basis(fs) } -> std::same_as<std::vector<typename Q::Element>>;
  { q.compose(e, l, e) } -> std::same_as<LinComb<typename Q::Element>>;
  { q.relabel(e, b) } -> std::same_as<typename Q::Element>;
  { q.unit(l) } -> std::same_as<typename Q::Element>;
  { q.name() } -> std::convertible_to<std::string>;
};

// A1  (x o_s y) o_s' z == (x o_s' z) o_s y        for distinct s, s' in S
// A2  (x o_s y) o_t z == x o_s (y o_t z)          for s in S, t in T
// N1  relabeled operands compose to the relabeled composition
// N2  relabeling a unit gives the other unit
// U1  u_* o_* x == x
// U2  x o_s u_s == x
// EQ1 the root-exchange identity (tree operads only)
enum class LawId { A1, A2, N1, N2, U1, U2, EQ1 };

std::string law_name(LawId law);
std::optional<LawId> law_from_name(const std::string& name);

// Ground-set size limits for the exhaustive sweeps. When total_max > 0 the
// sum of the sizes in play is also capped. max_instances guards against
// accidental blowups; raise it explicitly for bigger sweeps.
struct Bounds {
  int s_max = 3;
  int t_max = 2;
  int r_max = 2;
  int total_max = 0;
  long long max_instances = 5'000'000;
};

struct LawReport {
  LawId law = LawId::A1;
  std::string subject;
  long long instances = 0;
  bool holds = true;
  std::optional<std::string> witness;
};

std::string to_text(const LawReport& report);

// Fixed disjoint alphabets for the sweeps; witnesses stay readable.
FiniteSet sweep_s(int n);         // 1, 2, 3, ...
FiniteSet sweep_t(int n);         // a, b, c, ...
FiniteSet sweep_r(int n);         // x, y, z
FiniteSet sweep_s_primed(int n);  // 7, 8, 9, ...
FiniteSet sweep_t_primed(int n);  // g, h, i, ...

std::vector<Bijection> all_bijections(const FiniteSet& from, const FiniteSet& to);

namespace detail {

inline LawReport make_report(LawId law, std::string subject) {
  LawReport report;
  report.law = law;
  report.subject = std::move(subject);
  return report;
}

template <typename E>
std::string law_witness(std::initializer_list<std::pair<const char*, std::string>> bindings,
                        const LinComb<E>& lhs, const LinComb<E>& rhs) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, value] : bindings) {
    if (!first) out << ", ";
    out << key << "=" << value;
    first = false;
  }
  out << "\n    lhs = " << to_text(lhs) << "\n    rhs = " << to_text(rhs);
  return out.str();
}

inline void guard_instances(long long planned, const Bounds& bounds) {
  if (planned > bounds.max_instances)
    throw std::runtime_error("law check would evaluate " + std::to_string(planned) +
                             " instances, above the cap of " +
                             std::to_string(bounds.max_instances) +
                             "; raise Bounds::max_instances to force it");
}

inline std::vector<std::pair<int, int>> size_pairs(const Bounds& b) {
  std::vector<std::pair<int, int>> out;
  for (int ns = 1; ns <= b.s_max; ++ns)
    for (int nt = 1; nt <= b.t_max; ++nt)
      if (b.total_max <= 0 || ns + nt <= b.total_max) out.emplace_back(ns, nt);
  return out;
}

inline std::vector<std::tuple<int, int, int>> size_triples(const Bounds& b) {
  std::vector<std::tuple<int, int, int>> out;
  for (int ns = 1; ns <= b.s_max; ++ns)
    for (int nt = 1; nt <= b.t_max; ++nt)
      for (int nr = 1; nr <= b.r_max; ++nr)
        if (b.total_max <= 0 || ns + nt + nr <= b.total_max) out.emplace_back(ns, nt, nr);
  return out;
}

template <Operad Q>
LawReport check_a1(const Q& q, const Bounds& bounds) {
  using E = typename Q::Element;
  LawReport report = make_report(LawId::A1, q.name());
  const auto triples = size_triples(bounds);

  long long planned = 0;
  std::map<std::tuple<int, int, int>, std::tuple<std::vector<E>, std::vector<E>, std::vector<E>>>
      bases;
  for (const auto& [ns, nt, nr] : triples) {
    if (ns < 2) continue;
    auto& [xs, ys, zs] = bases[{ns, nt, nr}];
    xs = q.basis(sweep_s(ns));
    ys = q.basis(sweep_t(nt));
    zs = q.basis(sweep_r(nr));
    planned += static_cast<long long>(xs.size()) * ys.size() * zs.size() * ns * (ns - 1);
  }
  guard_instances(planned, bounds);

  for (const auto& [sizes, basis3] : bases) {
    const auto& [xs, ys, zs] = basis3;
    const FiniteSet s_set = sweep_s(std::get<0>(sizes));
    for (const auto& x : xs)
      for (const auto& y : ys)
        for (const auto& z : zs)
          for (const auto& s : s_set)
            for (const auto& s2 : s_set) {
              if (s == s2) continue;
              ++report.instances;
              const auto lhs = q.compose(x, s, y).flat_map(
                  [&](const E& e) { return q.compose(e, s2, z); });
              const auto rhs = q.compose(x, s2, z).flat_map(
                  [&](const E& e) { return q.compose(e, s, y); });
              if (lhs != rhs) {
                report.holds = false;
                report.witness = law_witness({{"x", to_text(x)},
                                              {"y", to_text(y)},
                                              {"z", to_text(z)},
                                              {"s", s.str()},
                                              {"s'", s2.str()}},
                                             lhs, rhs);
                return report;
              }
            }
  }
  return report;
}

template <Operad Q>
LawReport check_a2(const Q& q, const Bounds& bounds) {
  using E = typename Q::Element;
  LawReport report = make_report(LawId::A2, q.name());

  long long planned = 0;
  std::map<std::tuple<int, int, int>, std::tuple<std::vector<E>, std::vector<E>, std::vector<E>>>
      bases;
  for (const auto& [ns, nt, nr] : size_triples(bounds)) {
    auto& [xs, ys, zs] = bases[{ns, nt, nr}];
    xs = q.basis(sweep_s(ns));
    ys = q.basis(sweep_t(nt));
    zs = q.basis(sweep_r(nr));
    planned += static_cast<long long>(xs.size()) * ys.size() * zs.size() * ns * nt;
  }
  guard_instances(planned, bounds);

  for (const auto& [sizes, basis3] : bases) {
    const auto& [xs, ys, zs] = basis3;
    const FiniteSet s_set = sweep_s(std::get<0>(sizes));
    const FiniteSet t_set = sweep_t(std::get<1>(sizes));
    for (const auto& x : xs)
      for (const auto& y : ys)
        for (const auto& z : zs)
          for (const auto& s : s_set)
            for (const auto& t : t_set) {
              ++report.instances;
              const auto lhs = q.compose(x, s, y).flat_map(
                  [&](const E& e) { return q.compose(e, t, z); });
              const auto rhs = q.compose(y, t, z).flat_map(
                  [&](const E& e) { return q.compose(x, s, e); });
              if (lhs != rhs) {
                report.holds = false;
                report.witness = law_witness({{"x", to_text(x)},
                                              {"y", to_text(y)},
                                              {"z", to_text(z)},
                                              {"s", s.str()},
                                              {"t", t.str()}},
                                             lhs, rhs);
                return report;
              }
            }
  }
  return report;
}

template <Operad Q>
LawReport check_n1(const Q& q, const Bounds& bounds) {
  using E = typename Q::Element;
  LawReport report = make_report(LawId::N1, q.name());

  long long planned = 0;
  const auto pairs = size_pairs(bounds);
  std::map<std::pair<int, int>, std::pair<std::vector<E>, std::vector<E>>> bases;
  for (const auto& [ns, nt] : pairs) {
    auto& [xs, ys] = bases[{ns, nt}];
    xs = q.basis(sweep_s(ns));
    ys = q.basis(sweep_t(nt));
    long long perms = 1;
    for (int i = 2; i <= ns; ++i) perms *= i;
    long long perms_t = 1;
    for (int i = 2; i <= nt; ++i) perms_t *= i;
    planned += static_cast<long long>(xs.size()) * ys.size() * ns * perms * perms_t;
  }
  guard_instances(planned, bounds);

  for (const auto& [sizes, basis2] : bases) {
    const auto& [xs, ys] = basis2;
    const FiniteSet s_set = sweep_s(sizes.first);
    const auto sigmas1 = all_bijections(s_set, sweep_s_primed(sizes.first));
    const auto sigmas2 = all_bijections(sweep_t(sizes.second), sweep_t_primed(sizes.second));
    for (const auto& x : xs)
      for (const auto& y : ys)
        for (const auto& s : s_set)
          for (const auto& sigma1 : sigmas1)
            for (const auto& sigma2 : sigmas2) {
              ++report.instances;
              const auto lhs = q.compose(q.relabel(x, sigma1), sigma1(s), q.relabel(y, sigma2));
              const Bijection glued = sigma1.restricted_to(s_set.minus(s)).united(sigma2);
              const auto rhs =
                  q.compose(x, s, y).map([&](const E& e) { return q.relabel(e, glued); });
              if (lhs != rhs) {
                report.holds = false;
                report.witness = law_witness({{"x", to_text(x)},
                                              {"y", to_text(y)},
                                              {"s", s.str()},
                                              {"sigma1(s)", sigma1(s).str()}},
                                             lhs, rhs);
                return report;
              }
            }
  }
  return report;
}

template <Operad Q>
LawReport check_n2(const Q& q, const Bounds& bounds) {
  LawReport report = make_report(LawId::N2, q.name());
  const std::vector<Label> labels = {"1", "2", "a"};
  for (const auto& s1 : labels)
    for (const auto& s2 : labels) {
      ++report.instances;
      const auto mapped = q.relabel(q.unit(s1), Bijection::from_pairs({{s1, s2}}));
      if (mapped != q.unit(s2)) {
        report.holds = false;
        report.witness = "relabel(unit(" + s1.str() + "), " + s1.str() + "->" + s2.str() +
                         ") = " + to_text(mapped);
        return report;
      }
    }
  (void)bounds;
  return report;
}

template <Operad Q>
LawReport check_u1(const Q& q, const Bounds& bounds) {
  using E = typename Q::Element;
  LawReport report = make_report(LawId::U1, q.name());
  for (int ns = 1; ns <= bounds.s_max; ++ns) {
    const FiniteSet s_set = sweep_s(ns);
    for (const auto& x : q.basis(s_set)) {
      for (const Label& star : {Label("0"), s_set.min()}) {
        ++report.instances;
        const auto lhs = q.compose(q.unit(star), star, x);
        if (lhs != LinComb<E>::term(x)) {
          report.holds = false;
          report.witness =
              law_witness({{"x", to_text(x)}, {"*", star.str()}}, lhs, LinComb<E>::term(x));
          return report;
        }
      }
    }
  }
  return report;
}

template <Operad Q>
LawReport check_u2(const Q& q, const Bounds& bounds) {
  using E = typename Q::Element;
  LawReport report = make_report(LawId::U2, q.name());
  for (int ns = 1; ns <= bounds.s_max; ++ns) {
    const FiniteSet s_set = sweep_s(ns);
    for (const auto& x : q.basis(s_set)) {
      for (const auto& s : s_set) {
        ++report.instances;
        const auto lhs = q.compose(x, s, q.unit(s));
        if (lhs != LinComb<E>::term(x)) {
          report.holds = false;
          report.witness =
              law_witness({{"x", to_text(x)}, {"s", s.str()}}, lhs, LinComb<E>::term(x));
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace detail

template <Operad Q>
LawReport check_axiom(LawId law, const Q& q, const Bounds& bounds = {}) {
  switch (law) {
    case LawId::A1: return detail::check_a1(q, bounds);
    case LawId::A2: return detail::check_a2(q, bounds);
    case LawId::N1: return detail::check_n1(q, bounds);
    case LawId::N2: return detail::check_n2(q, bounds);
    case LawId::U1: return detail::check_u1(q, bounds);
    case LawId::U2: return detail::check_u2(q, bounds);
    case LawId::EQ1:
      throw std::invalid_argument("check_axiom: EQ1 has its own checker, check_eq1");
  }
  throw std::logic_error("check_axiom: unknown law");
}

// The six operad axioms, in order.
template <Operad Q>
std::vector<LawReport> check_axiom_suite(const Q& q, const Bounds& bounds = {}) {
  std::vector<LawReport> out;
  for (LawId law : {LawId::A1, LawId::A2, LawId::N1, LawId::N2, LawId::U1, LawId::U2})
    out.push_back(check_axiom(law, q, bounds));
  return out;
}

// Root-exchange identity for a tree operad: holds for nap and shmag, fails
// for prelie and mag.
LawReport check_eq1(const OperadInstance& q, const Bounds& bounds = {});

enum class CompositionKind { Box, Diamond };

// Full axiom suite for the block composition built over the inner operad q.
// q is first checked itself; a broken q aborts with a diagnostic instead of
// producing meaningless composition reports.
std::vector<LawReport> check_composition_operad(CompositionKind kind, const OperadInstance& q,
                                                const Bounds& comp_bounds,
                                                const Bounds& q_bounds = {});

// Independent recomputation of the four tree compositions by flat edge-list
// surgery; kind is nap | prelie | mag | shmag.
LinComb<QElem> brute_force_oracle_compose(const std::string& kind, const QElem& t,
                                          const Label& s, const QElem& u);

// One entry of the standard verification sweep, with its expected verdict.
struct SuiteEntry {
  std::string subject;
  LawReport report;
  bool expected_holds = true;

  bool as_expected() const { return report.holds == expected_holds; }
};

struct SuiteOptions {
  Bounds tree_bounds{};                     // plain operad sweeps
  Bounds comp_bounds{2, 2, 2, 4};           // block compositions, total ground <= 4
};

std::string to_text(const SuiteEntry& entry);

// Named sweeps: "all", one of the five operads, "eq1", "box", "diamond".
// Entries stream through on_entry as they finish.
std::vector<SuiteEntry> run_suite(const std::string& name, const SuiteOptions& options = {},
                                  const std::function<void(const SuiteEntry&)>& on_entry = {});

bool suite_passed(const std::vector<SuiteEntry>& entries);

}  // namespace operads
