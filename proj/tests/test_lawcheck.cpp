#include <doctest.h>

#include "operads/lawcheck.hpp"
#include "operads/parse.hpp"

using namespace operads;

TEST_CASE("law ids round trip") {
  for (LawId law : {LawId::A1, LawId::A2, LawId::N1, LawId::N2, LawId::U1, LawId::U2, LawId::EQ1})
    CHECK(law_from_name(law_name(law)) == law);
  CHECK_FALSE(law_from_name("Z9").has_value());
}

TEST_CASE("sweep alphabets are disjoint") {
  CHECK(sweep_s(6).disjoint_from(sweep_t(6)));
  CHECK(sweep_s(6).disjoint_from(sweep_r(3)));
  CHECK(sweep_s(6).disjoint_from(sweep_s_primed(6)));
  CHECK(sweep_t(6).disjoint_from(sweep_t_primed(6)));
  CHECK(sweep_t(6).disjoint_from(sweep_r(3)));
  CHECK_THROWS_AS(sweep_r(7), std::invalid_argument);
}

TEST_CASE("all_bijections") {
  const auto bijections = all_bijections(FiniteSet{"1", "2", "3"}, FiniteSet{"a", "b", "c"});
  CHECK(bijections.size() == 6);
  CHECK_THROWS_AS(all_bijections(FiniteSet{"1"}, FiniteSet{"a", "b"}), std::invalid_argument);
}

TEST_CASE("unit laws hold") {
  const Bounds small{2, 2, 2};
  for (const auto& op : operad_instances()) {
    const auto u1 = check_axiom(LawId::U1, op, small);
    const auto u2 = check_axiom(LawId::U2, op, small);
    CHECK(u1.holds);
    CHECK(u2.holds);
    CHECK(u1.instances > 0);
  }
}

TEST_CASE("associativity laws on tight bounds") {
  const Bounds tight{2, 2, 1};
  for (const auto& op : operad_instances()) {
    CHECK(check_axiom(LawId::A1, op, tight).holds);
    CHECK(check_axiom(LawId::A2, op, tight).holds);
  }
}

TEST_CASE("naturality laws on tight bounds") {
  const Bounds tight{2, 2, 1};
  for (const auto& op : operad_instances()) {
    CHECK(check_axiom(LawId::N1, op, tight).holds);
    CHECK(check_axiom(LawId::N2, op, tight).holds);
  }
}

TEST_CASE("com passes its own suite") {
  for (const auto& report : check_axiom_suite(com_operad(), Bounds{2, 2, 2})) {
    CHECK(report.holds);
    INFO(to_text(report));
  }
}

TEST_CASE("root exchange dichotomy at small bounds") {
  const Bounds small{2, 2, 2};

  const auto nap = check_eq1(nap_operad(), small);
  CHECK(nap.holds);
  CHECK_FALSE(nap.witness.has_value());

  const auto shmag = check_eq1(shuffle_mag_operad(), small);
  CHECK(shmag.holds);

  const auto prelie = check_eq1(prelie_operad(), small);
  CHECK_FALSE(prelie.holds);
  REQUIRE(prelie.witness.has_value());
  CHECK(prelie.witness->find("lhs") != std::string::npos);

  const auto mag = check_eq1(mag_operad(), small);
  CHECK_FALSE(mag.holds);
  REQUIRE(mag.witness.has_value());
}

TEST_CASE("check_axiom rejects EQ1") {
  CHECK_THROWS_AS(check_axiom(LawId::EQ1, nap_operad(), Bounds{1, 1, 1}),
                  std::invalid_argument);
}

TEST_CASE("instance cap guards against blowups") {
  Bounds capped{3, 2, 2};
  capped.max_instances = 10;
  CHECK_THROWS_AS(check_axiom(LawId::A2, nap_operad(), capped), std::runtime_error);
}

TEST_CASE("box and diamond suites on minimal bounds") {
  const Bounds tiny{2, 1, 1, 4};
  for (const auto& inner : {com_operad(), nap_operad()}) {
    for (const auto& report : check_composition_operad(CompositionKind::Box, inner, tiny)) {
      INFO(to_text(report));
      CHECK(report.holds);
    }
  }
  for (const auto& report :
       check_composition_operad(CompositionKind::Diamond, com_operad(), tiny)) {
    INFO(to_text(report));
    CHECK(report.holds);
  }
}

TEST_CASE("a broken inner operad aborts the composition check") {
  // like nap, but every composition carries a stray factor of two, so the
  // unit laws fail while the grounds all stay well-typed
  const OperadInstance broken(
      "broken",
      [](const FiniteSet& s) {
        std::vector<QElem> out;
        for (auto& t : enumerate_rooted_trees(s)) out.emplace_back(std::move(t));
        return out;
      },
      [](const QElem& x, const Label& s, const QElem& y) {
        return LinComb<QElem>::term(nap_compose(std::get<RootedTree>(x), s,
                                                std::get<RootedTree>(y)),
                                    2);
      },
      [](const Label& s) { return QElem(RootedTree::single(s)); });
  CHECK_THROWS_AS(
      check_composition_operad(CompositionKind::Box, broken, Bounds{2, 1, 1, 4}, Bounds{2, 2, 1}),
      std::runtime_error);
}

TEST_CASE("oracle reproduces known compositions") {
  const QElem u = parse_rooted_tree("1(2(3,4))");
  const QElem v = parse_rooted_tree("a(b(c))");
  CHECK(brute_force_oracle_compose("nap", u, "2", v) ==
        LinComb<QElem>::term(parse_rooted_tree("1(a(3,4,b(c)))")));

  const QElem pu = parse_planar_tree("1(2(3,4))");
  const QElem pv = parse_planar_tree("a(b(c))");
  CHECK(brute_force_oracle_compose("mag", pu, "2", pv) ==
        LinComb<QElem>::term(parse_planar_tree("1(a(b(c),3,4))")));

  const auto sh = brute_force_oracle_compose("shmag", pu, "2", pv);
  CHECK(sh.term_count() == 3);
  CHECK(sh.coefficient(parse_planar_tree("1(a(3,b(c),4))")) == 1);

  CHECK(brute_force_oracle_compose("prelie", parse_rooted_tree("2(1)"), "2",
                                   parse_rooted_tree("a(b)")) ==
        LinComb<QElem>::term(parse_rooted_tree("a(1,b)")) +
            LinComb<QElem>::term(parse_rooted_tree("a(b(1))")));

  CHECK_THROWS_AS(brute_force_oracle_compose("nope", u, "2", v), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_oracle_compose("nap", pu, "2", pv), std::invalid_argument);
}

TEST_CASE("oracle agrees with the implementations on small sweeps") {
  const FiniteSet s_set{"1", "2"};
  const FiniteSet t_set{"a", "b"};
  for (const auto& kind : {"nap", "prelie", "mag", "shmag"}) {
    const OperadInstance op = *operad_by_name(kind);
    for (const auto& x : op.basis(s_set))
      for (const auto& y : op.basis(t_set))
        for (const auto& s : s_set) {
          CHECK(op.compose(x, s, y) == brute_force_oracle_compose(kind, x, s, y));
        }
  }
}

TEST_CASE("reports are deterministic") {
  const Bounds small{2, 2, 2};
  const auto first = check_eq1(prelie_operad(), small);
  const auto second = check_eq1(prelie_operad(), small);
  CHECK(first.instances == second.instances);
  CHECK(first.witness == second.witness);

  const auto a1_first = check_axiom(LawId::A1, shuffle_mag_operad(), small);
  const auto a1_second = check_axiom(LawId::A1, shuffle_mag_operad(), small);
  CHECK(a1_first.instances == a1_second.instances);
}

TEST_CASE("run_suite eq1 matches expectations") {
  const SuiteOptions options{Bounds{2, 2, 2}, Bounds{2, 1, 1, 4}};
  std::size_t streamed = 0;
  const auto entries = run_suite("eq1", options, [&](const SuiteEntry&) { ++streamed; });
  CHECK(entries.size() == 4);
  CHECK(streamed == 4);
  CHECK(suite_passed(entries));
  std::size_t counterexamples = 0;
  for (const auto& entry : entries)
    if (!entry.report.holds) ++counterexamples;
  CHECK(counterexamples == 2);

  CHECK_THROWS_AS(run_suite("nope", options), std::invalid_argument);
}
