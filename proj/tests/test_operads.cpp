#include <doctest.h>

#include <set>

#include "operads/operad.hpp"
#include "operads/parse.hpp"

using namespace operads;

TEST_CASE("nap composition") {
  SUBCASE("composing with a unit leaf is the identity") {
    const auto u = parse_rooted_tree("1(2)");
    CHECK(nap_compose(u, "2", RootedTree::single("2")) == u);
  }

  SUBCASE("all branches move to the inserted root") {
    const auto u = parse_rooted_tree("1(2(3,4))");
    const auto v = parse_rooted_tree("a(b(c))");
    CHECK(nap_compose(u, "2", v) == parse_rooted_tree("1(a(3,4,b(c)))"));
  }

  SUBCASE("composing at a lone vertex returns the inserted tree") {
    CHECK(nap_compose(RootedTree::single("s"), "s", parse_rooted_tree("a(b)")) ==
          parse_rooted_tree("a(b)"));
  }

  SUBCASE("composing at the root") {
    CHECK(nap_compose(parse_rooted_tree("1(2)"), "1", parse_rooted_tree("a(b)")) ==
          parse_rooted_tree("a(b,2)"));
  }

  SUBCASE("preconditions") {
    CHECK_THROWS_AS(nap_compose(parse_rooted_tree("1(2)"), "9", RootedTree::single("a")),
                    std::invalid_argument);
    CHECK_THROWS_AS(nap_compose(parse_rooted_tree("1(2)"), "2", parse_rooted_tree("a(1)")),
                    std::invalid_argument);
  }
}

TEST_CASE("nap root-exchange identity") {
  SUBCASE("single-vertex inserts") {
    const auto [lhs, rhs] = nap_root_exchange_sides(parse_rooted_tree("1(2)"), "2",
                                                    RootedTree::single("a"),
                                                    RootedTree::single("x"));
    CHECK(lhs == parse_rooted_tree("1(x)"));
    CHECK(lhs == rhs);
  }

  SUBCASE("two-vertex inserts") {
    const auto [lhs, rhs] = nap_root_exchange_sides(parse_rooted_tree("1(2)"), "2",
                                                    parse_rooted_tree("a(b)"),
                                                    parse_rooted_tree("x(y)"));
    CHECK(lhs == rhs);
  }

  SUBCASE("exhaustive over small vertex sets") {
    const auto ts = enumerate_rooted_trees(FiniteSet{"1", "2", "3"});
    const auto us = enumerate_rooted_trees(FiniteSet{"a", "b"});
    const auto vs = enumerate_rooted_trees(FiniteSet{"x", "y"});
    for (const auto& t : ts)
      for (const auto& u : us)
        for (const auto& v : vs)
          for (const auto& s : t.vertices()) {
            const auto [lhs, rhs] = nap_root_exchange_sides(t, s, u, v);
            CHECK(lhs == rhs);
          }
  }
}

TEST_CASE("prelie composition") {
  SUBCASE("leaf substitution has a single term") {
    const auto sum = prelie_compose(parse_rooted_tree("1(2)"), "2", parse_rooted_tree("a(b)"));
    CHECK(sum == LinComb<RootedTree>::term(parse_rooted_tree("1(a(b))")));
  }

  SUBCASE("one branch, two targets") {
    const auto sum = prelie_compose(parse_rooted_tree("2(1)"), "2", parse_rooted_tree("a(b)"));
    CHECK(sum == LinComb<RootedTree>::term(parse_rooted_tree("a(1,b)")) +
                     LinComb<RootedTree>::term(parse_rooted_tree("a(b(1))")));
  }

  SUBCASE("term count is targets^branches") {
    const auto sum = prelie_compose(parse_rooted_tree("s(1,2)"), "s", parse_rooted_tree("a(b)"));
    CHECK(sum.total() == 4);  // 2 vertices ^ 2 branches
    for (const auto& [t, c] : sum.terms()) CHECK(t.vertices() == FiniteSet{"1", "2", "a", "b"});
  }

  SUBCASE("multiplicity oracle over small instances") {
    for (const auto& u : enumerate_rooted_trees(FiniteSet{"1", "2", "3"}))
      for (const auto& v : enumerate_rooted_trees(FiniteSet{"a", "b"}))
        for (const auto& s : u.vertices()) {
          const auto sum = prelie_compose(u, s, v);
          CHECK(sum.total() ==
                Rational(int_pow(Integer(v.size()), static_cast<unsigned>(u.children(s).size()))));
        }
  }
}

TEST_CASE("mag composition") {
  SUBCASE("inserted root children stay leftmost") {
    CHECK(mag_compose(parse_planar_tree("1(2(3,4))"), "2", parse_planar_tree("a(b(c))")) ==
          parse_planar_tree("1(a(b(c),3,4))"));
  }

  SUBCASE("units") {
    const auto x = parse_planar_tree("1(3,2)");
    CHECK(mag_compose(x, "2", PlanarRootedTree::single("2")) == x);
    CHECK(mag_compose(PlanarRootedTree::single("0"), "0", x) == x);
  }

  SUBCASE("planar order matters") {
    const auto out = mag_compose(parse_planar_tree("s(1,2)"), "s", PlanarRootedTree::single("a"));
    CHECK(out == parse_planar_tree("a(1,2)"));
    CHECK(out != parse_planar_tree("a(2,1)"));
  }
}

TEST_CASE("shuffle enumeration") {
  SUBCASE("two singletons") {
    const auto shuffles = enumerate_shuffles({"x"}, {"y"});
    CHECK(shuffles.size() == 2);
    std::set<std::vector<Label>> merged;
    for (const auto& h : shuffles) merged.insert(h.merged());
    CHECK(merged == std::set<std::vector<Label>>{{"x", "y"}, {"y", "x"}});
  }

  SUBCASE("empty first list") {
    const auto shuffles = enumerate_shuffles({}, {"b1", "b2"});
    REQUIRE(shuffles.size() == 1);
    CHECK(shuffles[0].merged() == std::vector<Label>{"b1", "b2"});
  }

  SUBCASE("pair against singleton, in enumeration order") {
    const auto shuffles = enumerate_shuffles({"3", "4"}, {"b"});
    REQUIRE(shuffles.size() == 3);
    CHECK(shuffles[0].merged() == std::vector<Label>{"b", "3", "4"});
    CHECK(shuffles[1].merged() == std::vector<Label>{"3", "b", "4"});
    CHECK(shuffles[2].merged() == std::vector<Label>{"3", "4", "b"});
  }

  SUBCASE("binomial cardinality and tag consistency") {
    const std::vector<Label> pool_a = {"1", "2", "3", "4", "5"};
    const std::vector<Label> pool_b = {"a", "b", "c", "d", "e"};
    for (std::size_t na = 0; na <= 4; ++na)
      for (std::size_t nb = 0; nb <= 4; ++nb) {
        const std::vector<Label> a(pool_a.begin(), pool_a.begin() + na);
        const std::vector<Label> b(pool_b.begin(), pool_b.begin() + nb);
        const auto shuffles = enumerate_shuffles(a, b);
        CHECK(Integer(shuffles.size()) ==
              binomial(static_cast<unsigned>(na + nb), static_cast<unsigned>(na)));
        std::set<std::vector<Label>> distinct;
        for (const auto& h : shuffles) {
          std::vector<Label> from_a;
          for (const auto& [src, l] : h.items)
            if (src == ShuffleSource::First) from_a.push_back(l);
          CHECK(from_a == a);  // order of the first list preserved
          distinct.insert(h.merged());
        }
        CHECK(distinct.size() == shuffles.size());
      }
  }

  SUBCASE("overlapping lists are rejected") {
    CHECK_THROWS_AS(enumerate_shuffles({"1"}, {"1"}), std::invalid_argument);
  }
}

TEST_CASE("shuffle mag composition") {
  SUBCASE("two branch lists interleave") {
    const auto sum =
        shuffle_mag_compose(parse_planar_tree("1(2(3,4))"), "2", parse_planar_tree("a(b(c))"));
    CHECK(sum == LinComb<PlanarRootedTree>::term(parse_planar_tree("1(a(b(c),3,4))")) +
                     LinComb<PlanarRootedTree>::term(parse_planar_tree("1(a(3,b(c),4))")) +
                     LinComb<PlanarRootedTree>::term(parse_planar_tree("1(a(3,4,b(c)))")));
  }

  SUBCASE("at a leaf it is the plain composition") {
    const auto t = parse_planar_tree("1(2)");
    const auto u = parse_planar_tree("a(b)");
    CHECK(shuffle_mag_compose(t, "2", u) ==
          LinComb<PlanarRootedTree>::term(mag_compose(t, "2", u)));
  }

  SUBCASE("term count is the binomial of the branch lists") {
    for (const auto& t : enumerate_planar_rooted_trees(FiniteSet{"1", "2", "3"}))
      for (const auto& u : enumerate_planar_rooted_trees(FiniteSet{"a", "b"}))
        for (const auto& s : t.vertices()) {
          const auto sum = shuffle_mag_compose(t, s, u);
          const unsigned k = static_cast<unsigned>(t.children(s).size());
          const unsigned m = static_cast<unsigned>(u.children(u.root()).size());
          CHECK(Integer(sum.term_count()) == binomial(k + m, k));
          // the plain composition is always one of the interleavings
          CHECK(sum.coefficient(mag_compose(t, s, u)) == 1);
        }
  }

  SUBCASE("nested composition at the inserted root gives the multinomial") {
    // branch lists of sizes 2, 1, 2 merge at one vertex: (2+1+2)!/(2!1!2!)
    const auto t = parse_planar_tree("1(2(3,4))");
    const auto u = parse_planar_tree("a(b)");
    const auto v = parse_planar_tree("x(y,z)");
    const auto nested = shuffle_mag_compose(t, "2", u).flat_map([&](const PlanarRootedTree& e) {
      return shuffle_mag_compose(e, "a", v);
    });
    const Integer expected = factorial(5) / (factorial(2) * factorial(1) * factorial(2));
    CHECK(Integer(nested.term_count()) == expected);
    CHECK(nested.total() == Rational(expected));  // every interleaving exactly once
  }

  SUBCASE("agrees with mag when either branch list is empty") {
    for (const auto& t : enumerate_planar_rooted_trees(FiniteSet{"1", "2"}))
      for (const auto& u : enumerate_planar_rooted_trees(FiniteSet{"a", "b"}))
        for (const auto& s : t.vertices()) {
          if (!t.children(s).empty() && !u.children(u.root()).empty()) continue;
          CHECK(shuffle_mag_compose(t, s, u) ==
                LinComb<PlanarRootedTree>::term(mag_compose(t, s, u)));
        }
  }
}

TEST_CASE("planar_graft validates the arrangement") {
  const auto t = parse_planar_tree("1(2(3))");
  const auto u = parse_planar_tree("a(b)");
  CHECK(planar_graft(t, "2", u, {"b", "3"}) == parse_planar_tree("1(a(b,3))"));
  CHECK(planar_graft(t, "2", u, {"3", "b"}) == parse_planar_tree("1(a(3,b))"));
  CHECK_THROWS_AS(planar_graft(t, "2", u, {"b"}), std::invalid_argument);
  CHECK_THROWS_AS(planar_graft(t, "2", u, std::vector<Label>{"b", "b"}), std::invalid_argument);
}

TEST_CASE("operad instances") {
  const auto nap = nap_operad();
  const auto shmag = shuffle_mag_operad();

  SUBCASE("basis sizes") {
    CHECK(nap.basis(FiniteSet{"1", "2"}).size() == 2);
    CHECK(nap.basis(FiniteSet{}).empty());
    CHECK(shmag.basis(FiniteSet{"1", "2", "3"}).size() == 12);
  }

  SUBCASE("units satisfy both unit laws on sample elements") {
    for (const auto& op : operad_instances()) {
      for (const auto& x : op.basis(FiniteSet{"1", "2"})) {
        CHECK(op.compose(op.unit("0"), "0", x) == LinComb<QElem>::term(x));
        CHECK(op.compose(x, "2", op.unit("2")) == LinComb<QElem>::term(x));
      }
    }
  }

  SUBCASE("kind mismatch is rejected") {
    CHECK_THROWS_AS(
        nap.compose(QElem(parse_planar_tree("1(2)")), "2", QElem(RootedTree::single("a"))),
        std::invalid_argument);
  }

  SUBCASE("com composes by gluing grounds") {
    const auto com = com_operad();
    CHECK(com.basis(FiniteSet{"1", "2"}).size() == 1);
    CHECK(com.compose(ComElement{FiniteSet{"1", "2"}}, "1", ComElement{FiniteSet{"a"}}) ==
          LinComb<QElem>::term(ComElement{FiniteSet{"2", "a"}}));
  }

  SUBCASE("lookup by name") {
    CHECK(operad_by_name("prelie").has_value());
    CHECK(operad_by_name("com").has_value());
    CHECK_FALSE(operad_by_name("nope").has_value());
  }
}
