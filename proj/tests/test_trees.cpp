#include <doctest.h>

#include <set>

#include "operads/planar_tree.hpp"
#include "operads/rational.hpp"
#include "operads/rooted_tree.hpp"

using namespace operads;

namespace {

FiniteSet numeric_set(int n) {
  std::vector<Label> labels;
  for (int i = 1; i <= n; ++i) labels.emplace_back(std::to_string(i));
  return FiniteSet(std::move(labels));
}

}  // namespace

TEST_CASE("rooted tree construction and canonical equality") {
  const RootedTree t("1", {{"2", "1"}, {"3", "2"}, {"4", "2"}});
  CHECK(t.size() == 4);
  CHECK(t.root() == Label("1"));
  CHECK(t.vertices() == FiniteSet{"1", "2", "3", "4"});
  CHECK(t.parent("3") == Label("2"));
  CHECK(t.children("2") == std::vector<Label>{"3", "4"});
  CHECK(t.children("3").empty());
  CHECK_THROWS_AS(t.parent("1"), std::invalid_argument);

  // same parent map, different construction order
  std::map<Label, Label> reversed;
  reversed.emplace("4", "2");
  reversed.emplace("3", "2");
  reversed.emplace("2", "1");
  CHECK(t == RootedTree("1", reversed));

  CHECK_THROWS_AS(RootedTree("1", {{"2", "3"}}), std::invalid_argument);   // disconnected
  CHECK_THROWS_AS(RootedTree("1", {{"1", "2"}}), std::invalid_argument);   // root has a parent
  CHECK_THROWS_AS(RootedTree("1", {{"2", "3"}, {"3", "2"}}), std::invalid_argument);  // cycle
}

TEST_CASE("children order is by smallest subtree label") {
  // vertex 9 carries subtree {9,0}; 0 sorts before 5, so 9's branch comes first
  const RootedTree t("1", {{"5", "1"}, {"9", "1"}, {"0", "9"}});
  CHECK(t.children("1") == std::vector<Label>{"9", "5"});
  CHECK(to_text(t) == "1(9(0),5)");
}

TEST_CASE("enumerate_rooted_trees counts") {
  CHECK(enumerate_rooted_trees(numeric_set(1)).size() == 1);
  CHECK(enumerate_rooted_trees(numeric_set(2)).size() == 2);
  CHECK(enumerate_rooted_trees(numeric_set(3)).size() == 9);
  for (int n = 1; n <= 5; ++n) {
    const auto trees = enumerate_rooted_trees(numeric_set(n));
    CHECK(Integer(trees.size()) == int_pow(Integer(n), static_cast<unsigned>(n - 1)));
    CHECK(std::set<RootedTree>(trees.begin(), trees.end()).size() == trees.size());
  }
  CHECK_THROWS_AS(enumerate_rooted_trees(FiniteSet{}), std::invalid_argument);
}

TEST_CASE("rooted relabel functor laws") {
  const RootedTree t("1", {{"2", "1"}, {"3", "2"}});
  const auto verts = t.vertices();
  CHECK(relabel(t, Bijection::identity(verts)) == t);

  const Bijection sigma = Bijection::from_pairs({{"1", "b"}, {"2", "c"}, {"3", "a"}});
  const RootedTree mapped = relabel(t, sigma);
  CHECK(mapped == RootedTree("b", {{"c", "b"}, {"a", "c"}}));
  CHECK(relabel(mapped, sigma.inverse()) == t);

  const Bijection theta = Bijection::from_pairs({{"a", "x"}, {"b", "y"}, {"c", "z"}});
  CHECK(relabel(relabel(t, sigma), theta) == relabel(t, sigma.then(theta)));

  CHECK_THROWS_AS(relabel(t, Bijection::from_pairs({{"1", "a"}})), std::invalid_argument);
}

TEST_CASE("planar rooted trees keep child order") {
  const PlanarRootedTree t("1", {{"1", {"3", "2"}}});
  CHECK(t.children("1") == std::vector<Label>{"3", "2"});
  CHECK(to_text(t) == "1(3,2)");
  CHECK(t != PlanarRootedTree("1", {{"1", {"2", "3"}}}));
  CHECK(t.parent("3") == Label("1"));
  CHECK(shape_key(t) == "(()())");

  CHECK_THROWS_AS(PlanarRootedTree("1", {{"1", {"2", "2"}}}), std::invalid_argument);
  CHECK_THROWS_AS(PlanarRootedTree("1", {{"2", {"1"}}}), std::invalid_argument);
}

TEST_CASE("enumerate_planar_rooted_trees counts") {
  CHECK(enumerate_planar_rooted_trees(numeric_set(1)).size() == 1);
  CHECK(enumerate_planar_rooted_trees(numeric_set(2)).size() == 2);
  CHECK(enumerate_planar_rooted_trees(numeric_set(3)).size() == 12);
  for (int n = 1; n <= 4; ++n) {
    const auto trees = enumerate_planar_rooted_trees(numeric_set(n));
    CHECK(Integer(trees.size()) ==
          factorial(static_cast<unsigned>(n)) * catalan(static_cast<unsigned>(n - 1)));
    CHECK(std::set<PlanarRootedTree>(trees.begin(), trees.end()).size() == trees.size());
  }
  CHECK_THROWS_AS(enumerate_planar_rooted_trees(FiniteSet{}), std::invalid_argument);
}

TEST_CASE("planar relabel keeps order") {
  const PlanarRootedTree t("1", {{"1", {"3", "2"}}});
  const Bijection sigma = Bijection::from_pairs({{"1", "a"}, {"2", "b"}, {"3", "c"}});
  CHECK(to_text(relabel(t, sigma)) == "a(c,b)");
  CHECK(relabel(relabel(t, sigma), sigma.inverse()) == t);
}

TEST_CASE("graft_vee builds the free magma") {
  const auto leaf = PlanarBinaryTree::leaf();
  const auto y = graft_vee(leaf, leaf);
  CHECK(leaf.is_leaf());
  CHECK_FALSE(y.is_leaf());
  CHECK(y.left() == leaf);
  CHECK(y.leaf_count() == 2);
  CHECK(graft_vee(y, leaf).leaf_count() == 3);
  // no associativity in a free magma
  CHECK(graft_vee(graft_vee(leaf, leaf), leaf) != graft_vee(leaf, graft_vee(leaf, leaf)));
  CHECK(to_text(graft_vee(y, leaf)) == "((| v |) v |)");
}

TEST_CASE("enumerate_binary_trees is Catalan") {
  for (unsigned n = 1; n <= 7; ++n)
    CHECK(Integer(enumerate_binary_trees(n).size()) == catalan(n - 1));
}

TEST_CASE("rotation correspondence") {
  const auto leaf = PlanarBinaryTree::leaf();
  CHECK(knuth_phi(leaf).size() == 1);

  const auto two_chain = knuth_phi(graft_vee(leaf, leaf));
  CHECK(two_chain.size() == 2);
  CHECK(shape_key(two_chain) == "(())");  // root with a single vertex above

  // left comb vs right comb map to different shapes
  const auto lcomb = knuth_phi(graft_vee(graft_vee(leaf, leaf), leaf));
  const auto rcomb = knuth_phi(graft_vee(leaf, graft_vee(leaf, leaf)));
  CHECK(shape_key(lcomb) != shape_key(rcomb));
  CHECK(lcomb.size() == 3);

  SUBCASE("bijective on shapes up to six leaves") {
    for (int n = 1; n <= 6; ++n) {
      std::set<std::string> images;
      const auto binaries = enumerate_binary_trees(static_cast<std::size_t>(n));
      for (const auto& b : binaries) {
        const auto img = knuth_phi(b);
        CHECK(img.size() == static_cast<std::size_t>(n));
        images.insert(shape_key(img));
      }
      CHECK(Integer(images.size()) == catalan(static_cast<unsigned>(n - 1)));

      std::set<std::string> planar_shapes;
      for (const auto& t : enumerate_planar_rooted_trees(numeric_set(std::min(n, 4))))
        planar_shapes.insert(shape_key(t));
      if (n <= 4) CHECK(images == planar_shapes);
    }
  }
}
