#pragma once

#include <string>

#include "operads/composition.hpp"
#include "operads/lincomb.hpp"
#include "operads/operad.hpp"

namespace operads {

// DOT digraphs drawn root-at-bottom (rankdir=BT); planar trees keep their
// child order via ordering=out.
std::string to_dot(const RootedTree& t, const std::string& graph_name = "t0",
                   const std::string& note = "");
std::string to_dot(const PlanarRootedTree& t, const std::string& graph_name = "t0",
                   const std::string& note = "");

// One digraph per term; the coefficient is the graph label.
std::string to_dot(const LinComb<RootedTree>& x);
std::string to_dot(const LinComb<PlanarRootedTree>& x);
std::string to_dot(const LinComb<QElem>& x);

// JSON mirror of the canonical text forms: a sum is an array of
// {"coeff": "...", "term": ...} objects, where a term is the canonical text
// for trees and the canonical object for composition elements.
std::string to_json(const LinComb<RootedTree>& x);
std::string to_json(const LinComb<PlanarRootedTree>& x);
std::string to_json(const LinComb<QElem>& x);
std::string to_json(const LinComb<CompositionElement>& x);

}  // namespace operads
