#pragma once

#include <stdexcept>
#include <string>

#include "operads/composition.hpp"
#include "operads/operad.hpp"

namespace operads {

// Position-carrying syntax error; position is a 0-based offset into the
// input text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Tree expressions: EXPR := LABEL | LABEL '(' EXPR (',' EXPR)* ')' with
// labels [A-Za-z0-9_]+ and optional whitespace. Duplicate labels are
// rejected. The non-planar parse canonicalizes away the child order; the
// planar parse keeps it.
RootedTree parse_rooted_tree(const std::string& text);
PlanarRootedTree parse_planar_tree(const std::string& text);

// A basis element of the named operad: a tree expression, or a braced
// label set "{1,2}" for com.
QElem parse_qelem(const std::string& text, const std::string& operad_name);

// Formal sums in the canonical text form: TERM ('+' TERM)* where TERM is
// [COEFF '*'] EXPR, COEFF an optionally signed integer or fraction; the
// bare token "0" is the zero combination.
LinComb<RootedTree> parse_rooted_lincomb(const std::string& text);
LinComb<PlanarRootedTree> parse_planar_lincomb(const std::string& text);

// The canonical JSON form emitted by to_text(CompositionElement). planar
// selects the block-tree kind; inner_operad names the operad the block
// values belong to.
CompositionElement parse_composition_element(const std::string& text, bool planar,
                                             const std::string& inner_operad);

}  // namespace operads
