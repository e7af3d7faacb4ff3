#include "operads/parse.hpp"

#include <cctype>
#include <set>

#include <json.hpp>

namespace operads {

namespace {

bool label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos == text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  void expect(char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  }
};

Label parse_label(Cursor& c) {
  c.skip_ws();
  const std::size_t start = c.pos;
  while (c.pos < c.text.size() && label_char(c.text[c.pos])) ++c.pos;
  if (c.pos == start) throw ParseError("expected a label", start);
  return Label(c.text.substr(start, c.pos - start));
}

// LABEL [ '(' EXPR (',' EXPR)* ')' ]; fills the children map and rejects
// repeated labels.
Label parse_node(Cursor& c, std::map<Label, std::vector<Label>>& children,
                 std::set<Label>& seen) {
  c.skip_ws();
  const std::size_t at = c.pos;
  const Label label = parse_label(c);
  if (!seen.insert(label).second) throw ParseError("duplicate label '" + label.str() + "'", at);
  auto& kids = children[label];
  if (c.peek() == '(') {
    ++c.pos;
    while (true) {
      kids.push_back(parse_node(c, children, seen));
      if (c.peek() != ',') break;
      ++c.pos;
    }
    c.expect(')');
  }
  return label;
}

std::map<Label, std::vector<Label>> parse_whole_tree(const std::string& text, Label& root) {
  Cursor c{text};
  std::map<Label, std::vector<Label>> children;
  std::set<Label> seen;
  root = parse_node(c, children, seen);
  if (!c.at_end()) throw ParseError("unexpected trailing input", c.pos);
  return children;
}

RootedTree rooted_from_children(const Label& root,
                                const std::map<Label, std::vector<Label>>& children) {
  std::map<Label, Label> parent;
  for (const auto& [v, kids] : children)
    for (const auto& k : kids) parent.emplace(k, v);
  return RootedTree(root, std::move(parent));
}

}  // namespace

RootedTree parse_rooted_tree(const std::string& text) {
  Label root;
  const auto children = parse_whole_tree(text, root);
  return rooted_from_children(root, children);
}

PlanarRootedTree parse_planar_tree(const std::string& text) {
  Label root;
  auto children = parse_whole_tree(text, root);
  return PlanarRootedTree(root, std::move(children));
}

QElem parse_qelem(const std::string& text, const std::string& operad_name) {
  if (operad_name == "com") {
    Cursor c{text};
    c.expect('{');
    std::vector<Label> labels;
    if (c.peek() != '}') {
      while (true) {
        labels.push_back(parse_label(c));
        if (c.peek() != ',') break;
        ++c.pos;
      }
    }
    c.expect('}');
    if (!c.at_end()) throw ParseError("unexpected trailing input", c.pos);
    FiniteSet ground(labels);
    if (ground.size() != labels.size()) throw ParseError("duplicate label in set", 0);
    return ComElement{std::move(ground)};
  }
  if (operad_name == "nap" || operad_name == "prelie") return parse_rooted_tree(text);
  if (operad_name == "mag" || operad_name == "shmag") return parse_planar_tree(text);
  throw std::invalid_argument("parse_qelem: unknown operad '" + operad_name + "'");
}

namespace {

// [ '-' ] [ DIGITS [ '/' DIGITS ] '*' ] EXPR; a bare leading number without
// '*' is a label, not a coefficient.
template <typename TreeT, typename MakeTree>
LinComb<TreeT> parse_lincomb_impl(const std::string& text, MakeTree&& make_tree) {
  {
    Cursor probe{text};
    if (probe.peek() == '0') {
      ++probe.pos;
      if (probe.at_end()) return LinComb<TreeT>::zero();
      probe.pos = 0;
    }
  }
  LinComb<TreeT> out;
  Cursor c{text};
  while (true) {
    Rational coeff = 1;
    if (c.peek() == '-') {
      ++c.pos;
      coeff = -1;
    }
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      const std::size_t save = c.pos;
      std::string digits;
      while (c.pos < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.pos])))
        digits += c.text[c.pos++];
      std::string denom;
      if (c.pos < c.text.size() && c.text[c.pos] == '/') {
        ++c.pos;
        while (c.pos < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.pos])))
          denom += c.text[c.pos++];
      }
      if (c.peek() == '*') {
        ++c.pos;
        coeff *= denom.empty() ? Rational(Integer(digits))
                               : Rational(Integer(digits), Integer(denom));
      } else {
        c.pos = save;  // it was a label after all
      }
    }
    std::map<Label, std::vector<Label>> children;
    std::set<Label> seen;
    const Label root = parse_node(c, children, seen);
    out.add_term(make_tree(root, children), coeff);
    if (c.at_end()) break;
    c.expect('+');
  }
  return out;
}

}  // namespace

LinComb<RootedTree> parse_rooted_lincomb(const std::string& text) {
  return parse_lincomb_impl<RootedTree>(
      text, [](const Label& root, const std::map<Label, std::vector<Label>>& children) {
        return rooted_from_children(root, children);
      });
}

LinComb<PlanarRootedTree> parse_planar_lincomb(const std::string& text) {
  return parse_lincomb_impl<PlanarRootedTree>(
      text, [](const Label& root, std::map<Label, std::vector<Label>> children) {
        return PlanarRootedTree(root, std::move(children));
      });
}

CompositionElement parse_composition_element(const std::string& text, bool planar,
                                             const std::string& inner_operad) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("composition element: invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("blocks") || !doc.contains("tree") ||
      !doc.contains("values"))
    throw std::invalid_argument("composition element: need keys blocks, tree, values");

  std::vector<FiniteSet> blocks;
  std::vector<Label> all;
  for (const auto& block : doc.at("blocks")) {
    std::vector<Label> labels;
    for (const auto& l : block) labels.emplace_back(l.get<std::string>());
    FiniteSet set(labels);
    if (set.size() != labels.size())
      throw std::invalid_argument("composition element: duplicate label in a block");
    all.insert(all.end(), labels.begin(), labels.end());
    blocks.push_back(std::move(set));
  }
  FiniteSet ground(all);
  if (ground.size() != all.size())
    throw std::invalid_argument("composition element: blocks overlap");

  std::map<Label, Label> names;  // b<i> -> smallest element of block i
  std::vector<Label> placeholders;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    placeholders.emplace_back("b" + std::to_string(i));
    names.emplace(placeholders.back(), blocks[i].min());
  }
  const Bijection rename(FiniteSet(placeholders), names);

  const std::string tree_text = doc.at("tree").get<std::string>();
  BlockTree tree = planar ? BlockTree(relabel(parse_planar_tree(tree_text), rename))
                          : BlockTree(relabel(parse_rooted_tree(tree_text), rename));

  std::map<Label, QElem> values;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const std::string key = "b" + std::to_string(i);
    if (!doc.at("values").contains(key))
      throw std::invalid_argument("composition element: missing value for " + key);
    values.emplace(blocks[i].min(),
                   parse_qelem(doc.at("values").at(key).get<std::string>(), inner_operad));
  }
  return CompositionElement(Partition(std::move(ground), std::move(blocks)), std::move(tree),
                            std::move(values));
}

}  // namespace operads
