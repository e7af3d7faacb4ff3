#include "operads/render.hpp"

#include <functional>

#include <json.hpp>

namespace operads {

namespace {

template <typename TreeT>
std::string dot_tree(const TreeT& t, const std::string& graph_name, const std::string& note,
                     bool planar) {
  std::string out = "digraph " + graph_name + " {\n  rankdir=BT;\n";
  if (planar) out += "  ordering=out;\n";
  if (!note.empty()) out += "  label=\"" + note + "\";\n";
  for (const auto& v : t.vertices()) out += "  \"" + v.str() + "\";\n";
  std::function<void(const Label&)> walk = [&](const Label& v) {
    for (const auto& k : t.children(v)) {
      out += "  \"" + v.str() + "\" -> \"" + k.str() + "\";\n";
      walk(k);
    }
  };
  walk(t.root());
  return out + "}\n";
}

template <typename B>
std::string dot_lincomb(const LinComb<B>& x, bool planar) {
  if (x.is_zero()) return "digraph t0 {\n  label=\"0\";\n}\n";
  std::string out;
  std::size_t i = 0;
  for (const auto& [term, coeff] : x.terms()) {
    out += dot_tree(term, "t" + std::to_string(i), "coeff " + to_text(coeff), planar);
    ++i;
  }
  return out;
}

}  // namespace

std::string to_dot(const RootedTree& t, const std::string& graph_name, const std::string& note) {
  return dot_tree(t, graph_name, note, false);
}

std::string to_dot(const PlanarRootedTree& t, const std::string& graph_name,
                   const std::string& note) {
  return dot_tree(t, graph_name, note, true);
}

std::string to_dot(const LinComb<RootedTree>& x) { return dot_lincomb(x, false); }
std::string to_dot(const LinComb<PlanarRootedTree>& x) { return dot_lincomb(x, true); }

std::string to_dot(const LinComb<QElem>& x) {
  if (x.is_zero()) return "digraph t0 {\n  label=\"0\";\n}\n";
  std::string out;
  std::size_t i = 0;
  for (const auto& [term, coeff] : x.terms()) {
    const std::string name = "t" + std::to_string(i);
    const std::string note = "coeff " + to_text(coeff);
    out += std::visit(
        [&](const auto& e) -> std::string {
          using T = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<T, ComElement>) {
            return "digraph " + name + " {\n  label=\"" + note + ": " + to_text(e) + "\";\n}\n";
          } else {
            return dot_tree(e, name, note, std::is_same_v<T, PlanarRootedTree>);
          }
        },
        term);
    ++i;
  }
  return out;
}

namespace {

template <typename B, typename TermToJson>
std::string json_lincomb(const LinComb<B>& x, TermToJson&& term_to_json) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [term, coeff] : x.terms()) {
    nlohmann::json entry;
    entry["coeff"] = to_text(coeff);
    entry["term"] = term_to_json(term);
    arr.push_back(std::move(entry));
  }
  return arr.dump();
}

}  // namespace

std::string to_json(const LinComb<RootedTree>& x) {
  return json_lincomb(x, [](const RootedTree& t) { return to_text(t); });
}

std::string to_json(const LinComb<PlanarRootedTree>& x) {
  return json_lincomb(x, [](const PlanarRootedTree& t) { return to_text(t); });
}

std::string to_json(const LinComb<QElem>& x) {
  return json_lincomb(x, [](const QElem& e) { return to_text(e); });
}

std::string to_json(const LinComb<CompositionElement>& x) {
  return json_lincomb(x, [](const CompositionElement& e) {
    return nlohmann::json::parse(to_text(e));
  });
}

}  // namespace operads
