#include "operads/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "operads/composition.hpp"
#include "operads/lawcheck.hpp"
#include "operads/parse.hpp"
#include "operads/render.hpp"

namespace operads {

namespace {

struct OpSelector {
  std::string kind;   // nap | prelie | mag | shmag | box | diamond
  std::string inner;  // inner operad for box / diamond

  bool composition() const { return kind == "box" || kind == "diamond"; }
  bool planar() const { return kind == "mag" || kind == "shmag" || kind == "diamond"; }
};

OpSelector parse_selector(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    if (text == "nap" || text == "prelie" || text == "mag" || text == "shmag" || text == "com")
      return {text, ""};
    throw std::invalid_argument("unknown operad '" + text +
                                "' (expected nap|prelie|mag|shmag|com|box:<q>|diamond:<q>)");
  }
  OpSelector sel{text.substr(0, colon), text.substr(colon + 1)};
  if (sel.kind != "box" && sel.kind != "diamond")
    throw std::invalid_argument("unknown composition '" + sel.kind + "' (expected box|diamond)");
  if (!operad_by_name(sel.inner))
    throw std::invalid_argument("unknown inner operad '" + sel.inner + "'");
  return sel;
}

FiniteSet parse_label_list(const std::string& csv) {
  std::vector<Label> labels;
  std::string token;
  std::istringstream in(csv);
  while (std::getline(in, token, ',')) {
    if (!token.empty()) labels.emplace_back(token);
  }
  if (labels.empty()) throw std::invalid_argument("empty label list");
  FiniteSet set(labels);
  if (set.size() != labels.size()) throw std::invalid_argument("repeated label in " + csv);
  return set;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(csv);
  while (std::getline(in, token, ',')) out.push_back(std::stoi(token));
  return out;
}

// OPERADS_BOUNDS=s,t,r and OPERADS_COMP_BOUNDS=s,t,r,total override the
// sweep sizes; OPERADS_MAX_INSTANCES overrides the blowup guard.
SuiteOptions options_from_env() {
  SuiteOptions options;
  if (const char* env = std::getenv("OPERADS_BOUNDS")) {
    const auto v = parse_int_list(env);
    if (v.size() != 3) throw std::invalid_argument("OPERADS_BOUNDS wants s,t,r");
    options.tree_bounds.s_max = v[0];
    options.tree_bounds.t_max = v[1];
    options.tree_bounds.r_max = v[2];
  }
  if (const char* env = std::getenv("OPERADS_COMP_BOUNDS")) {
    const auto v = parse_int_list(env);
    if (v.size() != 4) throw std::invalid_argument("OPERADS_COMP_BOUNDS wants s,t,r,total");
    options.comp_bounds.s_max = v[0];
    options.comp_bounds.t_max = v[1];
    options.comp_bounds.r_max = v[2];
    options.comp_bounds.total_max = v[3];
  }
  if (const char* env = std::getenv("OPERADS_MAX_INSTANCES")) {
    options.tree_bounds.max_instances = std::stoll(env);
    options.comp_bounds.max_instances = options.tree_bounds.max_instances;
  }
  return options;
}

bool looks_like_composition_json(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\n");
  return first != std::string::npos && text[first] == '{' &&
         text.find("blocks") != std::string::npos;
}

CompositionElement parse_composition_operand(const std::string& text, const OpSelector& sel) {
  if (looks_like_composition_json(text))
    return parse_composition_element(text, sel.planar(), sel.inner);
  // plain tree expressions lift to singleton blocks carrying units
  const OperadInstance inner = *operad_by_name(sel.inner);
  if (sel.planar()) return singleton_lift(parse_planar_tree(text), inner);
  return singleton_lift(parse_rooted_tree(text), inner);
}

int run_compose(const std::string& op, const std::string& at, const std::string& lhs,
                const std::string& rhs, const std::string& format, std::ostream& out) {
  const OpSelector sel = parse_selector(op);
  const Label s(at);
  if (!sel.composition()) {
    const OperadInstance q = *operad_by_name(sel.kind);
    const LinComb<QElem> result =
        q.compose(parse_qelem(lhs, sel.kind), s, parse_qelem(rhs, sel.kind));
    if (format == "json")
      out << to_json(result) << "\n";
    else if (format == "dot")
      out << to_dot(result);
    else
      out << to_text(result) << "\n";
    return 0;
  }
  const OperadInstance inner = *operad_by_name(sel.inner);
  const CompositionElement a = parse_composition_operand(lhs, sel);
  const CompositionElement b = parse_composition_operand(rhs, sel);
  const LinComb<CompositionElement> result = sel.kind == "box" ? box_compose(a, s, b, inner)
                                                               : diamond_compose(a, s, b, inner);
  if (format == "dot") throw std::invalid_argument("dot output covers tree operads only");
  if (format == "json")
    out << to_json(result) << "\n";
  else
    out << to_text(result) << "\n";
  return 0;
}

int run_check(const std::string& suite, const SuiteOptions& options, std::ostream& out) {
  std::size_t unexpected = 0;
  const auto entries = run_suite(suite, options, [&](const SuiteEntry& entry) {
    out << to_text(entry) << "\n";
    if (!entry.as_expected()) ++unexpected;
  });
  out << entries.size() << " law reports, " << unexpected << " unexpected\n";
  return unexpected == 0 ? 0 : 1;
}

int run_enumerate(const std::string& op, const std::string& labels_csv, std::ostream& out) {
  const OpSelector sel = parse_selector(op);
  const FiniteSet ground = parse_label_list(labels_csv);
  std::size_t count = 0;
  if (!sel.composition()) {
    const OperadInstance q = *operad_by_name(sel.kind);
    for (const auto& e : q.basis(ground)) {
      out << to_text(e) << "\n";
      ++count;
    }
  } else {
    const OperadInstance inner = *operad_by_name(sel.inner);
    const OperadInstance outer = sel.kind == "box" ? nap_operad() : shuffle_mag_operad();
    for (const auto& e : enumerate_composition_elements(outer, inner, ground)) {
      out << to_text(e) << "\n";
      ++count;
    }
  }
  out << count << " elements\n";
  return 0;
}

int run_dims(const std::string& outer_name, const std::string& inner_name, int n,
             std::ostream& out) {
  const auto outer = operad_by_name(outer_name);
  const auto inner = operad_by_name(inner_name);
  if (!outer || !inner) throw std::invalid_argument("dims: unknown operad name");
  out << "n\tdim(" << outer_name << "." << inner_name << ")\n";
  std::vector<Label> labels;
  for (int i = 1; i <= n; ++i) {
    labels.emplace_back(std::to_string(i));
    out << i << "\t" << to_text(composition_dimension(*outer, *inner, FiniteSet(labels))) << "\n";
  }
  return 0;
}

int run_render(const std::string& expr, bool planar, const std::string& name, std::ostream& out) {
  if (planar)
    out << to_dot(parse_planar_tree(expr), name);
  else
    out << to_dot(parse_rooted_tree(expr), name);
  return 0;
}

}  // namespace

int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"labeled-tree operads: compositions, enumeration, and law checking"};
  app.require_subcommand(1);

  auto* compose = app.add_subcommand("compose", "evaluate a partial composition");
  std::string op, at, lhs, rhs, format = "text";
  compose->add_option("--op", op, "nap|prelie|mag|shmag|box:<q>|diamond:<q>")->required();
  compose->add_option("--at", at, "composition vertex")->required();
  compose->add_option("lhs", lhs, "left operand")->required();
  compose->add_option("rhs", rhs, "right operand")->required();
  compose->add_option("--format", format, "text|json|dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));

  auto* check = app.add_subcommand("check", "run exhaustive law sweeps");
  std::string suite = "all";
  check->add_option("--suite", suite, "all|com|nap|prelie|mag|shmag|eq1|box|diamond");

  auto* enumerate = app.add_subcommand("enumerate", "list basis elements");
  std::string enum_op, labels_csv;
  enumerate->add_option("--op", enum_op, "operad or composition selector")->required();
  enumerate->add_option("--labels", labels_csv, "comma-separated ground labels")->required();

  auto* dims = app.add_subcommand("dims", "dimension table of a composition");
  std::string dims_p, dims_q;
  int dims_n = 4;
  dims->add_option("--p", dims_p, "outer operad")->required();
  dims->add_option("--q", dims_q, "inner operad")->required();
  dims->add_option("--n", dims_n, "largest ground-set size");

  auto* render = app.add_subcommand("render", "emit a DOT drawing of a tree");
  std::string render_expr, render_name = "t0";
  bool render_planar = false;
  render->add_option("expr", render_expr, "tree expression")->required();
  render->add_flag("--planar", render_planar, "keep the child order");
  render->add_option("--name", render_name, "graph name");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*compose) return run_compose(op, at, lhs, rhs, format, out);
    if (*check) return run_check(suite, options_from_env(), out);
    if (*enumerate) return run_enumerate(enum_op, labels_csv, out);
    if (*dims) return run_dims(dims_p, dims_q, dims_n, out);
    if (*render) return run_render(render_expr, render_planar, render_name, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace operads
