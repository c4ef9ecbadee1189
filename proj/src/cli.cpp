#include "coxrep/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "coxrep/error.hpp"
#include "coxrep/path_algebra.hpp"
#include "coxrep/quiver.hpp"
#include "coxrep/reps.hpp"
#include "coxrep/rootsys.hpp"
#include "coxrep/unfold.hpp"

namespace coxrep::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, what + ": " + e.what());
  }
}

std::uint64_t decompose_seed() {
  const char* env = std::getenv("COXREP_SEED");
  if (env == nullptr || *env == '\0') return kDefaultDecomposeSeed;
  try {
    std::size_t used = 0;
    const auto value = std::stoull(env, &used, 10);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return value;
  } catch (const std::exception&) {
    throw Error(ErrorKind::Parse, std::string("COXREP_SEED is not an unsigned integer: ") + env);
  }
}

std::string join_types(const std::vector<ComponentType>& components) {
  std::string out;
  for (const auto& c : components) {
    if (!out.empty()) out += " + ";
    out += c.type.name();
  }
  return out;
}

json components_json(const std::vector<ComponentType>& components) {
  json out = json::array();
  for (const auto& c : components) out.push_back({{"vertices", c.vertices}, {"type", c.type.name()}});
  return out;
}

json roots_json(const std::vector<RootVector>& roots) {
  json out = json::array();
  for (const auto& r : roots) out.push_back(to_json(r));
  return out;
}

void print_matrix(std::ostream& out, const RationalMatrix& m) {
  out << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? ", " : "") << m(r, c).get_str();
    out << ']';
  }
  out << ']';
}

struct Options {
  std::string input;
  bool json_out = false;
  bool components = false;
  bool extended = false;
  bool full = false;
  bool decompose = false;
  std::size_t budget = kDefaultRootBudget;
  int vertex = 0;
  std::string sign;
  std::string labels;
  std::vector<std::string> mul;
};

int cmd_classify(const Options& o, std::ostream& out) {
  const auto q = parse_quiver(read_file(o.input));
  const auto components = classify_graph(q);
  const bool finite = is_finite_type(q);
  if (o.json_out) {
    out << json{{"components", components_json(components)}, {"finite_type", finite}}.dump(2) << '\n';
  } else {
    out << join_types(components) << ", " << (finite ? "finite type" : "infinite type") << '\n';
  }
  return kExitOk;
}

int cmd_unfold(const Options& o, std::ostream& out) {
  const auto q = parse_quiver(read_file(o.input));
  const auto uq = unfold(q);
  if (o.json_out) {
    auto doc = to_json(uq);
    if (o.components) doc["components"] = components_json(unfolded_components(uq));
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  if (o.components) {
    out << join_types(unfolded_components(uq)) << '\n';
    return kExitOk;
  }
  for (std::size_t k = 0; k < uq.vertices().size(); ++k) {
    out << "vertex " << k << "  # " << uq.vertices()[k].name() << '\n';
  }
  for (const auto& a : uq.arrows()) {
    out << "arrow " << a.source << ' ' << a.target << "  # from arrow " << a.provenance << '\n';
  }
  return kExitOk;
}

int cmd_roots(const Options& o, std::ostream& out) {
  const auto q = parse_quiver(read_file(o.input));
  const RootSystem rs(q);
  const auto positive = rs.positive_roots(o.budget);
  std::optional<RootSet> extended;
  if (o.extended) extended = rs.extended_positive_roots(o.budget);
  if (o.json_out) {
    json doc{{"positive", {{"count", positive.roots.size()}, {"roots", roots_json(positive.roots)}}}};
    if (extended) doc["extended"] = {{"count", extended->roots.size()}, {"roots", roots_json(extended->roots)}};
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << "positive roots: " << positive.roots.size() << '\n';
  for (const auto& r : positive.roots) out << "  " << r.to_string() << '\n';
  if (extended) {
    out << "extended positive roots: " << extended->roots.size() << '\n';
    for (const auto& r : extended->roots) out << "  " << r.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_indecs(const Options& o, std::ostream& out) {
  const auto q = parse_quiver(read_file(o.input));
  const auto reps = enumerate_indecomposables(q, o.budget);
  if (o.json_out) {
    json list = json::array();
    for (const auto& v : reps) {
      json item{{"dim_vector", to_json(dim_vector(v))}};
      if (o.full) item["rep"] = to_json(v);
      list.push_back(std::move(item));
    }
    out << json{{"count", reps.size()}, {"indecomposables", list}}.dump(2) << '\n';
    return kExitOk;
  }
  out << "indecomposables: " << reps.size() << '\n';
  for (const auto& v : reps) {
    out << "  " << dim_vector(v).to_string() << '\n';
    if (!o.full) continue;
    const auto& uq = v.quiver();
    for (std::size_t k = 0; k < uq.arrows().size(); ++k) {
      if (v.maps()[k].empty()) continue;
      const auto& a = uq.arrows()[k];
      out << "    " << uq.vertices()[a.source].name() << " -> " << uq.vertices()[a.target].name() << ": ";
      print_matrix(out, v.maps()[k]);
      out << '\n';
    }
  }
  return kExitOk;
}

int cmd_path_algebra(const Options& o, std::ostream& out) {
  const auto q = parse_quiver(read_file(o.input));
  const auto grades = graded_classes(q);
  const auto total = path_algebra_class(q);
  if (o.json_out) {
    json list = json::array();
    for (const auto& g : grades) list.push_back(to_json(g));
    out << json{{"grades", list}, {"total", to_json(total)}}.dump(2) << '\n';
    return kExitOk;
  }
  for (std::size_t n = 0; n < grades.size(); ++n) out << "grade " << n << ": " << grades[n].to_string() << '\n';
  out << "total: " << total.to_string() << '\n';
  return kExitOk;
}

int cmd_reflect(const Options& o, std::ostream& out) {
  const auto v = rep_from_json(parse_json(read_file(o.input), o.input));
  UnfoldedRep w;
  if (o.sign == "+") {
    w = reflect_plus(o.vertex, v);
  } else if (o.sign == "-") {
    w = reflect_minus(o.vertex, v);
  } else {
    throw Error(ErrorKind::Parse, "--sign must be + or -");
  }
  std::optional<Decomposition> parts;
  if (o.decompose) parts = decompose(w, decompose_seed());
  if (o.json_out) {
    json doc{{"dim_vector", to_json(dim_vector(w))}, {"rep", to_json(w)}};
    if (parts) {
      json summands = json::array();
      for (const auto& s : parts->summands) summands.push_back(to_json(dim_vector(s)));
      doc["decomposition"] = {{"seed", parts->seed}, {"summands", summands}};
    }
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << "dim vector: " << dim_vector(w).to_string() << '\n';
  if (parts) {
    out << "summands (seed " << parts->seed << "):\n";
    for (const auto& s : parts->summands) out << "  " << dim_vector(s).to_string() << '\n';
  }
  out << to_json(w).dump() << '\n';
  return kExitOk;
}

int cmd_fusion(const Options& o, std::ostream& out) {
  std::vector<int> raw;
  std::stringstream ss(o.labels);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      raw.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "bad label '" + item + "'");
    }
  }
  const auto labels = make_label_set(raw);
  if (o.mul.size() != 2) throw Error(ErrorKind::Parse, "--mul takes two elements");
  const auto x = fusion_from_json(parse_json(o.mul[0], "first element"), labels);
  const auto y = fusion_from_json(parse_json(o.mul[1], "second element"), labels);
  const auto product = x * y;
  if (o.json_out) {
    out << to_json(product).dump() << '\n';
  } else {
    out << product.to_string() << '\n';
  }
  return kExitOk;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return kExitParse;
    case ErrorKind::OrbitBudgetExceeded:
    case ErrorKind::CapExceeded:
    case ErrorKind::SplittingFailed: return kExitBudget;
    case ErrorKind::Internal: return kExitInternal;
    default: return kExitPrecondition;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coxeter quiver computations in exact arithmetic", "coxrep"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&, std::ostream&)> action;

  auto add_input = [&](CLI::App* sub, const std::string& what) {
    sub->add_option("input", o.input, what)->required();
    sub->add_flag("--json", o.json_out, "machine readable output");
  };
  auto* classify = app.add_subcommand("classify", "Dynkin type of each component");
  add_input(classify, "quiver file");
  classify->callback([&] { action = cmd_classify; });

  auto* unfold_cmd = app.add_subcommand("unfold", "the unfolded classical quiver");
  add_input(unfold_cmd, "quiver file");
  unfold_cmd->add_flag("--components", o.components, "classify the components of the unfolding");
  unfold_cmd->callback([&] { action = cmd_unfold; });

  auto* roots = app.add_subcommand("roots", "positive roots");
  add_input(roots, "quiver file");
  roots->add_flag("--extended", o.extended, "also list the extended positive roots");
  roots->add_option("--budget", o.budget, "orbit size limit");
  roots->callback([&] { action = cmd_roots; });

  auto* indecs = app.add_subcommand("indecs", "all indecomposable representations");
  add_input(indecs, "quiver file");
  indecs->add_flag("--full", o.full, "print the matrices");
  indecs->add_option("--budget", o.budget, "root count limit");
  indecs->callback([&] { action = cmd_indecs; });

  auto* paths = app.add_subcommand("path-algebra", "graded classes of the path algebra");
  add_input(paths, "quiver file");
  paths->callback([&] { action = cmd_path_algebra; });

  auto* reflect = app.add_subcommand("reflect", "apply a reflection functor to a representation");
  add_input(reflect, "representation JSON file");
  reflect->add_option("--vertex", o.vertex, "vertex to reflect at")->required();
  reflect->add_option("--sign", o.sign, "+ at a sink, - at a source")->required();
  reflect->add_flag("--decompose", o.decompose, "split the result into indecomposables");
  reflect->callback([&] { action = cmd_reflect; });

  auto* fusion = app.add_subcommand("fusion", "fusion ring arithmetic");
  fusion->add_option("--labels", o.labels, "comma separated labels, e.g. 4,5")->required();
  fusion->add_option("--mul", o.mul, "two elements as JSON objects")->required()->expected(2);
  fusion->add_flag("--json", o.json_out, "machine readable output");
  fusion->callback([&] { action = cmd_fusion; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitParse;
  }

  try {
    return action(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace coxrep::cli
