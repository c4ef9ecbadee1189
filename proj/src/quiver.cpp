#include "coxrep/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "coxrep/error.hpp"

namespace coxrep {

namespace {

int parse_int_token(std::string_view token, int line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorKind::Parse,
                "line " + std::to_string(line_no) + ": expected integer, got '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

// Path order of a tree component with max degree <= 2, starting at the
// lowest-id leaf.
std::vector<int> path_order(const std::vector<int>& verts, const std::map<int, std::vector<int>>& adj) {
  int start = verts.front();
  for (int v : verts) {
    if (adj.at(v).size() <= 1) {
      start = v;
      break;
    }
  }
  std::vector<int> order{start};
  int prev = start;
  int cur = start;
  while (order.size() < verts.size()) {
    for (int next : adj.at(cur)) {
      if (next != prev) {
        prev = cur;
        cur = next;
        break;
      }
    }
    order.push_back(cur);
  }
  return order;
}

DynkinType classify_tree(const std::vector<int>& verts, const std::vector<LabelledEdge>& edges) {
  const int k = static_cast<int>(verts.size());
  if (k == 1) return DynkinType::make(DynkinFamily::A, 1);

  std::map<int, std::vector<int>> adj;
  for (int v : verts) adj[v];
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::size_t max_degree = 0;
  for (const auto& [v, nbrs] : adj) max_degree = std::max(max_degree, nbrs.size());

  std::vector<LabelledEdge> heavy;
  for (const auto& e : edges) {
    if (e.label > 3) heavy.push_back(e);
  }

  if (heavy.empty()) {
    if (max_degree <= 2) return DynkinType::make(DynkinFamily::A, k);
    if (max_degree > 3) return DynkinType::not_dynkin();
    std::vector<int> branch;
    for (const auto& [v, nbrs] : adj) {
      if (nbrs.size() == 3) branch.push_back(v);
    }
    if (branch.size() != 1) return DynkinType::not_dynkin();
    const int center = branch.front();
    std::vector<int> arms;
    for (int first : adj.at(center)) {
      int length = 1;
      int prev = center;
      int cur = first;
      while (adj.at(cur).size() == 2) {
        const int next = adj.at(cur)[0] == prev ? adj.at(cur)[1] : adj.at(cur)[0];
        prev = cur;
        cur = next;
        ++length;
      }
      arms.push_back(length);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return DynkinType::make(DynkinFamily::D, k);
    if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return DynkinType::make(DynkinFamily::E, k);
    return DynkinType::not_dynkin();
  }

  if (heavy.size() > 1 || max_degree > 2) return DynkinType::not_dynkin();
  const int m = heavy.front().label;
  if (k == 2) return DynkinType::make(DynkinFamily::I2, m);

  const auto order = path_order(verts, adj);
  int position = -1;
  for (int e = 0; e + 1 < k; ++e) {
    const int a = order[e];
    const int b = order[e + 1];
    if ((heavy.front().u == a && heavy.front().v == b) || (heavy.front().u == b && heavy.front().v == a)) {
      position = e;
    }
  }
  const bool at_end = position == 0 || position == k - 2;
  if (m == 4) {
    if (at_end) return DynkinType::make(DynkinFamily::B, k);
    if (k == 4 && position == 1) return DynkinType::make(DynkinFamily::F, 4);
    return DynkinType::not_dynkin();
  }
  if (m == 5 && at_end && (k == 3 || k == 4)) return DynkinType::make(DynkinFamily::H, k);
  return DynkinType::not_dynkin();
}

}  // namespace

// ---------------------------------------------------------------------------
// CoxeterQuiver

LabelSet CoxeterQuiver::labels() const {
  std::vector<int> out;
  for (const auto& a : arrows_) out.push_back(a.label);
  return make_label_set(std::move(out));
}

bool CoxeterQuiver::has_vertex(int v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

std::size_t CoxeterQuiver::position(int v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(v));
  return static_cast<std::size_t>(it - vertices_.begin());
}

const Arrow& CoxeterQuiver::arrow(int id) const {
  auto it = std::lower_bound(arrows_.begin(), arrows_.end(), id, [](const Arrow& a, int x) { return a.id < x; });
  if (it == arrows_.end() || it->id != id) throw Error(ErrorKind::Parse, "unknown arrow id " + std::to_string(id));
  return *it;
}

bool CoxeterQuiver::is_sink(int v) const {
  position(v);
  return std::none_of(arrows_.begin(), arrows_.end(), [v](const Arrow& a) { return a.source == v; });
}

bool CoxeterQuiver::is_source(int v) const {
  position(v);
  return std::none_of(arrows_.begin(), arrows_.end(), [v](const Arrow& a) { return a.target == v; });
}

CoxeterQuiver validate(RawQuiver raw) {
  CoxeterQuiver q;
  std::sort(raw.vertices.begin(), raw.vertices.end());
  if (std::adjacent_find(raw.vertices.begin(), raw.vertices.end()) != raw.vertices.end()) {
    throw Error(ErrorKind::Parse, "duplicate vertex declaration");
  }
  q.vertices_ = std::move(raw.vertices);
  std::sort(raw.arrows.begin(), raw.arrows.end(), [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < raw.arrows.size(); ++i) {
    if (raw.arrows[i - 1].id == raw.arrows[i].id) {
      throw Error(ErrorKind::Parse, "duplicate arrow id " + std::to_string(raw.arrows[i].id));
    }
  }
  for (const auto& a : raw.arrows) {
    if (a.label < 3) throw Error(ErrorKind::InvalidLabel, "arrow " + std::to_string(a.id) + " has label " + std::to_string(a.label));
    if (a.source == a.target) throw Error(ErrorKind::LoopArrow, "arrow " + std::to_string(a.id) + " is a loop");
    if (!q.has_vertex(a.source) || !q.has_vertex(a.target)) {
      throw Error(ErrorKind::UnknownVertex, "arrow " + std::to_string(a.id) + " uses an undeclared vertex");
    }
  }
  q.arrows_ = std::move(raw.arrows);
  admissible_sink_ordering(q);  // throws CyclicQuiver
  return q;
}

CoxeterQuiver reverse_at(const CoxeterQuiver& q, int v) {
  q.position(v);
  CoxeterQuiver out = q;
  for (auto& a : out.arrows_) {
    if (a.source == v || a.target == v) std::swap(a.source, a.target);
  }
  return out;
}

std::vector<int> admissible_sink_ordering(const CoxeterQuiver& q) {
  const auto& verts = q.vertices();
  std::vector<int> out_degree(verts.size(), 0);
  std::vector<std::vector<std::size_t>> preds(verts.size());
  for (const auto& a : q.arrows()) {
    const auto s = q.position(a.source);
    const auto t = q.position(a.target);
    ++out_degree[s];
    preds[t].push_back(s);
  }
  std::set<std::size_t> ready;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (out_degree[i] == 0) ready.insert(i);
  }
  std::vector<int> order;
  order.reserve(verts.size());
  while (!ready.empty()) {
    const auto i = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(verts[i]);
    for (auto p : preds[i]) {
      if (--out_degree[p] == 0) ready.insert(p);
    }
  }
  if (order.size() != verts.size()) throw Error(ErrorKind::CyclicQuiver, "quiver has a directed cycle");
  return order;
}

// ---------------------------------------------------------------------------
// Dynkin types

DynkinType DynkinType::make(DynkinFamily family, int parameter) {
  if (family == DynkinFamily::D && parameter == 3) return {DynkinFamily::A, 3};
  if (family == DynkinFamily::I2) {
    if (parameter == 3) return {DynkinFamily::A, 2};
    if (parameter == 4) return {DynkinFamily::B, 2};
    if (parameter == 6) return {DynkinFamily::G, 2};
  }
  return {family, parameter};
}

int DynkinType::vertex_count() const {
  if (family == DynkinFamily::I2) return 2;
  return parameter;
}

std::string DynkinType::name() const {
  switch (family) {
    case DynkinFamily::A: return "A" + std::to_string(parameter);
    case DynkinFamily::B: return "B" + std::to_string(parameter);
    case DynkinFamily::D: return "D" + std::to_string(parameter);
    case DynkinFamily::E: return "E" + std::to_string(parameter);
    case DynkinFamily::F: return "F" + std::to_string(parameter);
    case DynkinFamily::G: return "G" + std::to_string(parameter);
    case DynkinFamily::H: return "H" + std::to_string(parameter);
    case DynkinFamily::I2: return "I2(" + std::to_string(parameter) + ")";
    case DynkinFamily::NotDynkin: return "NotDynkin";
  }
  return "NotDynkin";
}

DynkinType DynkinType::parse(std::string_view name) {
  if (name == "NotDynkin") return not_dynkin();
  if (name.size() < 2) throw Error(ErrorKind::Parse, "bad Dynkin type '" + std::string(name) + "'");
  auto number = [&](std::string_view digits) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw Error(ErrorKind::Parse, "bad Dynkin type '" + std::string(name) + "'");
    }
    return value;
  };
  if (name.starts_with("I2(") && name.ends_with(")")) {
    return make(DynkinFamily::I2, number(name.substr(3, name.size() - 4)));
  }
  const int p = number(name.substr(1));
  switch (name[0]) {
    case 'A': return make(DynkinFamily::A, p);
    case 'B': return make(DynkinFamily::B, p);
    case 'C': return make(DynkinFamily::B, p);
    case 'D': return make(DynkinFamily::D, p);
    case 'E': return make(DynkinFamily::E, p);
    case 'F': return make(DynkinFamily::F, p);
    case 'G': return make(DynkinFamily::G, p);
    case 'H': return make(DynkinFamily::H, p);
    default: break;
  }
  throw Error(ErrorKind::Parse, "bad Dynkin type '" + std::string(name) + "'");
}

std::vector<ComponentType> classify_labelled_graph(const std::vector<int>& vertices,
                                                   const std::vector<LabelledEdge>& edges) {
  std::vector<int> verts = vertices;
  std::sort(verts.begin(), verts.end());
  std::map<int, int> parent;
  for (int v : verts) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : edges) {
    const int a = find(e.u);
    const int b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<int, std::vector<int>> members;
  for (int v : verts) members[find(v)].push_back(v);
  std::map<int, std::vector<LabelledEdge>> component_edges;
  for (const auto& e : edges) component_edges[find(e.u)].push_back(e);

  std::vector<ComponentType> out;
  for (auto& [root, comp] : members) {
    const auto& comp_edges = component_edges[root];
    DynkinType type;
    std::set<std::pair<int, int>> seen;
    bool multi = false;
    for (const auto& e : comp_edges) {
      if (!seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second) multi = true;
    }
    if (multi || comp_edges.size() + 1 != comp.size()) {
      type = DynkinType::not_dynkin();
    } else {
      type = classify_tree(comp, comp_edges);
    }
    out.push_back({comp, type});
  }
  return out;
}

std::vector<ComponentType> classify_graph(const CoxeterQuiver& q) {
  std::vector<LabelledEdge> edges;
  for (const auto& a : q.arrows()) edges.push_back({a.source, a.target, a.label});
  return classify_labelled_graph(q.vertices(), edges);
}

bool is_finite_type(const CoxeterQuiver& q) {
  const auto comps = classify_graph(q);
  return std::all_of(comps.begin(), comps.end(), [](const ComponentType& c) { return c.type.is_dynkin(); });
}

// ---------------------------------------------------------------------------
// I/O

CoxeterQuiver parse_quiver_text(std::string_view text) {
  RawQuiver raw;
  int line_no = 0;
  int next_id = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "vertex" && tokens.size() == 2) {
      raw.vertices.push_back(parse_int_token(tokens[1], line_no));
    } else if (tokens[0] == "arrow" && (tokens.size() == 3 || tokens.size() == 4)) {
      Arrow a;
      a.id = next_id++;
      a.source = parse_int_token(tokens[1], line_no);
      a.target = parse_int_token(tokens[2], line_no);
      a.label = tokens.size() == 4 ? parse_int_token(tokens[3], line_no) : 3;
      raw.arrows.push_back(a);
    } else {
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": unrecognized declaration");
    }
  }
  return validate(std::move(raw));
}

CoxeterQuiver quiver_from_json(const nlohmann::json& j) {
  RawQuiver raw;
  try {
    for (const auto& v : j.at("vertices")) raw.vertices.push_back(v.get<int>());
    int next_id = 0;
    for (const auto& a : j.at("arrows")) {
      Arrow arrow;
      arrow.id = a.contains("id") ? a.at("id").get<int>() : next_id;
      next_id = std::max(next_id, arrow.id) + 1;
      arrow.source = a.at("source").get<int>();
      arrow.target = a.at("target").get<int>();
      arrow.label = a.contains("label") ? a.at("label").get<int>() : 3;
      raw.arrows.push_back(arrow);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("quiver JSON: ") + e.what());
  }
  return validate(std::move(raw));
}

CoxeterQuiver parse_quiver(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::Parse, std::string("quiver JSON: ") + e.what());
    }
    return quiver_from_json(j);
  }
  return parse_quiver_text(text);
}

nlohmann::json to_json(const CoxeterQuiver& q) {
  nlohmann::json out;
  out["vertices"] = q.vertices();
  out["arrows"] = nlohmann::json::array();
  for (const auto& a : q.arrows()) {
    out["arrows"].push_back({{"id", a.id}, {"source", a.source}, {"target", a.target}, {"label", a.label}});
  }
  return out;
}

std::string to_text(const CoxeterQuiver& q) {
  std::ostringstream out;
  for (int v : q.vertices()) out << "vertex " << v << '\n';
  for (const auto& a : q.arrows()) {
    out << "arrow " << a.source << ' ' << a.target;
    if (a.label != 3) out << ' ' << a.label;
    out << '\n';
  }
  return out.str();
}

}  // namespace coxrep
