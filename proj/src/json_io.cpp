#include "medianite/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "medianite/errors.hpp"

namespace medianite::io {

using nlohmann::json;

Element parse_element(const PocSet& p, const std::string& name) {
  bool starred = !name.empty() && name.back() == '*';
  std::string base = starred ? name.substr(0, name.size() - 1) : name;
  for (int w = 0; w < p.walls(); ++w)
    if (p.label(w) == base) return starred ? neg_element(w) : pos_element(w);
  throw Error("unknown element name: " + name);
}

namespace {

PocSet from_template(const json& j) {
  const std::string t = j.at("template").get<std::string>();
  if (t == "xt" || t == "x_t") return PocSet::xt(j.at("t").get<double>());
  if (t == "linear") return PocSet::linear(j.at("k").get<int>());
  if (t == "transverse") {
    int n = j.at("n").get<int>();
    return PocSet::from_generators(n, {});
  }
  if (t == "tree") {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return PocSet::from_tree(edges);
  }
  throw Error("unknown template: " + t);
}

}  // namespace

PocSet pocset_from_json(const json& j) {
  if (j.contains("template")) return from_template(j);

  std::vector<std::string> labels;
  for (const auto& w : j.at("walls")) labels.push_back(w.get<std::string>());
  const int n = int(labels.size());
  for (int a = 0; a < n; ++a) {
    if (labels[a].empty() || labels[a].back() == '*')
      throw Error("wall names must be nonempty and must not end in '*': " + labels[a]);
    for (int b = a + 1; b < n; ++b)
      if (labels[a] == labels[b]) throw Error("duplicate wall name: " + labels[a]);
  }

  auto find_element = [&](const std::string& name) -> Element {
    bool starred = !name.empty() && name.back() == '*';
    std::string base = starred ? name.substr(0, name.size() - 1) : name;
    for (int w = 0; w < n; ++w)
      if (labels[w] == base) return starred ? neg_element(w) : pos_element(w);
    throw Error("order references unknown wall: " + name);
  };

  std::vector<std::pair<Element, Element>> rels;
  if (j.contains("order"))
    for (const auto& pair : j.at("order")) {
      if (!pair.is_array() || pair.size() != 2) throw Error("order entries must be pairs");
      rels.emplace_back(find_element(pair.at(0).get<std::string>()),
                        find_element(pair.at(1).get<std::string>()));
    }

  std::vector<double> weights;
  if (j.contains("weights") && !j.at("weights").empty()) {
    const auto& jw = j.at("weights");
    weights.assign(n, -1.0);
    for (auto it = jw.begin(); it != jw.end(); ++it) {
      bool found = false;
      for (int w = 0; w < n; ++w)
        if (labels[w] == it.key()) {
          weights[w] = it.value().get<double>();
          found = true;
        }
      if (!found) throw Error("weight names unknown wall: " + it.key());
    }
    for (int w = 0; w < n; ++w)
      if (weights[w] < 0.0)
        throw MissingWeight(w, "no weight given for wall " + labels[w]);
  }

  return PocSet::from_generators(n, rels, std::move(weights), std::move(labels));
}

PocSet load_pocset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  json j = json::parse(in);  // malformed input raises json::parse_error
  return pocset_from_json(j);
}

json pocset_to_json(const PocSet& p) {
  json j;
  j["walls"] = p.labels();
  json order = json::array();
  for (Element a = 0; a < p.elements(); ++a)
    for (Element b = 0; b < p.elements(); ++b)
      if (a != b && p.leq(a, b)) order.push_back({p.element_name(a), p.element_name(b)});
  j["order"] = order;
  json weights;
  for (int w = 0; w < p.walls(); ++w) weights[p.label(w)] = p.weight(w);
  j["weights"] = weights;
  return j;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string to_dot(const CubingGraph& g) {
  std::ostringstream out;
  out << "graph cubing {\n";
  for (int i = 0; i < g.size(); ++i)
    out << "  v" << i << " [label=\"" << g.vertex(i).signs() << "\"];\n";
  for (const auto& e : g.edges())
    out << "  v" << e.u << " -- v" << e.v << " [label=\""
        << g.pocset().label(e.wall) << "\"];\n";
  out << "}\n";
  return out.str();
}

json graph_to_json(const CubingGraph& g) {
  json j;
  j["walls"] = g.pocset().labels();
  json verts = json::array();
  for (int i = 0; i < g.size(); ++i) verts.push_back(g.vertex(i).signs());
  j["vertices"] = verts;
  json edges = json::array();
  for (const auto& e : g.edges())
    edges.push_back({e.u, e.v, g.pocset().label(e.wall)});
  j["edges"] = edges;
  return j;
}

std::string matrix_csv(const CubingGraph& g, const std::vector<double>& d) {
  std::ostringstream out;
  out << "vertex";
  for (int i = 0; i < g.size(); ++i) out << "," << g.vertex(i).signs();
  out << "\n";
  for (int i = 0; i < g.size(); ++i) {
    out << g.vertex(i).signs();
    for (int j = 0; j < g.size(); ++j)
      out << "," << format_double(d[std::size_t(i) * g.size() + j]);
    out << "\n";
  }
  return out.str();
}

}  // namespace medianite::io
