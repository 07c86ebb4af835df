#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "medianite/dual.hpp"
#include "medianite/pocset.hpp"

namespace medianite::io {

/// Canonical poc-set document:
///   {"walls": ["a","b"], "order": [["a","b"],["b*","c"]], "weights": {"a": 1.0}}
/// "x" is the positive side of wall x, "x*" its complement; order pairs mean
/// "first <= second". Missing "weights" means unit weights. Alternatively a
/// template form is accepted: {"template": "xt", "t": 0.5}, plus "linear"
/// (k), "transverse" (n) and "tree" (edges).
PocSet pocset_from_json(const nlohmann::json& j);
PocSet load_pocset(const std::string& path);

nlohmann::json pocset_to_json(const PocSet& p);

/// Parses an element name like "a" or "a*".
Element parse_element(const PocSet& p, const std::string& name);

std::string to_dot(const CubingGraph& g);
nlohmann::json graph_to_json(const CubingGraph& g);

/// CSV with a header row/column of vertex sign strings.
std::string matrix_csv(const CubingGraph& g, const std::vector<double>& d);

std::string format_double(double x);

}  // namespace medianite::io
