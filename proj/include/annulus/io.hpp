#pragma once

#include <iosfwd>
#include <string>

#include "annulus/generators.hpp"

namespace annulus {

const char* model_name(Model m);
Model model_from_name(const std::string& name);

// Instance file: JSON header (model, n, t, params, seed) plus positions,
// optional truth labels, and the edge list.
void write_instance_json(const GeometricInstance& inst, std::ostream& out);
GeometricInstance read_instance_json(std::istream& in);

void write_instance_file(const GeometricInstance& inst, const std::string& path);
GeometricInstance read_instance_file(const std::string& path);

// Edge-list text format: "n m" header line, then one "u v" line per edge,
// 0-indexed with u < v, in canonical order.
void write_edge_list(const Graph& g, std::ostream& out);
Graph read_edge_list(std::istream& in);

}  // namespace annulus
