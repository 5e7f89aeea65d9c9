#pragma once

#include <iosfwd>
#include <string>

#include "ecp/graph.hpp"

namespace ecp {

struct GraphInstance {
  EmbeddedMultigraph graph;
  RequirementMap requirements;
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Text format:
///   planar-graph v1
///   vertices N
///   rot v: d1 d2 ...          (one line per vertex, ascending)
///   edge id u v w[/d]         (one line per edge, ascending id)
///   req v r                   (positive requirements only, ascending v)
/// write_graph emits the canonical form; parse_graph accepts it back
/// bit-exactly and tolerates blank lines and '#' comments.
std::string write_graph(const GraphInstance& gi);
GraphInstance parse_graph(std::istream& in);
GraphInstance parse_graph_string(const std::string& text);
GraphInstance load_graph_file(const std::string& path);
void save_graph_file(const GraphInstance& gi, const std::string& path);

/// Solution file: one "edge id multiplicity" line per positive entry,
/// ascending id, preceded by "solution v1" and a "k K" line.
std::string write_solution(const MultiSolution& sol);
MultiSolution parse_solution_string(const std::string& text, int edge_count);

}  // namespace ecp
