#include "ecp/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace ecp {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

int to_int(const std::string& s, const char* what) {
  std::size_t pos = 0;
  int v;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw ParseError(std::string("bad ") + what + ": " + s);
  }
  if (pos != s.size()) throw ParseError(std::string("bad ") + what + ": " + s);
  return v;
}

}  // namespace

std::string write_graph(const GraphInstance& gi) {
  const EmbeddedMultigraph& g = gi.graph;
  std::ostringstream os;
  os << "planar-graph v1\n";
  os << "vertices " << g.vertex_count() << "\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    os << "rot " << v << ":";
    for (DartId d : g.rotation(v)) os << " " << d;
    os << "\n";
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const EdgeSpec& spec = g.edge(e);
    os << "edge " << e << " " << spec.u << " " << spec.v << " "
       << spec.weight.str() << "\n";
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (gi.requirements(v) > 0)
      os << "req " << v << " " << gi.requirements(v) << "\n";
  }
  return os.str();
}

GraphInstance parse_graph(std::istream& in) {
  std::string line;
  bool header_seen = false;
  int n = -1;
  std::vector<std::vector<DartId>> rotation;
  std::vector<EdgeSpec> edges;
  std::vector<std::pair<Vertex, int>> reqs;

  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto toks = tokenize(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (!header_seen) {
      if (toks.size() != 2 || toks[0] != "planar-graph" || toks[1] != "v1")
        throw ParseError("missing 'planar-graph v1' header");
      header_seen = true;
      continue;
    }
    if (toks[0] == "vertices") {
      if (toks.size() != 2) throw ParseError("malformed vertices line");
      n = to_int(toks[1], "vertex count");
      if (n < 0) throw ParseError("negative vertex count");
      rotation.assign(n, {});
    } else if (toks[0] == "rot") {
      if (n < 0) throw ParseError("rot line before vertices line");
      if (toks.size() < 2 || toks[1].back() != ':')
        throw ParseError("malformed rot line: " + line);
      int v = to_int(toks[1].substr(0, toks[1].size() - 1), "rot vertex");
      if (v < 0 || v >= n) throw ParseError("rot vertex out of range");
      for (std::size_t i = 2; i < toks.size(); ++i)
        rotation[v].push_back(to_int(toks[i], "dart id"));
    } else if (toks[0] == "edge") {
      if (toks.size() != 5) throw ParseError("malformed edge line: " + line);
      int id = to_int(toks[1], "edge id");
      if (id != static_cast<int>(edges.size()))
        throw ParseError("edge ids must be dense and ascending");
      EdgeSpec spec;
      spec.u = to_int(toks[2], "edge endpoint");
      spec.v = to_int(toks[3], "edge endpoint");
      try {
        spec.weight = Rational::parse(toks[4]);
      } catch (const std::invalid_argument& ex) {
        throw ParseError(ex.what());
      }
      edges.push_back(spec);
    } else if (toks[0] == "req") {
      if (toks.size() != 3) throw ParseError("malformed req line: " + line);
      reqs.emplace_back(to_int(toks[1], "req vertex"),
                        to_int(toks[2], "req value"));
    } else {
      throw ParseError("unknown directive: " + toks[0]);
    }
  }
  if (!header_seen) throw ParseError("empty graph file");
  if (n < 0) throw ParseError("missing vertices line");

  GraphInstance gi;
  try {
    gi.graph = EmbeddedMultigraph::build(n, std::move(edges), std::move(rotation));
  } catch (const GraphError& ex) {
    throw ParseError(std::string("invalid embedding: ") + ex.what());
  }
  std::vector<int> req(n, 0);
  for (auto [v, r] : reqs) {
    if (v < 0 || v >= n) throw ParseError("req vertex out of range");
    if (r < 0 || r > 3) throw ParseError("req value outside {0,1,2,3}");
    req[v] = r;
  }
  gi.requirements = RequirementMap(std::move(req));
  return gi;
}

GraphInstance parse_graph_string(const std::string& text) {
  std::istringstream is(text);
  return parse_graph(is);
}

GraphInstance load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_graph(in);
}

void save_graph_file(const GraphInstance& gi, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << write_graph(gi);
}

std::string write_solution(const MultiSolution& sol) {
  std::ostringstream os;
  os << "solution v1\n";
  os << "k " << sol.k << "\n";
  for (EdgeId e = 0; e < static_cast<int>(sol.mult.size()); ++e)
    if (sol.mult[e] > 0) os << "edge " << e << " " << sol.mult[e] << "\n";
  return os.str();
}

MultiSolution parse_solution_string(const std::string& text, int edge_count) {
  std::istringstream is(text);
  std::string line;
  MultiSolution sol;
  sol.mult.assign(edge_count, 0);
  bool header_seen = false;
  while (std::getline(is, line)) {
    auto toks = tokenize(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (!header_seen) {
      if (toks.size() != 2 || toks[0] != "solution" || toks[1] != "v1")
        throw ParseError("missing 'solution v1' header");
      header_seen = true;
      continue;
    }
    if (toks[0] == "k" && toks.size() == 2) {
      sol.k = to_int(toks[1], "k");
    } else if (toks[0] == "edge" && toks.size() == 3) {
      int id = to_int(toks[1], "edge id");
      if (id < 0 || id >= edge_count) throw ParseError("edge id out of range");
      sol.mult[id] = to_int(toks[2], "multiplicity");
    } else {
      throw ParseError("unknown solution directive: " + toks[0]);
    }
  }
  sol.check_bounds();
  return sol;
}

}  // namespace ecp
