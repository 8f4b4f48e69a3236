#pragma once

// Inclusion order on named clones and Hasse-diagram emission (DOT / JSON).

#include <sstream>
#include <string>
#include <vector>

#include "dm4/invariants.hpp"

namespace dm4 {

struct LatticeDescription {
  std::vector<std::string> nodes;                       // spec names, input order
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // covering pairs (sub, super)
  std::vector<std::vector<bool>> leq;                   // full inclusion matrix
};

inline LatticeDescription compute_lattice(const std::vector<CloneSpec>& specs) {
  LatticeDescription d;
  std::size_t n = specs.size();
  for (const CloneSpec& s : specs) d.nodes.push_back(s.name);
  d.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d.leq[i][j] = clone_leq(specs[i], specs[j]);
  auto strict = [&](std::size_t i, std::size_t j) { return d.leq[i][j] && !d.leq[j][i]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!strict(i, j)) continue;
      bool covered = true;
      for (std::size_t k = 0; k < n; ++k)
        if (k != i && k != j && strict(i, k) && strict(k, j)) covered = false;
      if (covered) d.edges.emplace_back(i, j);
    }
  return d;
}

// plain digraph, edges upward (subset -> superset), diff-stable
inline std::string lattice_dot(const LatticeDescription& d) {
  std::ostringstream os;
  os << "digraph clones {\n";
  os << "  rankdir=BT\n";
  for (const std::string& n : d.nodes) os << "  \"" << n << "\"\n";
  auto edges = d.edges;
  std::sort(edges.begin(), edges.end(), [&](auto a, auto b) {
    return std::pair(d.nodes[a.first], d.nodes[a.second]) <
           std::pair(d.nodes[b.first], d.nodes[b.second]);
  });
  for (auto [i, j] : edges) os << "  \"" << d.nodes[i] << "\" -> \"" << d.nodes[j] << "\"\n";
  os << "}\n";
  return os.str();
}

inline std::string lattice_json(const LatticeDescription& d) {
  std::ostringstream os;
  os << "{\"nodes\":[";
  for (std::size_t i = 0; i < d.nodes.size(); ++i) os << (i ? "," : "") << '"' << d.nodes[i] << '"';
  os << "],\"edges\":[";
  auto edges = d.edges;
  std::sort(edges.begin(), edges.end(), [&](auto a, auto b) {
    return std::pair(d.nodes[a.first], d.nodes[a.second]) <
           std::pair(d.nodes[b.first], d.nodes[b.second]);
  });
  for (std::size_t k = 0; k < edges.size(); ++k) {
    os << (k ? "," : "") << "[\"" << d.nodes[edges[k].first] << "\",\"" << d.nodes[edges[k].second]
       << "\"]";
  }
  os << "]}";
  return os.str();
}

}  // namespace dm4
