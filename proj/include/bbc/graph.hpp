#pragma once

#include <unordered_map>
#include <vector>

#include "bbc/crystal.hpp"

namespace bbc {

// An explored window of a crystal graph. Nodes carry cached statistics and
// their root-height displacement below the seed (negative means above).
// Every edge (from --(i,l)--> to) satisfies wt(to) = wt(from) - l*alpha_i.
struct LabelledGraph {
  struct Node {
    Elem elem;
    Weight wt;
    std::vector<ExtInt> eps, phi;  // indexed by datum position
    long long depth = 0;
  };
  struct Edge {
    int from = 0, to = 0;
    int i = 0;
    long long l = 1;
    friend bool operator==(const Edge& a, const Edge& b) {
      return a.from == b.from && a.to == b.to && a.i == b.i && a.l == b.l;
    }
  };

  std::vector<Node> nodes;
  std::vector<Edge> edges;
  std::vector<int> roots;
  long long budget = 0;
  bool two_sided = false;
  std::unordered_map<Elem, int, ElemHash> ids;

  bool contains(const Elem& x) const { return ids.find(x) != ids.end(); }
  // -1 when absent.
  int id_of(const Elem& x) const {
    auto it = ids.find(x);
    return it == ids.end() ? -1 : it->second;
  }
  const Node& node(int id) const { return nodes.at(static_cast<size_t>(id)); }
};

// Closure of the seeds under all f(i,l) with l bounded by the remaining
// root-height budget at each node (l = 1 for real i). Terminates because
// every step strictly decreases the remaining budget by l >= 1. Throws
// InterfaceViolationError if a produced child has an inconsistent weight.
LabelledGraph explore(const Crystal& S, const std::vector<Elem>& seeds, long long budget);

// Closure under both e and f inside the window of root-height displacement
// [-budget, +budget] around the seed; realizes "connected component of".
LabelledGraph close_component(const Crystal& S, const Elem& seed, long long budget);

}  // namespace bbc
