#include "bbc/graph_io.hpp"

#include <algorithm>
#include <tuple>

namespace bbc {

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  return out;
}

nlohmann::json weight_json(const Weight& w, const CartanDatum& d) {
  nlohmann::json lam = nlohmann::json::object();
  nlohmann::json rt = nlohmann::json::object();
  for (const auto& [i, c] : w.lam_terms()) lam[d.name(i)] = c;
  for (const auto& [i, c] : w.rt_terms()) rt[d.name(i)] = c;
  return {{"lam", lam}, {"rt", rt}};
}

nlohmann::json extint_json(const ExtInt& x) {
  if (x.finite()) return x.value();
  return "-inf";
}

}  // namespace

std::vector<int> emission_order(const LabelledGraph& G, const CartanDatum& d) {
  std::vector<std::tuple<long long, std::string, int>> keyed;
  keyed.reserve(G.nodes.size());
  for (int id = 0; id < static_cast<int>(G.nodes.size()); ++id)
    keyed.emplace_back(G.nodes[static_cast<size_t>(id)].depth, G.nodes[static_cast<size_t>(id)].elem.repr(d), id);
  std::sort(keyed.begin(), keyed.end());
  std::vector<int> order;
  order.reserve(keyed.size());
  for (const auto& [depth, repr, id] : keyed) order.push_back(id);
  return order;
}

namespace {

struct EmittedEdge {
  int from, to;
  int i;
  long long l;
};

std::vector<EmittedEdge> sorted_edges(const LabelledGraph& G, const std::vector<int>& order) {
  std::vector<int> rank(G.nodes.size(), 0);
  for (int pos = 0; pos < static_cast<int>(order.size()); ++pos) rank[static_cast<size_t>(order[pos])] = pos;
  std::vector<EmittedEdge> edges;
  edges.reserve(G.edges.size());
  for (const auto& e : G.edges)
    edges.push_back({rank[static_cast<size_t>(e.from)], rank[static_cast<size_t>(e.to)], e.i, e.l});
  std::sort(edges.begin(), edges.end(), [](const EmittedEdge& a, const EmittedEdge& b) {
    return std::tie(a.from, a.i, a.l, a.to) < std::tie(b.from, b.i, b.l, b.to);
  });
  return edges;
}

}  // namespace

std::string to_dot(const LabelledGraph& G, const CartanDatum& d) {
  std::vector<int> order = emission_order(G, d);
  std::vector<std::string> reprs(order.size());
  for (size_t pos = 0; pos < order.size(); ++pos)
    reprs[pos] = G.nodes[static_cast<size_t>(order[pos])].elem.repr(d);
  for (size_t pos = 1; pos < reprs.size(); ++pos)
    if (reprs[pos] == reprs[pos - 1]) throw BbcError("node renderings collide: " + reprs[pos]);

  std::string out = "digraph crystal {\n";
  for (const auto& r : reprs) out += "  \"" + dot_escape(r) + "\";\n";
  for (const auto& e : sorted_edges(G, order))
    out += "  \"" + dot_escape(reprs[static_cast<size_t>(e.from)]) + "\" -> \"" +
           dot_escape(reprs[static_cast<size_t>(e.to)]) + "\" [label=\"(" + d.name(e.i) + "," +
           std::to_string(e.l) + ")\"];\n";
  out += "}\n";
  return out;
}

nlohmann::json graph_json(const LabelledGraph& G, const CartanDatum& d) {
  std::vector<int> order = emission_order(G, d);
  nlohmann::json nodes = nlohmann::json::array();
  for (int pos = 0; pos < static_cast<int>(order.size()); ++pos) {
    const auto& n = G.nodes[static_cast<size_t>(order[static_cast<size_t>(pos)])];
    nlohmann::json eps = nlohmann::json::object();
    nlohmann::json phi = nlohmann::json::object();
    for (int i = 0; i < d.rank(); ++i) {
      eps[d.name(i)] = extint_json(n.eps[static_cast<size_t>(i)]);
      phi[d.name(i)] = extint_json(n.phi[static_cast<size_t>(i)]);
    }
    nodes.push_back({{"id", pos},
                     {"repr", n.elem.repr(d)},
                     {"wt", weight_json(n.wt, d)},
                     {"eps", eps},
                     {"phi", phi},
                     {"depth", n.depth}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : sorted_edges(G, order))
    edges.push_back({{"from", e.from}, {"to", e.to}, {"i", d.name(e.i)}, {"l", e.l}});
  return {{"kind", "crystal-graph"}, {"budget", G.budget}, {"nodes", nodes}, {"edges", edges}};
}

std::string to_json(const LabelledGraph& G, const CartanDatum& d) { return graph_json(G, d).dump(2) + "\n"; }

}  // namespace bbc
