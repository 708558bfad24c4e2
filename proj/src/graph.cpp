#include "bbc/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>
#include <set>
#include <tuple>

namespace bbc {

namespace {

struct Builder {
  const Crystal& S;
  LabelledGraph& G;
  std::set<std::tuple<int, int, int, long long>> edge_set;

  int lookup_or_create(const Elem& x, long long depth) {
    auto it = G.ids.find(x);
    if (it != G.ids.end()) return it->second;
    const CartanDatum& d = S.datum();
    LabelledGraph::Node n;
    n.elem = x;
    n.wt = S.wt(x);
    n.depth = depth;
    n.eps.reserve(static_cast<size_t>(d.rank()));
    n.phi.reserve(static_cast<size_t>(d.rank()));
    for (int i = 0; i < d.rank(); ++i) {
      n.eps.push_back(S.eps(i, x));
      n.phi.push_back(S.phi(i, x));
    }
    int id = static_cast<int>(G.nodes.size());
    G.nodes.push_back(std::move(n));
    G.ids.emplace(x, id);
    return id;
  }

  void record_edge(int from, int to, int i, long long l) {
    if (edge_set.emplace(from, to, i, l).second) G.edges.push_back({from, to, i, l});
  }

  void check_child_wt(const Elem& parent, const Weight& wp, const Elem& child, int i, long long l,
                      bool lowering) {
    const CartanDatum& d = S.datum();
    Weight expect = wp.plus_alpha(i, lowering ? -l : l);
    if (S.wt(child) != expect)
      throw InterfaceViolationError(std::string(lowering ? "f(" : "e(") + d.name(i) + "," + std::to_string(l) +
                                    ") on " + parent.repr(d) + " produced an inconsistent weight");
  }
};

}  // namespace

LabelledGraph explore(const Crystal& S, const std::vector<Elem>& seeds, long long budget) {
  if (budget < 0) throw BbcError("exploration budget must be nonnegative");
  const CartanDatum& d = S.datum();
  LabelledGraph G;
  G.budget = budget;
  G.two_sided = false;
  Builder builder{S, G, {}};

  // Multi-source shortest displacement: a node reachable from several seeds
  // expands with the largest remaining budget, which makes the result the
  // union of the single-seed closures.
  constexpr long long kUnset = std::numeric_limits<long long>::max();
  using Entry = std::pair<long long, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> queue;
  std::vector<char> done;

  for (const Elem& s : seeds) {
    bool existed = G.contains(s);
    int id = builder.lookup_or_create(s, 0);
    if (!existed) G.roots.push_back(id);
    G.nodes[static_cast<size_t>(id)].depth = 0;
    queue.push({0, id});
  }

  while (!queue.empty()) {
    auto [depth, id] = queue.top();
    queue.pop();
    if (static_cast<size_t>(id) < done.size() && done[static_cast<size_t>(id)]) continue;
    if (depth != G.nodes[static_cast<size_t>(id)].depth) continue;  // stale entry
    if (done.size() < G.nodes.size()) done.resize(G.nodes.size(), 0);
    done[static_cast<size_t>(id)] = 1;

    const Elem b = G.nodes[static_cast<size_t>(id)].elem;
    const Weight wb = G.nodes[static_cast<size_t>(id)].wt;
    for (int i = 0; i < d.rank(); ++i) {
      long long hi = budget - depth;
      if (d.real(i)) hi = std::min<long long>(hi, 1);
      for (long long l = 1; l <= hi; ++l) {
        auto child = S.f(i, l, b);
        if (!child) continue;
        builder.check_child_wt(b, wb, *child, i, l, true);
        bool existed = G.contains(*child);
        int cid = builder.lookup_or_create(*child, kUnset);
        builder.record_edge(id, cid, i, l);
        long long cd = depth + l;
        auto& node = G.nodes[static_cast<size_t>(cid)];
        if (!existed || cd < node.depth) {
          node.depth = cd;
          queue.push({cd, cid});
        }
      }
    }
  }
  return G;
}

LabelledGraph close_component(const Crystal& S, const Elem& seed, long long budget) {
  if (budget < 0) throw BbcError("exploration budget must be nonnegative");
  const CartanDatum& d = S.datum();
  LabelledGraph G;
  G.budget = budget;
  G.two_sided = true;
  Builder builder{S, G, {}};

  const Weight seed_wt = S.wt(seed);
  // Inside one component the displacement is determined by the weight.
  auto depth_of = [&](const Weight& w) {
    Weight diff = seed_wt - w;
    if (!diff.root_only())
      throw InterfaceViolationError("component left the root-lattice coset of its seed");
    return diff.rt_coeff_sum();
  };

  int root = builder.lookup_or_create(seed, 0);
  G.roots.push_back(root);
  std::deque<int> queue = {root};

  while (!queue.empty()) {
    int id = queue.front();
    queue.pop_front();
    const Elem b = G.nodes[static_cast<size_t>(id)].elem;
    const Weight wb = G.nodes[static_cast<size_t>(id)].wt;
    const long long depth = G.nodes[static_cast<size_t>(id)].depth;

    auto visit = [&](const Elem& next, int from_id, int i, long long l, bool lowering) {
      bool existed = G.contains(next);
      int nid = builder.lookup_or_create(next, lowering ? depth + l : depth - l);
      if (lowering)
        builder.record_edge(from_id, nid, i, l);
      else
        builder.record_edge(nid, from_id, i, l);
      if (!existed) queue.push_back(nid);
    };

    for (int i = 0; i < d.rank(); ++i) {
      long long f_hi = budget - depth;
      if (d.real(i)) f_hi = std::min<long long>(f_hi, 1);
      for (long long l = 1; l <= f_hi; ++l) {
        auto child = S.f(i, l, b);
        if (!child) continue;
        builder.check_child_wt(b, wb, *child, i, l, true);
        if (depth_of(S.wt(*child)) != depth + l)
          throw InterfaceViolationError("displacement mismatch under f at " + b.repr(d));
        visit(*child, id, i, l, true);
      }
      long long e_hi = budget + depth;
      if (d.real(i)) e_hi = std::min<long long>(e_hi, 1);
      for (long long l = 1; l <= e_hi; ++l) {
        auto parent = S.e(i, l, b);
        if (!parent) continue;
        builder.check_child_wt(b, wb, *parent, i, l, false);
        if (depth_of(S.wt(*parent)) != depth - l)
          throw InterfaceViolationError("displacement mismatch under e at " + b.repr(d));
        visit(*parent, id, i, l, false);
      }
    }
  }
  return G;
}

}  // namespace bbc
