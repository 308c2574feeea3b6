#include "munet/structure.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace munet {

namespace {

// Undirected components as a plain partition, without network checks.
std::pair<std::vector<std::vector<int>>, std::vector<int>> undirected_components(const Network& n) {
  std::vector<int> comp(n.node_count(), -1);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n.node_count(); ++s) {
    if (comp[s] != -1) continue;
    int c = static_cast<int>(comps.size());
    comps.emplace_back();
    std::deque<int> queue{s};
    comp[s] = c;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      comps[c].push_back(v);
      for (int eid : n.und_edges(v)) {
        int w = n.other_end(n.edge(eid), v);
        if (comp[w] == -1) {
          comp[w] = c;
          queue.push_back(w);
        }
      }
    }
    std::sort(comps[c].begin(), comps[c].end());
  }
  return {std::move(comps), std::move(comp)};
}

bool undirected_forest(const Network& n) {
  // A component with as many undirected edges as nodes (or more) has a cycle.
  auto [comps, comp] = undirected_components(n);
  std::vector<int> edge_count(comps.size(), 0);
  for (const Edge& e : n.edges())
    if (!e.directed()) edge_count[comp[e.u]]++;
  for (size_t c = 0; c < comps.size(); ++c)
    if (edge_count[c] >= static_cast<int>(comps[c].size())) return false;
  return true;
}

bool dag_check(int node_count, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> indeg(node_count, 0);
  std::vector<std::vector<int>> out(node_count);
  for (auto [u, v] : edges) {
    out[u].push_back(v);
    indeg[v]++;
  }
  std::deque<int> queue;
  for (int v = 0; v < node_count; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  int seen = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    seen++;
    for (int w : out[v])
      if (--indeg[w] == 0) queue.push_back(w);
  }
  return seen == node_count;
}

}  // namespace

bool is_acyclic(const Network& n) {
  if (!undirected_forest(n)) return false;
  Contraction c = contraction(n);
  return dag_check(c.node_count, c.edges);
}

ComponentDecomposition decompose(const Network& n) {
  if (!is_acyclic(n)) throw DomainError("cyclic input");
  ComponentDecomposition d;
  auto [comps, comp] = undirected_components(n);
  d.components = std::move(comps);
  d.component_of = std::move(comp);
  d.entry.assign(d.components.size(), -1);
  for (size_t c = 0; c < d.components.size(); ++c) {
    for (int v : d.components[c]) {
      if (n.in_edges(v).empty()) continue;
      if (d.entry[c] != -1 && d.entry[c] != v)
        throw DomainError("not a network: undirected component with two entry nodes (" +
                          n.node_name(d.entry[c]) + ", " + n.node_name(v) + ")");
      d.entry[c] = v;
    }
  }
  // Root components ordered by smallest external id of their members.
  std::vector<int> roots;
  for (size_t c = 0; c < d.components.size(); ++c)
    if (d.entry[c] == -1) roots.push_back(static_cast<int>(c));
  std::sort(roots.begin(), roots.end(), [&](int a, int b) {
    auto smallest = [&](int c) {
      const std::string* best = nullptr;
      for (int v : d.components[c])
        if (!best || n.node_name(v) < *best) best = &n.node_name(v);
      return *best;
    };
    return smallest(a) < smallest(b);
  });
  d.root_components = std::move(roots);
  return d;
}

bool is_network(const Network& n) {
  if (!is_acyclic(n)) return false;
  auto [comps, comp] = undirected_components(n);
  std::vector<int> entries(comps.size(), 0);
  for (size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c])
      if (!n.in_edges(v).empty()) entries[c]++;
  return std::all_of(entries.begin(), entries.end(), [](int e) { return e <= 1; });
}

void require_network(const Network& n) {
  if (!is_acyclic(n)) throw DomainError("not a network: the graph has a semidirected cycle");
  auto [comps, comp] = undirected_components(n);
  for (size_t c = 0; c < comps.size(); ++c) {
    int entries = 0;
    for (int v : comps[c])
      if (!n.in_edges(v).empty()) entries++;
    if (entries > 1)
      throw DomainError(
          "no rooted partner: an undirected component has more than one node with incoming "
          "edges, so its edges cannot be directed without creating a new hybrid node");
  }
}

namespace {

// Leaves in every rooted partner: out-degree 0 and either no undirected edge,
// or a single undirected edge whose forced direction points at the node.
bool rooted_leaf(const Network& n, const ComponentDecomposition& d, int v) {
  if (!n.out_edges(v).empty()) return false;
  int ud = static_cast<int>(n.und_edges(v).size());
  if (ud == 0) return true;
  if (ud > 1) return false;
  int c = d.component_of[v];
  return d.entry[c] != -1 && d.entry[c] != v;
}

bool ambiguous_leaf(const Network& n, const ComponentDecomposition& d, int v) {
  return d.in_root_component(v) && n.und_edges(v).size() == 1 && n.out_edges(v).empty() &&
         n.in_edges(v).empty();
}

}  // namespace

LeafClassification classify_leaves(const Network& n) {
  require_network(n);
  ComponentDecomposition d = decompose(n);
  LeafClassification lc;
  for (int v = 0; v < n.node_count(); ++v) {
    if (rooted_leaf(n, d, v))
      lc.rooted_leaves.push_back(v);
    else if (ambiguous_leaf(n, d, v))
      lc.ambiguous_leaves.push_back(v);
  }
  return lc;
}

void validate_labels(const Network& n) {
  LeafClassification lc = classify_leaves(n);
  std::vector<bool> unrooted(n.node_count(), false);
  for (int v : lc.rooted_leaves) unrooted[v] = true;
  for (int v : lc.ambiguous_leaves) unrooted[v] = true;
  for (int v = 0; v < n.node_count(); ++v)
    if (n.label_of(v) != -1 && !unrooted[v])
      throw DomainError("label " + n.leaf_order()[n.label_of(v)] + " sits on node " +
                        n.node_name(v) + ", which is not a leaf of any rooted partner");
  for (int v : lc.rooted_leaves)
    if (n.label_of(v) == -1)
      throw DomainError("leaf node " + n.node_name(v) + " carries no label");
}

bool is_l_network(const Network& n) {
  if (!is_network(n)) return false;
  LeafClassification lc = classify_leaves(n);
  if (!lc.ambiguous_leaves.empty()) return false;
  std::vector<bool> rooted(n.node_count(), false);
  for (int v : lc.rooted_leaves) {
    if (n.label_of(v) == -1) return false;
    rooted[v] = true;
  }
  for (int v = 0; v < n.node_count(); ++v)
    if (n.label_of(v) != -1 && !rooted[v]) return false;
  return true;
}

void require_l_network(const Network& n) {
  require_network(n);
  validate_labels(n);
  LeafClassification lc = classify_leaves(n);
  if (!lc.ambiguous_leaves.empty()) {
    std::string who;
    for (int v : lc.ambiguous_leaves) who += (who.empty() ? "" : ", ") + n.node_name(v);
    throw DomainError("not an L-network: ambiguous leaves present (" + who + ")");
  }
}

namespace {

// Orients the undirected tree containing `root` away from it, in place.
// Positions in `edges` match edge ids, so ids survive the transformation.
void direct_component_from(const Network& n, int root, std::vector<Edge>& edges) {
  std::vector<int> state(n.node_count(), 0);
  std::deque<int> queue{root};
  state[root] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int eid : n.und_edges(v)) {
      int w = n.other_end(n.edge(eid), v);
      if (state[w]) continue;
      state[w] = 1;
      Edge& e = edges[eid];
      if (e.u != v) std::swap(e.u, e.v);
      e.kind = EdgeKind::Directed;
      queue.push_back(w);
    }
  }
}

}  // namespace

Network completion(const Network& n) {
  require_network(n);
  ComponentDecomposition d = decompose(n);
  std::vector<Edge> edges(n.edges().begin(), n.edges().end());
  for (size_t c = 0; c < d.components.size(); ++c)
    if (d.entry[c] != -1) direct_component_from(n, d.entry[c], edges);
  return with_edges(n, edges);
}

Network rooted_partner(const Network& n, const ComponentDecomposition& d,
                       const RootChoice& choice) {
  if (choice.size() != d.root_components.size())
    throw DomainError("root choice size does not match the number of root components");
  std::vector<Edge> edges(n.edges().begin(), n.edges().end());
  for (size_t i = 0; i < choice.size(); ++i) {
    int c = d.root_components[i];
    int r = choice[i];
    if (r < 0 || r >= n.node_count() || d.component_of[r] != c)
      throw DomainError("invalid root choice: node outside its root component");
    direct_component_from(n, r, edges);
  }
  for (size_t c = 0; c < d.components.size(); ++c)
    if (d.entry[c] != -1) direct_component_from(n, d.entry[c], edges);
  return with_edges(n, edges);
}

Network rooted_partner(const Network& n, const RootChoice& choice) {
  require_network(n);
  return rooted_partner(n, decompose(n), choice);
}

std::vector<RootChoice> enumerate_root_choices(const Network& n) {
  require_network(n);
  ComponentDecomposition d = decompose(n);
  std::vector<std::vector<int>> options;
  for (int c : d.root_components) {
    std::vector<int> nodes = d.components[c];
    std::sort(nodes.begin(), nodes.end(),
              [&](int a, int b) { return n.node_name(a) < n.node_name(b); });
    options.push_back(std::move(nodes));
  }
  std::vector<RootChoice> result;
  RootChoice current(options.size(), 0);
  while (true) {
    RootChoice rc;
    for (size_t i = 0; i < options.size(); ++i) rc.push_back(options[i][current[i]]);
    result.push_back(std::move(rc));
    int i = static_cast<int>(options.size()) - 1;
    while (i >= 0) {
      if (++current[i] < static_cast<int>(options[i].size())) break;
      current[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  if (options.empty()) result = {RootChoice{}};
  return result;
}

std::uint64_t count_root_choices(const Network& n) {
  require_network(n);
  ComponentDecomposition d = decompose(n);
  std::uint64_t count = 1;
  for (int c : d.root_components) count *= d.components[c].size();
  return count;
}

Network resolve_ambiguous_leaves(const Network& n, ResolvePolicy policy,
                                 const std::string& root_at) {
  require_network(n);
  Network cur = n;
  if (policy == ResolvePolicy::RootAt) {
    auto x = cur.find_node(root_at);
    if (!x) throw DomainError("unknown node id: " + root_at);
    ComponentDecomposition d = decompose(cur);
    if (!ambiguous_leaf(cur, d, *x))
      throw DomainError("node " + root_at + " is not an ambiguous leaf");
    std::vector<Edge> edges(cur.edges().begin(), cur.edges().end());
    int eid = cur.und_edges(*x)[0];
    Edge& e = edges[eid];
    if (e.u != *x) std::swap(e.u, e.v);
    e.kind = EdgeKind::Directed;  // x becomes a trivial root
    int lab = cur.label_of(*x);
    cur = with_edges(cur, edges);
    if (lab != -1) cur = without_label(cur, lab);
  }
  // Direct pendant edges toward ambiguous leaves until none remain. A node
  // freed to degree one by an earlier pass is unlabeled but still resolved,
  // keeping V_UL = V_RL.
  while (true) {
    ComponentDecomposition d = decompose(cur);
    std::vector<int> amb;
    for (int v = 0; v < cur.node_count(); ++v)
      if (ambiguous_leaf(cur, d, v)) amb.push_back(v);
    if (amb.empty()) break;
    std::vector<Edge> edges(cur.edges().begin(), cur.edges().end());
    for (int v : amb) {
      Edge& e = edges[cur.und_edges(v)[0]];
      if (e.v != v) std::swap(e.u, e.v);
      e.kind = EdgeKind::Directed;
    }
    cur = with_edges(cur, edges);
  }
  return cur;
}

namespace {

bool has_tree_child(const Network& n, const ElementClasses& cls, int v) {
  for (int eid : n.out_edges(v))
    if (!cls.hybrid_node[n.edge(eid).v]) return true;
  return false;
}

}  // namespace

TreeChildStatus tree_child_classify(const Network& n) {
  require_network(n);
  Network c = completion(n);
  ComponentDecomposition d = decompose(c);
  ElementClasses cls = classify_elements(c);

  TreeChildStatus st;
  bool base_ok = true;
  // Nodes of the directed part and trivial root components: children are the
  // same in every rooted partner, so a missing tree child is fatal.
  for (int v = 0; v < c.node_count() && base_ok; ++v) {
    bool trivial_root = d.in_root_component(v) && d.components[d.component_of[v]].size() == 1;
    if (d.in_root_component(v) && !trivial_root) continue;
    if (c.out_edges(v).empty()) continue;  // leaf
    if (!has_tree_child(c, cls, v)) base_ok = false;
  }
  if (!base_ok) {
    st.kind = TreeChild::NotTreeChild;
    return st;
  }

  bool weak = false;
  for (size_t i = 0; i < d.root_components.size(); ++i) {
    int comp = d.root_components[i];
    if (d.components[comp].size() == 1) continue;
    std::vector<int> w1;
    for (int v : d.components[comp]) {
      if (c.und_edges(v).size() != 1) continue;
      if (c.out_edges(v).empty()) continue;  // not adjacent to the directed part
      if (!has_tree_child(c, cls, v)) w1.push_back(v);
    }
    if (w1.size() > 1) {
      st.kind = TreeChild::NotTreeChild;
      st.witness.clear();
      return st;
    }
    if (w1.size() == 1) {
      weak = true;
      st.witness[static_cast<int>(i)] = w1[0];
    }
  }
  st.kind = weak ? TreeChild::WeakOnly : TreeChild::Strong;
  return st;
}

std::vector<int> topological_order(const Network& g) {
  if (!g.fully_directed()) throw DomainError("expected a fully directed network");
  std::vector<int> indeg(g.node_count(), 0);
  for (const Edge& e : g.edges()) indeg[e.v]++;
  std::deque<int> queue;
  for (int v = 0; v < g.node_count(); ++v)
    if (indeg[v] == 0) queue.push_back(v);
  std::vector<int> order;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    order.push_back(v);
    for (int eid : g.out_edges(v))
      if (--indeg[g.edge(eid).v] == 0) queue.push_back(g.edge(eid).v);
  }
  if (static_cast<int>(order.size()) != g.node_count()) throw DomainError("cyclic input");
  return order;
}

bool dag_tree_child(const Network& g) {
  ElementClasses cls = classify_elements(g);
  for (int v = 0; v < g.node_count(); ++v)
    if (!g.out_edges(v).empty() && !has_tree_child(g, cls, v)) return false;
  return true;
}

}  // namespace munet
