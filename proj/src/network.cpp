#include "munet/network.hpp"

#include <algorithm>
#include <set>

namespace munet {

std::optional<int> Network::find_node(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Degrees Network::degrees(int v) const {
  if (v < 0 || v >= node_count()) throw DomainError("unknown node index");
  return Degrees{static_cast<int>(in_[v].size()), static_cast<int>(out_[v].size()),
                 static_cast<int>(und_[v].size())};
}

Degrees Network::degrees(std::string_view name) const {
  auto v = find_node(name);
  if (!v) throw DomainError("unknown node id: " + std::string(name));
  return degrees(*v);
}

bool Network::fully_directed() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.directed(); });
}

namespace {

// Multiset key for edge comparison: undirected endpoints are normalized.
std::tuple<int, int, int> edge_key(const Network& n, const Edge& e) {
  if (e.directed()) return {0, e.u, e.v};
  return {1, std::min(e.u, e.v), std::max(e.u, e.v)};
}

}  // namespace

bool operator==(const Network& a, const Network& b) {
  if (a.names_ != b.names_ || a.leaf_order_ != b.leaf_order_ || a.label_of_ != b.label_of_)
    return false;
  if (a.edges_.size() != b.edges_.size()) return false;
  std::multiset<std::tuple<int, int, int>> ka, kb;
  for (const Edge& e : a.edges_) ka.insert(edge_key(a, e));
  for (const Edge& e : b.edges_) kb.insert(edge_key(b, e));
  return ka == kb;
}

NetworkBuilder& NetworkBuilder::leaf_order(std::vector<std::string> labels) {
  labels_ = std::move(labels);
  return *this;
}

NetworkBuilder& NetworkBuilder::node(const std::string& name) {
  nodes_.push_back(name);
  return *this;
}

NetworkBuilder& NetworkBuilder::label(const std::string& name, const std::string& lab) {
  node_labels_.emplace_back(name, lab);
  return *this;
}

NetworkBuilder& NetworkBuilder::directed(const std::string& parent, const std::string& child) {
  edges_.push_back(RawEdge{EdgeKind::Directed, parent, child});
  return *this;
}

NetworkBuilder& NetworkBuilder::undirected(const std::string& a, const std::string& b) {
  edges_.push_back(RawEdge{EdgeKind::Undirected, a, b});
  return *this;
}

NetworkBuilder& NetworkBuilder::edge(EdgeKind kind, int u, int v) {
  RawEdge e{kind, "", ""};
  e.ui = u;
  e.vi = v;
  edges_.push_back(std::move(e));
  return *this;
}

Network NetworkBuilder::build() {
  Network n;
  n.leaf_order_ = labels_;
  {
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) throw DomainError("duplicate label in leaf order");
  }
  for (const auto& name : nodes_) {
    if (n.index_.count(name)) throw DomainError("duplicate node id: " + name);
    n.index_[name] = static_cast<int>(n.names_.size());
    n.names_.push_back(name);
  }
  n.label_of_.assign(n.names_.size(), -1);
  n.label_node_.assign(labels_.size(), -1);
  for (const auto& [name, lab] : node_labels_) {
    auto v = n.find_node(name);
    if (!v) throw DomainError("label on unknown node: " + name);
    auto it = std::find(labels_.begin(), labels_.end(), lab);
    if (it == labels_.end()) throw DomainError("label not in leaf order: " + lab);
    int li = static_cast<int>(it - labels_.begin());
    if (n.label_node_[li] != -1) throw DomainError("label assigned twice: " + lab);
    if (n.label_of_[*v] != -1) throw DomainError("node labeled twice: " + name);
    n.label_node_[li] = *v;
    n.label_of_[*v] = li;
  }
  for (int li = 0; li < static_cast<int>(labels_.size()); ++li)
    if (n.label_node_[li] == -1) throw DomainError("label not assigned to any node: " + labels_[li]);

  n.out_.assign(n.names_.size(), {});
  n.in_.assign(n.names_.size(), {});
  n.und_.assign(n.names_.size(), {});
  for (const RawEdge& re : edges_) {
    int u = re.ui, v = re.vi;
    if (u < 0) {
      auto ui = n.find_node(re.u), vi = n.find_node(re.v);
      if (!ui) throw DomainError("edge endpoint is not a declared node: " + re.u);
      if (!vi) throw DomainError("edge endpoint is not a declared node: " + re.v);
      u = *ui;
      v = *vi;
    }
    if (u == v) throw DomainError("self-loop on node " + n.names_.at(u));
    Edge e{static_cast<int>(n.edges_.size()), u, v, re.kind};
    n.edges_.push_back(e);
    if (e.directed()) {
      n.out_[u].push_back(e.id);
      n.in_[v].push_back(e.id);
    } else {
      n.und_[u].push_back(e.id);
      n.und_[v].push_back(e.id);
    }
  }
  return n;
}

Network with_edges(const Network& n, const std::vector<Edge>& edges) {
  NetworkBuilder b;
  b.leaf_order(n.leaf_order());
  for (int v = 0; v < n.node_count(); ++v) b.node(n.node_name(v));
  for (int v = 0; v < n.node_count(); ++v)
    if (n.label_of(v) != -1) b.label(n.node_name(v), n.leaf_order()[n.label_of(v)]);
  for (const Edge& e : edges) b.edge(e.kind, e.u, e.v);
  return b.build();
}

Network without_label(const Network& n, int label_idx) {
  NetworkBuilder b;
  std::vector<std::string> labels = n.leaf_order();
  labels.erase(labels.begin() + label_idx);
  b.leaf_order(labels);
  for (int v = 0; v < n.node_count(); ++v) b.node(n.node_name(v));
  for (int v = 0; v < n.node_count(); ++v)
    if (n.label_of(v) != -1 && n.label_of(v) != label_idx)
      b.label(n.node_name(v), n.leaf_order()[n.label_of(v)]);
  for (const Edge& e : n.edges()) b.edge(e.kind, e.u, e.v);
  return b.build();
}

ElementClasses classify_elements(const Network& n) {
  ElementClasses c;
  c.hybrid_node.resize(n.node_count());
  c.hybrid_edge.resize(n.edge_count());
  for (int v = 0; v < n.node_count(); ++v)
    c.hybrid_node[v] = n.in_edges(v).size() >= 2;
  for (const Edge& e : n.edges())
    c.hybrid_edge[e.id] = e.directed() && c.hybrid_node[e.v];
  return c;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Returns false if x and y were already joined.
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[y] = x;
    return true;
  }
};

}  // namespace

Contraction contraction(const Network& n) {
  UnionFind uf(n.node_count());
  for (const Edge& e : n.edges())
    if (!e.directed()) uf.unite(e.u, e.v);

  Contraction c;
  c.node_map.assign(n.node_count(), -1);
  for (int v = 0; v < n.node_count(); ++v) {
    int r = uf.find(v);
    if (c.node_map[r] == -1) c.node_map[r] = c.node_count++;
    c.node_map[v] = c.node_map[r];
  }
  for (const Edge& e : n.edges())
    if (e.directed()) c.edges.emplace_back(c.node_map[e.u], c.node_map[e.v]);
  return c;
}

}  // namespace munet
