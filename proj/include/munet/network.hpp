#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace munet {

// Domain error: raised when an operation's precondition fails (not a network,
// mismatched leaf sets, bound exceeded, ...). The CLI maps it to exit code 1.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Arithmetic on path counts overflowed 64 bits.
struct OverflowError : DomainError {
  using DomainError::DomainError;
};

// Input text could not be parsed; carries a 1-based line number.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

enum class EdgeKind : std::uint8_t { Directed, Undirected };

// For directed edges, u is the parent and v the child. For undirected edges
// the order of u and v carries no meaning. Parallel edges get distinct ids.
struct Edge {
  int id = -1;
  int u = -1;
  int v = -1;
  EdgeKind kind = EdgeKind::Directed;

  bool directed() const { return kind == EdgeKind::Directed; }
};

struct Degrees {
  int in = 0;
  int out = 0;
  int undirected = 0;
  friend bool operator==(const Degrees&, const Degrees&) = default;
};

// Per-node and per-edge tree/hybrid classification. A node is hybrid iff its
// in-degree is at least 2; an edge is hybrid iff it is directed onto a hybrid
// child. Undirected edges are always tree edges.
struct ElementClasses {
  std::vector<bool> hybrid_node;  // by node index
  std::vector<bool> hybrid_edge;  // by edge id
};

// Quotient of a semidirected graph under contraction of all undirected edges.
struct Contraction {
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;  // directed, with multiplicity
  std::vector<int> node_map;               // original node index -> contracted index
};

// Immutable semidirected graph with leaf labels. Node names are interned to
// dense indices at construction; all operations below work on indices and
// return new values. Structural well-formedness (distinct names, known
// endpoints, no self-loops, labels assigned exactly once) is enforced here;
// semantic properties (acyclicity, having a rooted partner, ...) are separate
// predicates in structure.hpp.
class Network {
 public:
  Network() = default;

  int node_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::string& node_name(int v) const { return names_.at(v); }
  std::optional<int> find_node(std::string_view name) const;

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_.at(id); }

  // The ordered label vector (fixes the coordinates of every mu-vector).
  const std::vector<std::string>& leaf_order() const { return leaf_order_; }
  int label_count() const { return static_cast<int>(leaf_order_.size()); }

  // Label index carried by a node, or -1.
  int label_of(int v) const { return label_of_.at(v); }
  // Node carrying the i-th label.
  int node_with_label(int label_idx) const { return label_node_.at(label_idx); }

  std::span<const int> out_edges(int v) const { return out_.at(v); }
  std::span<const int> in_edges(int v) const { return in_.at(v); }
  std::span<const int> und_edges(int v) const { return und_.at(v); }

  Degrees degrees(int v) const;
  Degrees degrees(std::string_view name) const;

  bool fully_directed() const;

  // Neighbour across an undirected edge.
  int other_end(const Edge& e, int v) const { return e.u == v ? e.v : e.u; }

  friend bool operator==(const Network& a, const Network& b);

 private:
  friend class NetworkBuilder;

  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<Edge> edges_;
  std::vector<std::string> leaf_order_;
  std::vector<int> label_node_;
  std::vector<int> label_of_;
  std::vector<std::vector<int>> out_, in_, und_;
};

class NetworkBuilder {
 public:
  NetworkBuilder& leaf_order(std::vector<std::string> labels);
  NetworkBuilder& node(const std::string& name);
  NetworkBuilder& label(const std::string& name, const std::string& lab);
  NetworkBuilder& directed(const std::string& parent, const std::string& child);
  NetworkBuilder& undirected(const std::string& a, const std::string& b);

  // Index-based variants used by transformations that keep the node table.
  NetworkBuilder& edge(EdgeKind kind, int u, int v);

  Network build();

 private:
  struct RawEdge {
    EdgeKind kind;
    std::string u, v;
    int ui = -1, vi = -1;
  };
  std::vector<std::string> labels_;
  std::vector<std::string> nodes_;
  std::vector<std::pair<std::string, std::string>> node_labels_;
  std::vector<RawEdge> edges_;
};

// Copy of `n` with the edge set replaced (node table, names and labels kept).
Network with_edges(const Network& n, const std::vector<Edge>& edges);

// Copy of `n` with one label removed from the leaf order.
Network without_label(const Network& n, int label_idx);

ElementClasses classify_elements(const Network& n);

Contraction contraction(const Network& n);

}  // namespace munet
