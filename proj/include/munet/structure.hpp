#pragma once

#include <unordered_map>

#include "munet/network.hpp"

namespace munet {

// Partition of the nodes into undirected components (the trees of the forest
// induced by the undirected edges, singleton trees included), with the root
// components singled out. Every node of a root component has in-degree 0; a
// non-root component has exactly one node with incoming directed edges, its
// entry node, which roots its forced orientation.
struct ComponentDecomposition {
  std::vector<std::vector<int>> components;  // node indices, sorted
  std::vector<int> component_of;             // node -> component
  std::vector<int> entry;                    // component -> entry node, -1 for root components
  std::vector<int> root_components;          // component indices, in enumeration order

  bool in_root_component(int v) const { return entry[component_of[v]] == -1; }
};

// Chosen root per root component, aligned with
// ComponentDecomposition::root_components.
using RootChoice = std::vector<int>;

struct LeafClassification {
  std::vector<int> rooted_leaves;     // leaves in every rooted partner
  std::vector<int> ambiguous_leaves;  // leaves in some but not all rooted partners
};

enum class TreeChild { Strong, WeakOnly, NotTreeChild };

struct TreeChildStatus {
  TreeChild kind = TreeChild::NotTreeChild;
  // For WeakOnly: per offending root component, the node that must serve as
  // root for a rooted partner to be tree-child. Keyed by component index.
  std::unordered_map<int, int> witness;
};

enum class ResolvePolicy { AllLeaves, RootAt };

bool is_acyclic(const Network& n);

// Requires is_acyclic and at most one entry node per undirected component.
ComponentDecomposition decompose(const Network& n);

// True iff n is acyclic and every undirected component has at most one node
// of in-degree >= 1, i.e. n admits a rooted partner.
bool is_network(const Network& n);

// Throws DomainError with a diagnostic when is_network fails.
void require_network(const Network& n);

// Every label sits on an unrooted leaf and every rooted leaf carries a label.
void validate_labels(const Network& n);

// Network + validate_labels + no ambiguous leaves.
bool is_l_network(const Network& n);
void require_l_network(const Network& n);

// Directs every undirected edge of the directed part away from its
// component's entry node; root components are untouched.
Network completion(const Network& n);

// The unique rooted partner induced by the root choice: directed part as in
// the completion, root components directed away from their chosen roots.
Network rooted_partner(const Network& n, const RootChoice& choice);
Network rooted_partner(const Network& n, const ComponentDecomposition& d, const RootChoice& choice);

// All root choices: cartesian product over root components (components in
// enumeration order, nodes within a component in external-id order).
std::vector<RootChoice> enumerate_root_choices(const Network& n);
std::uint64_t count_root_choices(const Network& n);

LeafClassification classify_leaves(const Network& n);

// AllLeaves: in each root component, direct the pendant edge of every
// ambiguous leaf toward it. RootAt(x): direct x's pendant edge away from x so
// x becomes a (trivial) root, drop x's label, and resolve everything else as
// AllLeaves. Iterates until no ambiguous leaf remains.
Network resolve_ambiguous_leaves(const Network& n, ResolvePolicy policy,
                                 const std::string& root_at = "");

// Single-traversal classification on the completion; no partner enumeration.
TreeChildStatus tree_child_classify(const Network& n);

// Topological order of a fully directed network; DomainError on cycles.
std::vector<int> topological_order(const Network& g);

// Tree-child check for a fully directed network (every internal node has a
// child of in-degree <= 1).
bool dag_tree_child(const Network& g);

}  // namespace munet
