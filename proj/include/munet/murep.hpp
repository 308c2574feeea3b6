#pragma once

#include "munet/mu.hpp"
#include "munet/structure.hpp"

namespace munet {

// Node mu-vectors of a fully directed, leaf-labeled DAG, by reverse
// topological order: a labeled leaf gets its unit vector, an internal node the
// sum of its child vectors over child edges (parallel edges counted with
// multiplicity). O(n|E|).
std::vector<MuVector> mu_nodes(const Network& g);

// Everything Algorithm-level code needs about one network: a fixed rooted
// partner (same edge ids as n), its node vectors, and the decomposition.
struct MuContext {
  Network completion;
  Network partner;                 // rooted at the first node of each root component
  ComponentDecomposition decomp;   // of the completion
  std::vector<MuVector> mu;        // node vectors in the partner
  std::vector<MuVector> root_mu;   // per root component (decomp order)
  RootChoice roots;                // chosen partner roots, decomp order
};

MuContext make_mu_context(const Network& n);

// Directional mu-vector of root-component edge uv read as (u, v): the vector
// of v in any rooted partner directing the edge that way.
MuVector mu_directional(const Network& n, const std::string& u, const std::string& v);

// Root mu-vector of the component containing `node_in_component`.
MuVector mu_root(const Network& n, const std::string& node_in_component);

// Edge-based mu-representation: one tagged singleton per directed-part edge
// (tree or hybrid tag), one tree-tagged pair per root-component edge, and one
// root-tagged singleton per root component. `simplified` omits the root
// singleton when the network has exactly one root component and it is
// nontrivial (the pair elements then carry the same information).
MuRep mu_edge_rep(const Network& n, bool simplified = false);

}  // namespace munet
