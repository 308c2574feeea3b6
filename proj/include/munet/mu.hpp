#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "munet/network.hpp"

namespace munet {

// Coordinates follow the network's leaf order; entry i counts directed paths
// to the node carrying the i-th label. Path counts grow exponentially with
// hybrid depth, so all arithmetic is overflow-checked.
using MuVector = std::vector<std::uint64_t>;

enum class MuOrder { Less, Greater, Equal, Incomparable };

MuOrder mu_compare(const MuVector& a, const MuVector& b);

inline bool mu_leq(const MuVector& a, const MuVector& b) {
  MuOrder o = mu_compare(a, b);
  return o == MuOrder::Less || o == MuOrder::Equal;
}
inline bool mu_greater(const MuVector& a, const MuVector& b) {
  return mu_compare(a, b) == MuOrder::Greater;
}

MuVector mu_add(const MuVector& a, const MuVector& b);
void mu_add_inplace(MuVector& a, const MuVector& b);
// Throws DomainError if the difference would be negative anywhere.
MuVector mu_sub(const MuVector& a, const MuVector& b);
MuVector mu_unit(int n, int i);
std::uint64_t mu_total(const MuVector& a);

std::string mu_to_string(const MuVector& a);

// Tag values order as 'h' < 'r' < 't', which fixes the canonical order below.
enum class Tag : char { Hybrid = 'h', Root = 'r', Tree = 't' };

inline char tag_char(Tag t) { return static_cast<char>(t); }

struct TaggedMu {
  MuVector mu;
  Tag tag = Tag::Tree;
  friend auto operator<=>(const TaggedMu& a, const TaggedMu& b) = default;
};

// The mu-vector set of one edge (or one root component): one tagged vector
// for an edge whose direction is fixed, two tree-tagged vectors for an edge
// of a root component. Members are kept sorted and deduplicated.
struct EdgeMuSet {
  std::vector<TaggedMu> members;

  static EdgeMuSet single(MuVector mu, Tag tag);
  static EdgeMuSet pair(MuVector a, MuVector b);  // both Tag::Tree

  friend auto operator<=>(const EdgeMuSet& a, const EdgeMuSet& b) = default;
};

std::string edge_mu_set_to_string(const EdgeMuSet& s);

// Multiset of edge mu-vector sets in canonical form: elements sorted, with
// explicit multiplicities. The label vector is carried along so distances can
// reject mismatched leaf sets.
struct MuRep {
  std::vector<std::string> labels;
  std::vector<std::pair<EdgeMuSet, std::int64_t>> elements;  // sorted, counts >= 1

  static MuRep from_multiset(std::vector<std::string> labels, std::vector<EdgeMuSet> sets);

  std::int64_t total() const;
  std::int64_t count_of(const EdgeMuSet& s) const;

  friend bool operator==(const MuRep& a, const MuRep& b) = default;
};

}  // namespace munet
