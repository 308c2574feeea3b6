#pragma once

#include "munet/murep.hpp"

namespace munet {

struct DistanceResult {
  std::int64_t value = 0;
  // Symmetric-difference witnesses: elements only in the first/second input.
  std::vector<std::pair<EdgeMuSet, std::int64_t>> left_only;
  std::vector<std::pair<EdgeMuSet, std::int64_t>> right_only;
};

// Cardinality of the multiset symmetric difference of the two edge-based
// mu-representations. The leaf orders must be identical.
DistanceResult d_mu_e(const Network& n1, const Network& n2);
DistanceResult d_mu_e_reps(const MuRep& a, const MuRep& b);

// Lengths are per edge id; every edge must have a nonnegative length.
using EdgeLengths = std::vector<double>;

// Sum over the union of edge mu-vector sets of |l1(m) - l2(m)|^p, where a set
// missing on one side contributes length 0 there and root elements always
// carry length 0. Elements with multiplicity > 1 are matched greedily within
// the sorted run of equal sets, remaining lengths diffed against 0.
double weighted_d(const Network& n1, const Network& n2, const EdgeLengths& lengths1,
                  const EdgeLengths& lengths2, double p);

// d_mu_e specialized to trees; rejects inputs with hybrid edges. On unrooted
// trees this equals the Robinson-Foulds bipartition distance.
std::int64_t rf_check(const Network& t1, const Network& t2);

}  // namespace munet
