#include "munet/distance.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace munet {

DistanceResult d_mu_e_reps(const MuRep& a, const MuRep& b) {
  if (a.labels != b.labels)
    throw DomainError("leaf label vectors differ; distances are defined on a shared leaf order");
  DistanceResult r;
  size_t i = 0, j = 0;
  while (i < a.elements.size() || j < b.elements.size()) {
    if (j == b.elements.size() ||
        (i < a.elements.size() && a.elements[i].first < b.elements[j].first)) {
      r.left_only.push_back(a.elements[i]);
      r.value += a.elements[i].second;
      ++i;
    } else if (i == a.elements.size() || b.elements[j].first < a.elements[i].first) {
      r.right_only.push_back(b.elements[j]);
      r.value += b.elements[j].second;
      ++j;
    } else {
      std::int64_t diff = a.elements[i].second - b.elements[j].second;
      if (diff > 0) r.left_only.emplace_back(a.elements[i].first, diff);
      if (diff < 0) r.right_only.emplace_back(b.elements[j].first, -diff);
      r.value += std::abs(diff);
      ++i;
      ++j;
    }
  }
  return r;
}

DistanceResult d_mu_e(const Network& n1, const Network& n2) {
  return d_mu_e_reps(mu_edge_rep(n1), mu_edge_rep(n2));
}

namespace {

// Edge mu-vector sets of one network paired with their edge lengths, plus the
// weightless root elements, sorted by set.
std::vector<std::pair<EdgeMuSet, double>> weighted_elements(const Network& n,
                                                            const EdgeLengths& lengths) {
  if (static_cast<int>(lengths.size()) != n.edge_count())
    throw DomainError("missing length: expected one length per edge");
  for (double l : lengths)
    if (!(l >= 0.0)) throw DomainError("edge lengths must be nonnegative");
  MuContext ctx = make_mu_context(n);
  ElementClasses cls = classify_elements(ctx.partner);
  std::vector<std::pair<EdgeMuSet, double>> out;
  for (const Edge& ne : n.edges()) {
    const Edge& ge = ctx.partner.edge(ne.id);
    EdgeMuSet s;
    if (!ne.directed() && ctx.decomp.in_root_component(ne.u)) {
      auto& rcs = ctx.decomp.root_components;
      int rc = static_cast<int>(std::find(rcs.begin(), rcs.end(), ctx.decomp.component_of[ne.u]) -
                                rcs.begin());
      s = EdgeMuSet::pair(ctx.mu[ge.v], mu_sub(ctx.root_mu[rc], ctx.mu[ge.v]));
    } else {
      s = EdgeMuSet::single(ctx.mu[ge.v], cls.hybrid_edge[ge.id] ? Tag::Hybrid : Tag::Tree);
    }
    out.emplace_back(std::move(s), lengths[ne.id]);
  }
  for (const MuVector& z : ctx.root_mu) out.emplace_back(EdgeMuSet::single(z, Tag::Root), 0.0);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace

double weighted_d(const Network& n1, const Network& n2, const EdgeLengths& lengths1,
                  const EdgeLengths& lengths2, double p) {
  if (!(p >= 1.0)) throw DomainError("exponent p must be >= 1");
  require_l_network(n1);
  require_l_network(n2);
  if (n1.leaf_order() != n2.leaf_order())
    throw DomainError("leaf label vectors differ; distances are defined on a shared leaf order");
  auto e1 = weighted_elements(n1, lengths1);
  auto e2 = weighted_elements(n2, lengths2);

  double total = 0.0;
  size_t i = 0, j = 0;
  while (i < e1.size() || j < e2.size()) {
    const EdgeMuSet* key = nullptr;
    if (j == e2.size() || (i < e1.size() && e1[i].first < e2[j].first))
      key = &e1[i].first;
    else
      key = &e2[j].first;
    // Gather the run of equal elements on each side.
    std::vector<double> l1, l2;
    while (i < e1.size() && e1[i].first == *key) l1.push_back(e1[i++].second);
    while (j < e2.size() && e2[j].first == *key) l2.push_back(e2[j++].second);
    std::sort(l1.begin(), l1.end());
    std::sort(l2.begin(), l2.end());
    size_t k = 0;
    for (; k < l1.size() && k < l2.size(); ++k) total += std::pow(std::abs(l1[k] - l2[k]), p);
    for (; k < l1.size(); ++k) total += std::pow(l1[k], p);
    for (; k < l2.size(); ++k) total += std::pow(l2[k], p);
  }
  return total;
}

std::int64_t rf_check(const Network& t1, const Network& t2) {
  for (const Network* t : {&t1, &t2}) {
    ElementClasses cls = classify_elements(*t);
    if (std::find(cls.hybrid_edge.begin(), cls.hybrid_edge.end(), true) != cls.hybrid_edge.end())
      throw DomainError("rf_check expects trees; input has hybrid edges");
  }
  return d_mu_e(t1, t2).value;
}

}  // namespace munet
