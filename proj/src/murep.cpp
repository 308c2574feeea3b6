#include "munet/murep.hpp"

#include <algorithm>

namespace munet {

std::vector<MuVector> mu_nodes(const Network& g) {
  int n = g.label_count();
  std::vector<int> order = topological_order(g);  // throws on cycles
  std::vector<MuVector> mu(g.node_count());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    if (g.out_edges(v).empty()) {
      if (g.label_of(v) == -1)
        throw DomainError("unlabeled leaf: " + g.node_name(v));
      mu[v] = mu_unit(n, g.label_of(v));
      continue;
    }
    if (g.label_of(v) != -1)
      throw DomainError("label on internal node: " + g.node_name(v));
    MuVector acc(n, 0);
    for (int eid : g.out_edges(v)) mu_add_inplace(acc, mu[g.edge(eid).v]);
    mu[v] = std::move(acc);
  }
  return mu;
}

MuContext make_mu_context(const Network& n) {
  require_network(n);
  MuContext ctx;
  ctx.completion = completion(n);
  ctx.decomp = decompose(ctx.completion);
  for (int c : ctx.decomp.root_components) ctx.roots.push_back(ctx.decomp.components[c][0]);
  ctx.partner = rooted_partner(ctx.completion, ctx.decomp, ctx.roots);
  ctx.mu = mu_nodes(ctx.partner);
  for (int r : ctx.roots) ctx.root_mu.push_back(ctx.mu[r]);
  return ctx;
}

namespace {

int root_component_index(const MuContext& ctx, int comp) {
  auto& rcs = ctx.decomp.root_components;
  auto it = std::find(rcs.begin(), rcs.end(), comp);
  return it == rcs.end() ? -1 : static_cast<int>(it - rcs.begin());
}

}  // namespace

MuVector mu_directional(const Network& n, const std::string& uname, const std::string& vname) {
  MuContext ctx = make_mu_context(n);
  auto u = n.find_node(uname), v = n.find_node(vname);
  if (!u || !v) throw DomainError("unknown node id");
  int eid = -1;
  for (const Edge& e : n.edges())
    if (!e.directed() && ((e.u == *u && e.v == *v) || (e.u == *v && e.v == *u))) eid = e.id;
  if (eid == -1 || !ctx.decomp.in_root_component(*u) ||
      ctx.decomp.component_of[*u] != ctx.decomp.component_of[*v])
    throw DomainError("edge " + uname + "-" + vname + " is not in a root component");
  int rc = root_component_index(ctx, ctx.decomp.component_of[*u]);
  const Edge& pe = ctx.partner.edge(eid);
  // The partner orients the edge one way; the opposite direction follows from
  // the complement against the component's root vector.
  if (pe.u == *u) return ctx.mu[*v];
  return mu_sub(ctx.root_mu[rc], ctx.mu[*u]);
}

MuVector mu_root(const Network& n, const std::string& node_in_component) {
  MuContext ctx = make_mu_context(n);
  auto v = n.find_node(node_in_component);
  if (!v) throw DomainError("unknown node id: " + node_in_component);
  if (!ctx.decomp.in_root_component(*v))
    throw DomainError("node " + node_in_component + " is not in a root component");
  return ctx.root_mu[root_component_index(ctx, ctx.decomp.component_of[*v])];
}

MuRep mu_edge_rep(const Network& n, bool simplified) {
  require_l_network(n);
  MuContext ctx = make_mu_context(n);
  const Network& g = ctx.partner;
  ElementClasses cls = classify_elements(g);

  std::vector<EdgeMuSet> sets;
  sets.reserve(n.edge_count() + ctx.roots.size());
  for (const Edge& ne : n.edges()) {
    const Edge& ge = g.edge(ne.id);
    if (!ne.directed() && ctx.decomp.in_root_component(ne.u)) {
      int rc = root_component_index(ctx, ctx.decomp.component_of[ne.u]);
      sets.push_back(EdgeMuSet::pair(ctx.mu[ge.v], mu_sub(ctx.root_mu[rc], ctx.mu[ge.v])));
    } else {
      sets.push_back(EdgeMuSet::single(ctx.mu[ge.v],
                                       cls.hybrid_edge[ge.id] ? Tag::Hybrid : Tag::Tree));
    }
  }
  bool omit_root = simplified && ctx.roots.size() == 1 &&
                   ctx.decomp.components[ctx.decomp.root_components[0]].size() > 1;
  if (!omit_root)
    for (const MuVector& z : ctx.root_mu) sets.push_back(EdgeMuSet::single(z, Tag::Root));
  return MuRep::from_multiset(n.leaf_order(), std::move(sets));
}

}  // namespace munet
