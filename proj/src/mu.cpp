#include "munet/mu.hpp"

#include <algorithm>

namespace munet {

MuOrder mu_compare(const MuVector& a, const MuVector& b) {
  if (a.size() != b.size()) throw DomainError("mu-vector length mismatch");
  bool le = true, ge = true;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) ge = false;
    if (a[i] > b[i]) le = false;
  }
  if (le && ge) return MuOrder::Equal;
  if (le) return MuOrder::Less;
  if (ge) return MuOrder::Greater;
  return MuOrder::Incomparable;
}

void mu_add_inplace(MuVector& a, const MuVector& b) {
  if (a.size() != b.size()) throw DomainError("mu-vector length mismatch");
  for (size_t i = 0; i < a.size(); ++i) {
    std::uint64_t r;
    if (__builtin_add_overflow(a[i], b[i], &r))
      throw OverflowError("path count overflow in mu-vector addition");
    a[i] = r;
  }
}

MuVector mu_add(const MuVector& a, const MuVector& b) {
  MuVector r = a;
  mu_add_inplace(r, b);
  return r;
}

MuVector mu_sub(const MuVector& a, const MuVector& b) {
  if (a.size() != b.size()) throw DomainError("mu-vector length mismatch");
  MuVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) throw DomainError("mu-vector subtraction would be negative");
    r[i] = a[i] - b[i];
  }
  return r;
}

MuVector mu_unit(int n, int i) {
  MuVector r(n, 0);
  r.at(i) = 1;
  return r;
}

std::uint64_t mu_total(const MuVector& a) {
  std::uint64_t t = 0;
  for (std::uint64_t x : a) {
    if (__builtin_add_overflow(t, x, &t)) throw OverflowError("path count overflow");
  }
  return t;
}

std::string mu_to_string(const MuVector& a) {
  std::string s = "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

EdgeMuSet EdgeMuSet::single(MuVector mu, Tag tag) {
  EdgeMuSet s;
  s.members.push_back(TaggedMu{std::move(mu), tag});
  return s;
}

EdgeMuSet EdgeMuSet::pair(MuVector a, MuVector b) {
  EdgeMuSet s;
  TaggedMu ta{std::move(a), Tag::Tree}, tb{std::move(b), Tag::Tree};
  if (ta == tb) {
    s.members.push_back(std::move(ta));  // set semantics: equal members collapse
    return s;
  }
  if (tb < ta) std::swap(ta, tb);
  s.members.push_back(std::move(ta));
  s.members.push_back(std::move(tb));
  return s;
}

std::string edge_mu_set_to_string(const EdgeMuSet& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.members.size(); ++i) {
    if (i) out += ", ";
    out += mu_to_string(s.members[i].mu);
    out += ":";
    out += tag_char(s.members[i].tag);
  }
  return out + "}";
}

MuRep MuRep::from_multiset(std::vector<std::string> labels, std::vector<EdgeMuSet> sets) {
  MuRep rep;
  rep.labels = std::move(labels);
  std::sort(sets.begin(), sets.end());
  for (auto& s : sets) {
    if (!rep.elements.empty() && rep.elements.back().first == s)
      rep.elements.back().second++;
    else
      rep.elements.emplace_back(std::move(s), 1);
  }
  return rep;
}

std::int64_t MuRep::total() const {
  std::int64_t t = 0;
  for (const auto& [s, c] : elements) t += c;
  return t;
}

std::int64_t MuRep::count_of(const EdgeMuSet& s) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), s,
                             [](const auto& e, const EdgeMuSet& key) { return e.first < key; });
  if (it != elements.end() && it->first == s) return it->second;
  return 0;
}

}  // namespace munet
