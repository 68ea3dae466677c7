#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace og4::testing {

namespace {

/// Subgroup generated by a seed set, as a sorted index set; plain
/// multiplication closure over the parent's element list.
std::vector<int> closure(const PermGroup& g, const std::vector<int>& seed) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> elems;
  auto add = [&](int x) {
    if (!in[static_cast<std::size_t>(x)]) {
      in[static_cast<std::size_t>(x)] = 1;
      elems.push_back(x);
    }
  };
  add(g.identity_index());
  for (int x : seed) add(x);
  // Every new element is multiplied against everything already present.
  for (std::size_t i = 0; i < elems.size(); ++i) {
    add(g.inv(elems[i]));
    for (std::size_t j = 0; j <= i; ++j) {
      add(g.mult(elems[i], elems[j]));
      add(g.mult(elems[j], elems[i]));
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

}  // namespace

std::vector<std::vector<int>> oracle_all_subgroups(const PermGroup& g) {
  std::set<std::vector<int>> subs;
  subs.insert({g.identity_index()});
  // Seed with all cyclic subgroups, then close under pairwise joins.
  for (int x = 0; x < static_cast<int>(g.order()); ++x) subs.insert(closure(g, {x}));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> cur(subs.begin(), subs.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        std::vector<int> seed = cur[i];
        seed.insert(seed.end(), cur[j].begin(), cur[j].end());
        if (subs.insert(closure(g, seed)).second) grew = true;
      }
  }
  return {subs.begin(), subs.end()};
}

bool oracle_is_normal(const PermGroup& g, const std::vector<int>& sub) {
  for (int x : sub)
    for (int c = 0; c < static_cast<int>(g.order()); ++c)
      if (!std::binary_search(sub.begin(), sub.end(), g.mult(g.mult(g.inv(c), x), c)))
        return false;
  return true;
}

std::vector<std::vector<int>> oracle_normal_subgroups(const PermGroup& g) {
  const int n = static_cast<int>(g.order());
  // Conjugacy classes.
  std::vector<int> class_of(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < n; ++x) {
    if (class_of[static_cast<std::size_t>(x)] >= 0) continue;
    std::vector<int> cls;
    for (int c = 0; c < n; ++c) {
      int y = g.mult(g.mult(g.inv(c), x), c);
      if (class_of[static_cast<std::size_t>(y)] < 0) {
        class_of[static_cast<std::size_t>(y)] = static_cast<int>(classes.size());
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }

  // A subgroup generated by a union of classes is normal, and every normal
  // subgroup arises this way; grow the lattice class by class.
  std::set<std::vector<int>> normals;
  normals.insert({g.identity_index()});
  std::vector<std::vector<int>> frontier(normals.begin(), normals.end());
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const std::vector<int>& base : frontier)
      for (const std::vector<int>& cls : classes) {
        if (std::binary_search(base.begin(), base.end(), cls.front())) continue;
        std::vector<int> seed = base;
        seed.insert(seed.end(), cls.begin(), cls.end());
        std::vector<int> sub = closure(g, std::move(seed));
        if (normals.insert(sub).second) next.push_back(std::move(sub));
      }
    frontier = std::move(next);
  }
  return {normals.begin(), normals.end()};
}

std::vector<std::vector<int>> oracle_minimal_normals(const PermGroup& g) {
  std::vector<std::vector<int>> normals = oracle_normal_subgroups(g);
  std::vector<std::vector<int>> minimal;
  for (const std::vector<int>& n : normals) {
    if (n.size() == 1) continue;
    bool is_min = true;
    for (const std::vector<int>& m : normals) {
      if (m.size() == 1 || m.size() >= n.size()) continue;
      if (std::includes(n.begin(), n.end(), m.begin(), m.end())) {
        is_min = false;
        break;
      }
    }
    if (is_min) minimal.push_back(n);
  }
  return minimal;
}

namespace {

bool extend_iso(const UGraph& a, const UGraph& b, std::vector<int>& map,
                std::vector<bool>& used, int v) {
  const int n = a.vertex_count();
  if (v == n) return true;
  for (int w = 0; w < n; ++w) {
    if (used[static_cast<std::size_t>(w)] || a.degree(v) != b.degree(w)) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      if (a.adjacent(u, v) != b.adjacent(map[static_cast<std::size_t>(u)], w)) ok = false;
    if (!ok) continue;
    map[static_cast<std::size_t>(v)] = w;
    used[static_cast<std::size_t>(w)] = true;
    if (extend_iso(a, b, map, used, v + 1)) return true;
    used[static_cast<std::size_t>(w)] = false;
  }
  return false;
}

}  // namespace

bool oracle_isomorphic(const UGraph& a, const UGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  auto degs = [](const UGraph& g) {
    std::vector<int> d;
    for (int v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degs(a) != degs(b)) return false;
  std::vector<int> map(static_cast<std::size_t>(a.vertex_count()), -1);
  std::vector<bool> used(static_cast<std::size_t>(a.vertex_count()), false);
  return extend_iso(a, b, map, used, 0);
}

PermGroup dihedral_group(int r) {
  std::vector<int> rot(static_cast<std::size_t>(r)), flip(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    rot[static_cast<std::size_t>(i)] = (i + 1) % r;
    flip[static_cast<std::size_t>(i)] = (r - i) % r;
  }
  return PermGroup(r, {Perm(std::move(rot)), Perm(std::move(flip))});
}

PermGroup cyclic_group(int s) {
  std::vector<int> rot(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) rot[static_cast<std::size_t>(i)] = (i + 1) % s;
  return PermGroup(s, {Perm(std::move(rot))});
}

PermGroup product_group(const PermGroup& a, const PermGroup& b) {
  const int na = a.degree(), nb = b.degree();
  std::vector<Perm> gens;
  for (const Perm& p : a.generators()) {
    std::vector<int> img(static_cast<std::size_t>(na + nb));
    for (int i = 0; i < na; ++i) img[static_cast<std::size_t>(i)] = p(i);
    for (int i = 0; i < nb; ++i) img[static_cast<std::size_t>(na + i)] = na + i;
    gens.emplace_back(std::move(img));
  }
  for (const Perm& p : b.generators()) {
    std::vector<int> img(static_cast<std::size_t>(na + nb));
    std::iota(img.begin(), img.begin() + na, 0);
    for (int i = 0; i < nb; ++i) img[static_cast<std::size_t>(na + i)] = na + p(i);
    gens.emplace_back(std::move(img));
  }
  return PermGroup(na + nb, std::move(gens));
}

UGraph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return UGraph::build(n, edges);
}

}  // namespace og4::testing
