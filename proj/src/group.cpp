#include "og4/group.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <set>

#include "og4/parallel.hpp"

namespace og4 {

namespace {
// Above this order the multiplication table is skipped and products are
// composed on the fly; the sweep grid never comes close.
constexpr std::size_t kMultTableMax = 4096;
}  // namespace

std::vector<Perm> generate_elements(const std::vector<Perm>& gens, std::size_t cap) {
  if (gens.empty()) throw std::invalid_argument("generate_elements: empty generator list");
  const int n = gens.front().degree();
  for (const Perm& g : gens)
    if (g.degree() != n) throw std::invalid_argument("generate_elements: mixed domain sizes");

  std::set<Perm> seen;
  std::deque<Perm> work;
  seen.insert(Perm::identity(n));
  work.push_back(Perm::identity(n));
  while (!work.empty()) {
    Perm p = std::move(work.front());
    work.pop_front();
    for (const Perm& g : gens) {
      Perm q = p.then(g);
      if (seen.insert(q).second) {
        if (seen.size() > cap) throw ElementCapExceeded(cap);
        work.push_back(std::move(q));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

struct PermGroup::Data {
  int degree;
  std::vector<Perm> gens;
  std::size_t cap;

  mutable std::once_flag elems_once;
  mutable std::vector<Perm> elems;
  mutable std::vector<int> gen_indices;
  mutable int id_index = -1;

  mutable std::once_flag tables_once;
  mutable bool has_tables = false;
  mutable std::vector<int32_t> mult_table;
  mutable std::vector<int32_t> inv_table;

  void ensure_elements() const {
    std::call_once(elems_once, [this] {
      elems = generate_elements(gens, cap);
      gen_indices.reserve(gens.size());
      for (const Perm& g : gens) gen_indices.push_back(find(g));
      id_index = find(Perm::identity(degree));
    });
  }

  int find(const Perm& p) const {
    auto it = std::lower_bound(elems.begin(), elems.end(), p);
    if (it == elems.end() || *it != p) return -1;
    return static_cast<int>(it - elems.begin());
  }

  void ensure_tables() const {
    ensure_elements();
    std::call_once(tables_once, [this] {
      const std::size_t n = elems.size();
      if (n > kMultTableMax) return;  // fall back to on-the-fly products
      mult_table.assign(n * n, -1);
      inv_table.assign(n, -1);
      const bool par = parallel_kernels();
#pragma omp parallel for schedule(static) if (par)
      for (std::int64_t a = 0; a < static_cast<std::int64_t>(n); ++a) {
        const Perm& pa = elems[static_cast<std::size_t>(a)];
        inv_table[static_cast<std::size_t>(a)] = find(pa.inverse());
        for (std::size_t b = 0; b < n; ++b)
          mult_table[static_cast<std::size_t>(a) * n + b] = find(pa.then(elems[b]));
      }
      has_tables = true;
    });
  }
};

PermGroup::PermGroup(int degree, std::vector<Perm> generators, std::size_t cap)
    : d_(std::make_shared<Data>()) {
  if (generators.empty()) throw std::invalid_argument("PermGroup: empty generator list");
  for (const Perm& g : generators)
    if (g.degree() != degree) throw std::invalid_argument("PermGroup: generator degree mismatch");
  d_->degree = degree;
  d_->gens = std::move(generators);
  d_->cap = cap;
}

int PermGroup::degree() const { return d_->degree; }
const std::vector<Perm>& PermGroup::generators() const { return d_->gens; }

const std::vector<Perm>& PermGroup::elements() const {
  d_->ensure_elements();
  return d_->elems;
}

int PermGroup::index_of(const Perm& p) const {
  d_->ensure_elements();
  return d_->find(p);
}

int PermGroup::identity_index() const {
  d_->ensure_elements();
  return d_->id_index;
}

const std::vector<int>& PermGroup::generator_indices() const {
  d_->ensure_elements();
  return d_->gen_indices;
}

int PermGroup::mult(int a, int b) const {
  d_->ensure_tables();
  if (d_->has_tables)
    return d_->mult_table[static_cast<std::size_t>(a) * d_->elems.size() +
                          static_cast<std::size_t>(b)];
  return d_->find(d_->elems[static_cast<std::size_t>(a)].then(d_->elems[static_cast<std::size_t>(b)]));
}

int PermGroup::inv(int a) const {
  d_->ensure_tables();
  if (d_->has_tables) return d_->inv_table[static_cast<std::size_t>(a)];
  return d_->find(d_->elems[static_cast<std::size_t>(a)].inverse());
}

Subgroup::Subgroup(PermGroup parent, std::vector<int> sorted_indices)
    : parent_(std::move(parent)), elems_(std::move(sorted_indices)) {
  if (elems_.empty()) throw std::invalid_argument("Subgroup: empty element set");
}

bool Subgroup::contains(int index) const {
  return std::binary_search(elems_.begin(), elems_.end(), index);
}

bool Subgroup::subset_of(const Subgroup& other) const {
  return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
}

bool Subgroup::proper_subset_of(const Subgroup& other) const {
  return elems_.size() < other.elems_.size() && subset_of(other);
}

std::vector<Perm> Subgroup::element_perms() const {
  std::vector<Perm> out;
  out.reserve(elems_.size());
  for (int i : elems_) out.push_back(parent_.elements()[static_cast<std::size_t>(i)]);
  return out;
}

std::vector<Perm> Subgroup::generating_set() const {
  std::vector<int> gens;
  Subgroup span = trivial_subgroup(parent_);
  for (int e : elems_) {
    if (span.contains(e)) continue;
    gens.push_back(e);
    span = subgroup_generated(parent_, gens);
    if (span.order() == order()) break;
  }
  if (gens.empty()) gens.push_back(parent_.identity_index());
  std::vector<Perm> out;
  for (int i : gens) out.push_back(parent_.elements()[static_cast<std::size_t>(i)]);
  return out;
}

bool Subgroup::operator==(const Subgroup& other) const {
  return parent_.shares_data(other.parent_) && elems_ == other.elems_;
}

Subgroup trivial_subgroup(const PermGroup& g) {
  return Subgroup(g, {g.identity_index()});
}

Subgroup full_subgroup(const PermGroup& g) {
  std::vector<int> all(g.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return Subgroup(g, std::move(all));
}

Subgroup subgroup_generated(const PermGroup& g, const std::vector<int>& seed) {
  const std::size_t n = g.order();
  std::vector<char> in(n, 0);
  std::vector<int> members{g.identity_index()};
  in[static_cast<std::size_t>(g.identity_index())] = 1;
  std::deque<int> work{g.identity_index()};
  std::vector<int> gens = seed;
  while (!work.empty()) {
    int a = work.front();
    work.pop_front();
    for (int s : gens) {
      int b = g.mult(a, s);
      if (!in[static_cast<std::size_t>(b)]) {
        in[static_cast<std::size_t>(b)] = 1;
        members.push_back(b);
        work.push_back(b);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup(g, std::move(members));
}

Subgroup subgroup_from_perms(const PermGroup& g, const std::vector<Perm>& gens) {
  std::vector<int> seed;
  for (const Perm& p : gens) {
    int i = g.index_of(p);
    if (i < 0) throw std::invalid_argument("subgroup_from_perms: permutation not in group");
    seed.push_back(i);
  }
  return subgroup_generated(g, seed);
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<int> out;
  std::set_intersection(a.indices().begin(), a.indices().end(), b.indices().begin(),
                        b.indices().end(), std::back_inserter(out));
  return Subgroup(a.parent(), std::move(out));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  std::vector<int> seed;
  std::set_union(a.indices().begin(), a.indices().end(), b.indices().begin(), b.indices().end(),
                 std::back_inserter(seed));
  return subgroup_generated(a.parent(), seed);
}

Subgroup conjugate_subgroup(const Subgroup& h, int g) {
  const PermGroup& G = h.parent();
  int gi = G.inv(g);
  std::vector<int> out;
  out.reserve(h.order());
  for (int e : h.indices()) out.push_back(G.mult(G.mult(gi, e), g));
  std::sort(out.begin(), out.end());
  return Subgroup(G, std::move(out));
}

bool is_normal(const PermGroup& g, const Subgroup& h) {
  for (int s : g.generator_indices()) {
    int si = g.inv(s);
    for (int e : h.indices())
      if (!h.contains(g.mult(g.mult(si, e), s))) return false;
  }
  return true;
}

Subgroup normal_closure(const PermGroup& g, const std::vector<int>& seed) {
  Subgroup cur = subgroup_generated(g, seed);
  for (;;) {
    std::vector<int> extra;
    for (int s : g.generator_indices()) {
      int si = g.inv(s);
      for (int e : cur.indices()) {
        int c = g.mult(g.mult(si, e), s);
        if (!cur.contains(c)) extra.push_back(c);
      }
    }
    if (extra.empty()) return cur;
    std::vector<int> next(cur.indices());
    next.insert(next.end(), extra.begin(), extra.end());
    cur = subgroup_generated(g, next);
  }
}

namespace {

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void sort_subgroups(std::vector<Subgroup>& subs) {
  std::sort(subs.begin(), subs.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.indices() < b.indices();
  });
}

std::vector<Subgroup> dedup(std::vector<Subgroup> subs) {
  sort_subgroups(subs);
  subs.erase(std::unique(subs.begin(), subs.end(),
                         [](const Subgroup& a, const Subgroup& b) { return a == b; }),
             subs.end());
  return subs;
}

}  // namespace

std::vector<Subgroup> minimal_normal_subgroups(const PermGroup& g) {
  if (g.order() <= 1) throw std::invalid_argument("minimal_normal_subgroups: trivial group");
  std::vector<Subgroup> closures;
  const auto& elems = g.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (static_cast<int>(i) == g.identity_index()) continue;
    if (!is_prime(static_cast<std::size_t>(elems[i].order()))) continue;
    closures.push_back(normal_closure(g, {static_cast<int>(i)}));
  }
  closures = dedup(std::move(closures));
  std::vector<Subgroup> out;
  for (const Subgroup& c : closures) {
    bool minimal = true;
    for (const Subgroup& other : closures)
      if (other.proper_subset_of(c)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(c);
  }
  sort_subgroups(out);
  return out;
}

std::vector<Subgroup> all_normal_subgroups(const PermGroup& g) {
  std::vector<Subgroup> base{trivial_subgroup(g)};
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (static_cast<int>(i) == g.identity_index()) continue;
    base.push_back(normal_closure(g, {static_cast<int>(i)}));
  }
  base = dedup(std::move(base));

  // Join-closure: every normal subgroup is a join of cyclic normal closures,
  // and joins of normal subgroups stay normal.
  std::vector<Subgroup> all = base;
  std::size_t frontier_start = 0;
  while (frontier_start < all.size()) {
    std::size_t frontier_end = all.size();
    std::vector<Subgroup> fresh;
    for (std::size_t i = frontier_start; i < frontier_end; ++i)
      for (std::size_t j = 0; j < frontier_end; ++j) {
        if (all[j].subset_of(all[i]) || all[i].subset_of(all[j])) continue;
        Subgroup joined = join(all[i], all[j]);
        bool known = std::any_of(all.begin(), all.end(),
                                 [&](const Subgroup& s) { return s == joined; }) ||
                     std::any_of(fresh.begin(), fresh.end(),
                                 [&](const Subgroup& s) { return s == joined; });
        if (!known) fresh.push_back(joined);
      }
    frontier_start = frontier_end;
    all.insert(all.end(), fresh.begin(), fresh.end());
  }
  sort_subgroups(all);
  return all;
}

Subgroup centralizer(const PermGroup& g, const Subgroup& h) {
  std::vector<Perm> hgens = h.generating_set();
  std::vector<int> hg;
  for (const Perm& p : hgens) hg.push_back(g.index_of(p));
  std::vector<int> out;
  for (std::size_t a = 0; a < g.order(); ++a) {
    bool commutes = true;
    for (int e : hg)
      if (g.mult(static_cast<int>(a), e) != g.mult(e, static_cast<int>(a))) {
        commutes = false;
        break;
      }
    if (commutes) out.push_back(static_cast<int>(a));
  }
  return Subgroup(g, std::move(out));
}

Subgroup center(const PermGroup& g) { return centralizer(g, full_subgroup(g)); }

std::vector<std::vector<int>> orbits(const std::vector<Perm>& gens, int n) {
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < n; ++x) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    std::vector<int> orb = orbit_of(gens, n, x);
    for (int v : orb) seen[static_cast<std::size_t>(v)] = 1;
    out.push_back(std::move(orb));
  }
  return out;
}

std::vector<std::vector<int>> orbits(const PermGroup& g) { return orbits(g.generators(), g.degree()); }

std::vector<int> orbit_of(const std::vector<Perm>& gens, int n, int x) {
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  std::deque<int> work{x};
  in[static_cast<std::size_t>(x)] = 1;
  std::vector<int> orb{x};
  while (!work.empty()) {
    int v = work.front();
    work.pop_front();
    for (const Perm& g : gens) {
      int w = g(v);
      if (!in[static_cast<std::size_t>(w)]) {
        in[static_cast<std::size_t>(w)] = 1;
        orb.push_back(w);
        work.push_back(w);
      }
    }
  }
  std::sort(orb.begin(), orb.end());
  return orb;
}

Subgroup point_stabilizer(const PermGroup& g, int x) {
  if (x < 0 || x >= g.degree()) throw std::invalid_argument("point_stabilizer: point out of domain");
  std::vector<int> out;
  const auto& elems = g.elements();
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (elems[i](x) == x) out.push_back(static_cast<int>(i));
  return Subgroup(g, std::move(out));
}

std::string IsoTag::name() const {
  if (cyclic) return "C" + std::to_string(order);
  if (dihedral) return "D" + std::to_string(order / 2);
  return "order " + std::to_string(order);
}

IsoTag iso_tag(const Subgroup& h) {
  IsoTag tag;
  tag.order = h.order();
  const PermGroup& g = h.parent();
  const auto& elems = g.elements();
  for (int e : h.indices())
    if (static_cast<std::size_t>(elems[static_cast<std::size_t>(e)].order()) == tag.order) {
      tag.cyclic = true;
      return tag;
    }
  if (tag.order % 2 == 0) {
    std::size_t m = tag.order / 2;
    for (int a : h.indices()) {
      if (static_cast<std::size_t>(elems[static_cast<std::size_t>(a)].order()) != m) continue;
      Subgroup rot = subgroup_generated(g, {a});
      int ai = g.inv(a);
      for (int b : h.indices()) {
        if (rot.contains(b)) continue;
        if (g.mult(b, b) != g.identity_index()) continue;
        if (g.mult(g.mult(g.inv(b), a), b) == ai) {
          tag.dihedral = true;
          return tag;
        }
      }
    }
  }
  return tag;
}

}  // namespace og4
