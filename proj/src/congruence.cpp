#include "fsemi/congruence.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace fsemi {

Congruence Congruence::equality(int n) {
  std::vector<int> raw(n);
  std::iota(raw.begin(), raw.end(), 0);
  return {Partition(std::move(raw))};
}

Congruence Congruence::universal(int n) {
  return {Partition(std::vector<int>(n, 0))};
}

bool is_congruence(const FiniteSemigroup& s, const Partition& p) {
  int n = s.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!p.same(a, b)) continue;
      for (int t = 0; t < n; ++t) {
        if (!p.same(s.product(t, a), s.product(t, b))) return false;
        if (!p.same(s.product(a, t), s.product(b, t))) return false;
      }
    }
  return true;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace

Congruence congruence_closure(const FiniteSemigroup& s,
                              const std::vector<std::pair<int, int>>& pairs) {
  int n = s.order();
  UnionFind uf(n);
  std::queue<std::pair<int, int>> work;
  for (auto [a, b] : pairs)
    if (uf.unite(a, b)) work.emplace(a, b);
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop();
    for (int t = 0; t < n; ++t) {
      if (uf.unite(s.product(t, a), s.product(t, b)))
        work.emplace(s.product(t, a), s.product(t, b));
      if (uf.unite(s.product(a, t), s.product(b, t)))
        work.emplace(s.product(a, t), s.product(b, t));
    }
  }
  std::vector<int> raw(n);
  for (int i = 0; i < n; ++i) raw[i] = uf.find(i);
  Congruence out{Partition(std::move(raw))};
  assert(is_congruence(s, out.partition));
  return out;
}

Congruence meet(const Congruence& a, const Congruence& b) {
  return {Partition::intersect(a.partition, b.partition)};
}

std::vector<Congruence> enumerate_congruences(const FiniteSemigroup& s, std::size_t cap) {
  int n = s.order();
  if (static_cast<std::size_t>(n) > cap)
    throw CapExceeded(cap, "congruence enumeration on order " + std::to_string(n));

  std::set<std::vector<int>> seen;
  std::vector<Congruence> all;
  auto push = [&](Congruence c) {
    if (seen.insert(c.partition.class_of).second) all.push_back(std::move(c));
  };

  push(Congruence::equality(n));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) push(congruence_closure(s, {{a, b}}));

  // Close under pairwise join until stable.
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<std::pair<int, int>> pairs;
      for (const auto& cls : all[i].partition.classes())
        for (std::size_t k = 1; k < cls.size(); ++k) pairs.emplace_back(cls[0], cls[k]);
      for (const auto& cls : all[j].partition.classes())
        for (std::size_t k = 1; k < cls.size(); ++k) pairs.emplace_back(cls[0], cls[k]);
      push(congruence_closure(s, pairs));
    }

  std::sort(all.begin(), all.end(), [](const Congruence& a, const Congruence& b) {
    if (a.class_count() != b.class_count()) return a.class_count() < b.class_count();
    return a.partition.class_of < b.partition.class_of;
  });
  return all;
}

bool is_v_congruence(const FiniteSemigroup& s, const Congruence& cong,
                     const std::function<bool(const FiniteSemigroup&)>& v_predicate) {
  for (const auto& cls : cong.partition.classes()) {
    std::set<int> members(cls.begin(), cls.end());
    bool closed = true;
    for (int a : cls) {
      for (int b : cls)
        if (!members.count(s.product(a, b))) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (!closed) continue;
    if (!v_predicate(subsemigroup(s, cls).sg)) return false;
  }
  return true;
}

Quotient quotient(const FiniteSemigroup& s, const Congruence& cong) {
  assert(is_congruence(s, cong.partition));
  int m = cong.class_count();
  auto classes = cong.partition.classes();
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      table[a][b] = cong.class_of(s.product(classes[a][0], classes[b][0]));
  Quotient out;
  out.sg = FiniteSemigroup::from_cayley_table(m, std::move(table));
  out.morphism = cong.partition.class_of;
  return out;
}

namespace {

std::vector<int> j_class_elements(const GreensStructure& g, int j_class) {
  std::vector<int> out;
  for (int s = 0; s < g.j.size(); ++s)
    if (g.j_of(s) == j_class) out.push_back(s);
  return out;
}

// R-class ids (of the ambient partition) occurring in J, in increasing order
// of least element.
std::vector<int> classes_in_j(const Partition& p, const std::vector<int>& j_elts) {
  std::vector<int> out;
  std::set<int> seen;
  for (int s : j_elts)
    if (seen.insert(p.class_of[s]).second) out.push_back(p.class_of[s]);
  return out;
}

}  // namespace

std::vector<int> ggm_base_candidates(const FiniteSemigroup& s, const GreensStructure& g,
                                     int j_class) {
  std::vector<int> out;
  for (int e : g.idempotents)
    if (g.j_of(e) == j_class) out.push_back(e);
  (void)s;
  return out;
}

std::vector<int> ggm_r_candidates(const FiniteSemigroup& s, const GreensStructure& g,
                                  int j_class, int r_class, int base_idempotent) {
  // r_a must translate R_a bijectively onto R_1 preserving L-classes.
  auto j_elts = j_class_elements(g, j_class);
  int r1 = g.r_of(base_idempotent);
  std::vector<int> members;
  for (int x : j_elts)
    if (g.r_of(x) == r_class) members.push_back(x);
  std::vector<int> out;
  for (int r : j_elts) {
    bool ok = true;
    std::set<int> images;
    for (int x : members) {
      int rx = s.product(r, x);
      if (g.r_of(rx) != r1 || g.l_of(rx) != g.l_of(x) || !images.insert(rx).second) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(r);
  }
  return out;
}

std::vector<int> ggm_l_candidates(const FiniteSemigroup& s, const GreensStructure& g,
                                  int j_class, int l_class, int base_idempotent) {
  auto j_elts = j_class_elements(g, j_class);
  int l1 = g.l_of(base_idempotent);
  std::vector<int> members;
  for (int x : j_elts)
    if (g.l_of(x) == l_class) members.push_back(x);
  std::vector<int> out;
  for (int l : j_elts) {
    bool ok = true;
    std::set<int> images;
    for (int x : members) {
      int xl = s.product(x, l);
      if (g.l_of(xl) != l1 || g.r_of(xl) != g.r_of(x) || !images.insert(xl).second) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(l);
  }
  return out;
}

GgmData ggm_data(const FiniteSemigroup& s, const GreensStructure& g, int j_class,
                 std::vector<int> normal_subgroup) {
  if (!g.regular[j_class]) throw NotRegular(j_class);
  auto j_elts = j_class_elements(g, j_class);

  // Base group: H-class of the least idempotent in the least R-class of J.
  int base = -1;
  for (int rc : classes_in_j(g.r, j_elts)) {
    for (int e : g.idempotents)
      if (g.j_of(e) == j_class && g.r_of(e) == rc) {
        base = (base == -1) ? e : std::min(base, e);
      }
    if (base != -1) break;
  }
  assert(base != -1 && "regular J-class has an idempotent in every R-class");

  GgmData data;
  data.j_class = j_class;
  data.base_group = maximal_subgroup(s, g, base);

  if (normal_subgroup.empty()) normal_subgroup.push_back(base);
  std::sort(normal_subgroup.begin(), normal_subgroup.end());
  for (int x : normal_subgroup)
    if (!data.base_group.contains(x))
      throw NotNormal("N contains an element outside the base group");
  // Subgroup and normality check.
  for (int a : normal_subgroup)
    for (int b : normal_subgroup) {
      int ab = s.product(a, b);
      if (!std::binary_search(normal_subgroup.begin(), normal_subgroup.end(), ab))
        throw NotNormal("N is not closed under multiplication");
    }
  for (int gg : data.base_group.carrier) {
    int ginv = data.base_group.inverse_of(gg);
    for (int x : normal_subgroup) {
      int conj = s.product(s.product(gg, x), ginv);
      if (!std::binary_search(normal_subgroup.begin(), normal_subgroup.end(), conj))
        throw NotNormal("N is not normal in the base group");
    }
  }
  data.normal_subgroup = std::move(normal_subgroup);

  for (int rc : classes_in_j(g.r, j_elts)) {
    auto cands = ggm_r_candidates(s, g, j_class, rc, base);
    assert(!cands.empty() && "Green's Lemma translator must exist");
    data.r_coords.emplace_back(rc, cands.front());
  }
  for (int lc : classes_in_j(g.l, j_elts)) {
    auto cands = ggm_l_candidates(s, g, j_class, lc, base);
    assert(!cands.empty() && "Green's Lemma translator must exist");
    data.l_coords.emplace_back(lc, cands.front());
  }
  return data;
}

Congruence ggm_congruence_with_choices(const FiniteSemigroup& s, const GreensStructure& g,
                                       const GgmData& data) {
  int n = s.order();
  auto j_elts = j_class_elements(g, data.j_class);

  auto r_of = [&](int x) {
    for (auto& [rc, r] : data.r_coords)
      if (rc == g.r_of(x)) return r;
    throw IndexOutOfRange("missing r coordinate");
  };
  auto l_of = [&](int y) {
    for (auto& [lc, l] : data.l_coords)
      if (lc == g.l_of(y)) return l;
    throw IndexOutOfRange("missing l coordinate");
  };

  // Coset labels of N in the base group.
  const auto& G = data.base_group;
  std::map<int, int> coset;
  int next_coset = 0;
  for (int gg : G.carrier) {
    if (coset.count(gg)) continue;
    for (int x : data.normal_subgroup) coset[s.product(gg, x)] = next_coset;
    ++next_coset;
  }

  // Fingerprint elements by how they multiply through J.
  std::map<std::vector<int>, int> finger_ids;
  std::vector<int> raw(n);
  for (int elt = 0; elt < n; ++elt) {
    std::vector<int> finger;
    finger.reserve(j_elts.size() * j_elts.size());
    for (int x : j_elts)
      for (int y : j_elts) {
        int u = s.product(s.product(x, elt), y);
        if (g.j_of(u) != data.j_class) {
          finger.push_back(-1);
        } else {
          int v = s.product(s.product(r_of(x), u), l_of(y));
          assert(G.contains(v) && "GGM coordinate left the base group");
          finger.push_back(coset.at(v));
        }
      }
    auto [it, fresh] = finger_ids.emplace(std::move(finger), static_cast<int>(finger_ids.size()));
    raw[elt] = it->second;
    (void)fresh;
  }
  Congruence out{Partition(std::move(raw))};
  assert(is_congruence(s, out.partition) && "GGM relation must be a congruence");
  return out;
}

Congruence ggm_congruence(const FiniteSemigroup& s, const GreensStructure& g,
                          int j_class, const std::vector<int>& normal_subgroup) {
  return ggm_congruence_with_choices(s, g, ggm_data(s, g, j_class, normal_subgroup));
}

Congruence ggm_congruence(const FiniteSemigroup& s, int j_class,
                          const std::vector<int>& normal_subgroup) {
  return ggm_congruence(s, greens(s), j_class, normal_subgroup);
}

bool is_ggm(const FiniteSemigroup& s) {
  int n = s.order();
  auto faithful_on = [&](const std::vector<int>& ideal) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        bool left_same = true, right_same = true;
        for (int x : ideal) {
          if (s.product(a, x) != s.product(b, x)) left_same = false;
          if (s.product(x, a) != s.product(x, b)) right_same = false;
        }
        if (left_same || right_same) return false;
      }
    return true;
  };

  auto z = s.zero();
  if (!z) return faithful_on(minimal_ideal(s));

  // 0-minimal ideals: minimal principal ideals of nonzero elements.
  std::vector<std::vector<int>> candidates;
  for (int a = 0; a < n; ++a) {
    if (a == *z) continue;
    std::set<int> in{a};
    std::queue<int> q;
    q.push(a);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int t = 0; t < n; ++t)
        for (int w : {s.product(v, t), s.product(t, v)})
          if (in.insert(w).second) q.push(w);
    }
    candidates.emplace_back(in.begin(), in.end());
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  if (candidates.empty()) return false;  // S = {0}: the trivial semigroup is GGM
  std::size_t least = candidates.front().size();
  for (const auto& ideal : candidates) {
    if (ideal.size() != least) break;
    if (faithful_on(ideal)) return true;
  }
  return false;
}

void check_surjective_morphism(const FiniteSemigroup& s, const FiniteSemigroup& t,
                               const std::vector<int>& phi) {
  if (static_cast<int>(phi.size()) != s.order())
    throw NotMorphism(0, 0);
  for (int v : phi)
    if (v < 0 || v >= t.order()) throw IndexOutOfRange("morphism image out of range");
  for (int a = 0; a < s.order(); ++a)
    for (int b = 0; b < s.order(); ++b)
      if (phi[s.product(a, b)] != t.product(phi[a], phi[b])) throw NotMorphism(a, b);
  std::vector<char> hit(t.order(), 0);
  for (int v : phi) hit[v] = 1;
  for (int v = 0; v < t.order(); ++v)
    if (!hit[v]) throw NotSurjective(v);
}

FiniteSemigroup kernel_category_local_monoid(const FiniteSemigroup& s,
                                             const FiniteSemigroup& t,
                                             const std::vector<int>& phi,
                                             int n_left, int n_right) {
  check_surjective_morphism(s, t, phi);
  if (n_left < 0 || n_left >= t.order() || n_right < 0 || n_right >= t.order())
    throw IndexOutOfRange("object out of range");

  std::vector<int> loops;
  for (int m = 0; m < s.order(); ++m)
    if (t.product(n_left, phi[m]) == n_left && t.product(phi[m], n_right) == n_right)
      loops.push_back(m);
  if (loops.empty()) throw Error("kernel category local monoid is empty at this object");

  std::vector<int> left_pre, right_pre;
  for (int m = 0; m < s.order(); ++m) {
    if (phi[m] == n_left) left_pre.push_back(m);
    if (phi[m] == n_right) right_pre.push_back(m);
  }

  // Identify loops by their two-sided translation profile.
  std::map<std::vector<int>, int> profile_ids;
  std::vector<int> class_of_loop(loops.size());
  for (std::size_t i = 0; i < loops.size(); ++i) {
    std::vector<int> profile;
    profile.reserve(left_pre.size() * right_pre.size());
    for (int ml : left_pre)
      for (int mr : right_pre) profile.push_back(s.product(s.product(ml, loops[i]), mr));
    auto [it, fresh] =
        profile_ids.emplace(std::move(profile), static_cast<int>(profile_ids.size()));
    class_of_loop[i] = it->second;
    (void)fresh;
  }

  int m = static_cast<int>(profile_ids.size());
  std::vector<int> rep(m, -1);
  for (std::size_t i = 0; i < loops.size(); ++i)
    if (rep[class_of_loop[i]] == -1) rep[class_of_loop[i]] = loops[i];

  auto class_of_elt = [&](int elt) {
    for (std::size_t i = 0; i < loops.size(); ++i)
      if (loops[i] == elt) return class_of_loop[i];
    throw IndexOutOfRange("product left the loop monoid");
  };

  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) table[a][b] = class_of_elt(s.product(rep[a], rep[b]));
  return FiniteSemigroup::from_cayley_table(m, std::move(table));
}

}  // namespace fsemi
