#include "fsemi/semigroup.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace fsemi {

Partition::Partition(std::vector<int> raw) {
  class_of.assign(raw.size(), -1);
  std::map<int, int> relabel;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto [it, fresh] = relabel.emplace(raw[i], count);
    if (fresh) ++count;
    class_of[i] = it->second;
  }
}

std::vector<std::vector<int>> Partition::classes() const {
  std::vector<std::vector<int>> out(count);
  for (int i = 0; i < size(); ++i) out[class_of[i]].push_back(i);
  return out;
}

Partition Partition::intersect(const Partition& a, const Partition& b) {
  assert(a.size() == b.size());
  std::vector<int> raw(a.size());
  for (int i = 0; i < a.size(); ++i) raw[i] = a.class_of[i] * b.count + b.class_of[i];
  return Partition(std::move(raw));
}

bool Partition::refines(const Partition& a, const Partition& b) {
  assert(a.size() == b.size());
  std::vector<int> image(a.count, -1);
  for (int i = 0; i < a.size(); ++i) {
    int& img = image[a.class_of[i]];
    if (img == -1) img = b.class_of[i];
    else if (img != b.class_of[i]) return false;
  }
  return true;
}

namespace {

std::optional<int> find_identity(const std::vector<std::vector<int>>& table) {
  int n = static_cast<int>(table.size());
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int s = 0; s < n && ok; ++s)
      if (table[e][s] != s || table[s][e] != s) ok = false;
    if (ok) return e;
  }
  return std::nullopt;
}

void check_table(int order, const std::vector<std::vector<int>>& table) {
  if (order <= 0) throw IndexOutOfRange("order must be positive");
  if (static_cast<int>(table.size()) != order)
    throw IndexOutOfRange("table has wrong number of rows");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != order)
      throw IndexOutOfRange("table has a row of wrong length");
    for (int v : row)
      if (v < 0 || v >= order) throw IndexOutOfRange("table entry out of range");
  }
  for (int s = 0; s < order; ++s)
    for (int t = 0; t < order; ++t)
      for (int u = 0; u < order; ++u)
        if (table[table[s][t]][u] != table[s][table[t][u]])
          throw NotAssociative(s, t, u);
}

}  // namespace

FiniteSemigroup FiniteSemigroup::from_cayley_table(int order,
                                                   std::vector<std::vector<int>> table,
                                                   std::optional<int> identity) {
  check_table(order, table);
  auto detected = find_identity(table);
  if (identity && detected != identity)
    throw IndexOutOfRange("claimed identity is not a two-sided identity");
  FiniteSemigroup s;
  s.order_ = order;
  s.table_ = std::move(table);
  s.identity_ = detected;
  return s;
}

FiniteSemigroup FiniteSemigroup::from_transformations(
    int degree, const std::vector<std::vector<int>>& generators,
    const std::vector<std::string>& labels, std::size_t cap, bool with_identity) {
  if (degree <= 0) throw IndexOutOfRange("degree must be positive");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != degree)
      throw IndexOutOfRange("generator has wrong degree");
    for (int q : g)
      if (q < 0 || q >= degree) throw IndexOutOfRange("generator image out of range");
  }
  if (generators.empty()) throw IndexOutOfRange("need at least one generator");

  auto compose = [degree](const std::vector<int>& f, const std::vector<int>& g) {
    std::vector<int> h(degree);
    for (int q = 0; q < degree; ++q) h[q] = g[f[q]];  // apply f then g
    return h;
  };

  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> elts;
  std::vector<std::vector<int>> words;
  std::queue<int> bfs;

  auto add = [&](const std::vector<int>& t, std::vector<int> word) -> int {
    auto it = index.find(t);
    if (it != index.end()) return it->second;
    if (elts.size() >= cap) throw CapExceeded(cap, "transformation closure");
    int id = static_cast<int>(elts.size());
    index.emplace(t, id);
    elts.push_back(t);
    words.push_back(std::move(word));
    bfs.push(id);
    return id;
  };

  if (with_identity) {
    std::vector<int> id(degree);
    std::iota(id.begin(), id.end(), 0);
    add(id, {});
  }
  for (std::size_t gi = 0; gi < generators.size(); ++gi)
    add(generators[gi], {static_cast<int>(gi)});

  while (!bfs.empty()) {
    int s = bfs.front();
    bfs.pop();
    for (std::size_t gi = 0; gi < generators.size(); ++gi) {
      auto word = words[s];
      word.push_back(static_cast<int>(gi));
      add(compose(elts[s], generators[gi]), std::move(word));
    }
  }

  int n = static_cast<int>(elts.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      table[s][t] = index.at(compose(elts[s], elts[t]));

  FiniteSemigroup out;
  out.order_ = n;
  out.table_ = std::move(table);
  out.identity_ = find_identity(out.table_);
  out.gen_words_ = std::move(words);
  out.gen_labels_ = labels;
  out.transformations_ = std::move(elts);
  return out;
}

std::string FiniteSemigroup::gen_word_string(int s) const {
  std::string out;
  for (int gi : gen_words_[s]) {
    if (!out.empty() && gen_labels_[gi].size() > 1) out += ' ';
    out += gen_labels_[gi];
  }
  return out;
}

std::vector<int> FiniteSemigroup::idempotents() const {
  std::vector<int> out;
  for (int s = 0; s < order_; ++s)
    if (is_idempotent(s)) out.push_back(s);
  return out;
}

std::optional<int> FiniteSemigroup::zero() const {
  for (int z = 0; z < order_; ++z) {
    bool ok = true;
    for (int s = 0; s < order_ && ok; ++s)
      if (product(z, s) != z || product(s, z) != z) ok = false;
    if (ok) return z;
  }
  return std::nullopt;
}

int FiniteSemigroup::pow(int s, long long k) const {
  assert(k >= 1);
  int acc = s;
  for (long long i = 1; i < k; ++i) acc = product(acc, s);
  return acc;
}

int FiniteSemigroup::idempotent_power(int s) const {
  int t = s;
  while (!is_idempotent(t)) t = product(t, s);
  return t;
}

FiniteSemigroup adjoin_identity(const FiniteSemigroup& s) {
  if (s.identity()) return s;
  int n = s.order();
  std::vector<std::vector<int>> table(n + 1, std::vector<int>(n + 1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = s.product(a, b);
  for (int a = 0; a <= n; ++a) {
    table[a][n] = a;
    table[n][a] = a;
  }
  return FiniteSemigroup::from_cayley_table(n + 1, std::move(table), n);
}

namespace {

// Tarjan SCC over the graph s -> targets(s).  Components are renumbered so
// the resulting partition is canonical by first occurrence.
template <typename Targets>
Partition scc_partition(int n, Targets&& targets) {
  std::vector<int> low(n, -1), num(n, -1), comp(n, -1), stack;
  std::vector<char> on_stack(n, 0);
  int counter = 0, comps = 0;

  // Iterative Tarjan: frame = (vertex, next edge index).
  std::vector<int> adj;
  for (int root = 0; root < n; ++root) {
    if (num[root] != -1) continue;
    std::vector<std::pair<int, std::size_t>> frames{{root, 0}};
    while (!frames.empty()) {
      auto& [v, ei] = frames.back();
      if (ei == 0) {
        num[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = 1;
      }
      const std::vector<int>& out = targets(v);
      if (ei < out.size()) {
        int w = out[ei++];
        if (num[w] == -1) {
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], num[w]);
        }
      } else {
        if (low[v] == num[v]) {
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp[w] = comps;
            if (w == v) break;
          }
          ++comps;
        }
        int vv = v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().first] = std::min(low[frames.back().first], low[vv]);
      }
    }
  }
  return Partition(std::move(comp));
}

}  // namespace

GreensStructure greens(const FiniteSemigroup& s) {
  int n = s.order();
  // Right/left Cayley graphs over all elements as generators.
  std::vector<std::vector<int>> right(n), left(n), both(n);
  for (int a = 0; a < n; ++a) {
    std::set<int> r, l;
    for (int t = 0; t < n; ++t) {
      r.insert(s.product(a, t));
      l.insert(s.product(t, a));
    }
    right[a].assign(r.begin(), r.end());
    left[a].assign(l.begin(), l.end());
    std::set<int> b(r);
    b.insert(l.begin(), l.end());
    both[a].assign(b.begin(), b.end());
  }

  GreensStructure g;
  g.r = scc_partition(n, [&](int v) -> const std::vector<int>& { return right[v]; });
  g.l = scc_partition(n, [&](int v) -> const std::vector<int>& { return left[v]; });
  g.j = scc_partition(n, [&](int v) -> const std::vector<int>& { return both[v]; });
  g.h = Partition::intersect(g.r, g.l);

  // j_below via reachability on the condensation.
  int jc = g.j.count;
  g.j_below.assign(jc, std::vector<char>(jc, 0));
  for (int a = 0; a < jc; ++a) g.j_below[a][a] = 1;
  // J(t) ⊆ J(s) iff t reachable from s in the two-sided graph.
  for (int src = 0; src < n; ++src) {
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(src);
    seen[src] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      g.j_below[g.j_of(v)][g.j_of(src)] = 1;
      for (int w : both[v])
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
    }
  }

  g.idempotents = s.idempotents();
  g.regular.assign(jc, 0);
  for (int e : g.idempotents) g.regular[g.j_of(e)] = 1;
  return g;
}

SubgroupTable maximal_subgroup(const FiniteSemigroup& s, int e) {
  return maximal_subgroup(s, greens(s), e);
}

SubgroupTable maximal_subgroup(const FiniteSemigroup& s, const GreensStructure& g, int e) {
  if (!s.is_idempotent(e)) throw NotIdempotent(e);
  SubgroupTable out;
  for (int t = 0; t < s.order(); ++t)
    if (g.h_of(t) == g.h_of(e)) out.carrier.push_back(t);
  out.identity = e;
  for (int a : out.carrier) {
    int inv = -1;
    for (int b : out.carrier)
      if (s.product(a, b) == e && s.product(b, a) == e) {
        inv = b;
        break;
      }
    assert(inv != -1 && "H-class of an idempotent must be a group");
    out.inverse.emplace_back(a, inv);
  }
  return out;
}

bool SubgroupTable::contains(int s) const {
  return std::binary_search(carrier.begin(), carrier.end(), s);
}

int SubgroupTable::inverse_of(int s) const {
  for (auto& [a, b] : inverse)
    if (a == s) return b;
  throw IndexOutOfRange("element not in subgroup");
}

int SubSemigroup::local_of(int ambient) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == ambient) return static_cast<int>(i);
  return -1;
}

SubSemigroup subsemigroup(const FiniteSemigroup& s, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  int m = static_cast<int>(elements.size());
  auto local = [&](int ambient) {
    auto it = std::lower_bound(elements.begin(), elements.end(), ambient);
    if (it == elements.end() || *it != ambient)
      throw IndexOutOfRange("subset is not multiplicatively closed");
    return static_cast<int>(it - elements.begin());
  };
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      table[a][b] = local(s.product(elements[a], elements[b]));
  SubSemigroup out;
  out.sg = FiniteSemigroup::from_cayley_table(m, std::move(table));
  out.elements = std::move(elements);
  return out;
}

SubSemigroup local_monoid(const FiniteSemigroup& s, int e) {
  if (!s.is_idempotent(e)) throw NotIdempotent(e);
  std::set<int> carrier;
  for (int t = 0; t < s.order(); ++t)
    carrier.insert(s.product(s.product(e, t), e));
  return subsemigroup(s, std::vector<int>(carrier.begin(), carrier.end()));
}

std::vector<std::vector<int>> power_ideals(const FiniteSemigroup& s) {
  int n = s.order();
  std::vector<char> cur(n, 1);
  std::vector<std::vector<int>> chain;
  auto to_sorted = [&](const std::vector<char>& mask) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
      if (mask[i]) out.push_back(i);
    return out;
  };
  chain.push_back(to_sorted(cur));
  while (true) {
    std::vector<char> next(n, 0);
    for (int a = 0; a < n; ++a)
      if (cur[a])
        for (int b = 0; b < n; ++b) next[s.product(b, a)] = 1;
    if (next == cur) break;
    cur = next;
    chain.push_back(to_sorted(cur));
  }
  // Pumping check: S^|S| = S E(S) S.
  std::vector<char> ses(n, 0);
  for (int a = 0; a < n; ++a)
    for (int e : s.idempotents())
      for (int b = 0; b < n; ++b) ses[s.product(s.product(a, e), b)] = 1;
  std::vector<char> pow_n(n, 1);
  for (int k = 2; k <= n; ++k) {
    std::vector<char> next(n, 0);
    for (int a = 0; a < n; ++a)
      if (pow_n[a])
        for (int b = 0; b < n; ++b) next[s.product(b, a)] = 1;
    pow_n = next;
  }
  assert(ses == pow_n && "pumping lemma S^n = S E(S) S failed");
  return chain;
}

namespace {

// Principal two-sided ideal of s as a sorted element list.
std::vector<int> principal_ideal(const FiniteSemigroup& sg, int s) {
  int n = sg.order();
  std::vector<char> in(n, 0);
  std::queue<int> q;
  in[s] = 1;
  q.push(s);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int t = 0; t < n; ++t) {
      for (int w : {sg.product(v, t), sg.product(t, v)})
        if (!in[w]) {
          in[w] = 1;
          q.push(w);
        }
    }
  }
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (in[i]) out.push_back(i);
  return out;
}

}  // namespace

std::vector<int> minimal_ideal(const FiniteSemigroup& s) {
  std::vector<int> best;
  for (int a = 0; a < s.order(); ++a) {
    auto ideal = principal_ideal(s, a);
    if (best.empty() || ideal.size() < best.size()) best = std::move(ideal);
  }
  // The minimal ideal is contained in every principal ideal.
  for (int a = 0; a < s.order(); ++a) {
    auto ideal = principal_ideal(s, a);
    assert(std::includes(ideal.begin(), ideal.end(), best.begin(), best.end()));
  }
  return best;
}

bool is_simple(const FiniteSemigroup& s) {
  return static_cast<int>(minimal_ideal(s).size()) == s.order();
}

bool is_0_simple(const FiniteSemigroup& s) {
  auto z = s.zero();
  if (!z) return false;
  // S² != 0.
  bool nonzero_product = false;
  for (int a = 0; a < s.order() && !nonzero_product; ++a)
    for (int b = 0; b < s.order() && !nonzero_product; ++b)
      if (s.product(a, b) != *z) nonzero_product = true;
  if (!nonzero_product) return false;
  for (int a = 0; a < s.order(); ++a) {
    if (a == *z) continue;
    if (static_cast<int>(principal_ideal(s, a).size()) != s.order()) return false;
  }
  return true;
}

namespace detail {

LocalGroupReport local_group_structure(const FiniteSemigroup& s) {
  LocalGroupReport rep;
  auto idems = s.idempotents();
  for (int e : idems)
    for (int f : idems) {
      if (e == f) continue;
      if (s.product(e, f) == e && s.product(f, e) == e) {
        rep.ok = false;
        rep.semilattice_pair = {e, f};
        return rep;
      }
    }
  rep.ok = true;
  return rep;
}

void local_group_cross_checks(const FiniteSemigroup& s) {
  // (1) every local monoid is a group: eSe has a single H-class.
  for (int e : s.idempotents()) {
    auto lm = local_monoid(s, e);
    auto g = greens(lm.sg);
    assert(g.h.count == 1 && "local monoid is not a group");
  }
  // (2)+(3) the stable power ideal is the minimal ideal and simple.
  auto chain = power_ideals(s);
  auto stable = chain.back();
  auto min = minimal_ideal(s);
  assert(stable == min && "stable power ideal differs from the minimal ideal");
  auto sub = subsemigroup(s, stable);
  assert(is_simple(sub.sg) && "stable power ideal is not simple");
}

}  // namespace detail

}  // namespace fsemi
