#include "fsemi/automata.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "fsemi/rep.hpp"

namespace fsemi {

bool Dfa::is_total() const {
  for (const auto& col : delta)
    for (int v : col)
      if (v < 0) return false;
  return true;
}

bool Dfa::is_final(int q) const {
  return std::find(finals.begin(), finals.end(), q) != finals.end();
}

int Dfa::run(int q, const std::vector<int>& word, std::size_t from, std::size_t to) const {
  if (to == std::string::npos) to = word.size();
  for (std::size_t i = from; i < to && q >= 0; ++i) q = delta[word[i]][q];
  return q;
}

bool Dfa::accepts(const std::vector<int>& word) const {
  int q = run(start, word);
  return q >= 0 && is_final(q);
}

void Dfa::validate() const {
  if (state_count <= 0) throw ParseError("automaton needs at least one state");
  if (static_cast<int>(delta.size()) != letters())
    throw ParseError("delta must have one row per letter");
  for (const auto& col : delta) {
    if (static_cast<int>(col.size()) != state_count)
      throw ParseError("delta row has wrong length");
    for (int v : col)
      if (v < -1 || v >= state_count) throw ParseError("delta target out of range");
  }
  if (start < 0 || start >= state_count) throw ParseError("start state out of range");
  for (int f : finals)
    if (f < 0 || f >= state_count) throw ParseError("final state out of range");
}

namespace {

std::vector<char> reachable_states(const Dfa& d) {
  std::vector<char> seen(d.state_count, 0);
  std::queue<int> q;
  q.push(d.start);
  seen[d.start] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int a = 0; a < d.letters(); ++a) {
      int w = d.delta[a][v];
      if (w >= 0 && !seen[w]) {
        seen[w] = 1;
        q.push(w);
      }
    }
  }
  return seen;
}

std::vector<char> coreachable_states(const Dfa& d) {
  std::vector<std::vector<int>> rev(d.state_count);
  for (int a = 0; a < d.letters(); ++a)
    for (int v = 0; v < d.state_count; ++v)
      if (d.delta[a][v] >= 0) rev[d.delta[a][v]].push_back(v);
  std::vector<char> seen(d.state_count, 0);
  std::queue<int> q;
  for (int f : d.finals)
    if (!seen[f]) {
      seen[f] = 1;
      q.push(f);
    }
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : rev[v])
      if (!seen[w]) {
        seen[w] = 1;
        q.push(w);
      }
  }
  return seen;
}

}  // namespace

bool is_trim(const Dfa& d) {
  auto r = reachable_states(d), c = coreachable_states(d);
  for (int v = 0; v < d.state_count; ++v)
    if (!r[v] || !c[v]) return false;
  return true;
}

Dfa trim(const Dfa& d) {
  auto r = reachable_states(d), c = coreachable_states(d);
  std::vector<int> remap(d.state_count, -1);
  int n = 0;
  for (int v = 0; v < d.state_count; ++v)
    if (r[v] && c[v]) remap[v] = n++;
  if (remap[d.start] == -1) throw NotTrim(d.start);  // empty language
  Dfa out;
  out.state_count = n;
  out.alphabet = d.alphabet;
  out.start = remap[d.start];
  out.delta.assign(d.letters(), std::vector<int>(n, -1));
  for (int a = 0; a < d.letters(); ++a)
    for (int v = 0; v < d.state_count; ++v) {
      if (remap[v] == -1) continue;
      int w = d.delta[a][v];
      out.delta[a][remap[v]] = (w >= 0 && remap[w] != -1) ? remap[w] : -1;
    }
  for (int f : d.finals)
    if (remap[f] != -1) out.finals.push_back(remap[f]);
  std::sort(out.finals.begin(), out.finals.end());
  return out;
}

Dfa completed(const Dfa& d) {
  if (d.is_total()) return d;
  Dfa out = d;
  int sink = out.state_count++;
  for (auto& col : out.delta) {
    for (int& v : col)
      if (v < 0) v = sink;
    col.push_back(sink);
  }
  return out;
}

Dfa minimize(const Dfa& dfa) {
  Dfa d = completed(dfa);
  // Restrict to reachable states.
  auto seen = reachable_states(d);
  std::vector<int> remap(d.state_count, -1);
  int n = 0;
  for (int v = 0; v < d.state_count; ++v)
    if (seen[v]) remap[v] = n++;
  Dfa r;
  r.state_count = n;
  r.alphabet = d.alphabet;
  r.start = remap[d.start];
  r.delta.assign(d.letters(), std::vector<int>(n, -1));
  for (int a = 0; a < d.letters(); ++a)
    for (int v = 0; v < d.state_count; ++v)
      if (seen[v]) r.delta[a][remap[v]] = remap[d.delta[a][v]];
  for (int f : d.finals)
    if (seen[f]) r.finals.push_back(remap[f]);

  // Moore partition refinement.
  std::vector<int> cls(n, 0);
  for (int f : r.finals) cls[f] = 1;
  bool has_final = !r.finals.empty(), has_nonfinal = static_cast<int>(r.finals.size()) < n;
  int classes = (has_final && has_nonfinal) ? 2 : 1;
  if (classes == 1) std::fill(cls.begin(), cls.end(), 0);
  while (true) {
    std::map<std::vector<int>, int> sig_ids;
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> sig{cls[v]};
      for (int a = 0; a < r.letters(); ++a) sig.push_back(cls[r.delta[a][v]]);
      auto [it, fresh] = sig_ids.emplace(std::move(sig), static_cast<int>(sig_ids.size()));
      next[v] = it->second;
      (void)fresh;
    }
    int count = static_cast<int>(sig_ids.size());
    if (count == classes) break;
    classes = count;
    cls = std::move(next);
  }
  // Canonical class ids by first occurrence.
  Partition p(cls);
  Dfa out;
  out.state_count = p.count;
  out.alphabet = r.alphabet;
  out.start = p.class_of[r.start];
  out.delta.assign(r.letters(), std::vector<int>(p.count, -1));
  auto reps = p.classes();
  for (int a = 0; a < r.letters(); ++a)
    for (int c = 0; c < p.count; ++c) out.delta[a][c] = p.class_of[r.delta[a][reps[c][0]]];
  std::set<int> fin;
  for (int f : r.finals) fin.insert(p.class_of[f]);
  out.finals.assign(fin.begin(), fin.end());
  return out;
}

TransitionMonoid transition_monoid(const Dfa& dfa, std::size_t cap) {
  dfa.validate();
  if (!dfa.is_total()) throw ParseError("transition monoid needs a total automaton");
  TransitionMonoid out;
  out.monoid = FiniteSemigroup::from_transformations(dfa.state_count, dfa.delta,
                                                     dfa.alphabet, cap, true);
  for (int a = 0; a < dfa.letters(); ++a) {
    const auto& ts = out.monoid.transformations();
    auto it = std::find(ts.begin(), ts.end(), dfa.delta[a]);
    assert(it != ts.end());
    out.letter_images.push_back(static_cast<int>(it - ts.begin()));
  }
  return out;
}

FiniteSemigroup syntactic_monoid(const Dfa& dfa, std::size_t cap) {
  return transition_monoid(minimize(dfa), cap).monoid;
}

bool is_synchronizing(const Dfa& dfa) {
  dfa.validate();
  if (!dfa.is_total()) throw ParseError("synchronization needs a total automaton");
  int n = dfa.state_count;
  if (n == 1) return true;
  // Pair criterion: every pair of states must be mergeable.  Breadth-first
  // search backwards from the diagonal in the pair automaton.
  auto idx = [n](int p, int q) { return p * n + q; };
  std::vector<std::vector<int>> rev(n * n);
  for (int a = 0; a < dfa.letters(); ++a)
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        int tp = dfa.delta[a][p], tq = dfa.delta[a][q];
        rev[idx(tp, tq)].push_back(idx(p, q));
      }
  std::vector<char> merge(n * n, 0);
  std::queue<int> bfs;
  for (int p = 0; p < n; ++p) {
    merge[idx(p, p)] = 1;
    bfs.push(idx(p, p));
  }
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int w : rev[v])
      if (!merge[w]) {
        merge[w] = 1;
        bfs.push(w);
      }
  }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (!merge[idx(p, q)]) return false;
  return true;
}

std::vector<int> shortest_sync_word(const Dfa& dfa) {
  dfa.validate();
  if (!dfa.is_total()) throw ParseError("synchronization needs a total automaton");
  int n = dfa.state_count;
  if (n > 16) throw CapExceeded(16, "subset search on " + std::to_string(n) + " states");
  if (n == 1) return {};
  unsigned full = (1u << n) - 1;
  std::vector<int> parent(full + 1, -2), via(full + 1, -1);
  std::queue<unsigned> bfs;
  parent[full] = -1;
  bfs.push(full);
  while (!bfs.empty()) {
    unsigned mask = bfs.front();
    bfs.pop();
    if ((mask & (mask - 1)) == 0) {
      std::vector<int> word;
      for (unsigned m = mask; parent[m] != -1; m = static_cast<unsigned>(parent[m]))
        word.push_back(via[m]);
      std::reverse(word.begin(), word.end());
      return word;
    }
    for (int a = 0; a < dfa.letters(); ++a) {
      unsigned next = 0;
      for (int q = 0; q < n; ++q)
        if (mask & (1u << q)) next |= 1u << dfa.delta[a][q];
      if (parent[next] == -2) {
        parent[next] = static_cast<int>(mask);
        via[next] = a;
        bfs.push(next);
      }
    }
  }
  throw NotSynchronizing();
}

DsSyncResult ds_sync_word(const Dfa& dfa, std::size_t cap) {
  dfa.validate();
  if (!dfa.is_total()) throw ParseError("synchronization needs a total automaton");
  int n = dfa.state_count;
  DsSyncResult out;
  if (n == 1) return out;

  TransitionMonoid tm = transition_monoid(dfa, cap);
  const FiniteSemigroup& m = tm.monoid;

  // DS test on the transition monoid.
  GreensStructure g = greens(m);
  for (int jc = 0; jc < g.j.count; ++jc) {
    if (!g.regular[jc]) continue;
    std::vector<int> cls;
    for (int x = 0; x < m.order(); ++x)
      if (g.j_of(x) == jc) cls.push_back(x);
    for (int a : cls)
      for (int b : cls)
        if (g.j_of(m.product(a, b)) != jc) throw NotInDS(a, b);
  }

  if (!is_synchronizing(dfa)) throw NotSynchronizing();

  // Representation on V_0 = (sum of coordinates = 0), basis f_i = e_{n-1} - e_i.
  const Field* f = Field::rationals();
  int k = n - 1;
  MatrixRep rep;
  rep.field = f;
  rep.dim = k;
  for (int i = 0; i < k; ++i) rep.basis_labels.push_back("f" + std::to_string(i));
  for (int elt = 0; elt < m.order(); ++elt) {
    const auto& t = m.transformations()[elt];
    Mat img(f, k, k);
    for (int i = 0; i < k; ++i) {
      if (t[i] != n - 1) img.at(i, t[i]) = ops::add(f, img.at(i, t[i]), ops::one(f));
      if (t[n - 1] != n - 1)
        img.at(i, t[n - 1]) = ops::sub(f, img.at(i, t[n - 1]), ops::one(f));
    }
    rep.images.push_back(std::move(img));
  }

  Flag flag = composition_flag(m, rep);
  BlockForm bf = block_form(m, rep, flag);
  out.block_count = static_cast<int>(bf.blocks.size());

  // Per block, the smallest letter set whose product has zero block image.
  int na = dfa.letters();
  auto block_of = [&](int elt, const DiagonalBlock& blk) { return blk.images[elt]; };
  std::vector<int> chosen;  // letters of u in order
  auto already = [&](int a) {
    return std::find(chosen.begin(), chosen.end(), a) != chosen.end();
  };
  for (const auto& blk : bf.blocks) {
    std::optional<unsigned> found;
    // Subsets ordered by size then value; singletons first means the least
    // single letter with a zero block wins, matching the refined bound.
    for (int size = 1; size <= na && !found; ++size)
      for (unsigned mask = 0; mask < (1u << na) && !found; ++mask) {
        if (__builtin_popcount(mask) != size) continue;
        Mat prod = Mat::identity(f, blk.size);
        for (int a = 0; a < na; ++a)
          if (mask & (1u << a)) prod = prod * block_of(tm.letter_images[a], blk);
        if (prod.is_zero()) found = mask;
      }
    if (!found)
      throw Error("internal: no letter set kills a diagonal block of a DS "
                  "synchronizing automaton");
    for (int a = 0; a < na; ++a)
      if ((*found & (1u << a)) && !already(a)) chosen.push_back(a);
  }
  out.base_word = chosen;

  // Repeat u until constant; at most block_count repetitions are needed.
  std::vector<int> u_map(n);
  std::iota(u_map.begin(), u_map.end(), 0);
  for (int a : chosen)
    for (int q = 0; q < n; ++q) u_map[q] = dfa.delta[a][u_map[q]];
  std::vector<int> acc(n);
  std::iota(acc.begin(), acc.end(), 0);
  for (int j = 1; j <= out.block_count; ++j) {
    for (int q = 0; q < n; ++q) acc[q] = u_map[acc[q]];
    bool constant = std::all_of(acc.begin(), acc.end(),
                                [&](int q) { return q == acc[0]; });
    if (constant) {
      out.power = j;
      break;
    }
  }
  if (out.power == 0)
    throw Error("internal: u^r failed to synchronize despite zero diagonal blocks");
  for (int j = 0; j < out.power; ++j)
    out.word.insert(out.word.end(), chosen.begin(), chosen.end());

  // Final verification against the automaton.
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  for (int a : out.word)
    for (int q = 0; q < n; ++q) image[q] = dfa.delta[a][image[q]];
  for (int q = 0; q < n; ++q)
    if (image[q] != image[0]) throw Error("internal: produced word does not synchronize");
  return out;
}

void MarkedProductSpec::validate() const {
  if (factors.empty()) throw ParseError("marked product needs at least one factor");
  if (letters.size() + 1 != factors.size())
    throw ParseError("marked product needs one letter between consecutive factors");
  for (int a : letters)
    if (a < 0 || a >= static_cast<int>(alphabet.size()))
      throw ParseError("marked letter out of range");
  for (const auto& d : factors) {
    d.validate();
    if (d.alphabet != alphabet)
      throw ParseError("factor alphabet differs from the product alphabet");
    if (d.finals.empty()) throw ParseError("factor recognizes the empty language");
  }
  if (counter) {
    auto [r, p] = *counter;
    if (!is_prime(static_cast<unsigned>(p))) throw ParseError("counter modulus must be prime");
    if (r < 0 || r >= p) throw ParseError("counter residue out of range");
  }
  if (mode == Mode::Counter && !counter)
    throw MissingParameter("counter mode needs a counter");
}

CounterMatrices counter_matrix(const MarkedProductSpec& spec) {
  spec.validate();
  if (spec.mode != MarkedProductSpec::Mode::Counter)
    throw MissingParameter("counter_matrix needs mode=counter");
  for (std::size_t i = 0; i < spec.factors.size(); ++i)
    if (!is_trim(spec.factors[i])) {
      // report the first useless state
      auto r = reachable_states(spec.factors[i]);
      auto c = coreachable_states(spec.factors[i]);
      for (int v = 0; v < spec.factors[i].state_count; ++v)
        if (!r[v] || !c[v]) throw NotTrim(v);
    }

  CounterMatrices out;
  out.p = static_cast<unsigned>(spec.counter->second);
  out.r = spec.counter->first;
  const Field* f = Field::gf(out.p);

  std::vector<int> offset(spec.factors.size());
  int total = 0;
  for (std::size_t i = 0; i < spec.factors.size(); ++i) {
    offset[i] = total;
    total += spec.factors[i].state_count;
  }
  out.state_count = total;
  out.start = offset[0] + spec.factors[0].start;
  for (int fstate : spec.factors.back().finals)
    out.finals.push_back(offset.back() + fstate);

  for (int a = 0; a < static_cast<int>(spec.alphabet.size()); ++a) {
    Mat m(f, total, total);
    for (std::size_t i = 0; i < spec.factors.size(); ++i) {
      const Dfa& d = spec.factors[i];
      for (int q = 0; q < d.state_count; ++q) {
        int t = d.delta[a][q];
        if (t >= 0) {
          auto& cell = m.at(offset[i] + q, offset[i] + t);
          cell = ops::add(f, cell, ops::one(f));
        }
      }
      // Glue edges: final states of factor i jump to the start of factor
      // i+1 when reading the marked letter a_{i+1}.
      if (i + 1 < spec.factors.size() && spec.letters[i] == a) {
        for (int fstate : d.finals) {
          auto& cell = m.at(offset[i] + fstate, offset[i + 1] + spec.factors[i + 1].start);
          cell = ops::add(f, cell, ops::one(f));
        }
      }
    }
    out.letter_matrices.push_back(std::move(m));
  }
  return out;
}

Mat CounterMatrices::word_matrix(const std::vector<int>& word) const {
  const Field* f = Field::gf(p);
  Mat acc = Mat::identity(f, state_count);
  for (int a : word) acc = acc * letter_matrices[a];
  return acc;
}

unsigned CounterMatrices::count_mod_p(const std::vector<int>& word) const {
  const Field* f = Field::gf(p);
  Mat m = word_matrix(word);
  Scalar sum = ops::zero(f);
  for (int fstate : finals) sum = ops::add(f, sum, m.at(start, fstate));
  return sum.ff;  // prime field: the code is the residue
}

bool CounterMatrices::member(const std::vector<int>& word) const {
  return count_mod_p(word) == static_cast<unsigned>(r);
}

long long count_factorizations(const MarkedProductSpec& spec,
                               const std::vector<int>& word) {
  spec.validate();
  if (word.size() > 20) throw CapExceeded(20, "factorization count on length " +
                                                  std::to_string(word.size()));
  int m = static_cast<int>(spec.letters.size());
  long long count = 0;
  // positions[i] = index of the i-th marked letter in word
  std::vector<int> pos(m, 0);
  auto piece_ok = [&](std::size_t factor, std::size_t from, std::size_t to) {
    const Dfa& d = spec.factors[factor];
    int q = d.run(d.start, word, from, to);
    return q >= 0 && d.is_final(q);
  };
  // Recursive enumeration over marked positions.
  auto rec = [&](auto&& self, int i, int from) -> void {
    if (i == m) {
      if (piece_ok(m, from, word.size())) ++count;
      return;
    }
    for (int at = from; at < static_cast<int>(word.size()); ++at) {
      if (word[at] != spec.letters[i]) continue;
      if (!piece_ok(i, from, at)) continue;
      self(self, i + 1, at + 1);
    }
  };
  rec(rec, 0, 0);
  return count;
}

namespace {

// Counting matrices saturated at 2 ("two or more").
struct SatMat {
  int n = 0;
  std::vector<unsigned char> v;  // entries in {0,1,2}

  bool operator<(const SatMat& o) const { return v < o.v; }
  bool operator==(const SatMat& o) const { return v == o.v; }
};

SatMat sat_mul(const SatMat& a, const SatMat& b) {
  SatMat out;
  out.n = a.n;
  out.v.assign(a.v.size(), 0);
  for (int i = 0; i < a.n; ++i)
    for (int k = 0; k < a.n; ++k) {
      unsigned char x = a.v[i * a.n + k];
      if (!x) continue;
      for (int j = 0; j < a.n; ++j) {
        unsigned char y = b.v[k * a.n + j];
        if (!y) continue;
        unsigned char& cell = out.v[i * a.n + j];
        unsigned prod = static_cast<unsigned>(x) * y;
        unsigned next = std::min(2u, static_cast<unsigned>(cell) + prod);
        cell = static_cast<unsigned char>(next);
      }
    }
  return out;
}

}  // namespace

UnambiguityResult is_unambiguous(const MarkedProductSpec& spec, std::size_t cap) {
  spec.validate();
  for (const auto& d : spec.factors)
    if (!is_trim(d)) {
      auto r = reachable_states(d);
      auto c = coreachable_states(d);
      for (int v = 0; v < d.state_count; ++v)
        if (!r[v] || !c[v]) throw NotTrim(v);
    }

  std::vector<int> offset(spec.factors.size());
  int total = 0;
  for (std::size_t i = 0; i < spec.factors.size(); ++i) {
    offset[i] = total;
    total += spec.factors[i].state_count;
  }
  int start = offset[0] + spec.factors[0].start;
  std::vector<int> finals;
  for (int fstate : spec.factors.back().finals) finals.push_back(offset.back() + fstate);

  int na = static_cast<int>(spec.alphabet.size());
  std::vector<SatMat> letter(na);
  for (int a = 0; a < na; ++a) {
    letter[a].n = total;
    letter[a].v.assign(static_cast<std::size_t>(total) * total, 0);
    for (std::size_t i = 0; i < spec.factors.size(); ++i) {
      const Dfa& d = spec.factors[i];
      for (int q = 0; q < d.state_count; ++q) {
        int t = d.delta[a][q];
        if (t >= 0) ++letter[a].v[(offset[i] + q) * total + offset[i] + t];
      }
      if (i + 1 < spec.factors.size() && spec.letters[i] == a)
        for (int fstate : d.finals)
          ++letter[a].v[(offset[i] + fstate) * total + offset[i + 1] +
                        spec.factors[i + 1].start];
    }
  }

  // -1 when not ambiguous, otherwise the doubled coordinate encoded as
  // i*total+j, or total*total for a doubled path count into the finals.
  auto ambiguity_coord = [&](const SatMat& m) -> long {
    for (std::size_t e = 0; e < m.v.size(); ++e)
      if (m.v[e] >= 2) return static_cast<long>(e);
    unsigned sum = 0;
    for (int fstate : finals) sum = std::min(2u, sum + m.v[start * total + fstate]);
    if (sum >= 2) return static_cast<long>(total) * total;
    return -1;
  };

  // Shortest word along positive entries from one state into a target set.
  auto connect = [&](const std::vector<int>& sources, const std::vector<int>& targets) {
    std::vector<std::pair<int, int>> from(total, {-2, -1});
    std::queue<int> q;
    for (int s0 : sources) {
      from[s0] = {-1, -1};
      q.push(s0);
    }
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      if (std::find(targets.begin(), targets.end(), v) != targets.end()) {
        std::vector<int> w;
        for (int x = v; from[x].first != -1; x = from[x].first) w.push_back(from[x].second);
        std::reverse(w.begin(), w.end());
        return std::make_pair(v, w);
      }
      for (int a = 0; a < na; ++a)
        for (int t = 0; t < total; ++t)
          if (letter[a].v[v * total + t] && from[t].first == -2) {
            from[t] = {v, a};
            q.push(t);
          }
    }
    throw Error("internal: glued automaton not trim");
  };

  std::map<SatMat, int> index;
  std::vector<std::pair<int, int>> parent;  // (previous element, letter)
  std::vector<SatMat> elts;
  std::queue<int> bfs;
  auto add = [&](SatMat m, int from, int via) -> int {
    auto it = index.find(m);
    if (it != index.end()) return it->second;
    if (elts.size() >= cap) throw CapExceeded(cap, "counting-matrix closure");
    int id = static_cast<int>(elts.size());
    index.emplace(m, id);
    elts.push_back(std::move(m));
    parent.emplace_back(from, via);
    bfs.push(id);
    return id;
  };

  UnambiguityResult out;
  auto word_of = [&](int id) {
    std::vector<int> w;
    for (int v = id; parent[v].first != -1; v = parent[v].first)
      w.push_back(parent[v].second);
    std::reverse(w.begin(), w.end());
    return w;
  };

  SatMat id_mat;
  id_mat.n = total;
  id_mat.v.assign(static_cast<std::size_t>(total) * total, 0);
  for (int i = 0; i < total; ++i) id_mat.v[i * total + i] = 1;
  add(id_mat, -1, -1);

  while (!bfs.empty()) {
    int cur = bfs.front();
    bfs.pop();
    for (int a = 0; a < na; ++a) {
      SatMat next = sat_mul(elts[cur], letter[a]);
      long coord = ambiguity_coord(next);
      if (coord >= 0) {
        int id = add(std::move(next), cur, a);
        out.unambiguous = false;
        out.witness = word_of(id);
        if (coord < static_cast<long>(total) * total) {
          // Extend the doubled (i,j) entry to a full doubly-accepted word.
          int i = static_cast<int>(coord) / total, j = static_cast<int>(coord) % total;
          auto [iend, prefix] = connect({start}, {i});
          (void)iend;
          auto [fend, suffix] = connect({j}, finals);
          (void)fend;
          out.witness.insert(out.witness.begin(), prefix.begin(), prefix.end());
          out.witness.insert(out.witness.end(), suffix.begin(), suffix.end());
        }
        return out;
      }
      add(std::move(next), cur, a);
    }
  }
  out.unambiguous = true;
  return out;
}

}  // namespace fsemi
