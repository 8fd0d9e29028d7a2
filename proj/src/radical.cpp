#include "fsemi/radical.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>

#include "fsemi/rep.hpp"

namespace fsemi {

int group_element_order(const FiniteSemigroup& s, const SubgroupTable& g, int x) {
  int acc = x, ord = 1;
  while (acc != g.identity) {
    acc = s.product(acc, x);
    ++ord;
  }
  return ord;
}

int group_exponent(const FiniteSemigroup& s, const SubgroupTable& g) {
  long long e = 1;
  for (int x : g.carrier) e = std::lcm(e, static_cast<long long>(group_element_order(s, g, x)));
  return static_cast<int>(e);
}

namespace {

bool is_p_power(std::size_t n, unsigned p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

// Subgroup of G generated by a subset (closure under the ambient product).
std::vector<int> generated_subgroup(const FiniteSemigroup& s, const SubgroupTable& g,
                                    std::vector<int> gens) {
  std::set<int> elems(gens.begin(), gens.end());
  elems.insert(g.identity);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(elems.begin(), elems.end());
    for (int a : cur)
      for (int b : cur)
        if (elems.insert(s.product(a, b)).second) grew = true;
  }
  return {elems.begin(), elems.end()};
}

std::vector<int> normal_closure(const FiniteSemigroup& s, const SubgroupTable& g, int x) {
  std::set<int> conj;
  for (int h : g.carrier) conj.insert(s.product(s.product(h, x), g.inverse_of(h)));
  return generated_subgroup(s, g, {conj.begin(), conj.end()});
}

}  // namespace

SubgroupTable unipotent_radical(const FiniteSemigroup& s, const SubgroupTable& g,
                                const FieldSpec& field) {
  SubgroupTable out;
  out.identity = g.identity;
  if (field.characteristic() == 0) {
    out.carrier = {g.identity};
    out.inverse = {{g.identity, g.identity}};
    return out;
  }
  unsigned p = field.characteristic();
  std::vector<int> gens;
  for (int x : g.carrier) {
    if (!is_p_power(static_cast<std::size_t>(group_element_order(s, g, x)), p)) continue;
    if (is_p_power(normal_closure(s, g, x).size(), p)) gens.push_back(x);
  }
  out.carrier = generated_subgroup(s, g, gens);
  for (int a : out.carrier)
    for (int b : out.carrier)
      if (s.product(a, b) == g.identity) {
        out.inverse.emplace_back(a, b);
        break;
      }
  return out;
}

RadicalResult rhodes_radical(const FiniteSemigroup& s, const FieldSpec& field) {
  GreensStructure g = greens(s);
  RadicalResult out;
  out.congruence = Congruence::universal(s.order());
  for (int jc = 0; jc < g.j.count; ++jc) {
    if (!g.regular[jc]) continue;
    GgmData probe = ggm_data(s, g, jc, {});
    SubgroupTable n = unipotent_radical(s, probe.base_group, field);
    GgmData data = ggm_data(s, g, jc, n.carrier);
    Congruence cong = ggm_congruence_with_choices(s, g, data);
    out.congruence = meet(out.congruence, cong);
    out.per_j_class.push_back({jc, std::move(data), std::move(cong)});
  }
  return out;
}

bool in_g_k(const SubgroupTable& g, const FieldSpec& field) {
  if (field.characteristic() == 0) return g.size() == 1;
  return is_p_power(static_cast<std::size_t>(g.size()), field.characteristic());
}

LocalGroupReport is_lg_k_report(const FiniteSemigroup& s, const FieldSpec& field) {
  return is_local_group(s, [&](const SubgroupTable& g) { return in_g_k(g, field); });
}

bool is_lg_k(const FiniteSemigroup& s, const FieldSpec& field) {
  return is_lg_k_report(s, field).ok;
}

Congruence rhodes_radical_oracle(const FiniteSemigroup& s, const FieldSpec& field,
                                 std::size_t cap) {
  auto all = enumerate_congruences(s, cap);
  std::vector<Congruence> lg;
  auto pred = [&](const FiniteSemigroup& u) { return is_lg_k(u, field); };
  for (const auto& c : all)
    if (is_v_congruence(s, c, pred)) lg.push_back(c);
  assert(!lg.empty() && "the equality congruence is always an LG_K-congruence");
  for (const auto& cand : lg) {
    bool top = true;
    for (const auto& other : lg)
      if (!Partition::refines(other.partition, cand.partition)) {
        top = false;
        break;
      }
    if (top) return cand;
  }
  throw Error("no largest LG_K-congruence found; lattice assumption violated");
}

bool is_lg_k_morphism(const FiniteSemigroup& s, const FiniteSemigroup& t,
                      const std::vector<int>& phi, const FieldSpec& field) {
  check_surjective_morphism(s, t, phi);
  for (int e = 0; e < t.order(); ++e) {
    if (!t.is_idempotent(e)) continue;
    std::vector<int> pre;
    for (int a = 0; a < s.order(); ++a)
      if (phi[a] == e) pre.push_back(a);
    if (!is_lg_k(subsemigroup(s, pre).sg, field)) return false;
  }
  return true;
}

bool malcev_member(const FiniteSemigroup& s,
                   const std::function<bool(const FiniteSemigroup&)>& v_predicate,
                   const FieldSpec& field) {
  return v_predicate(quotient(s, rhodes_radical(s, field).congruence).sg);
}

std::pair<bool, int> augmentation_ideal_nilpotent(const FiniteSemigroup& s,
                                                  const FieldSpec& field) {
  const Field* f = Field::for_spec(field);
  MatrixRep rep = regular_representation(s, f);
  std::vector<Mat> diffs;
  for (int a = 1; a < s.order(); ++a) diffs.push_back(rep.images[a] - rep.images[0]);
  return span_ideal_nilpotent(rep, diffs);
}

std::pair<bool, int> morphism_kernel_nilpotent(const FiniteSemigroup& s,
                                               const std::vector<int>& phi,
                                               const FieldSpec& field) {
  const Field* f = Field::for_spec(field);
  MatrixRep rep = regular_representation(s, f);
  std::vector<Mat> diffs;
  std::map<int, int> first_with_image;
  for (int a = 0; a < s.order(); ++a) {
    auto [it, fresh] = first_with_image.emplace(phi[a], a);
    if (!fresh) diffs.push_back(rep.images[a] - rep.images[it->second]);
  }
  return span_ideal_nilpotent(rep, diffs);
}

FiniteSemigroup group_quotient(const FiniteSemigroup& s, const SubgroupTable& g,
                               const std::vector<int>& normal) {
  std::vector<int> n = normal;
  std::sort(n.begin(), n.end());
  std::map<int, int> coset;
  std::vector<int> reps;
  for (int x : g.carrier) {
    if (coset.count(x)) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int h : n) coset[s.product(x, h)] = id;
  }
  int m = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) table[a][b] = coset.at(s.product(reps[a], reps[b]));
  return FiniteSemigroup::from_cayley_table(m, std::move(table));
}

}  // namespace fsemi
