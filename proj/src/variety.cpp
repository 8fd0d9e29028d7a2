#include "fsemi/variety.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fsemi {

namespace {

std::string pair_str(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

Membership ok() { return {true, ""}; }
Membership fail(std::string w) { return {false, std::move(w)}; }

Membership check_commutative(const FiniteSemigroup& s) {
  for (int a = 0; a < s.order(); ++a)
    for (int b = a + 1; b < s.order(); ++b)
      if (s.product(a, b) != s.product(b, a))
        return fail("non-commuting pair " + pair_str(a, b));
  return ok();
}

Membership check_band(const FiniteSemigroup& s) {
  for (int a = 0; a < s.order(); ++a)
    if (!s.is_idempotent(a)) return fail("non-idempotent element " + std::to_string(a));
  return ok();
}

bool is_group(const FiniteSemigroup& s) { return greens(s).h.count == 1; }

Membership check_group(const FiniteSemigroup& s) {
  if (!is_group(s)) return fail("not a group (more than one H-class)");
  return ok();
}

int semigroup_group_exponent(const FiniteSemigroup& s) {
  // s must be a group.
  int e = *s.identity();
  long long exp = 1;
  for (int x = 0; x < s.order(); ++x) {
    int acc = x, ord = 1;
    while (acc != e) {
      acc = s.product(acc, x);
      ++ord;
    }
    exp = std::lcm(exp, static_cast<long long>(ord));
  }
  return static_cast<int>(exp);
}

Membership check_ab_k(const FiniteSemigroup& s, const FieldSpec& field) {
  if (auto g = check_group(s); !g) return g;
  if (auto c = check_commutative(s); !c) return c;
  int e = semigroup_group_exponent(s);
  if (!field.splits(static_cast<unsigned>(e)))
    return fail("x^" + std::to_string(e) + "-1 does not split over " + field.str());
  return ok();
}

// Semilattice of groups with maximal subgroups satisfying group_pred:
// completely regular, idempotents central, subgroup condition.
template <typename GroupPred>
Membership check_clifford(const FiniteSemigroup& s, const GreensStructure& g,
                          GroupPred&& group_pred) {
  for (int x = 0; x < s.order(); ++x)
    if (g.h_of(x) != g.h_of(s.product(x, x)))
      return fail("element " + std::to_string(x) + " lies in no subgroup");
  for (int e : g.idempotents)
    for (int x = 0; x < s.order(); ++x)
      if (s.product(e, x) != s.product(x, e))
        return fail("idempotent " + std::to_string(e) + " not central at " +
                    std::to_string(x));
  for (int e : g.idempotents) {
    Membership m = group_pred(maximal_subgroup(s, g, e));
    if (!m) return fail("maximal subgroup at " + std::to_string(e) + ": " + m.witness);
  }
  return ok();
}

Membership subgroup_in_ab_k(const FiniteSemigroup& s, const SubgroupTable& g,
                            const std::optional<FieldSpec>& field) {
  for (int a : g.carrier)
    for (int b : g.carrier)
      if (s.product(a, b) != s.product(b, a))
        return fail("non-abelian subgroup pair " + pair_str(a, b));
  if (field) {
    int e = group_exponent(s, g);
    if (!field->splits(static_cast<unsigned>(e)))
      return fail("subgroup exponent " + std::to_string(e) + " does not split over " +
                  field->str());
  }
  return ok();
}

std::vector<std::vector<int>> regular_j_classes(const FiniteSemigroup& s,
                                                const GreensStructure& g) {
  std::vector<std::vector<int>> out(g.j.count);
  for (int x = 0; x < s.order(); ++x) out[g.j_of(x)].push_back(x);
  std::vector<std::vector<int>> reg;
  for (int jc = 0; jc < g.j.count; ++jc)
    if (g.regular[jc]) reg.push_back(std::move(out[jc]));
  return reg;
}

Membership check_ds(const FiniteSemigroup& s, const GreensStructure& g) {
  for (const auto& cls : regular_j_classes(s, g))
    for (int a : cls)
      for (int b : cls)
        if (g.j_of(s.product(a, b)) != g.j_of(a))
          return fail("regular J-class not closed at " + pair_str(a, b));
  return ok();
}

Membership check_da(const FiniteSemigroup& s, const GreensStructure& g) {
  if (auto ds = check_ds(s, g); !ds) return ds;
  for (const auto& cls : regular_j_classes(s, g))
    for (int a : cls)
      if (!s.is_idempotent(a))
        return fail("non-idempotent element " + std::to_string(a) +
                    " in a regular J-class");
  return ok();
}

Membership check_do(const FiniteSemigroup& s, const GreensStructure& g) {
  if (auto ds = check_ds(s, g); !ds) return ds;
  for (const auto& cls : regular_j_classes(s, g))
    for (int a : cls)
      for (int b : cls)
        if (s.is_idempotent(a) && s.is_idempotent(b) &&
            !s.is_idempotent(s.product(a, b)))
          return fail("idempotents of a regular J-class not closed at " + pair_str(a, b));
  return ok();
}

std::vector<int> idempotent_generated(const FiniteSemigroup& s) {
  std::set<int> elems;
  for (int e : s.idempotents()) elems.insert(e);
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

bool is_p_power_size(std::size_t n, unsigned p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

Membership check_egbar(const FiniteSemigroup& s, unsigned p) {
  auto sub = subsemigroup(s, idempotent_generated(s));
  for (int e : sub.sg.idempotents()) {
    auto g = maximal_subgroup(sub.sg, e);
    if (!is_p_power_size(static_cast<std::size_t>(g.size()), p))
      return fail("idempotent-generated subsemigroup has a non-" + std::to_string(p) +
                  "-subgroup at " + std::to_string(sub.ambient_of(e)));
  }
  return ok();
}

Membership check_dgbar(const FiniteSemigroup& s, const GreensStructure& g, unsigned p) {
  if (auto ds = check_ds(s, g); !ds) return ds;
  for (int e : g.idempotents) {
    if (!g.regular[g.j_of(e)]) continue;
    auto sub = maximal_subgroup(s, g, e);
    if (!is_p_power_size(static_cast<std::size_t>(sub.size()), p))
      return fail("maximal subgroup at " + std::to_string(e) + " is not a " +
                  std::to_string(p) + "-group");
  }
  return ok();
}

// Regular J-classes closed, each maximal subgroup an extension of a normal
// Sylow p-subgroup by an abelian group in Ab_K, and E(S) generates inside
// Gbar_p.
Membership check_dgp_malcev_abk(const FiniteSemigroup& s, const GreensStructure& g,
                                const FieldSpec& field) {
  unsigned p = field.characteristic();
  if (p == 0) return fail("field must have positive characteristic");
  if (auto ds = check_ds(s, g); !ds) return ds;
  for (int e : g.idempotents) {
    auto sub = maximal_subgroup(s, g, e);
    SubgroupTable op = unipotent_radical(s, sub, field);
    if ((sub.size() / op.size()) % p == 0)
      return fail("subgroup at " + std::to_string(e) +
                  ": O_p is not a Sylow p-subgroup");
    FiniteSemigroup q = group_quotient(s, sub, op.carrier);
    if (auto c = check_commutative(q); !c)
      return fail("subgroup at " + std::to_string(e) + ": quotient by O_p not abelian");
    int exp = semigroup_group_exponent(q);
    if (!field.splits(static_cast<unsigned>(exp)))
      return fail("subgroup at " + std::to_string(e) + ": quotient exponent " +
                  std::to_string(exp) + " does not split over " + field.str());
  }
  return check_egbar(s, p);
}

const FieldSpec& require_field(const VarietyId& id) {
  if (!id.field) throw MissingParameter("variety " + id.str() + " needs a field");
  return *id.field;
}

unsigned require_prime(const VarietyId& id) {
  if (!id.prime) throw MissingParameter("variety " + id.str() + " needs a prime");
  return *id.prime;
}

}  // namespace

Membership variety_member(const FiniteSemigroup& s, const VarietyId& id) {
  switch (id.tag) {
    case VarietyTag::Trivial:
      return s.order() == 1 ? ok() : fail("order " + std::to_string(s.order()));
    case VarietyTag::Sl: {
      if (auto b = check_band(s); !b) return b;
      return check_commutative(s);
    }
    case VarietyTag::Band:
      return check_band(s);
    case VarietyTag::Com:
      return check_commutative(s);
    case VarietyTag::Groups:
      return check_group(s);
    case VarietyTag::Ab: {
      if (auto g = check_group(s); !g) return g;
      return check_commutative(s);
    }
    case VarietyTag::Gp: {
      unsigned p = require_prime(id);
      if (auto g = check_group(s); !g) return g;
      if (!is_p_power_size(static_cast<std::size_t>(s.order()), p))
        return fail("order " + std::to_string(s.order()) + " is not a power of " +
                    std::to_string(p));
      return ok();
    }
    case VarietyTag::AbK:
      return check_ab_k(s, require_field(id));
    case VarietyTag::DK:
    case VarietyTag::SlJoinAbK: {
      const FieldSpec& field = require_field(id);
      GreensStructure g = greens(s);
      return check_clifford(s, g, [&](const SubgroupTable& sub) {
        return subgroup_in_ab_k(s, sub, field);
      });
    }
    case VarietyTag::DS:
      return check_ds(s, greens(s));
    case VarietyTag::DA:
      return check_da(s, greens(s));
    case VarietyTag::DO:
      return check_do(s, greens(s));
    case VarietyTag::DOcapAbBar: {
      GreensStructure g = greens(s);
      if (auto d = check_do(s, g); !d) return d;
      for (int e : g.idempotents) {
        Membership m = subgroup_in_ab_k(s, maximal_subgroup(s, g, e), id.field);
        if (!m) return fail("maximal subgroup at " + std::to_string(e) + ": " + m.witness);
      }
      return ok();
    }
    case VarietyTag::LGK: {
      auto rep = is_lg_k_report(s, require_field(id));
      if (rep.ok) return ok();
      if (rep.semilattice_pair)
        return fail("two-element semilattice " + pair_str(rep.semilattice_pair->first,
                                                          rep.semilattice_pair->second));
      return fail("maximal subgroup at " + std::to_string(*rep.failing_idempotent) +
                  " outside G_K");
    }
    case VarietyTag::LI: {
      auto rep = is_local_group(s, [](const SubgroupTable& g) { return g.size() == 1; });
      if (rep.ok) return ok();
      if (rep.semilattice_pair)
        return fail("two-element semilattice " + pair_str(rep.semilattice_pair->first,
                                                          rep.semilattice_pair->second));
      return fail("nontrivial subgroup at " + std::to_string(*rep.failing_idempotent));
    }
    case VarietyTag::EGbarP:
      return check_egbar(s, require_prime(id));
    case VarietyTag::A: {
      GreensStructure g = greens(s);
      for (int e : g.idempotents)
        if (maximal_subgroup(s, g, e).size() != 1)
          return fail("nontrivial subgroup at " + std::to_string(e));
      return ok();
    }
    case VarietyTag::DGbarP:
      return check_dgbar(s, greens(s), require_prime(id));
    case VarietyTag::DGpMalAbKcapEGbarP:
      return check_dgp_malcev_abk(s, greens(s), require_field(id));
  }
  throw MissingParameter("unknown variety tag");
}

RepReport classify_representability(const FiniteSemigroup& s, const FieldSpec& field) {
  RepReport r;
  VarietyId dk{VarietyTag::DK, field, {}};
  VarietyId sl{VarietyTag::Sl, {}, {}};
  VarietyId basic_id{VarietyTag::DK, FieldSpec::C(), {}};  // D_C = Sl v Ab

  Membership m = variety_member(s, dk);
  r.diagonalizable = m.member;
  r.witness_diagonalizable = m.witness;

  m = variety_member(s, sl);
  r.unidiagonalizable = m.member;
  r.witness_unidiagonalizable = m.witness;

  FiniteSemigroup q = quotient(s, rhodes_radical(s, field).congruence).sg;

  m = variety_member(q, dk);
  r.triangularizable = m.member;
  if (!m) r.witness_triangularizable = "radical quotient: " + m.witness;

  m = variety_member(q, sl);
  r.unitriangularizable = m.member;
  if (!m) r.witness_unitriangularizable = "radical quotient: " + m.witness;

  m = variety_member(q, basic_id);
  r.basic = m.member;
  if (!m) r.witness_basic = "radical quotient: " + m.witness;

  r.split_basic = r.triangularizable;
  return r;
}

VarietyId VarietyId::parse(const std::string& text) {
  std::string name = text, param;
  if (auto at = text.find('@'); at != std::string::npos) {
    name = text.substr(0, at);
    param = text.substr(at + 1);
  }
  auto with_field = [&](VarietyTag tag) {
    if (param.empty()) throw MissingParameter("variety " + name + " needs @<field>");
    return VarietyId{tag, FieldSpec::parse(param), {}};
  };
  auto with_prime = [&](VarietyTag tag) {
    if (param.empty()) throw MissingParameter("variety " + name + " needs @<prime>");
    unsigned p = static_cast<unsigned>(std::stoul(param));
    if (!is_prime(p)) throw ParseError("parameter of " + name + " must be prime");
    return VarietyId{tag, {}, p};
  };
  if (name == "Trivial" || name == "I") return {VarietyTag::Trivial, {}, {}};
  if (name == "Sl") return {VarietyTag::Sl, {}, {}};
  if (name == "Band") return {VarietyTag::Band, {}, {}};
  if (name == "Com") return {VarietyTag::Com, {}, {}};
  if (name == "Groups" || name == "G") return {VarietyTag::Groups, {}, {}};
  if (name == "Ab") return {VarietyTag::Ab, {}, {}};
  if (name == "Gp") return with_prime(VarietyTag::Gp);
  if (name == "AbK") return with_field(VarietyTag::AbK);
  if (name == "DK") return with_field(VarietyTag::DK);
  if (name == "SlJoinAbK") return with_field(VarietyTag::SlJoinAbK);
  if (name == "DS") return {VarietyTag::DS, {}, {}};
  if (name == "DA") return {VarietyTag::DA, {}, {}};
  if (name == "DO") return {VarietyTag::DO, {}, {}};
  if (name == "DOcapAbBar") {
    if (param.empty()) return {VarietyTag::DOcapAbBar, {}, {}};
    return with_field(VarietyTag::DOcapAbBar);
  }
  if (name == "LGK") return with_field(VarietyTag::LGK);
  if (name == "LI") return {VarietyTag::LI, {}, {}};
  if (name == "EGbar") return with_prime(VarietyTag::EGbarP);
  if (name == "A") return {VarietyTag::A, {}, {}};
  if (name == "DGbar") return with_prime(VarietyTag::DGbarP);
  if (name == "DGpMalAbKcapEGbar") return with_field(VarietyTag::DGpMalAbKcapEGbarP);
  throw ParseError("unknown variety '" + text + "'");
}

std::string VarietyId::str() const {
  std::string base;
  switch (tag) {
    case VarietyTag::Trivial: base = "Trivial"; break;
    case VarietyTag::Sl: base = "Sl"; break;
    case VarietyTag::Band: base = "Band"; break;
    case VarietyTag::Com: base = "Com"; break;
    case VarietyTag::Groups: base = "Groups"; break;
    case VarietyTag::Ab: base = "Ab"; break;
    case VarietyTag::Gp: base = "Gp"; break;
    case VarietyTag::AbK: base = "AbK"; break;
    case VarietyTag::DK: base = "DK"; break;
    case VarietyTag::SlJoinAbK: base = "SlJoinAbK"; break;
    case VarietyTag::DS: base = "DS"; break;
    case VarietyTag::DA: base = "DA"; break;
    case VarietyTag::DO: base = "DO"; break;
    case VarietyTag::DOcapAbBar: base = "DOcapAbBar"; break;
    case VarietyTag::LGK: base = "LGK"; break;
    case VarietyTag::LI: base = "LI"; break;
    case VarietyTag::EGbarP: base = "EGbar"; break;
    case VarietyTag::A: base = "A"; break;
    case VarietyTag::DGbarP: base = "DGbar"; break;
    case VarietyTag::DGpMalAbKcapEGbarP: base = "DGpMalAbKcapEGbar"; break;
  }
  if (field) return base + "@" + field->str();
  if (prime) return base + "@" + std::to_string(*prime);
  return base;
}

}  // namespace fsemi
