#pragma once

#include <string>
#include <vector>

#include "fsemi/semigroup.hpp"

namespace fsemi {

/// All associative multiplication tables of order <= max_order (exhaustive;
/// not reduced by isomorphism).  max_order <= 3.
std::vector<FiniteSemigroup> exhaustive_corpus(int max_order);

struct NamedSemigroup {
  std::string name;
  FiniteSemigroup sg;
};

/// The curated test suite: named small semigroups exercising the structure
/// theory (semilattices, bands, zero semigroups, B2, T2, small groups).
std::vector<NamedSemigroup> curated_corpus();

/// Named groups used by the group-case checks.
std::vector<NamedSemigroup> curated_groups();

}  // namespace fsemi
