#include "fsemi/corpus.hpp"

#include "fsemi/errors.hpp"

namespace fsemi {

namespace {

bool associative(int n, const std::vector<std::vector<int>>& t) {
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
  return true;
}

FiniteSemigroup cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteSemigroup::from_cayley_table(n, std::move(t));
}

FiniteSemigroup b2() {
  // Elements 0..3 are the 2x2 matrix units E11, E12, E21, E22; 4 is zero.
  auto row = [](int e) { return e / 2; };
  auto col = [](int e) { return e % 2; };
  std::vector<std::vector<int>> t(5, std::vector<int>(5, 4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if (col(a) == row(b)) t[a][b] = 2 * row(a) + col(b);
  return FiniteSemigroup::from_cayley_table(5, std::move(t));
}

}  // namespace

std::vector<FiniteSemigroup> exhaustive_corpus(int max_order) {
  if (max_order > 3) throw CapExceeded(3, "exhaustive corpus of order " +
                                              std::to_string(max_order));
  std::vector<FiniteSemigroup> out;
  for (int n = 1; n <= max_order; ++n) {
    long long total = 1;
    for (int i = 0; i < n * n; ++i) total *= n;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (long long code = 0; code < total; ++code) {
      long long c = code;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          t[a][b] = static_cast<int>(c % n);
          c /= n;
        }
      if (associative(n, t)) out.push_back(FiniteSemigroup::from_cayley_table(n, t));
    }
  }
  return out;
}

std::vector<NamedSemigroup> curated_corpus() {
  std::vector<NamedSemigroup> out;
  out.push_back({"U1", FiniteSemigroup::from_cayley_table(2, {{0, 0}, {0, 1}})});
  out.push_back({"LZ2", FiniteSemigroup::from_cayley_table(2, {{0, 0}, {1, 1}})});
  out.push_back({"RZ2", FiniteSemigroup::from_cayley_table(2, {{0, 1}, {0, 1}})});
  out.push_back({"Null2", FiniteSemigroup::from_cayley_table(2, {{0, 0}, {0, 0}})});
  {
    // 2x2 rectangular band: (i,j)(k,l) = (i,l), element index 2i+j.
    std::vector<std::vector<int>> t(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) t[a][b] = (a / 2) * 2 + b % 2;
    out.push_back({"RectBand2x2", FiniteSemigroup::from_cayley_table(4, std::move(t))});
  }
  out.push_back({"B2", b2()});
  out.push_back({"B2_1", adjoin_identity(b2())});
  out.push_back({"T2", FiniteSemigroup::from_transformations(
                           2, {{0, 1}, {1, 0}, {0, 0}, {1, 1}},
                           {"id", "swap", "c0", "c1"})});
  out.push_back({"Z2", cyclic(2)});
  out.push_back({"Z3", cyclic(3)});
  out.push_back({"Z4", cyclic(4)});
  out.push_back({"Z6", cyclic(6)});
  out.push_back({"S3", FiniteSemigroup::from_transformations(
                           3, {{1, 0, 2}, {1, 2, 0}}, {"t", "c"}, 100000, true)});
  out.push_back({"MonogenicA3eqA2",
                 FiniteSemigroup::from_cayley_table(2, {{1, 1}, {1, 1}})});
  return out;
}

std::vector<NamedSemigroup> curated_groups() {
  std::vector<NamedSemigroup> out;
  out.push_back({"Z2", cyclic(2)});
  out.push_back({"Z3", cyclic(3)});
  out.push_back({"Z4", cyclic(4)});
  out.push_back({"Z6", cyclic(6)});
  out.push_back({"S3", FiniteSemigroup::from_transformations(
                           3, {{1, 0, 2}, {1, 2, 0}}, {"t", "c"}, 100000, true)});
  return out;
}

}  // namespace fsemi
