#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fsemi/linalg.hpp"
#include "fsemi/semigroup.hpp"

namespace fsemi {

/// Deterministic automaton.  delta[letter][state] is the target state or -1
/// for a missing transition (a trimmed automaton may be partial; the missing
/// edges go to an implicit dead sink).
struct Dfa {
  int state_count = 0;
  std::vector<std::string> alphabet;
  std::vector<std::vector<int>> delta;  // per letter
  int start = 0;
  std::vector<int> finals;

  int letters() const { return static_cast<int>(alphabet.size()); }
  bool is_total() const;
  bool is_final(int q) const;
  /// Runs from state q; returns -1 when the run dies.
  int run(int q, const std::vector<int>& word, std::size_t from = 0,
          std::size_t to = std::string::npos) const;
  bool accepts(const std::vector<int>& word) const;

  void validate() const;
};

/// Useful states only (reachable and co-reachable); may be partial.
Dfa trim(const Dfa& dfa);
bool is_trim(const Dfa& dfa);
/// Totalizes by adding a dead sink when needed.
Dfa completed(const Dfa& dfa);
/// Minimal complete automaton of the same language.
Dfa minimize(const Dfa& dfa);

struct TransitionMonoid {
  FiniteSemigroup monoid;
  std::vector<int> letter_images;  // letter -> monoid element
};

/// Monoid generated by the letter actions (identity included), with
/// gen_words in breadth-first order.  Requires a total automaton.
TransitionMonoid transition_monoid(const Dfa& dfa, std::size_t cap = 100000);

FiniteSemigroup syntactic_monoid(const Dfa& dfa, std::size_t cap = 100000);

bool is_synchronizing(const Dfa& dfa);
/// Shortest synchronizing word by breadth-first search over state subsets;
/// state_count <= 16.
std::vector<int> shortest_sync_word(const Dfa& dfa);

/// Synchronizing word construction for transition monoids in DS: length at
/// most (n-1)^2, built from a letter-per-diagonal-block word u repeated
/// until constant.
struct DsSyncResult {
  std::vector<int> word;
  std::vector<int> base_word;  // u
  int power = 0;               // word = u^power
  int block_count = 0;         // r
};
DsSyncResult ds_sync_word(const Dfa& dfa, std::size_t cap = 100000);

struct MarkedProductSpec {
  enum class Mode { Plain, Counter, Unambiguous };

  std::vector<std::string> alphabet;
  std::vector<Dfa> factors;      // L_0 ... L_m over the common alphabet
  std::vector<int> letters;      // marked letters a_1 ... a_m (alphabet indices)
  std::optional<std::pair<int, int>> counter;  // (r, p), 0 <= r < p
  Mode mode = Mode::Plain;

  void validate() const;
};

/// Letter matrices of the glued automaton over F_p, with the membership
/// data: w is in the language iff sum over final states f of M(w)[start][f]
/// equals r mod p.
struct CounterMatrices {
  unsigned p = 2;
  int r = 0;
  int state_count = 0;
  int start = 0;
  std::vector<int> finals;
  std::vector<Mat> letter_matrices;  // over GF(p)

  Mat word_matrix(const std::vector<int>& word) const;
  /// Factorization count mod p.
  unsigned count_mod_p(const std::vector<int>& word) const;
  bool member(const std::vector<int>& word) const;
};

CounterMatrices counter_matrix(const MarkedProductSpec& spec);

/// Exact number of factorizations w = u_0 a_1 u_1 ... a_m u_m with each
/// u_i in L_i, by direct enumeration of the marked positions.
long long count_factorizations(const MarkedProductSpec& spec,
                               const std::vector<int>& word);

struct UnambiguityResult {
  bool unambiguous = false;
  std::vector<int> witness;  // a word with >= 2 factorizations when ambiguous
};

/// Closure of the glued counting matrices with entries saturated at 2; the
/// product is unambiguous iff no closure element witnesses a double path.
UnambiguityResult is_unambiguous(const MarkedProductSpec& spec,
                                 std::size_t cap = 200000);

}  // namespace fsemi
