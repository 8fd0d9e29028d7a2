#pragma once

#include <stdexcept>
#include <string>

namespace fsemi {

// Base class for all domain errors raised by the library.  The CLI maps
// these to exit code 1 (domain refusal) as opposed to 2 (bad input).
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotAssociative : Error {
  int s, t, u;
  NotAssociative(int s_, int t_, int u_)
      : Error("table is not associative at (" + std::to_string(s_) + "," +
              std::to_string(t_) + "," + std::to_string(u_) + ")"),
        s(s_), t(t_), u(u_) {}
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

struct CapExceeded : Error {
  std::size_t cap;
  explicit CapExceeded(std::size_t cap_, const std::string& what_)
      : Error(what_ + " exceeds cap " + std::to_string(cap_)), cap(cap_) {}
};

struct NotIdempotent : Error {
  int element;
  explicit NotIdempotent(int e)
      : Error("element " + std::to_string(e) + " is not idempotent"), element(e) {}
};

struct NotRegular : Error {
  int j_class;
  explicit NotRegular(int j)
      : Error("J-class " + std::to_string(j) + " is not regular"), j_class(j) {}
};

struct NotNormal : Error {
  using Error::Error;
};

struct NotMorphism : Error {
  int s, t;
  NotMorphism(int s_, int t_)
      : Error("map is not a morphism at pair (" + std::to_string(s_) + "," +
              std::to_string(t_) + ")"),
        s(s_), t(t_) {}
};

struct NotSurjective : Error {
  int missed;
  explicit NotSurjective(int m)
      : Error("map misses element " + std::to_string(m) + " of the codomain"),
        missed(m) {}
};

struct NotTrim : Error {
  int state;
  explicit NotTrim(int q)
      : Error("automaton state " + std::to_string(q) + " is not useful"), state(q) {}
};

struct NotSynchronizing : Error {
  NotSynchronizing() : Error("automaton is not synchronizing") {}
};

// Raised by ds_sync_word when the transition monoid fails the DS test; the
// witness is a regular J-class that is not closed under multiplication.
struct NotInDS : Error {
  int witness_s, witness_t;
  NotInDS(int s_, int t_)
      : Error("transition monoid is not in DS: regular J-class not closed at "
              "product of elements " + std::to_string(s_) + " and " +
              std::to_string(t_)),
        witness_s(s_), witness_t(t_) {}
};

// Constructive triangularization refusal.  Carries the classification
// witness explaining which structural test failed.
struct Refusal : Error {
  std::string witness;
  explicit Refusal(const std::string& w) : Error("refused: " + w), witness(w) {}
};

struct MissingParameter : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace fsemi
