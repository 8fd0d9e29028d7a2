#include "fsemi/field.hpp"

#include <algorithm>
#include <numeric>

namespace fsemi {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

unsigned prime_power_base(unsigned n) {
  if (n < 2) return 0;
  for (unsigned p = 2; p <= n; ++p) {
    if (!is_prime(p)) continue;
    if (n % p) continue;
    unsigned m = n;
    while (m % p == 0) m /= p;
    return m == 1 ? p : 0;
  }
  return 0;
}

FieldSpec FieldSpec::Fq(unsigned q) {
  unsigned p = prime_power_base(q);
  if (p == 0) throw ParseError("F" + std::to_string(q) + ": q must be a prime power");
  FieldSpec f(Kind::Fq, p, q);
  return f;
}

FieldSpec FieldSpec::Fbar(unsigned p) {
  if (!is_prime(p)) throw ParseError("Fbar" + std::to_string(p) + ": p must be prime");
  return FieldSpec(Kind::FbarP, p, 0);
}

FieldSpec FieldSpec::custom(unsigned characteristic, std::vector<unsigned> split_exponents) {
  if (characteristic != 0 && !is_prime(characteristic))
    throw ParseError("custom field characteristic must be 0 or prime");
  std::sort(split_exponents.begin(), split_exponents.end());
  split_exponents.erase(std::unique(split_exponents.begin(), split_exponents.end()),
                        split_exponents.end());
  if (split_exponents.empty() || split_exponents.front() != 1)
    throw ParseError("custom split set must contain 1");
  for (unsigned e : split_exponents) {
    if (e == 0) throw ParseError("custom split exponents must be positive");
    if (characteristic != 0 && e % characteristic == 0)
      throw ParseError("x^e-1 cannot split when char divides e");
    for (unsigned d = 1; d <= e; ++d)
      if (e % d == 0 &&
          !std::binary_search(split_exponents.begin(), split_exponents.end(), d))
        throw ParseError("custom split set is not divisor-closed");
  }
  for (unsigned a : split_exponents)
    for (unsigned b : split_exponents) {
      unsigned l = std::lcm(a, b);
      if (!std::binary_search(split_exponents.begin(), split_exponents.end(), l))
        throw ParseError("custom split set is not lcm-closed");
    }
  FieldSpec f(Kind::Custom, characteristic, 0);
  f.split_exponents_ = std::move(split_exponents);
  return f;
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "Q") return Q();
  if (text == "R") return R();
  if (text == "C") return C();
  auto number_after = [&](std::size_t prefix) -> unsigned {
    if (text.size() <= prefix) throw ParseError("field spec '" + text + "': missing number");
    unsigned v = 0;
    for (std::size_t i = prefix; i < text.size(); ++i) {
      if (!isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("field spec '" + text + "': bad number");
      v = v * 10 + static_cast<unsigned>(text[i] - '0');
    }
    return v;
  };
  if (text.rfind("Fbar", 0) == 0) return Fbar(number_after(4));
  if (text.rfind("F", 0) == 0) return Fq(number_after(1));
  throw ParseError("unrecognized field spec '" + text + "'");
}

bool FieldSpec::splits(unsigned e) const {
  if (e == 0) return false;
  switch (kind_) {
    case Kind::Q:
    case Kind::R:
      return e <= 2;
    case Kind::C:
      return true;
    case Kind::Fq:
      return (q_ - 1) % e == 0;
    case Kind::FbarP:
      return std::gcd(e, char_) == 1;
    case Kind::Custom:
      return std::binary_search(split_exponents_.begin(), split_exponents_.end(), e);
  }
  return false;
}

std::string FieldSpec::str() const {
  switch (kind_) {
    case Kind::Q: return "Q";
    case Kind::R: return "R";
    case Kind::C: return "C";
    case Kind::Fq: return "F" + std::to_string(q_);
    case Kind::FbarP: return "Fbar" + std::to_string(char_);
    case Kind::Custom: return "Custom(char " + std::to_string(char_) + ")";
  }
  return "?";
}

}  // namespace fsemi
