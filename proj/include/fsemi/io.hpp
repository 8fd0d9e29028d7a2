#pragma once

#include <string>

#include "json.hpp"

#include "fsemi/automata.hpp"
#include "fsemi/congruence.hpp"
#include "fsemi/linalg.hpp"
#include "fsemi/semigroup.hpp"

namespace fsemi {

using Json = nlohmann::ordered_json;

Json load_json_file(const std::string& path);

/// {"kind":"table","order":n,"table":[[...]],"identity":i?} or
/// {"kind":"transformations","degree":k,"generators":{"a":[...],...}}.
FiniteSemigroup semigroup_from_json(const Json& j);
Json semigroup_to_json(const FiniteSemigroup& s);

/// {"states":n,"alphabet":["a","b"],"delta":{"a":[...],...},"start":0,
///  "finals":[...]}; -1 in delta marks a missing transition.
Dfa dfa_from_json(const Json& j);
Json dfa_to_json(const Dfa& d);

/// {"factors":[dfa,...],"letters":["a",...],"counter":{"r":1,"p":2}?,
///  "mode":"counter"|"unambiguous"|"plain"}.
MarkedProductSpec marked_product_from_json(const Json& j);

/// {"classes":[[indices...],...]} with classes sorted by least element.
Json congruence_to_json(const Congruence& c);

/// Entries as "num/den" strings over Q, integer codes over GF(q).
Json matrix_to_json(const Mat& m);

/// A word over the alphabet: either one token per character, or
/// comma-separated tokens.
std::vector<int> parse_word(const std::string& text,
                            const std::vector<std::string>& alphabet);
std::string word_to_string(const std::vector<int>& word,
                           const std::vector<std::string>& alphabet);

}  // namespace fsemi
