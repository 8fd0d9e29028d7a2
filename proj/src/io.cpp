#include "fsemi/io.hpp"

#include <fstream>

namespace fsemi {

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

FiniteSemigroup semigroup_from_json(const Json& j) {
  try {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "table") {
      int order = j.at("order").get<int>();
      auto table = j.at("table").get<std::vector<std::vector<int>>>();
      std::optional<int> identity;
      if (j.contains("identity") && !j.at("identity").is_null())
        identity = j.at("identity").get<int>();
      return FiniteSemigroup::from_cayley_table(order, std::move(table), identity);
    }
    if (kind == "transformations") {
      int degree = j.at("degree").get<int>();
      std::vector<std::vector<int>> gens;
      std::vector<std::string> labels;
      for (const auto& [label, map] : j.at("generators").items()) {
        labels.push_back(label);
        gens.push_back(map.get<std::vector<int>>());
      }
      bool with_identity = j.value("with_identity", false);
      return FiniteSemigroup::from_transformations(degree, gens, labels, 100000,
                                                   with_identity);
    }
    throw ParseError("unknown semigroup kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("semigroup json: ") + e.what());
  }
}

Json semigroup_to_json(const FiniteSemigroup& s) {
  Json j;
  j["kind"] = "table";
  j["order"] = s.order();
  j["table"] = s.table();
  if (s.identity()) j["identity"] = *s.identity();
  return j;
}

Dfa dfa_from_json(const Json& j) {
  try {
    Dfa d;
    d.state_count = j.at("states").get<int>();
    d.alphabet = j.at("alphabet").get<std::vector<std::string>>();
    for (const auto& letter : d.alphabet) {
      const auto& col = j.at("delta").at(letter);
      d.delta.push_back(col.get<std::vector<int>>());
    }
    d.start = j.at("start").get<int>();
    d.finals = j.at("finals").get<std::vector<int>>();
    std::sort(d.finals.begin(), d.finals.end());
    d.validate();
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("dfa json: ") + e.what());
  }
}

Json dfa_to_json(const Dfa& d) {
  Json j;
  j["states"] = d.state_count;
  j["alphabet"] = d.alphabet;
  Json delta = Json::object();
  for (int a = 0; a < d.letters(); ++a) delta[d.alphabet[a]] = d.delta[a];
  j["delta"] = std::move(delta);
  j["start"] = d.start;
  j["finals"] = d.finals;
  return j;
}

MarkedProductSpec marked_product_from_json(const Json& j) {
  try {
    MarkedProductSpec spec;
    for (const auto& f : j.at("factors")) spec.factors.push_back(dfa_from_json(f));
    if (spec.factors.empty()) throw ParseError("marked product needs factors");
    spec.alphabet = spec.factors[0].alphabet;
    for (const auto& letter : j.at("letters")) {
      auto token = letter.get<std::string>();
      auto it = std::find(spec.alphabet.begin(), spec.alphabet.end(), token);
      if (it == spec.alphabet.end()) throw ParseError("marked letter '" + token + "' not in alphabet");
      spec.letters.push_back(static_cast<int>(it - spec.alphabet.begin()));
    }
    if (j.contains("counter") && !j.at("counter").is_null())
      spec.counter = {j.at("counter").at("r").get<int>(), j.at("counter").at("p").get<int>()};
    std::string mode = j.value("mode", "plain");
    if (mode == "plain") spec.mode = MarkedProductSpec::Mode::Plain;
    else if (mode == "counter") spec.mode = MarkedProductSpec::Mode::Counter;
    else if (mode == "unambiguous") spec.mode = MarkedProductSpec::Mode::Unambiguous;
    else throw ParseError("unknown marked product mode '" + mode + "'");
    spec.validate();
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("marked product json: ") + e.what());
  }
}

Json congruence_to_json(const Congruence& c) {
  Json j;
  j["classes"] = c.partition.classes();
  return j;
}

Json matrix_to_json(const Mat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) {
      if (m.field()->rational())
        row.push_back(ops::str(m.field(), m.at(i, j)));
      else
        row.push_back(m.at(i, j).ff);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<int> parse_word(const std::string& text,
                            const std::vector<std::string>& alphabet) {
  std::vector<std::string> tokens;
  if (text.find(',') != std::string::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string::npos) next = text.size();
      if (next > pos) tokens.push_back(text.substr(pos, next - pos));
      pos = next + 1;
    }
  } else {
    for (char c : text) tokens.emplace_back(1, c);
  }
  std::vector<int> word;
  for (const auto& t : tokens) {
    auto it = std::find(alphabet.begin(), alphabet.end(), t);
    if (it == alphabet.end()) throw ParseError("letter '" + t + "' not in alphabet");
    word.push_back(static_cast<int>(it - alphabet.begin()));
  }
  return word;
}

std::string word_to_string(const std::vector<int>& word,
                           const std::vector<std::string>& alphabet) {
  bool single = true;
  for (const auto& t : alphabet)
    if (t.size() != 1) single = false;
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!single && i) out += ',';
    out += alphabet[word[i]];
  }
  return out;
}

}  // namespace fsemi
