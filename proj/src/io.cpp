#include "monideal/io.hpp"

#include <ostream>
#include <sstream>

#include <json.hpp>

#include "monideal/errors.hpp"

namespace monideal {

std::string to_document(const MonomialIdeal& ideal) {
  std::ostringstream os;
  os << "{\n  \"nvars\": " << ideal.nvars() << ",\n  \"gens\": [";
  const auto& gens = ideal.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    os << (i ? ",\n" : "\n") << "    [";
    auto e = gens[i].exponents();
    for (std::size_t j = 0; j < e.size(); ++j) os << (j ? ", " : "") << e[j];
    os << ']';
  }
  os << (gens.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return os.str();
}

MonomialIdeal parse_document(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ArgumentError(std::string("ideal document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("nvars") || !doc.contains("gens"))
    throw ArgumentError("ideal document needs fields 'nvars' and 'gens'");
  if (!doc["nvars"].is_number_integer() || doc["nvars"].get<std::int64_t>() < 1)
    throw ArgumentError("'nvars' must be a positive integer");
  const auto nvars = doc["nvars"].get<std::size_t>();
  if (!doc["gens"].is_array()) throw ArgumentError("'gens' must be a list of exponent lists");

  std::vector<Monomial> gens;
  for (const auto& g : doc["gens"]) {
    if (!g.is_array()) throw ArgumentError("each generator must be a list of integers");
    std::vector<Exponent> e;
    for (const auto& x : g) {
      if (!x.is_number_integer()) throw ArgumentError("exponents must be integers");
      e.push_back(x.get<Exponent>());
    }
    if (e.size() != nvars)
      throw DimensionError("generator has " + std::to_string(e.size()) + " exponents, expected " +
                           std::to_string(nvars));
    gens.emplace_back(std::move(e));
  }
  return minimalize(std::move(gens), nvars);
}

void write_csv(std::ostream& os, const MuSequence& seq) {
  os << "k,mu,source\n";
  for (const auto& e : seq.entries()) os << e.k << ',' << e.mu.str() << ',' << to_string(e.source) << '\n';
}

std::string to_csv(const MuSequence& seq) {
  std::ostringstream os;
  write_csv(os, seq);
  return os.str();
}

MuSequence parse_csv(const std::string& text, std::string params) {
  std::istringstream is(text);
  std::string line;
  std::vector<MuEntry> entries;
  bool header = true;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      header = false;
      if (line != "k,mu,source") throw ArgumentError("CSV header must be 'k,mu,source'");
      continue;
    }
    std::istringstream ls(line);
    std::string k, mu, source;
    if (!std::getline(ls, k, ',') || !std::getline(ls, mu, ',') || !std::getline(ls, source))
      throw ArgumentError("malformed CSV row at line " + std::to_string(lineno));
    try {
      entries.push_back({std::stoll(k), BigInt(mu), parse_source(source)});
    } catch (const std::exception&) {
      throw ArgumentError("malformed CSV row at line " + std::to_string(lineno));
    }
  }
  if (header) throw ArgumentError("empty CSV input");
  return MuSequence(std::move(params), std::move(entries));
}

}  // namespace monideal
