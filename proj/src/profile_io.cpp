#include "z2ring/profile_io.hpp"

#include <fstream>

#include "z2ring/errors.hpp"

namespace z2ring {

using nlohmann::json;

CohomProfile profile_from_json(const json& doc) {
  try {
    if (!doc.is_object()) throw ParseError("profile document must be a JSON object");
    for (const char* key : {"n", "r", "betti", "filtration"}) {
      if (!doc.contains(key)) throw ParseError(std::string("profile is missing \"") + key + "\"");
    }
    const auto n = doc.at("n").get<long long>();
    const auto r = doc.at("r").get<long long>();
    if (n < 1 || r < 1) throw ParseError("n and r must be positive integers");
    CohomProfile p;
    p.n = static_cast<std::size_t>(n);
    p.r = static_cast<std::size_t>(r);
    for (const auto& b : doc.at("betti")) {
      const auto value = b.get<long long>();
      if (value < 0) throw ParseError("betti numbers must be nonnegative");
      p.betti.push_back(static_cast<std::size_t>(value));
    }
    const std::size_t len = p.ambient_len();
    for (const auto& space : doc.at("filtration")) {
      std::vector<Gf2Vector> gens;
      for (const auto& row : space) {
        Gf2Vector v = Gf2Vector::from_string(row.get<std::string>());
        if (v.size() != len) {
          throw ParseError("filtration row \"" + v.to_string() + "\" does not have length 2r = " + std::to_string(len));
        }
        gens.push_back(std::move(v));
      }
      p.filtration.push_back(Subspace::span(len, gens));
    }
    return p;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed profile JSON: ") + e.what());
  }
}

json profile_to_json(const CohomProfile& p) {
  json filtration = json::array();
  for (const auto& space : p.filtration) filtration.push_back(space.canonical_rows());
  return json{{"n", p.n}, {"r", p.r}, {"betti", p.betti}, {"filtration", filtration}};
}

CohomProfile load_profile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open profile file " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return profile_from_json(doc);
}

}  // namespace z2ring
