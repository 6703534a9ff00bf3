#include "sparsefac/factor_list.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace sparsefac {

void FactorList::canonicalize() {
  std::vector<Factor> merged;
  for (auto& f : factors) {
    auto [lc, monic] = normalize_canonical(f.poly);
    scalar *= rational_pow(lc, f.multiplicity);
    auto it = std::find_if(merged.begin(), merged.end(), [&](const Factor& g) { return g.poly == monic; });
    if (it != merged.end()) it->multiplicity += f.multiplicity;
    else merged.push_back({std::move(monic), f.multiplicity});
  }
  std::sort(merged.begin(), merged.end(), [](const Factor& a, const Factor& b) {
    if (a.poly == b.poly) return a.multiplicity < b.multiplicity;
    return canonical_less(a.poly, b.poly);
  });
  factors = std::move(merged);
}

SparsePoly FactorList::expand(std::size_t nvars) const {
  SparsePoly out = SparsePoly::constant(nvars, scalar);
  for (const auto& f : factors) out = out * pow(f.poly, f.multiplicity);
  return out;
}

std::string FactorList::to_json(const VarNames& names) const {
  nlohmann::ordered_json j;
  j["scalar"] = to_string(scalar);
  j["factors"] = nlohmann::ordered_json::array();
  for (const auto& f : factors) {
    nlohmann::ordered_json e;
    e["poly"] = render(f.poly, names);
    e["multiplicity"] = f.multiplicity;
    j["factors"].push_back(e);
  }
  return j.dump();
}

std::string FactorList::to_text(const VarNames& names) const {
  std::ostringstream out;
  out << "scalar " << to_string(scalar) << "\n";
  for (const auto& f : factors) out << "(" << render(f.poly, names) << ")^" << f.multiplicity << "\n";
  return out.str();
}

bool same_factors(const FactorList& a, const FactorList& b) {
  if (a.factors.size() != b.factors.size()) return false;
  for (std::size_t i = 0; i < a.factors.size(); ++i)
    if (!(a.factors[i].poly == b.factors[i].poly) || a.factors[i].multiplicity != b.factors[i].multiplicity)
      return false;
  return true;
}

}  // namespace sparsefac
