#include "lfactor/report.hpp"

#include <sstream>

namespace lfac {

nlohmann::json report_json(const std::string& group, const std::string& rep, const TheoremReport& r) {
  nlohmann::json j;
  j["group"] = group;
  j["rep"] = rep;
  j["degree"] = r.degree;
  j["equal"] = r.equal;
  auto shifts = nlohmann::json::array();
  for (const auto& g : r.per_gamma) shifts.push_back(g.rho_pair.doubled());
  j["shift_exponents"] = shifts;
  auto factors = nlohmann::json::array();
  for (const auto& [c, m] : r.lhs.factors) factors.push_back({{"q2", c.q_exp.doubled()}, {"z", c.z}, {"mult", m}});
  j["factors"] = factors;
  return j;
}

std::string canonical_dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string recanonicalize(const std::string& text) { return canonical_dump(nlohmann::json::parse(text)); }

std::string roots_str(const RootDatum& d, const std::vector<int>& idx) {
  std::string s = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? " " : "") + format_vec(d.root(idx[i]).coords);
  return s + "}";
}

std::string text_report(const RootDatum& d, const std::string& group, const std::string& rep, const TheoremReport& r) {
  std::ostringstream os;
  os << "group   " << group << "  [" << d.label() << ", rank " << d.rank() << ", " << d.num_roots() << " roots]\n";
  os << "rep     " << rep << "\n";
  os << "degree  " << r.degree << "\n";
  os << "satake  L(s)^-1 = " << r.lhs.str() << "\n";
  os << "hecke   L(s)^-1 = " << r.rhs.str() << "\n";
  os << "equal   " << (r.equal ? "yes" : "NO") << "\n";
  for (const auto& g : r.per_gamma) {
    os << "\ngamma " << format_vec(g.gamma.coords) << "  mult " << g.multiplicity << "  cosets " << g.coset_count
       << "  shift <rho,gamma> = " << g.rho_pair.str() << "\n";
    os << "  K shape  plus " << roots_str(d, g.shape.plus) << "\n";
    os << "           zero " << roots_str(d, g.shape.zero) << "\n";
    os << "           minus (conductor 1) " << roots_str(d, g.shape.minus) << "\n";
  }
  os << "\nnote: dim V^K = #W/W_gamma is taken as the model's dimension axiom\n";
  return os.str();
}

}  // namespace lfac
