#include "slnchar/serialize.hpp"

#include "slnchar/errors.hpp"

namespace slnchar {

Json to_json(const Rational& r) { return r.get_str(); }

Rational rational_from_json(const Json& j) {
  Rational r;
  if (j.is_number_integer()) return to_rational(j.get<long long>());
  require(j.is_string() && r.set_str(j.get<std::string>(), 10) == 0, "malformed rational");
  r.canonicalize();
  return r;
}

Json to_json(const Partition& p) { return p.parts(); }

Partition partition_from_json(const Json& j) { return Partition(j.get<std::vector<int>>()); }

Json to_json(const Cyclotomic& c) {
  Json coeffs = Json::array();
  for (const auto& x : c.coeffs()) coeffs.push_back(to_json(x));
  return Json{{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  std::vector<Rational> c;
  for (const auto& x : j.at("coeffs")) c.push_back(rational_from_json(x));
  return Cyclotomic::from_powers(j.at("conductor").get<int>(), c);
}

Json to_json(const CycLaurent& c) {
  Json terms = Json::array();
  for (const auto& [k, v] : c.terms()) terms.push_back(Json{{"u", k}, {"c", to_json(v)}});
  return Json{{"terms", terms}};
}

CycLaurent laurent_from_json(const Json& j) {
  CycLaurent r;
  for (const auto& t : j.at("terms")) r += CycLaurent::u_power(t.at("u").get<int>(), cyclotomic_from_json(t.at("c")));
  return r;
}

Json to_json(const LaurentFraction& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

LaurentFraction fraction_from_json(const Json& j) {
  return LaurentFraction(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

Json to_json(const ZetaTerm& z) { return Json{{"zeta_power", z.zeta_power}, {"value", to_json(z.value)}}; }

ZetaTerm zeta_term_from_json(const Json& j) {
  return ZetaTerm{j.at("zeta_power").get<int>(), laurent_from_json(j.at("value"))};
}

Json to_json(const springer::PairLabel& p) { return Json{{"orbit", to_json(p.orbit)}, {"tau", p.tau}}; }

springer::PairLabel pair_label_from_json(const Json& j) {
  return springer::PairLabel{partition_from_json(j.at("orbit")), j.at("tau").get<int>()};
}

Json to_json(const springer::Block& b) {
  return Json{{"n", b.n}, {"p", b.p}, {"n_prime", b.n_prime}, {"d", b.d}, {"eps", b.eps}};
}

Json to_json(const orbits::CyclicF& c) {
  return Json{{"order", c.order}, {"multiplier", c.multiplier}, {"fixed_points", c.fixed_points()}};
}

Json to_json(const sheaves::ScalarRecord& r) {
  return Json{{"sign", r.sign},
              {"zeta_inv", to_json(r.zeta_inv)},
              {"eps_c0_inv", to_json(r.eps_c0_inv)},
              {"alpha_E", to_json(r.alpha_E)},
              {"central", to_json(r.central)},
              {"unit_modulus", r.unit_modulus()}};
}

Json provenance_notes() {
  return Json{{"springer_orientation", "trivial character of S_{n/d} corresponds to the regular orbit"},
              {"extension_model", "tensor-permutation extension of E2^{⊠k}, twist by ζ_k^{w·j} on γ^j"},
              {"zeta_default", "symbolic fourth root of unity"},
              {"sign_default", 1},
              {"u_convention", "u^2 = q"}};
}

Json make_envelope(const std::string& command, const Json& config, const Json& payload) {
  return Json{{"command", command},
              {"config", config},
              {"schema_version", kSchemaVersion},
              {"payload", payload},
              {"provenance", provenance_notes()}};
}

}  // namespace slnchar
