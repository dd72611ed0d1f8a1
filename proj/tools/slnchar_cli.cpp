#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <sstream>

#include "slnchar/almost.hpp"
#include "slnchar/errors.hpp"
#include "slnchar/fforacle.hpp"
#include "slnchar/gggr.hpp"
#include "slnchar/green.hpp"
#include "slnchar/lseries.hpp"
#include "slnchar/orbits.hpp"
#include "slnchar/serialize.hpp"
#include "slnchar/sheaves.hpp"
#include "slnchar/springer.hpp"
#include "slnchar/verify.hpp"

using namespace slnchar;

namespace {

constexpr int kUsage = 2, kCap = 3, kUniqueness = 4;

struct Opts {
  int n = 0, t = 1, d = 1, c = 0, c0 = 0, tau = 0, eps = 0, z = 0, twist = 0, sign = 1, central = 0;
  long long q = 0;
  int p = 0;
  std::string lambda, mu, mu_n, orbit, nu, zeta = "symbolic", format = "json", suite;
  std::uint64_t group_cap = fforacle::kDefaultCap;
  int partition_cap = 64;
};

Zeta parse_zeta(const std::string& s) {
  if (s == "symbolic") return Zeta::symbolic();
  try {
    return Zeta::explicit_value(std::stoi(s));
  } catch (const std::exception&) {
    throw InvalidArgument("--zeta must be 'symbolic' or an integer e with ζ = i^e");
  }
}

int infer_p(long long q) {
  for (long long p = 2; p * p <= q; ++p)
    if (q % p == 0) return static_cast<int>(p);
  return static_cast<int>(q);
}

void need(bool cond, const std::string& msg) {
  if (!cond) throw InvalidArgument(msg);
}

std::string csv_cell(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

// payload["rows"] as CSV, header from the first row's keys
std::string to_csv(const Json& payload) {
  need(payload.contains("rows") && payload["rows"].is_array(), "this command has no flat table for CSV output");
  std::ostringstream os;
  const auto& rows = payload["rows"];
  if (rows.empty()) return "";
  std::vector<std::string> keys;
  for (const auto& [k, v] : rows[0].items()) keys.push_back(k);
  for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << keys[i];
  os << '\n';
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << csv_cell(r.value(keys[i], Json()));
    os << '\n';
  }
  return os.str();
}

Json cmd_orbits(const Opts& o) {
  Partition mu = Partition::parse(o.mu);
  need(mu.size() <= o.partition_cap, "partition exceeds the partition-size cap");
  auto wd = orbits::weighted_dynkin(mu);
  auto dims = orbits::orbit_dims(mu);
  auto levi = orbits::levi_of_N(mu);
  Json out{{"mu", to_json(mu)},
           {"weighted_dynkin", Json{{"h", wd.h}, {"nu", wd.nu}}},
           {"dim_orbit", dims.dim_orbit},
           {"codim", dims.codim},
           {"dim_centralizer", dims.dim_centralizer},
           {"levi_blocks", levi.blocks},
           {"levi_center_dim", levi.dim_center}};
  if (o.p && o.q) {
    auto cg = orbits::component_groups(mu, o.p, o.q);
    out["n_prime"] = cg.n_prime;
    out["n_prime_mu"] = cg.n_prime_mu;
    out["A_u"] = to_json(cg.A_u);
    out["A_lambda"] = to_json(cg.A_lambda);
  }
  return out;
}

Json cmd_springer(const Opts& o) {
  need(o.n >= 1 && o.n <= o.partition_cap, "--n must be in [1, partition cap]");
  need(is_prime(o.p), "--p must be prime");
  Json blocks = Json::array(), rows = Json::array();
  for (const auto& b : springer::blocks(o.n, o.p)) {
    Json members = Json::array();
    const auto& mus = partitions_of(b.rank());
    auto ms = springer::block_members(b);
    for (std::size_t i = 0; i < ms.size(); ++i) {
      members.push_back(Json{{"mu_bar", to_json(mus[i])}, {"pair", to_json(ms[i])}});
      rows.push_back(Json{{"eps", b.eps}, {"d", b.d}, {"mu_bar", mus[i].str()}, {"orbit", ms[i].orbit.str()}, {"tau", ms[i].tau}});
    }
    blocks.push_back(Json{{"block", to_json(b)}, {"members", members}});
  }
  return Json{{"block_count", blocks.size()}, {"blocks", blocks}, {"rows", rows}};
}

Json cmd_green_kostka(const Opts& o) {
  Partition la = Partition::parse(o.lambda), mu = Partition::parse(o.mu);
  need(la.size() == mu.size(), "λ and μ must have the same size");
  need(la.size() <= o.partition_cap, "partition exceeds the partition-size cap");
  auto k = green::kostka(la, mu);
  Json rows = Json::array();
  for (std::size_t i = 0; i < k.size(); ++i) rows.push_back(Json{{"degree", i}, {"coeff", k[i]}});
  return Json{{"lambda", to_json(la)}, {"mu", to_json(mu)}, {"coefficients", k}, {"rows", rows}};
}

springer::Block block_from(const Opts& o) {
  need(o.n >= 1 && is_prime(o.p), "--n and a prime --p are required");
  return springer::block_of(o.n, o.p, o.eps);
}

Json cmd_green_omega(const Opts& o) {
  auto b = block_from(o);
  auto ms = springer::block_members(b);
  Json rows = Json::array();
  for (const auto& a : ms)
    for (const auto& c : ms)
      rows.push_back(Json{{"a", a.orbit.str() + "/" + std::to_string(a.tau)},
                          {"b", c.orbit.str() + "/" + std::to_string(c.tau)},
                          {"omega", green::omega(a, c, b).str()},
                          {"x_inner", green::x_inner(a, c, b).str()}});
  return Json{{"block", to_json(b)}, {"rows", rows}};
}

Json cmd_gggr_inner(const Opts& o) {
  auto b = block_from(o);
  need(o.q >= 2 && prime_power_exponent(o.q, o.p) > 0, "--q must be a power of --p");
  Partition muN = o.mu_n.empty() ? Partition({o.n}) : Partition::parse(o.mu_n);
  gggr::TwistContext ctx{o.q, o.c0, parse_zeta(o.zeta)};
  Json rows = Json::array();
  for (const auto& iota : springer::block_members(b)) {
    if (!o.orbit.empty() && !(iota.orbit == Partition::parse(o.orbit) && iota.tau == o.tau)) continue;
    auto v = gggr::gggr_x_inner(o.c, muN, iota, b, ctx);
    rows.push_back(Json{{"orbit", iota.orbit.str()}, {"tau", iota.tau}, {"zeta_power", v.zeta_power}, {"value", v.value.str()}});
  }
  return Json{{"block", to_json(b)}, {"mu_N", to_json(muN)}, {"c", o.c}, {"rows", rows}};
}

Json cmd_lseries_classes(const Opts& o) {
  Json rows = Json::array(), classes = Json::array();
  for (const auto& s : lseries::enumerate_semisimple_classes(o.n, o.q)) {
    Json orbitsj = Json::array();
    for (const auto& e : s.stable_orbits) {
      Json labels = Json::array();
      for (const auto& l : e.labels) labels.push_back(to_json(l));
      orbitsj.push_back(Json{{"labels", labels}, {"stabilizer_order", e.stabilizer_order}, {"a_E", e.a_E}});
    }
    classes.push_back(Json{{"eigenvalues", s.eigenvalues}, {"w_shape", to_json(s.w_shape)}, {"omega", to_json(s.omega)},
                           {"stable_orbits", orbitsj}});
    rows.push_back(Json{{"eigenvalues", s.eigenvalues}, {"w_shape", s.w_shape.str()}, {"omega_order", s.omega.order},
                        {"stable_orbits", s.stable_orbits.size()}});
  }
  return Json{{"class_count", classes.size()}, {"classes", classes}, {"rows", rows}};
}

Json cmd_almost_matrix(const Opts& o) {
  almost::Context ctx(o.t, o.q);
  auto m = almost::transform_matrix(ctx);
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows.size(); ++i)
    for (std::size_t j = 0; j < m.cols.size(); ++j)
      rows.push_back(Json{{"eps", m.rows[i].eps}, {"z", m.rows[i].z}, {"eps_bar", m.cols[j].eps}, {"z_bar", m.cols[j].z},
                          {"zeta_t_exponent", m.exponent[i][j]}});
  return Json{{"t", m.t}, {"g", m.g}, {"unitary", almost::is_unitary(m)}, {"rows", rows}};
}

Json cmd_sheaves_census(const Opts& o) {
  int p = o.p ? o.p : infer_p(o.q);
  auto c = sheaves::cuspidal_census(o.n, o.q, p);
  Json rows = Json::array();
  for (const auto& l : c.labels) rows.push_back(Json{{"z", l.z}, {"eps", l.eps}, {"local_system", l.local_system}});
  return Json{{"n_prime", c.n_prime}, {"count", c.count()}, {"rows", rows}};
}

Json cmd_sheaves_scalar(const Opts& o) {
  auto ctx = sheaves::endomorphism_data(o.n, o.t, o.d, o.q);
  Partition nu = o.nu.empty() ? Partition({ctx.b}) : Partition::parse(o.nu);
  auto loc = sheaves::locate_zE(ExtendedCharLabel{SnCharLabel(nu), ctx.k, o.twist}, ctx, o.z);
  int eps1 = sheaves::eps1_pullback(o.eps, ctx.d, loc.orbit, ctx.t);
  auto rec = sheaves::nu_scalar(ctx.t, eps1, o.c0, parse_zeta(o.zeta), loc.alpha_E,
                                Cyclotomic::root_of_unity(std::max(ctx.k, 1), o.central), o.sign);
  Json mult = Json::array();
  for (const auto& m : loc.multiplicity) mult.push_back(to_json(m));
  return Json{{"x_E", loc.x_E},
              {"z_E", loc.z_E},
              {"z_E_fixed", loc.z_E_fixed},
              {"orbit", to_json(loc.orbit)},
              {"rho", to_json(loc.rho)},
              {"multiplicities", mult},
              {"eps1", eps1},
              {"record", to_json(rec)}};
}

Json cmd_oracle_classes(const Opts& o) {
  auto c = fforacle::conjugacy_classes(o.n, static_cast<int>(o.q), o.group_cap);
  Json rows = Json::array();
  for (const auto& cl : c.classes) rows.push_back(Json{{"representative", cl.representative.a}, {"size", cl.size}, {"centralizer", cl.centralizer}});
  return Json{{"group_order", c.group_order}, {"class_count", c.classes.size()}, {"rows", rows}};
}

Json cmd_verify(const Opts& o) {
  Json params = Json::object();
  if (o.n) params["n"] = o.n;
  if (o.q) params["q"] = o.q;
  auto r = verify::run_suite(o.suite, params);
  Json out = r.detail.is_object() ? r.detail : Json{{"detail", r.detail}};
  out["suite"] = r.suite;
  out["pass"] = r.pass;
  out["checks"] = r.checks;
  out["failures"] = r.failures;
  return out;
}

Json config_echo(const std::string& cmd, const Opts& o) {
  return Json{{"command", cmd},     {"n", o.n},           {"q", o.q},
              {"p", o.p},           {"t", o.t},           {"d", o.d},
              {"zeta", o.zeta},     {"sign", o.sign},     {"format", o.format},
              {"caps", Json{{"group_order", o.group_cap}, {"partition_size", o.partition_cap}}},
              {"deterministic", true}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slnchar: exact combinatorics for characters of SL_n(F_q)"};
  app.require_subcommand(1);
  Opts o;
  app.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--group-cap", o.group_cap, "cap on enumerated group order");
  app.add_option("--partition-cap", o.partition_cap, "cap on partition size");
  std::string which;

  auto add_sub = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    auto* s = parent->add_subcommand(name, help);
    s->callback([&which, s] {
      std::string path = s->get_name();
      for (auto* p = s->get_parent(); p && p->get_parent(); p = p->get_parent()) path = p->get_name() + " " + path;
      which = path;
    });
    return s;
  };

  auto* orb = add_sub(&app, "orbits", "nilpotent orbit data");
  orb->add_option("--mu", o.mu, "partition")->required();
  orb->add_option("--p", o.p);
  orb->add_option("--q", o.q);

  auto* spr = add_sub(&app, "springer", "generalized Springer blocks");
  spr->add_option("--n", o.n)->required();
  spr->add_option("--p", o.p)->required();

  auto* green = app.add_subcommand("green", "Green functions");
  green->require_subcommand(1);
  auto* gk = add_sub(green, "kostka", "Kostka–Foulkes polynomial");
  gk->add_option("--lambda", o.lambda)->required();
  gk->add_option("--mu", o.mu)->required();
  auto* go = add_sub(green, "omega", "ω and ⟨X,X⟩ tables for one block");
  go->add_option("--n", o.n)->required();
  go->add_option("--p", o.p)->required();
  go->add_option("--eps", o.eps, "block index in Z/n′");

  auto* gg = app.add_subcommand("gggr", "generalized Gelfand–Graev pairings");
  gg->require_subcommand(1);
  auto* gi = add_sub(gg, "inner", "⟨Γ_c, X_ι⟩");
  gi->add_option("--n", o.n)->required();
  gi->add_option("--p", o.p)->required();
  gi->add_option("--q", o.q)->required();
  gi->add_option("--eps", o.eps);
  gi->add_option("--c", o.c);
  gi->add_option("--c0", o.c0);
  gi->add_option("--mu-n", o.mu_n);
  gi->add_option("--orbit", o.orbit);
  gi->add_option("--tau", o.tau);
  gi->add_option("--zeta", o.zeta);

  auto* ls = app.add_subcommand("lseries", "Lusztig series");
  ls->require_subcommand(1);
  auto* lc = add_sub(ls, "classes", "F-stable semisimple classes of PGL_n");
  lc->add_option("--n", o.n)->required();
  lc->add_option("--q", o.q)->required();
  auto* li = add_sub(ls, "irr-count", "number of irreducible characters");
  li->add_option("--n", o.n)->required();
  li->add_option("--q", o.q)->required();

  auto* al = app.add_subcommand("almost", "almost characters");
  al->require_subcommand(1);
  auto* am = add_sub(al, "matrix", "pairing matrix");
  am->add_option("--t", o.t)->required();
  am->add_option("--q", o.q)->required();

  auto* sh = app.add_subcommand("sheaves", "character sheaves");
  sh->require_subcommand(1);
  auto* sc = add_sub(sh, "census", "F-stable cuspidal character sheaves");
  sc->add_option("--n", o.n)->required();
  sc->add_option("--q", o.q)->required();
  sc->add_option("--p", o.p);
  auto* ss = add_sub(sh, "scalar", "z_E and ν_E");
  ss->add_option("--n", o.n)->required();
  ss->add_option("--t", o.t)->required();
  ss->add_option("--d", o.d)->required();
  ss->add_option("--q", o.q)->required();
  ss->add_option("--E", o.nu, "partition of n/t for E₂");
  ss->add_option("--twist", o.twist);
  ss->add_option("--z", o.z);
  ss->add_option("--eps", o.eps);
  ss->add_option("--c0", o.c0);
  ss->add_option("--zeta", o.zeta);
  ss->add_option("--sign", o.sign)->check(CLI::IsMember({-1, 1}));
  ss->add_option("--central", o.central, "exponent of ζ_{t/d} for the central factor");

  auto* ora = app.add_subcommand("oracle", "brute-force finite group oracle");
  ora->require_subcommand(1);
  auto* oc = add_sub(ora, "classes", "conjugacy classes of SL_n(F_q)");
  oc->add_option("--n", o.n)->required();
  oc->add_option("--q", o.q)->required();

  auto* ve = add_sub(&app, "verify", "run a verification suite");
  ve->add_option("--suite", o.suite)->required()->check(CLI::IsMember(verify::suite_names()));
  ve->add_option("--n", o.n);
  ve->add_option("--q", o.q);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    Json payload;
    if (which == "orbits") payload = cmd_orbits(o);
    else if (which == "springer") payload = cmd_springer(o);
    else if (which == "green kostka") payload = cmd_green_kostka(o);
    else if (which == "green omega") payload = cmd_green_omega(o);
    else if (which == "gggr inner") payload = cmd_gggr_inner(o);
    else if (which == "lseries classes") payload = cmd_lseries_classes(o);
    else if (which == "lseries irr-count") payload = Json{{"n", o.n}, {"q", o.q}, {"irr_count", lseries::irr_count(o.n, o.q)}};
    else if (which == "almost matrix") payload = cmd_almost_matrix(o);
    else if (which == "sheaves census") payload = cmd_sheaves_census(o);
    else if (which == "sheaves scalar") payload = cmd_sheaves_scalar(o);
    else if (which == "oracle classes") payload = cmd_oracle_classes(o);
    else if (which == "verify") payload = cmd_verify(o);
    else throw InvalidArgument("unknown command");

    if (o.format == "csv")
      std::cout << to_csv(payload);
    else
      std::cout << make_envelope(which, config_echo(which, o), payload).dump(2) << '\n';
    if (which == "verify" && !payload.value("pass", false)) return 1;
    return 0;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kCap;
  } catch (const UniquenessViolation& e) {
    std::cout << make_envelope(which, config_echo(which, o), Json{{"error", "uniqueness"}, {"diagnostic", e.what()}}).dump(2)
              << '\n';
    return kUniqueness;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
