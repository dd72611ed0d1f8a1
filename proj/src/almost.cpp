#include "slnchar/almost.hpp"

#include <numeric>

#include "slnchar/errors.hpp"
#include "slnchar/orbits.hpp"
#include "slnchar/partition.hpp"

namespace slnchar::almost {

Context::Context(int t_, long long q_) : t(t_), q(q_) {
  require(t >= 1, "t must be positive");
  require(std::gcd(static_cast<long long>(t), q) == 1, "q must be prime to t");
  g_ = orbits::CyclicF(t, q).fixed_count();
}

std::vector<int> Context::fixed_points() const { return orbits::CyclicF(t, q).fixed_points(); }
std::vector<int> Context::stable_characters() const { return orbits::CyclicF(t, q).stable_characters(); }

namespace {
void check_m(const MLabel& x, const Context& ctx) {
  int s = ctx.t / ctx.g();
  require(x.eps >= 0 && x.eps < ctx.t && x.eps % s == 0, "ε is not an F-stable character");
  require(x.z >= 0 && x.z < ctx.t && x.z % s == 0, "z is not F-fixed");
}
void check_mbar(const MBarLabel& y, const Context& ctx) {
  require(y.eps >= 0 && y.eps < ctx.g() && y.z >= 0 && y.z < ctx.g(), "label out of range");
}
Rational inv_g(const Context& ctx) { return Rational(1, ctx.g()); }
}  // namespace

int pairing_exponent(const MLabel& x, const MBarLabel& y, const Context& ctx) {
  check_m(x, ctx);
  check_mbar(y, ctx);
  // ε(z′) = ζ_t^{ε z′}; ε′(z) = ζ_g^{ε′ z/(t/g)} = ζ_t^{ε′ z}
  return static_cast<int>(mod_floor(static_cast<long long>(x.eps) * y.z + static_cast<long long>(y.eps) * x.z, ctx.t));
}

Cyclotomic pairing(const MLabel& x, const MBarLabel& y, const Context& ctx) {
  return Cyclotomic::root_of_unity(ctx.t, pairing_exponent(x, y, ctx)) * Cyclotomic(inv_g(ctx));
}

Cyclotomic TransformMatrix::entry(std::size_t i, std::size_t j) const {
  return Cyclotomic::root_of_unity(t, exponent[i][j]) * Cyclotomic(Rational(1, g));
}

TransformMatrix transform_matrix(const Context& ctx) {
  TransformMatrix m;
  m.t = ctx.t;
  m.g = ctx.g();
  for (int e : ctx.stable_characters())
    for (int z : ctx.fixed_points()) m.rows.push_back({e, z});
  for (int e = 0; e < m.g; ++e)
    for (int z = 0; z < m.g; ++z) m.cols.push_back({e, z});
  for (const auto& x : m.rows) {
    std::vector<int> row;
    for (const auto& y : m.cols) row.push_back(pairing_exponent(x, y, ctx));
    m.exponent.push_back(std::move(row));
  }
  return m;
}

namespace {
// Σ c_k ζ_t^k reduced mod Φ_t, integer arithmetic
std::vector<long long> reduce_mod_phi(std::vector<long long> c, int t) {
  const auto& phi = cyclotomic_polynomial(t);
  int deg = static_cast<int>(phi.size()) - 1;
  for (int k = static_cast<int>(c.size()) - 1; k >= deg; --k) {
    long long a = c[k];
    if (!a) continue;
    for (int j = 0; j <= deg; ++j) c[k - deg + j] -= a * phi[j];
  }
  c.resize(deg);
  return c;
}
}  // namespace

bool is_unitary(const TransformMatrix& m) {
  if (m.rows.size() != m.cols.size()) return false;
  std::size_t N = m.rows.size();
  std::vector<long long> count(m.t);
  long long g2 = static_cast<long long>(m.g) * m.g;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k) {
      std::fill(count.begin(), count.end(), 0);
      for (std::size_t j = 0; j < N; ++j) ++count[mod_floor(m.exponent[i][j] - m.exponent[k][j], m.t)];
      auto r = reduce_mod_phi(count, m.t);
      for (std::size_t e = 0; e < r.size(); ++e)
        if (r[e] != (e == 0 && i == k ? g2 : 0)) return false;
    }
  return true;
}

bool rows_normalized(const TransformMatrix& m) {
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < m.cols.size(); ++j) s += Rational(1, static_cast<long>(m.g) * m.g);
    if (s != 1) return false;
  }
  return true;
}

Cyclotomic gggr_vs_almost_inner(int c, int xi, int z, int eps, const Context& ctx, bool theta_match) {
  check_m(MLabel{eps, z}, ctx);
  check_mbar(MBarLabel{xi, c}, ctx);
  if (!theta_match) return Cyclotomic(0);
  long long e = static_cast<long long>(eps) * c + static_cast<long long>(xi) * z;
  return Cyclotomic::root_of_unity(ctx.t, e) * Cyclotomic(inv_g(ctx));
}

ZetaTerm cuspidal_charfun_inner(int c, int xi, int z, int eps, const Context& ctx, const Zeta& zeta, int c0,
                                const Cyclotomic& central, bool theta_match) {
  check_m(MLabel{eps, z}, ctx);
  check_mbar(MBarLabel{xi, c}, ctx);
  if (!theta_match) return ZetaTerm{0, CycLaurent()};
  long long e = static_cast<long long>(xi) * z - static_cast<long long>(eps) * (c + c0);
  Cyclotomic v = Cyclotomic::root_of_unity(ctx.t, e) * central * Cyclotomic(inv_g(ctx));
  return zeta.apply(-1, CycLaurent(v.normalized()));
}

ScalarExtraction extract_cuspidal_scalar(int z, int eps, const Context& ctx, const Zeta& zeta, int c0,
                                         const Cyclotomic& central) {
  int g = ctx.g();
  // a_{c,ξ} = Σ_{(z′,ε′)} B[(c,ξ),(z′,ε′)] v_{z′,ε′};  B unitary, so v = B* a
  std::vector<std::pair<int, int>> gam;
  for (int c = 0; c < g; ++c)
    for (int xi = 0; xi < g; ++xi) gam.emplace_back(c, xi);
  std::vector<ZetaTerm> a;
  for (auto [c, xi] : gam) a.push_back(cuspidal_charfun_inner(c, xi, z, eps, ctx, zeta, c0, central));
  int zp = a.front().zeta_power;
  for (const auto& v : a) require(v.zeta_power == zp, "mixed ζ powers");
  ScalarExtraction out;
  int nonzero = 0;
  for (int z2 : ctx.fixed_points())
    for (int e2 : ctx.stable_characters()) {
      CycLaurent v;
      for (std::size_t r = 0; r < gam.size(); ++r)
        v += a[r].value * CycLaurent(gggr_vs_almost_inner(gam[r].first, gam[r].second, z2, e2, ctx).conj());
      if (v.is_zero()) continue;
      ++nonzero;
      out.scalar = ZetaTerm{zp, v};
      out.support_z = z2;
      out.support_eps = e2;
    }
  out.single_support = nonzero == 1;
  if (out.single_support) {
    out.row_independent = true;
    for (std::size_t r = 0; r < gam.size(); ++r) {
      Cyclotomic b = gggr_vs_almost_inner(gam[r].first, gam[r].second, out.support_z, out.support_eps, ctx);
      if (a[r].value != out.scalar.value * CycLaurent(b)) out.row_independent = false;
    }
  }
  return out;
}

}  // namespace slnchar::almost
