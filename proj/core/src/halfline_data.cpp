#include "kehl/halfline_data.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

#include "kehl/quad.hpp"

namespace kehl {

static void check_grid(const std::vector<double>& g, const char* name) {
  if (g.empty()) throw ConfigError(std::string(name) + ": empty grid");
  if (std::abs(g.front()) > 1e-14)
    throw ConfigError(std::string(name) + ": grid must start at 0");
  for (size_t i = 1; i < g.size(); ++i)
    if (g[i] <= g[i - 1])
      throw ConfigError(std::string(name) + ": grid not strictly increasing");
}

void HalfLineData::validate(double corner_tol) const {
  check_grid(x_samples, "x_samples");
  check_grid(t_samples, "t_samples");
  if (u0.size() != x_samples.size())
    throw ConfigError("u0/x_samples length mismatch");
  if (g0.size() != t_samples.size() || g1.size() != t_samples.size())
    throw ConfigError("g0/g1/t_samples length mismatch");
  if (beta == 0.0) throw ConfigError("beta must be nonzero");
  if (decay_floor <= 0.0) throw ConfigError("decay_floor must be positive");

  double tail = 0.0;
  size_t n = u0.size();
  for (size_t i = n - std::min<size_t>(n, 3); i < n; ++i)
    tail = std::max(tail, std::abs(u0[i]));
  if (tail > decay_floor)
    throw InvariantViolation("u0 does not decay below decay_floor before the "
                             "last x sample (tail " + std::to_string(tail) +
                             ")");

  double scale = 0.0;
  for (auto& u : u0) scale = std::max(scale, std::abs(u));
  scale = std::max(scale, 1e-30);
  if (std::abs(g0[0] - u0[0]) > corner_tol * scale)
    throw InvariantViolation("corner compatibility g0(0) = u0(0) violated");
  if (x_samples.size() >= 5) {
    cplx du = u0_prime_at_zero();
    double dscale = std::max(std::abs(du), scale);
    if (std::abs(g1[0] - du) > corner_tol * dscale)
      throw InvariantViolation("corner compatibility g1(0) = u0'(0) violated");
  }
}

cplx HalfLineData::u0_prime_at_zero() const {
  std::vector<double> xs(x_samples.begin(), x_samples.begin() + 5);
  auto w = fornberg_weights(0.0, xs, 1);
  cplx d = 0;
  for (int i = 0; i < 5; ++i) d += w[i] * u0[i];
  return d;
}

static size_t trunc_index(const std::vector<double>& mag, double floor) {
  size_t last = 0;
  for (size_t i = 0; i < mag.size(); ++i)
    if (mag[i] >= floor) last = i;
  return std::min(last + 2, mag.size() - 1);
}

size_t HalfLineData::truncation_index_x() const {
  std::vector<double> m(u0.size());
  for (size_t i = 0; i < u0.size(); ++i) m[i] = std::abs(u0[i]);
  return trunc_index(m, decay_floor);
}

size_t HalfLineData::truncation_index_t() const {
  std::vector<double> m(g0.size());
  for (size_t i = 0; i < g0.size(); ++i)
    m[i] = std::max(std::abs(g0[i]), std::abs(g1[i]));
  return trunc_index(m, decay_floor);
}

double HalfLineData::trace_tail_magnitude() const {
  return std::max(std::abs(g0.back()), std::abs(g1.back()));
}

double delta2_value(double beta, cplx g0, cplx g1) {
  double a2 = std::norm(g0);
  // -i beta (g1 conj(g0) - g0 conj(g1)) = 2 beta Im(g1 conj(g0))
  return 4.0 * beta * beta * a2 * a2 +
         2.0 * beta * std::imag(g1 * std::conj(g0));
}

GaugePhase make_gauge_phase(const HalfLineData& data) {
  GaugePhase p;
  std::vector<double> u2(data.u0.size());
  for (size_t i = 0; i < data.u0.size(); ++i) u2[i] = std::norm(data.u0[i]);
  p.x_phase = cumtrapz(data.x_samples, u2);
  std::vector<double> d2(data.g0.size());
  for (size_t i = 0; i < data.g0.size(); ++i)
    d2[i] = delta2_value(data.beta, data.g0[i], data.g1[i]);
  p.t_phase = cumsimpson(data.t_samples, d2);
  return p;
}

U1Matrix assemble_u1(const HalfLineData& data, const GaugePhase& phase) {
  if (phase.x_phase.size() != data.u0.size())
    throw ConfigError("assemble_u1: phase/u0 length mismatch");
  U1Matrix m;
  m.v.resize(data.u0.size());
  for (size_t i = 0; i < data.u0.size(); ++i)
    m.v[i] = data.u0[i] * std::exp(2.0 * data.beta * iu * phase.x_phase[i]);
  return m;
}

using nlohmann::json;

static std::vector<cplx> zip_cplx(const json& re, const json& im) {
  std::vector<cplx> out(re.size());
  for (size_t i = 0; i < re.size(); ++i)
    out[i] = cplx(re[i].get<double>(), im[i].get<double>());
  return out;
}

HalfLineData load_profile_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open profile: " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError("profile parse error: " + std::string(e.what()));
  }
  HalfLineData d;
  try {
    d.beta = j.at("beta").get<double>();
    d.x_samples = j.at("x_samples").get<std::vector<double>>();
    d.u0 = zip_cplx(j.at("u0_re"), j.at("u0_im"));
    d.t_samples = j.at("t_samples").get<std::vector<double>>();
    d.g0 = zip_cplx(j.at("g0_re"), j.at("g0_im"));
    d.g1 = zip_cplx(j.at("g1_re"), j.at("g1_im"));
    if (j.contains("decay_floor")) d.decay_floor = j["decay_floor"];
  } catch (const json::exception& e) {
    throw ConfigError("profile schema error: " + std::string(e.what()));
  }
  return d;
}

void save_profile_json(const HalfLineData& d, const std::string& path) {
  json j;
  j["beta"] = d.beta;
  j["decay_floor"] = d.decay_floor;
  j["x_samples"] = d.x_samples;
  j["t_samples"] = d.t_samples;
  auto split = [&](const std::vector<cplx>& v, const char* re,
                   const char* im) {
    std::vector<double> a(v.size()), b(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
      a[i] = v[i].real();
      b[i] = v[i].imag();
    }
    j[re] = a;
    j[im] = b;
  };
  split(d.u0, "u0_re", "u0_im");
  split(d.g0, "g0_re", "g0_im");
  split(d.g1, "g1_re", "g1_im");
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write profile: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace kehl
