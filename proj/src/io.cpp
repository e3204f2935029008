#include "orbitfn/io.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace orbitfn {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_grid_csv(std::ostream& os, const Algebra& alg, const std::vector<GridPoint>& pts) {
  os << "u0,u1,u2,u3,x1,x2,x3\n";
  for (const auto& p : pts) {
    const Vec3 x = grid_point_orthonormal(alg, p);
    os << p.bary[0] << ',' << p.bary[1] << ',' << p.bary[2] << ',' << p.bary[3] << ',' << fmt(x[0])
       << ',' << fmt(x[1]) << ',' << fmt(x[2]) << '\n';
  }
}

void write_weights_csv(std::ostream& os, const Algebra& alg, const std::vector<GridWeight>& wts) {
  os << "t0,t1,t2,t3,x1,x2,x3\n";
  for (const auto& w : wts) {
    const Vec3 x = alg.point_from_omega(w.omega());
    os << w.bary[0] << ',' << w.bary[1] << ',' << w.bary[2] << ',' << w.bary[3] << ',' << fmt(x[0])
       << ',' << fmt(x[1]) << ',' << fmt(x[2]) << '\n';
  }
}

namespace {

json grid_header(const Algebra& alg, GridFamily family, Int M, std::size_t count) {
  return json{{"algebra", to_string(alg.name)},
              {"family", to_string(family)},
              {"M", M},
              {"count", count}};
}

}  // namespace

json grid_to_json(const Algebra& alg, GridFamily family, Int M,
                  const std::vector<GridPoint>& pts) {
  json j = grid_header(alg, family, M, pts.size());
  json rows = json::array();
  for (const auto& p : pts) {
    const Vec3 x = grid_point_orthonormal(alg, p);
    rows.push_back({{"u", {p.bary[0], p.bary[1], p.bary[2], p.bary[3]}}, {"x", {x[0], x[1], x[2]}}});
  }
  j["points"] = std::move(rows);
  return j;
}

json weights_to_json(const Algebra& alg, GridFamily family, Int M,
                     const std::vector<GridWeight>& wts) {
  json j = grid_header(alg, family, M, wts.size());
  json rows = json::array();
  for (const auto& w : wts) {
    const Vec3 x = alg.point_from_omega(w.omega());
    rows.push_back({{"t", {w.bary[0], w.bary[1], w.bary[2], w.bary[3]}}, {"x", {x[0], x[1], x[2]}}});
  }
  j["weights"] = std::move(rows);
  return j;
}

namespace {

json data_array(const std::vector<Complex>& v) {
  json d = json::array();
  for (const auto& z : v) d.push_back({z.real(), z.imag()});
  return d;
}

std::vector<Complex> data_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("field data must be an array");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
      throw std::invalid_argument("field data entries must be [re, im] pairs");
    out.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return out;
}

template <class Field>
Field field_header_from_json(const json& j, const char* kind) {
  if (!j.is_object()) throw std::invalid_argument("field file must hold a JSON object");
  for (const char* key : {"algebra", "family", "M", "data"})
    if (!j.contains(key)) throw std::invalid_argument(std::string("field is missing '") + key + "'");
  if (j.contains("kind") && j["kind"].get<std::string>() != kind)
    throw std::invalid_argument(std::string("expected a field of kind '") + kind + "'");
  Field f;
  f.algebra = parse_algebra(j["algebra"].get<std::string>());
  f.family = parse_family(j["family"].get<std::string>());
  f.M = j["M"].get<Int>();
  if (f.M < 1) throw std::invalid_argument("field M must be >= 1");
  return f;
}

}  // namespace

json field_to_json(const SampledField& f) {
  return json{{"algebra", to_string(f.algebra)}, {"family", to_string(f.family)}, {"M", f.M},
              {"index_order", "lex"},            {"kind", "samples"},             {"data", data_array(f.values)}};
}

json field_to_json(const SpectralField& f) {
  return json{{"algebra", to_string(f.algebra)}, {"family", to_string(f.family)}, {"M", f.M},
              {"index_order", "lex"},            {"kind", "coefficients"},        {"data", data_array(f.coeffs)}};
}

SampledField sampled_field_from_json(const json& j) {
  auto f = field_header_from_json<SampledField>(j, "samples");
  f.values = data_from_json(j["data"]);
  return f;
}

SpectralField spectral_field_from_json(const json& j) {
  auto f = field_header_from_json<SpectralField>(j, "coefficients");
  f.coeffs = data_from_json(j["data"]);
  return f;
}

namespace {

void field_csv(std::ostream& os, const char* index_name, const std::vector<IVec4>& bary,
               const std::vector<Complex>& data) {
  os << index_name << "0," << index_name << "1," << index_name << "2," << index_name << "3,re,im\n";
  for (std::size_t i = 0; i < data.size(); ++i)
    os << bary[i][0] << ',' << bary[i][1] << ',' << bary[i][2] << ',' << bary[i][3] << ','
       << fmt(data[i].real()) << ',' << fmt(data[i].imag()) << '\n';
}

}  // namespace

void write_field_csv(std::ostream& os, const Algebra& alg, const SampledField& f) {
  std::vector<IVec4> bary;
  for (const auto& p : enumerate_grid(alg, f.family, f.M)) bary.push_back(p.bary);
  if (bary.size() != f.values.size())
    throw std::invalid_argument("sampled field length does not match its grid");
  field_csv(os, "u", bary, f.values);
}

void write_field_csv(std::ostream& os, const Algebra& alg, const SpectralField& f) {
  std::vector<IVec4> bary;
  for (const auto& w : enumerate_weights(alg, f.family, f.M)) bary.push_back(w.bary);
  if (bary.size() != f.coeffs.size())
    throw std::invalid_argument("spectral field length does not match its weight set");
  field_csv(os, "t", bary, f.coeffs);
}

json experiment_to_json(const ExperimentResult& r) {
  return json{{"algebra", to_string(r.algebra)},
              {"family", to_string(r.family)},
              {"M", r.M},
              {"bump",
               {{"alpha", r.bump.alpha},
                {"beta", r.bump.beta},
                {"center", {r.bump.center[0], r.bump.center[1], r.bump.center[2]}}}},
              {"error_l2", r.error_l2},
              {"bump_l2", r.bump_l2},
              {"method", r.method},
              {"mc_samples", r.mc_samples},
              {"seed", r.seed},
              {"runtime_ms", r.runtime_ms}};
}

void write_slice_csv(std::ostream& os, const SliceResult& s, const std::string& component) {
  os << "# axis=" << s.axis << " value=" << fmt(s.value) << " component=" << component << '\n';
  os << "# range0=[" << fmt(s.lo0) << ',' << fmt(s.hi0) << "] range1=[" << fmt(s.lo1) << ','
     << fmt(s.hi1) << "] resolution=" << s.resolution << '\n';
  for (Eigen::Index i = 0; i < s.values.rows(); ++i) {
    for (Eigen::Index j = 0; j < s.values.cols(); ++j) {
      const Complex z = s.values(i, j);
      const double v = component == "re" ? z.real() : component == "im" ? z.imag() : std::abs(z);
      os << fmt(v) << (j + 1 == s.values.cols() ? '\n' : ',');
    }
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
}

}  // namespace orbitfn
