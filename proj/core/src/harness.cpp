#include "detcount/harness.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "detcount/detmethod.hpp"
#include "detcount/irreducible.hpp"
#include "detcount/parse.hpp"

namespace detcount {

using nlohmann::json;

std::string to_string(CountFunction f) {
  switch (f) {
    case CountFunction::N:
      return "N";
    case CountFunction::M:
      return "M";
    case CountFunction::Naff:
      return "Naff";
    case CountFunction::Detmethod:
      break;
  }
  return "detmethod";
}

CountFunction parse_function(const std::string& name) {
  if (name == "N") return CountFunction::N;
  if (name == "M") return CountFunction::M;
  if (name == "Naff") return CountFunction::Naff;
  if (name == "detmethod") return CountFunction::Detmethod;
  throw Error("unknown counting function '" + name + "' (expected N, M, Naff or detmethod)");
}

namespace {

Integer json_integer(const json& j, const std::string& what) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw Error(what + ": not an integer");
    return v;
  }
  throw Error(what + ": expected an integer");
}

json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw Error("config: top level must be an object");
  ExperimentConfig c;
  try {
    if (j.contains("name")) c.name = j.at("name").get<std::string>();
    const json& v = j.at("variety");
    if (v.is_string()) {
      c.variety.polynomial = v.get<std::string>();
    } else {
      c.variety.polynomial = v.at("polynomial").get<std::string>();
      if (v.contains("num_vars")) c.variety.num_vars = v.at("num_vars").get<std::size_t>();
      if (v.contains("degree")) c.variety.degree = v.at("degree").get<int>();
      if (v.contains("dimension")) c.variety.dimension = v.at("dimension").get<int>();
      if (v.contains("integral")) c.variety.integral = v.at("integral").get<bool>();
    }
    const json& g = j.at("grid");
    if (g.is_array()) {
      for (const auto& b : g) c.grid.push_back(json_integer(b, "grid entry"));
    } else {
      Integer bmax = json_integer(g.at("bmax"), "grid.bmax");
      unsigned long ratio = g.value("ratio", 2UL);
      Integer bmin = g.contains("bmin") ? json_integer(g.at("bmin"), "grid.bmin") : Integer(1);
      c.grid = geometric_grid(bmax, ratio, bmin);
    }
    if (j.contains("function")) c.function = parse_function(j.at("function").get<std::string>());
    if (j.contains("filters"))
      for (const auto& f : j.at("filters")) {
        ResidueFilter r;
        r.p = json_integer(f.at("p"), "filter.p");
        for (const auto& x : f.at("residues")) r.residues.push_back(json_integer(x, "residue"));
        c.filters.push_back(std::move(r));
      }
    if (j.contains("prime_window")) {
      const json& w = j.at("prime_window");
      c.epsilon = w.value("epsilon", c.epsilon);
      c.min_primes = w.value("min_primes", c.min_primes);
    }
    if (j.contains("out_dir")) c.out_dir = j.at("out_dir").get<std::string>();
    if (j.contains("target")) c.target = j.at("target").get<double>();
    if (j.contains("tolerance")) c.tolerance = j.at("tolerance").get<double>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("threads")) c.threads = j.at("threads").get<unsigned>();
  } catch (const json::exception& e) {
    throw Error(std::string("config: ") + e.what());
  }
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_config(ss.str());
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

IntPoly validate_config(const ExperimentConfig& cfg) {
  if (cfg.grid.empty()) throw Error("empty B grid");
  for (std::size_t i = 0; i < cfg.grid.size(); ++i) {
    if (cfg.grid[i] < 1) throw Error("grid bounds must be >= 1");
    if (i > 0 && cfg.grid[i] <= cfg.grid[i - 1]) throw Error("B grid must be strictly increasing");
  }
  IntPoly f = parse_poly(cfg.variety.polynomial, cfg.variety.num_vars).poly;
  if (cfg.variety.degree && *cfg.variety.degree != f.degree())
    throw Error("declared degree " + std::to_string(*cfg.variety.degree) +
                " does not match the polynomial's degree " + std::to_string(f.degree()));
  if (cfg.function != CountFunction::M && !f.is_homogeneous())
    throw Error("counting function " + to_string(cfg.function) + " needs a form");
  if (!cfg.filters.empty() && cfg.function != CountFunction::Naff)
    throw Error("residue filters apply to Naff only");
  return f;
}

std::vector<Integer> geometric_grid(const Integer& bmax, unsigned long ratio, const Integer& bmin) {
  if (ratio < 2) throw Error("grid ratio must be >= 2");
  if (bmax < 1) throw Error("bmax must be >= 1");
  std::vector<Integer> g;
  Integer lo = bmin < 1 ? Integer(1) : bmin;
  for (Integer b = bmax; b >= lo; b /= ratio) {
    g.insert(g.begin(), b);
    if (b == 0) break;
  }
  return g;
}

std::vector<Integer> parse_grid(const std::string& spec, const Integer& bmax) {
  const std::string pre = "geometric:";
  if (spec.rfind(pre, 0) == 0) {
    std::string k = spec.substr(pre.size());
    char* end = nullptr;
    unsigned long r = std::strtoul(k.c_str(), &end, 10);
    if (k.empty() || *end != '\0') throw Error("bad grid ratio in '" + spec + "'");
    return geometric_grid(bmax, r);
  }
  std::vector<Integer> g;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Integer b;
    if (b.set_str(item, 10) != 0) throw Error("bad grid entry '" + item + "'");
    g.push_back(b);
  }
  return g;
}

ResidueFilter parse_filter(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw Error("filter must look like p:r1,r2,...");
  ResidueFilter f;
  if (f.p.set_str(text.substr(0, colon), 10) != 0) throw Error("bad filter modulus in '" + text + "'");
  std::stringstream ss(text.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    Integer r;
    if (r.set_str(item, 10) != 0) throw Error("bad residue '" + item + "'");
    f.residues.push_back(r);
  }
  return f;
}

std::uint64_t resolve_seed(std::uint64_t configured) {
  if (const char* s = std::getenv("DETCOUNT_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (*s != '\0' && *end == '\0') return v;
    throw Error(std::string("DETCOUNT_SEED is not an integer: ") + s);
  }
  return configured;
}

FitReport fit_exponent(const CountSeries& series, std::optional<double> target, double tolerance) {
  FitReport r;
  r.series = series;
  r.target = target;
  r.tolerance = tolerance;
  std::vector<std::pair<double, double>> pts;
  for (const auto& [B, n] : series.entries)
    if (n > 0 && B > 0) pts.emplace_back(log_abs(B), log_abs(n));
  if (pts.size() < 3) throw Error("insufficient data");
  double m = double(pts.size()), sx = 0, sy = 0;
  for (auto [x, y] : pts) {
    sx += x;
    sy += y;
  }
  double mx = sx / m, my = sy / m, sxx = 0, sxy = 0;
  for (auto [x, y] : pts) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  if (sxx == 0) throw Error("insufficient data");
  r.slope = sxy / sxx;
  r.intercept = my - r.slope * mx;
  for (auto [x, y] : pts) {
    double e = y - (r.intercept + r.slope * x);
    r.residual += e * e;
  }
  r.used = pts.size();
  if (target) {
    r.margin = std::fabs(r.slope - *target);
    r.pass = *r.margin <= tolerance;
  }
  return r;
}

Integer count_at(const ExperimentConfig& cfg, const IntPoly& f, const Integer& B) {
  EnumOptions opt;
  opt.threads = cfg.threads;
  switch (cfg.function) {
    case CountFunction::N:
      return count_projective(f, B, opt).count;
    case CountFunction::M:
      return count_affine(f, B, opt).count;
    case CountFunction::Naff:
      return count_affine_surface(f, B, cfg.filters, opt).count;
    case CountFunction::Detmethod: {
      PipelineOptions po;
      po.epsilon = cfg.epsilon;
      po.min_primes = cfg.min_primes;
      po.threads = cfg.threads;
      auto rep = run_detmethod(f, B, po);
      for (const auto& c : rep.classes)
        if (!c.error.empty()) throw Error("detmethod at B=" + B.get_str() + ": " + c.error);
      return Integer(static_cast<unsigned long>(rep.points));
    }
  }
  return 0;
}

std::string series_csv(const CountSeries& s) {
  std::string out = "B,count\n";
  for (const auto& [B, n] : s.entries) out += B.get_str() + "," + n.get_str() + "\n";
  return out;
}

namespace {

json fit_object(const FitReport& r) {
  json j;
  j["slope"] = r.slope;
  j["intercept"] = r.intercept;
  j["residual"] = r.residual;
  j["points_used"] = r.used;
  j["tolerance"] = r.tolerance;
  j["target"] = r.target ? json(*r.target) : json(nullptr);
  j["margin"] = r.margin ? json(*r.margin) : json(nullptr);
  j["verdict"] = r.pass ? (*r.pass ? "pass" : "fail") : "none";
  return j;
}

json series_array(const CountSeries& s) {
  json a = json::array();
  for (const auto& [B, n] : s.entries) a.push_back({{"B", integer_json(B)}, {"count", integer_json(n)}});
  return a;
}

}  // namespace

std::string fit_json(const FitReport& r) {
  json j = fit_object(r);
  j["series"] = series_array(r.series);
  return j.dump(2) + "\n";
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  IntPoly f = validate_config(cfg);
  ExperimentResult res;
  res.series.tag = cfg.name;
  std::uint64_t seed = resolve_seed(cfg.seed);
  if (cfg.variety.integral) {
    IrreducibilityOptions io;
    io.seed = seed;
    auto v = is_absolutely_irreducible(f, io);
    res.integrality = to_string(v.verdict);
    if (v.verdict == Verdict::No && *cfg.variety.integral)
      throw Error("variety declared integral but is reducible: " + v.certificate);
  }
  for (const auto& B : cfg.grid) res.series.entries.emplace_back(B, count_at(cfg, f, B));
  try {
    res.fit = fit_exponent(res.series, cfg.target, cfg.tolerance);
  } catch (const Error& e) {
    res.fit_error = e.what();
  }
  res.csv = series_csv(res.series);

  json j;
  j["schema"] = "detcount.report/1";
  j["name"] = cfg.name;
  j["function"] = to_string(cfg.function);
  json v;
  v["polynomial"] = f.to_string();
  v["num_vars"] = f.num_vars();
  v["degree"] = f.degree();
  v["dimension"] = cfg.variety.dimension ? json(*cfg.variety.dimension) : json(nullptr);
  v["integral_declared"] = cfg.variety.integral ? json(*cfg.variety.integral) : json(nullptr);
  v["integral_verdict"] = res.integrality.empty() ? json(nullptr) : json(res.integrality);
  j["variety"] = v;
  json filters = json::array();
  for (const auto& flt : cfg.filters) {
    json r = json::array();
    for (const auto& x : flt.residues) r.push_back(integer_json(x));
    filters.push_back({{"p", integer_json(flt.p)}, {"residues", r}});
  }
  j["filters"] = filters;
  j["seed"] = seed;
  j["series"] = series_array(res.series);
  j["fit"] = res.fit ? fit_object(*res.fit) : json(nullptr);
  j["fit_error"] = res.fit_error.empty() ? json(nullptr) : json(res.fit_error);
  res.json = j.dump(2) + "\n";

  if (!cfg.out_dir.empty()) {
    std::filesystem::create_directories(cfg.out_dir);
    auto write = [&](const std::string& name, const std::string& body) {
      auto path = std::filesystem::path(cfg.out_dir) / name;
      std::ofstream out(path, std::ios::binary);
      if (!out) throw Error("cannot write " + path.string());
      out << body;
    };
    write(cfg.name + ".csv", res.csv);
    write(cfg.name + ".json", res.json);
  }
  return res;
}

}  // namespace detcount
