#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "detcount/curves.hpp"
#include "detcount/detmethod.hpp"
#include "detcount/geometry.hpp"
#include "detcount/harness.hpp"
#include "detcount/parse.hpp"

using namespace detcount;
using nlohmann::json;

namespace {

json jint(const Integer& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

json jvec(const std::vector<Integer>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(jint(x));
  return a;
}

Integer parse_integer(const std::string& s, const std::string& what) {
  Integer v;
  if (s.empty() || v.set_str(s, 10) != 0) throw Error(what + ": not an integer: '" + s + "'");
  return v;
}

std::vector<Integer> parse_list(const std::string& s, const std::string& what) {
  std::vector<Integer> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_integer(item, what));
  return out;
}

/// A polynomial argument is either a path to a file or the text itself.
/// Files may hold several polynomials, one per line; '#' starts a comment.
std::vector<std::string> read_variety(const std::string& arg) {
  std::vector<std::string> out;
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return {arg};
  std::ifstream in(arg);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
  }
  if (out.empty()) throw Error(arg + ": no polynomial found");
  return out;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational point counting and determinant method experiments"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads (default: DETCOUNT_THREADS or all cores)");

  // count
  auto* count = app.add_subcommand("count", "Count points over a grid of height bounds");
  std::string variety, function = "N", grid, out_dir, name = "count";
  std::string bmax_s;
  std::vector<std::string> filters;
  std::optional<std::size_t> num_vars;
  std::optional<double> target;
  double tolerance = 0.1;
  std::uint64_t seed = 1;
  std::string config_path;
  count->add_option("--config", config_path, "JSON experiment config (replaces the other count options)");
  count->add_option("--variety", variety, "Polynomial text or file");
  count->add_option("--function", function, "N, M, Naff or detmethod")
      ->check(CLI::IsMember({"N", "M", "Naff", "detmethod"}));
  count->add_option("--bmax", bmax_s, "Largest height bound");
  count->add_option("--grid", grid, "geometric:k or a comma separated list (default: bmax only)");
  count->add_option("--filter", filters, "Residue filter p:r1,...,rn on the affine coordinates (Naff only)");
  count->add_option("--num-vars", num_vars, "Number of variables of the ring");
  count->add_option("--out", out_dir, "Output directory for CSV and JSON");
  count->add_option("--name", name, "Base name of the output files");
  count->add_option("--target", target, "Exponent to compare the fitted slope against");
  count->add_option("--tolerance", tolerance, "Allowed |slope - target|");
  count->add_option("--seed", seed, "RNG seed (overridden by DETCOUNT_SEED)");

  // slice
  auto* slice_cmd = app.add_subcommand("slice", "Slice a form at X0 = b");
  std::string b_s;
  slice_cmd->add_option("--variety", variety, "Form text or file")->required();
  slice_cmd->add_option("--b", b_s, "Value of X0")->required();
  slice_cmd->add_option("--bmax", bmax_s, "Also count M(f_b; B) and check the slicing inequality");

  // conic-param
  auto* conic = app.add_subcommand("conic-param", "Parameterize a plane section of a quadric");
  std::string plane_s, quadric;
  bool list_points = false;
  conic->add_option("--plane", plane_s, "a0,a1,a2,a3 for a0*X0 = a1*X1 + a2*X2 + a3*X3")->required();
  conic->add_option("--quadric", quadric, "Quadratic form in x0..x3")->required();
  conic->add_option("--bmax", bmax_s, "Height bound")->required();
  conic->add_flag("--points", list_points, "List the points of every class");

  // project
  auto* project = app.add_subcommand("project", "Project a variety to a hypersurface");
  std::vector<std::string> gens;
  std::size_t dim = 1;
  unsigned long cap = 3;
  project->add_option("--variety", gens, "Generators (text or file), repeatable")->required();
  project->add_option("--dim", dim, "Dimension m of the variety");
  project->add_option("--bmax", bmax_s, "Height bound for the sample points")->required();
  project->add_option("--cap", cap, "Largest centre height scanned");

  // detmethod
  auto* det = app.add_subcommand("detmethod", "Residue classes and auxiliary forms");
  PipelineOptions popt;
  det->add_option("--variety", variety, "Surface form text or file")->required();
  det->add_option("--bmax", bmax_s, "Height bound")->required();
  det->add_option("--epsilon", popt.epsilon, "Prime window epsilon");
  det->add_option("--min-primes", popt.min_primes, "Primes taken from the window");
  det->add_option("--max-degree", popt.max_D, "Largest auxiliary form degree");
  det->add_option("--min-class", popt.min_class_size, "Smallest class size reported");

  // fit
  auto* fit = app.add_subcommand("fit", "Fit the log-log slope of a B,count CSV");
  std::string csv_path;
  fit->add_option("csv", csv_path, "CSV file with header B,count")->required();
  fit->add_option("--target", target, "Exponent to compare against");
  fit->add_option("--tolerance", tolerance, "Allowed |slope - target|");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*count && !config_path.empty()) {
      ExperimentConfig cfg = load_config(config_path);
      if (threads) cfg.threads = threads;
      if (!out_dir.empty()) cfg.out_dir = out_dir;
      auto res = run_experiment(cfg);
      std::cout << res.csv;
      if (res.fit) std::cerr << "slope " << res.fit->slope << "\n";
      return 0;
    }
    if (*count) {
      if (variety.empty() || bmax_s.empty()) throw Error("count: --variety and --bmax are required without --config");
      ExperimentConfig cfg;
      cfg.name = name;
      auto texts = read_variety(variety);
      cfg.variety.polynomial = texts[0];
      cfg.variety.num_vars = num_vars;
      cfg.function = parse_function(function);
      Integer bmax = parse_integer(bmax_s, "--bmax");
      cfg.grid = grid.empty() ? std::vector<Integer>{bmax} : parse_grid(grid, bmax);
      for (const auto& f : filters) cfg.filters.push_back(parse_filter(f));
      cfg.out_dir = out_dir;
      cfg.target = target;
      cfg.tolerance = tolerance;
      cfg.seed = seed;
      cfg.threads = threads;
      auto res = run_experiment(cfg);
      std::cout << res.csv;
      if (res.fit) std::cerr << "slope " << res.fit->slope << "\n";
      return 0;
    }
    if (*slice_cmd) {
      IntPoly F = parse_poly(read_variety(variety)[0]).poly;
      Integer b = parse_integer(b_s, "--b");
      IntPoly fb = slice(F, b);
      json j;
      j["b"] = jint(b);
      j["slice"] = fb.to_string(VarStyle::T);
      if (!bmax_s.empty()) {
        Integer B = parse_integer(bmax_s, "--bmax");
        EnumOptions eo;
        eo.threads = threads;
        if (!fb.is_zero()) j["M"] = jint(count_affine(fb, B, eo).count);
        auto chk = verify_slicing(F, B, eo);
        j["N"] = jint(chk.lhs);
        j["sum_M"] = jint(chk.rhs);
        j["holds"] = chk.holds();
      }
      print_json(j);
      return 0;
    }
    if (*conic) {
      auto a = parse_list(plane_s, "--plane");
      if (a.size() != 4) throw Error("--plane needs four integers");
      std::array<Integer, 4> plane{a[0], a[1], a[2], a[3]};
      IntPoly Q = parse_poly(read_variety(quadric)[0], 4).poly;
      Integer B = parse_integer(bmax_s, "--bmax");
      auto data = plane_eliminate(plane, Q);
      json j;
      j["eliminated"] = data.eliminated;
      j["q"] = data.q.to_string();
      j["nonsingular"] = data.nonsingular;
      j["tangency_rank"] = tangency_rank(data.q);
      auto res = conic_parameterize(data, B);
      if (auto* e = std::get_if<EmptyParam>(&res)) {
        j["empty"] = e->reason;
      } else {
        const auto& p = std::get<ConicParam>(res);
        j["qprime"] = p.qprime.to_string(VarStyle::X);
        j["Ystar"] = jint(p.Ystar);
        j["D"] = jint(p.D);
        j["kappa"] = p.kappa;
        json cls = json::array();
        for (const auto& c : p.classes) {
          json cj;
          cj["lambda"] = jint(c.lambda);
          cj["D_lambda"] = jint(c.D_lambda);
          cj["Z_lambda"] = jint(c.Z_lambda);
          json r = json::array();
          for (const auto& t : c.twoR) r.push_back(t.to_string(VarStyle::T));
          cj["twoR"] = r;
          auto cc = count_class_points(c.twoR, B);
          cj["count"] = jint(cc.exact);
          cj["bound"] = cc.bound;
          if (list_points) {
            json pts = json::array();
            for (const auto& x : class_points(c.twoR, B))
              pts.push_back(jvec({x[0], x[1], x[2]}));
            cj["points"] = pts;
          }
          cls.push_back(cj);
        }
        j["classes"] = cls;
        j["points"] = conic_points(p, B).size();
      }
      print_json(j);
      return 0;
    }
    if (*project) {
      std::vector<IntPoly> G;
      for (const auto& g : gens)
        for (const auto& t : read_variety(g)) G.push_back(parse_poly(t).poly);
      std::size_t n = 0;
      for (const auto& g : G) n = std::max(n, g.num_vars());
      for (auto& g : G) g = g.extend(n);
      Integer B = parse_integer(bmax_s, "--bmax");
      auto s = find_projection(G, dim, cap);
      json j;
      if (!s) {
        j["found"] = false;
        print_json(j);
        return 1;
      }
      j["found"] = true;
      json h = json::array(), g = json::array();
      for (const auto& v : s->h) h.push_back(jvec(v));
      for (const auto& v : s->g) g.push_back(jvec(v));
      j["centre"] = h;
      j["dual"] = g;
      j["lambda"] = jint(s->lambda);
      j["c"] = jint(s->c);
      auto pts = variety_points(G, B);
      auto rep = sample_birationality_check(*s, pts, static_cast<std::size_t>(G[0].degree()));
      j["points"] = rep.points;
      j["skipped_center"] = rep.skipped_center;
      j["height_ok"] = rep.height_ok;
      j["fibres_ok"] = rep.ok;
      j["collapsed"] = rep.collapsed;
      json hist = json::object();
      for (const auto& [k, v] : rep.histogram) hist[std::to_string(k)] = v;
      j["fibre_histogram"] = hist;
      print_json(j);
      return rep.ok && rep.height_ok ? 0 : 1;
    }
    if (*det) {
      IntPoly F = parse_poly(read_variety(variety)[0], 4).poly;
      Integer B = parse_integer(bmax_s, "--bmax");
      popt.threads = threads;
      auto rep = run_detmethod(F, B, popt);
      json j;
      j["B"] = jint(B);
      j["primes"] = jvec(rep.window.primes);
      j["window"] = jvec({rep.window.lo, rep.window.hi});
      j["points"] = rep.points;
      json cls = json::array();
      for (const auto& c : rep.classes) {
        json r;
        r["p"] = jint(c.p);
        r["pi"] = jvec(c.key);
        r["type"] = to_string(c.type);
        r["class_size"] = c.size;
        r["D"] = c.D;
        r["rank"] = c.rank;
        if (c.G)
          r["G"] = c.G->to_string();
        else
          r["G"] = c.rank_full ? "RankFull" : c.error;
        r["delta"] = {{"k", c.det_k},
                      {"zero", sgn(c.delta) == 0},
                      {"log_abs", sgn(c.delta) == 0 ? json(nullptr) : json(log_abs(c.delta))},
                      {"v_p", c.v_p ? json(*c.v_p) : json(nullptr)}};
        cls.push_back(r);
      }
      j["classes"] = cls;
      print_json(j);
      return 0;
    }
    if (*fit) {
      std::ifstream in(csv_path);
      if (!in) throw Error("cannot open " + csv_path);
      CountSeries s;
      s.tag = csv_path;
      std::string line;
      std::getline(in, line);
      if (line.rfind("B,count", 0) != 0) throw Error(csv_path + ": expected header B,count");
      std::size_t lineno = 1;
      while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos) throw Error(csv_path + ":" + std::to_string(lineno) + ": missing comma");
        s.entries.emplace_back(parse_integer(line.substr(0, comma), "B"),
                               parse_integer(line.substr(comma + 1), "count"));
      }
      std::cout << fit_json(fit_exponent(s, target, tolerance));
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error at position " << e.position() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
