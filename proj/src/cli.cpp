#include "overlap/cli.hpp"

#include "overlap/genbench.hpp"
#include "overlap/hardness.hpp"
#include "overlap/polygon_io.hpp"
#include "overlap/solvers.hpp"
#include "overlap/svg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace overlap {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

enum class LogLevel { Error, Info, Debug };

LogLevel log_level() {
  const char* v = std::getenv("OVERLAP_LOG");
  if (!v) return LogLevel::Error;
  std::string s(v);
  if (s == "debug") return LogLevel::Debug;
  if (s == "info") return LogLevel::Info;
  return LogLevel::Error;
}

struct LimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json stats_json(const SolveStats& s) {
  json j = json::object();
  for (const auto& [k, v] : s.named()) j[k] = v;
  j["wall_ns"] = s.wall_ns;
  return j;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") out << text;
  else write_text_file(path, text);
}

OrthoPolygon read_ortho(const std::string& path) {
  PolygonFile f = read_polygon_file(path);
  if (f.general) throw OverlapError(ErrorCode::ParseError, path + ": expected an 'ortho' polygon");
  return f.ortho;
}

std::vector<i64> int_list(const json& j, const char* key) {
  std::vector<i64> v;
  if (!j.contains(key)) return v;
  for (const auto& x : j.at(key)) v.push_back(x.get<i64>());
  return v;
}

json sets_json(const SumInstance& s, bool with_de) {
  json j;
  j["A"] = s.A;
  j["B"] = s.B;
  j["C"] = s.C;
  if (with_de) {
    j["D"] = s.D;
    j["E"] = s.E;
  }
  return j;
}

ReductionInstance generate(const std::string& variant, const SumInstance& s) {
  if (variant == "overlap") return gen_overlap_instance(s);
  if (variant == "containment") return gen_containment_instance(s);
  throw std::invalid_argument("unknown variant: " + variant);
}

json report_json(const CertReport& r) {
  json j;
  j["pass"] = r.pass();
  j["sat"] = r.sat;
  if (r.witness) {
    const Witness& w = *r.witness;
    j["witness"] = {{"a", w.a}, {"b", w.b}, {"c", w.c}, {"d", w.d}, {"e", w.e}};
    j["integrality"] = r.integrality_ok;
    j["forward"] = {{"pass", r.forward_ok}, {"area", to_string(r.forward_area)}};
  } else {
    j["witness"] = nullptr;
  }
  j["sweep"] = {{"pass", r.sweep_ok},
                {"verdict", r.sweep_verdict},
                {"candidates", r.candidates},
                {"max_area", to_string(r.sweep_max)}};
  j["sampling"] = {{"pass", r.sampling_ok},
                   {"samples", r.samples},
                   {"reaching_threshold", r.samples_reaching},
                   {"max_area", to_string(r.sample_max)}};
  j["isolation"] = {{"pass", r.isolation_ok}, {"checks", r.isolation_checks}};
  j["outside_window"] = {{"pass", r.outside_ok}, {"checks", r.outside_checks}};
  j["connector_budget"] = r.connector_ok;
  return j;
}

std::vector<int> parse_sizes(const std::string& s) {
  std::vector<int> v;
  std::stringstream ss(s);
  std::string t;
  while (std::getline(ss, t, ','))
    if (!t.empty()) v.push_back(std::stoi(t));
  return v;
}

std::vector<std::string> parse_names(const std::string& s) {
  std::vector<std::string> v;
  std::stringstream ss(s);
  std::string t;
  while (std::getline(ss, t, ','))
    if (!t.empty()) v.push_back(t);
  return v;
}

std::string fits_text(const std::vector<SlopeFit>& fits) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(3);
  for (const SlopeFit& f : fits)
    o << "algo=" << f.algo << " ops_slope=" << f.ops_slope << " wall_slope=" << f.wall_slope << " sizes=" << f.sizes
      << "\n";
  return o.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact maximum-overlap translation of orthogonal polygons"};
  app.require_subcommand(1);
  const LogLevel level = log_level();

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "maximize overlap area over translations");
  std::string algo = "fast", out_path;
  std::vector<std::string> in_paths;
  bool check = false;
  std::uint64_t brute_limit = 1000000;
  solve_cmd->add_option("--algo", algo)->check(CLI::IsMember({"fast", "baseline", "brute"}));
  solve_cmd->add_option("--in", in_paths, "P.poly Q.poly")->expected(2)->required();
  solve_cmd->add_option("--out", out_path, "result JSON (stdout when omitted)");
  solve_cmd->add_flag("--check", check, "re-evaluate the area at the returned translation");
  solve_cmd->add_option("--brute-limit", brute_limit)->check(CLI::PositiveNumber);

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "generate instances");
  gen_cmd->require_subcommand(1);
  auto* gen_slabs = gen_cmd->add_subcommand("slabs", "dump translation slabs as TSV");
  std::vector<std::string> slab_in;
  std::string slab_out;
  gen_slabs->add_option("--in", slab_in)->expected(2)->required();
  gen_slabs->add_option("--out", slab_out);

  auto* gen_hard = gen_cmd->add_subcommand("hardness", "build a reduction instance from integer sets");
  std::string sets_path, variant = "overlap";
  std::vector<std::string> hard_out;
  gen_hard->add_option("--sets", sets_path)->required();
  gen_hard->add_option("--variant", variant)->check(CLI::IsMember({"overlap", "containment"}));
  gen_hard->add_option("--out", hard_out, "P.poly Q.poly meta.json")->expected(3)->required();

  auto* gen_rand = gen_cmd->add_subcommand("random", "random orthogonal polygon");
  int rand_n = 20;
  std::uint64_t seed = 1;
  i64 range = 4096;
  std::string rand_out;
  gen_rand->add_option("--n", rand_n)->check(CLI::Range(4, 1 << 20));
  gen_rand->add_option("--seed", seed);
  gen_rand->add_option("--range", range)->check(CLI::Range(i64(4), kMaxCoord));
  gen_rand->add_option("--out", rand_out);

  auto* gen_comb = gen_cmd->add_subcommand("comb", "comb pair");
  int comb_k = 8, comb_spacing = 0;
  std::vector<std::string> comb_out;
  gen_comb->add_option("--k", comb_k)->check(CLI::Range(2, 100000));
  gen_comb->add_option("--spacing", comb_spacing);
  gen_comb->add_option("--out", comb_out, "P.poly Q.poly")->expected(2)->required();

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "scaling benchmark");
  std::string family = "comb", sizes = "32,64,128,256", algos = "fast,baseline", bench_out;
  int trials = 1;
  double budget = 900;
  std::uint64_t bench_seed = 1;
  bench_cmd->add_option("--family", family)->check(CLI::IsMember({"comb", "random"}));
  bench_cmd->add_option("--sizes", sizes);
  bench_cmd->add_option("--algos", algos);
  bench_cmd->add_option("--trials", trials)->check(CLI::Range(1, 1000));
  bench_cmd->add_option("--seed", bench_seed);
  bench_cmd->add_option("--budget", budget, "seconds")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--out", bench_out);
  auto* fit_cmd = bench_cmd->add_subcommand("fit", "fit log-log slopes from a bench CSV");
  std::string fit_in;
  fit_cmd->add_option("--in", fit_in)->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "certification");
  verify_cmd->require_subcommand(1);
  auto* verify_red = verify_cmd->add_subcommand("reduction", "certify a generated reduction instance");
  std::string meta_path, report_out;
  std::size_t samples = 1000;
  std::uint64_t verify_seed = 1;
  verify_red->add_option("--in", meta_path)->required();
  verify_red->add_option("--out", report_out);
  verify_red->add_option("--samples", samples);
  verify_red->add_option("--seed", verify_seed);

  // viz
  auto* viz_cmd = app.add_subcommand("viz", "render an overlap placement as SVG");
  std::vector<std::string> viz_in, viz_tau;
  std::string viz_out;
  viz_cmd->add_option("--in", viz_in)->expected(2)->required();
  viz_cmd->add_option("--tau", viz_tau, "x y (integers or p/q)")->expected(2);
  viz_cmd->add_option("--out", viz_out);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (solve_cmd->parsed()) {
      OrthoPolygon P = read_ortho(in_paths[0]);
      OrthoPolygon Q = read_ortho(in_paths[1]);
      SolveOptions opt;
      opt.brute_limit = brute_limit;
      opt.shadow_checks = level == LogLevel::Debug;
      OverlapResult r = solve(algo, P, Q, opt);
      json j;
      j["algo"] = r.algo;
      j["tau"] = {r.x, r.y};
      j["area"] = static_cast<std::int64_t>(r.area);
      if (check) {
        bool ok = evaluate_at(P, Q, r.x, r.y) == r.area;
        j["check"] = ok;
        if (!ok) {
          err << "check failed: area at returned translation differs\n";
          emit(out_path, j.dump(2) + "\n", out);
          return 1;
        }
      }
      j["stats"] = stats_json(r.stats);
      if (level != LogLevel::Error)
        err << "solve algo=" << r.algo << " area=" << to_string(r.area) << " work=" << r.stats.work()
            << " wall_ms=" << r.stats.wall_ns / 1e6 << "\n";
      emit(out_path, j.dump(2) + "\n", out);
      return 0;
    }
    if (gen_slabs->parsed()) {
      OrthoPolygon P = read_ortho(slab_in[0]);
      OrthoPolygon Q = read_ortho(slab_in[1]);
      emit(slab_out, format_slabs_tsv(build_translation_slabs(P, Q)), out);
      return 0;
    }
    if (gen_hard->parsed()) {
      json sj = json::parse(read_text_file(sets_path));
      SumInstance s{int_list(sj, "A"), int_list(sj, "B"), int_list(sj, "C"), int_list(sj, "D"), int_list(sj, "E")};
      ReductionInstance ri = generate(variant, s);
      write_text_file(hard_out[0], format_polygon(ri.P));
      write_text_file(hard_out[1], format_polygon(ri.Q));
      fs::path meta_dir = fs::absolute(hard_out[2]).parent_path();
      json m;
      m["variant"] = ri.variant;
      m["sets"] = sets_json(ri.source, ri.variant == "overlap");
      m["params"] = {{"M", ri.params.M},
                     {"eps", to_string(ri.params.eps)},
                     {"connector_width", to_string(ri.params.connector_width)},
                     {"diag_width", to_string(ri.params.diag_width)}};
      m["threshold"] = to_string(ri.threshold);
      m["connector_area"] = to_string(ri.connector_area);
      m["P"] = fs::relative(fs::absolute(hard_out[0]), meta_dir).generic_string();
      m["Q"] = fs::relative(fs::absolute(hard_out[1]), meta_dir).generic_string();
      m["vertices"] = {{"P", ri.P.size()}, {"Q", ri.Q.size()}};
      write_text_file(hard_out[2], m.dump(2) + "\n");
      return 0;
    }
    if (gen_rand->parsed()) {
      if (rand_n % 2) throw std::invalid_argument("--n must be even");
      emit(rand_out, format_polygon(gen_random_ortho(rand_n, seed, range)), out);
      return 0;
    }
    if (gen_comb->parsed()) {
      auto [P, Q] = gen_comb_pair(comb_k, comb_spacing);
      write_text_file(comb_out[0], format_polygon(P));
      write_text_file(comb_out[1], format_polygon(Q));
      return 0;
    }
    if (fit_cmd->parsed()) {
      out << fits_text(fit_slopes(parse_bench_csv(read_text_file(fit_in))));
      return 0;
    }
    if (bench_cmd->parsed()) {
      BenchConfig cfg;
      cfg.family = family;
      cfg.sizes = parse_sizes(sizes);
      cfg.algos = parse_names(algos);
      cfg.trials = trials;
      cfg.seed = bench_seed;
      cfg.budget_seconds = budget;
      for (const std::string& a : cfg.algos)
        if (a != "fast" && a != "baseline" && a != "brute") throw std::invalid_argument("unknown algorithm: " + a);
      if (level != LogLevel::Error)
        cfg.on_record = [&](const BenchRecord& r) {
          err << "bench " << r.algo << " n=" << r.n << " m=" << r.m << " work=" << r.op("work")
              << " wall_ms=" << r.wall_ns / 1e6 << "\n";
        };
      BenchResult res = run_bench(cfg);
      std::string csv = bench_csv_header();
      for (const BenchRecord& r : res.records) csv += bench_csv_rows(r);
      if (!bench_out.empty()) write_text_file(bench_out, csv);
      out << fits_text(res.fits);
      if (res.budget_exceeded) {
        err << "BudgetExceeded: partial results written\n";
        return 3;
      }
      return 0;
    }
    if (verify_red->parsed()) {
      json m = json::parse(read_text_file(meta_path));
      fs::path dir = fs::absolute(meta_path).parent_path();
      const json& sj = m.at("sets");
      SumInstance s{int_list(sj, "A"), int_list(sj, "B"), int_list(sj, "C"), int_list(sj, "D"), int_list(sj, "E")};
      ReductionInstance ri = generate(m.at("variant").get<std::string>(), s);
      PolygonFile pf = read_polygon_file((dir / m.at("P").get<std::string>()).string());
      PolygonFile qf = read_polygon_file((dir / m.at("Q").get<std::string>()).string());
      bool match = pf.poly.vertices == ri.P.vertices && qf.poly.vertices == ri.Q.vertices;
      if (!match) throw OverlapError(ErrorCode::ParseError, "polygon files do not match the instance in " + meta_path);
      CertifyOptions co;
      co.samples = samples;
      co.seed = verify_seed;
      CertReport rep = certify_reduction(ri, co);
      json j = report_json(rep);
      j["variant"] = ri.variant;
      j["threshold"] = to_string(ri.threshold);
      emit(report_out, j.dump(2) + "\n", out);
      return rep.pass() ? 0 : 1;
    }
    if (viz_cmd->parsed()) {
      PolygonFile pf = read_polygon_file(viz_in[0]);
      PolygonFile qf = read_polygon_file(viz_in[1]);
      Rational tx = 0, ty = 0;
      if (!viz_tau.empty()) {
        tx = parse_rational(viz_tau[0]);
        ty = parse_rational(viz_tau[1]);
      }
      emit(viz_out, render_svg(pf.poly, qf.poly, tx, ty), out);
      return 0;
    }
  } catch (const OverlapError& e) {
    err << e.what() << "\n";
    return e.code() == ErrorCode::InstanceTooLarge ? 3 : 2;
  } catch (const nlohmann::json::exception& e) {
    err << "ParseError: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace overlap
