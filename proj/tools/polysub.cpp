// Command-line surface: generation, counting, perturbation and verification
// of colored-polyhedron subdivisions, with machine-readable reports.
//
// Exit codes: 0 ok, 2 usage/parse error, 3 counting-bound violation,
// 4 monotonicity violation, 5 degenerate input where general position is
// required.

#include <openssl/evp.h>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polysub/family.hpp"
#include "polysub/reports.hpp"
#include "polysub/scene_io.hpp"

namespace {

using namespace polysub;
using Clock = std::chrono::steady_clock;

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << data;
}

struct Run {
  std::string command;
  std::vector<std::string> argv_echo;
  std::string digest;
  Clock::time_point start = Clock::now();

  int emit(Json output, int code) const {
    Json env;
    env["command"] = command;
    env["argv"] = argv_echo;
    env["input_digest"] = "sha256:" + digest;
    env["output"] = std::move(output);
    env["timing_ms"] = dec(
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
    std::cout << env.dump() << "\n";
    return code;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact subdivisions of space induced by colored convex polyhedra"};
  app.require_subcommand(1);

  int gen_d = 2, gen_m = 1, gen_ell = 3;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "generate an extremal family scene");
  gen->add_option("--d", gen_d, "ambient dimension (>= 2)")->required();
  gen->add_option("--m", gen_m, "number of polyhedra (>= 1)")->required();
  gen->add_option("--ell", gen_ell, "polygon size (>= 3)")->required();
  gen->add_option("--out", gen_out, "output scene file")->required();

  std::string census_in, census_method = "merge";
  bool census_incl_boundary = false;
  int census_threads = 1;
  auto* cen = app.add_subcommand("census", "count subdivision faces by dimension");
  cen->add_option("--in", census_in, "input scene file")->required();
  cen->add_option("--method", census_method, "merge | subset")
      ->check(CLI::IsMember({"merge", "subset"}));
  cen->add_flag("--include-delta-boundary", census_incl_boundary,
                "also count faces on the bounding-simplex boundary");
  cen->add_option("--threads", census_threads, "worker bound (output-invariant)");

  std::string pert_in, pert_out, pert_log;
  auto* per = app.add_subcommand("perturb", "perturb a scene to general position");
  per->add_option("--in", pert_in, "input scene file")->required();
  per->add_option("--out", pert_out, "output scene file")->required();
  per->add_option("--log", pert_log, "perturbation log file");

  std::string ver_before, ver_after;
  auto* ver = app.add_subcommand("verify", "check per-dimension census monotonicity");
  ver->add_option("--before", ver_before, "original scene file")->required();
  ver->add_option("--after", ver_after, "perturbed scene file")->required();

  std::string charge_in;
  auto* chg = app.add_subcommand("charge", "run the vertex-charging checks");
  chg->add_option("--in", charge_in, "input scene file (general position)")->required();

  std::string prod_a, prod_b, prod_out;
  auto* prod = app.add_subcommand("product", "product of two scenes with equal color counts");
  prod->add_option("--a", prod_a, "first factor scene file")->required();
  prod->add_option("--b", prod_b, "second factor scene file")->required();
  prod->add_option("--out", prod_out, "output scene file")->required();

  std::string exp_in, exp_out;
  int exp_color = 0;
  auto* exp = app.add_subcommand("export-ine", "export one color in matrix H-format");
  exp->add_option("--in", exp_in, "input scene file")->required();
  exp->add_option("--color", exp_color, "color id")->required();
  exp->add_option("--out", exp_out, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Run run;
  for (int i = 1; i < argc; ++i) run.argv_echo.push_back(argv[i]);
  run.command = app.get_subcommands().front()->get_name();

  try {
    if (*gen) {
      if (gen_d < 2 || gen_m < 1 || gen_ell < 3) {
        std::cerr << "gen: need --d >= 2, --m >= 1, --ell >= 3\n";
        return 2;
      }
      run.digest = sha256_hex("gen d=" + std::to_string(gen_d) + " m=" + std::to_string(gen_m) +
                              " ell=" + std::to_string(gen_ell));
      auto [scene, predicted] = gen_extremal(make_family_params(gen_d, gen_m, gen_ell));
      write_file(gen_out, write_scene(scene));
      Json out;
      out["n"] = dec(scene.facet_count());
      out["predicted_vertices"] = dec(predicted.vertices);
      return run.emit(std::move(out), 0);
    }

    if (*cen) {
      std::string text = read_file(census_in);
      run.digest = sha256_hex(text);
      Scene s = read_scene(text);
      if (census_method == "merge") {
        CensusOptions opts;
        opts.include_delta_boundary = census_incl_boundary;
        opts.threads = census_threads;
        Census c = census(s, opts);
        return run.emit(census_json(c), c.bound_ok ? 0 : 3);
      }
      long long count = static_cast<long long>(vertices_bruteforce(s).size());
      BoundReport br = check_bound(count, s.facet_count(), s.color_count(), s.dim);
      Json out;
      out["d"] = dec(s.dim);
      out["n"] = dec(s.facet_count());
      out["m"] = dec(s.color_count());
      out["vertices"] = dec(count);
      out["bound"] = dec(br.bound);
      out["bound_ok"] = br.ok;
      out["warnings"] = Json::array();
      return run.emit(std::move(out), br.ok ? 0 : 3);
    }

    if (*per) {
      std::string text = read_file(pert_in);
      run.digest = sha256_hex(text);
      Scene s = read_scene(text);
      auto [pert, steps] = perturb_scene(s);
      write_file(pert_out, write_scene(pert));
      if (!pert_log.empty()) write_file(pert_log, perturbation_log(steps));
      GeneralPositionReport gp = check_general_position(pert);
      Json out;
      out["steps"] = dec(static_cast<long long>(steps.size()));
      out["general_position_ok"] = gp.ok();
      out["generic_vertical_ok"] = gp.generic_vertical_ok;
      return run.emit(std::move(out), gp.ok() ? 0 : 1);
    }

    if (*ver) {
      std::string tb = read_file(ver_before), ta = read_file(ver_after);
      run.digest = sha256_hex(sha256_hex(tb) + ":" + sha256_hex(ta));
      MonotonicityReport rep = verify_monotonicity(read_scene(tb), read_scene(ta));
      return run.emit(monotonicity_json(rep), rep.ok ? 0 : 4);
    }

    if (*chg) {
      std::string text = read_file(charge_in);
      run.digest = sha256_hex(text);
      Scene s = read_scene(text);
      GeneralPositionReport gp = check_general_position_core(s);
      if (!gp.ok()) {
        std::cerr << "charge: input scene is degenerate; run `perturb` first\n";
        for (const auto& w : gp.witnesses) std::cerr << "  " << w << "\n";
        return 5;
      }
      ChargingReport rep = verify_injection(s);
      return run.emit(charging_json(rep), rep.ok() ? 0 : 1);
    }

    if (*prod) {
      std::string ta = read_file(prod_a), tb = read_file(prod_b);
      run.digest = sha256_hex(sha256_hex(ta) + ":" + sha256_hex(tb));
      Scene p = product_scene(read_scene(ta), read_scene(tb));
      write_file(prod_out, write_scene(p));
      Json out;
      out["d"] = dec(p.dim);
      out["n"] = dec(p.facet_count());
      return run.emit(std::move(out), 0);
    }

    if (*exp) {
      std::string text = read_file(exp_in);
      run.digest = sha256_hex(text);
      Scene s = read_scene(text);
      std::string h = export_hrep(s, exp_color);
      write_file(exp_out, h);
      long long rows = 0;
      for (const auto& hs : s.halfspaces)
        if (hs.color == exp_color) ++rows;
      Json out;
      out["rows"] = dec(rows);
      return run.emit(std::move(out), 0);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
