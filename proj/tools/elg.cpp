// Batch driver for the extremal-length geometry library: property
// verification suites, pairing tables, convergence experiments and figures.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>

#include "elgverify/report.hpp"
#include "elgverify/svg.hpp"
#include "elgverify/tables.hpp"
#include "elgverify/verify.hpp"

namespace {

int write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open output file: " << path << "\n";
    return 2;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"extremal length geometry on the flat torus"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value configuration file; flags take precedence");

  double x0x = 0.0, x0y = 1.0;
  int truncation = 50, samples = 4096, trials = 500;
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  app.add_option("--x0x", x0x, "basepoint real part")->capture_default_str();
  app.add_option("--x0y", x0y, "basepoint imaginary part")->capture_default_str();
  app.add_option("-N,--truncation", truncation, "curve family truncation")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--tol", tolerance, "verification tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--samples", samples, "slope-circle grid samples")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--trials", trials, "random trials per property")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", seed, "random seed")->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "run a property suite and write a JSON report");
  verify_cmd->fallthrough();
  std::string suite;
  std::string verify_out = "-";
  verify_cmd->add_option("--suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember(elg::verify::suite_names()));
  verify_cmd->add_option("--out", verify_out, "output path (- for stdout)");

  auto* pair_cmd = app.add_subcommand("pair", "pairwise pairing/distance table");
  pair_cmd->fallthrough();
  std::string pair_input, pair_out = "-";
  pair_cmd->add_option("--input", pair_input, "JSON list of cone points")
      ->required()
      ->check(CLI::ExistingFile);
  pair_cmd->add_option("--out", pair_out, "output path (- for stdout)");

  auto* conv_cmd = app.add_subcommand("converge", "convergence experiment tables");
  conv_cmd->fallthrough();
  std::string mode, conv_out = "-";
  elg::verify::ConvergeOptions copt;
  double ax = 0.0, ay = 1.0, bx = 0.0, by = 2.0;
  std::string slope = "inf";
  long long fp = 1, fq = 0, gp = 0, gq = 1;
  conv_cmd->add_option("--mode", mode, "dinf | radial | gromov-boundary")
      ->required()
      ->check(CLI::IsMember({"dinf", "radial", "gromov-boundary"}));
  conv_cmd->add_option("--ax", ax, "first point, real part")->capture_default_str();
  conv_cmd->add_option("--ay", ay, "first point, imaginary part")->capture_default_str();
  conv_cmd->add_option("--bx", bx, "second point, real part")->capture_default_str();
  conv_cmd->add_option("--by", by, "second point, imaginary part")->capture_default_str();
  conv_cmd->add_option("--slope", slope, "radial ray target (real number or inf)")
      ->capture_default_str();
  conv_cmd->add_option("--fp", fp, "first class p")->capture_default_str();
  conv_cmd->add_option("--fq", fq, "first class q")->capture_default_str();
  conv_cmd->add_option("--gp", gp, "second class p")->capture_default_str();
  conv_cmd->add_option("--gq", gq, "second class q")->capture_default_str();
  conv_cmd->add_option("--out", conv_out, "output path (- for stdout)");

  auto* plot_cmd = app.add_subcommand("plot", "deterministic SVG figures");
  plot_cmd->fallthrough();
  std::string what, plot_out = "-";
  int walsh_frames = 3;
  double pax = 0.0, pay = 1.0, pbx = 0.0, pby = 2.0;
  plot_cmd->add_option("--what", what, "geodesic | embedding | walsh")
      ->required()
      ->check(CLI::IsMember({"geodesic", "embedding", "walsh"}));
  plot_cmd->add_option("--ax", pax, "first point, real part")->capture_default_str();
  plot_cmd->add_option("--ay", pay, "first point, imaginary part")->capture_default_str();
  plot_cmd->add_option("--bx", pbx, "second point, real part")->capture_default_str();
  plot_cmd->add_option("--by", pby, "second point, imaginary part")->capture_default_str();
  plot_cmd->add_option("--frames", walsh_frames, "number of frames in the walsh figure")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  plot_cmd->add_option("--out", plot_out, "output path (- for stdout)");

  CLI11_PARSE(app, argc, argv);

  elg::verify::VerifyConfig cfg;
  try {
    cfg.x0 = elg::TeichPoint{x0x, x0y};
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  cfg.truncation = truncation;
  cfg.tolerance = tolerance;
  cfg.samples = samples;
  cfg.trials = trials;
  cfg.seed = seed;

  try {
    if (*verify_cmd) {
      auto results = elg::verify::run_suite(suite, cfg);
      int rc = write_output(verify_out, elg::verify::report_json(suite, cfg, results));
      if (rc != 0) return rc;
      return elg::verify::all_pass(results) ? 0 : 1;
    }
    if (*pair_cmd) {
      std::ifstream in(pair_input);
      nlohmann::json j = nlohmann::json::parse(in);
      return write_output(pair_out, elg::verify::pair_csv(cfg, elg::verify::parse_cone_points(j)));
    }
    if (*conv_cmd) {
      copt.from = elg::TeichPoint{ax, ay};
      copt.to = elg::TeichPoint{bx, by};
      copt.slope_infinity = slope == "inf";
      if (!copt.slope_infinity) copt.slope = std::stod(slope);
      copt.fp = fp;
      copt.fq = fq;
      copt.gp = gp;
      copt.gq = gq;
      return write_output(conv_out, elg::verify::converge_csv(cfg, mode, copt));
    }
    if (*plot_cmd) {
      elg::verify::PlotOptions popt;
      popt.from = elg::TeichPoint{pax, pay};
      popt.to = elg::TeichPoint{pbx, pby};
      popt.walsh_frames = walsh_frames;
      return write_output(plot_out, elg::verify::plot_svg(cfg, what, popt));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
