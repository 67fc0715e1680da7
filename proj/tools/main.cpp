// Command-line front end. All work happens behind the C API; this file only
// translates flags into the JSON run config and prints the rendered report.
#include <cstdio>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ultraembed.h"

namespace {

using nlohmann::ordered_json;

struct Options {
  double epsilon = 1.0;
  std::size_t target = 8;
  std::string input;
  std::string generator;
  long long seed = -1;
  std::string output;
  std::string format = "json";
  double tolerance = -1.0;
  std::string mode = "singleton";
  std::size_t blocks = 4;
  std::string report;
  double bound = -1.0;
  std::size_t cap = 16;
  bool with_hilbert = false;
};

void add_common(CLI::App* cmd, Options& opt, bool with_input = true) {
  if (with_input) {
    cmd->add_option("-i,--input", opt.input, "distance matrix (CSV or JSON)");
    cmd->add_option("-g,--generator", opt.generator,
                    "inline generator config (JSON)");
    cmd->add_option("--seed", opt.seed, "generator seed override");
  }
  cmd->add_option("-o,--output", opt.output, "write the report to a file");
  cmd->add_option("-f,--format", opt.format, "json|csv|newick|text")
      ->check(CLI::IsMember({"json", "csv", "newick", "text"}));
}

int run_command(const std::string& command, const Options& opt) {
  ordered_json cfg;
  cfg["command"] = command;
  cfg["epsilon"] = opt.epsilon;
  cfg["target"] = opt.target;
  if (!opt.input.empty()) cfg["input"] = opt.input;
  if (!opt.generator.empty()) cfg["generator"] = ordered_json::parse(opt.generator);
  cfg["seed"] = opt.seed;
  if (!opt.output.empty()) cfg["output"] = opt.output;
  cfg["format"] = opt.format;
  cfg["tolerance"] = opt.tolerance;
  cfg["mode"] = opt.mode;
  cfg["blocks"] = opt.blocks;
  if (!opt.report.empty()) cfg["report"] = opt.report;
  cfg["bound"] = opt.bound;
  cfg["cap"] = opt.cap;
  cfg["with_hilbert"] = opt.with_hilbert;

  char* rendered = nullptr;
  int exit_code = 0;
  ue_status st =
      ue_run_json(cfg.dump().c_str(), nullptr, &rendered, &exit_code);
  if (st != UE_OK) {
    std::fprintf(stderr, "error: %s\n", ue_last_error());
    return 1;
  }
  std::fputs(rendered, stdout);
  ue_string_free(rendered);
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Subsequence extraction and low-distortion embeddings into "
      "ultrametric spaces"};
  app.require_subcommand(1);
  Options opt;

  auto* validate = app.add_subcommand(
      "validate", "check a distance matrix (metric + ultrametric test)");
  add_common(validate, opt);
  validate->add_option("--tolerance", opt.tolerance,
                       "additive ultrametric tolerance");

  auto* classify = app.add_subcommand(
      "classify", "report which extraction case applies to a stream");
  add_common(classify, opt);
  classify->add_option("-e,--epsilon", opt.epsilon, "distortion slack");
  classify->add_option("-t,--target", opt.target, "subset size to reach");

  auto* extract = app.add_subcommand(
      "extract", "pick a well-structured subsequence with a certificate");
  add_common(extract, opt);
  extract->add_option("-e,--epsilon", opt.epsilon, "distortion slack");
  extract->add_option("-t,--target", opt.target, "subset size to reach");

  auto* embed = app.add_subcommand(
      "embed", "extract and embed into an ultrametric space");
  add_common(embed, opt);
  embed->add_option("-e,--epsilon", opt.epsilon, "distortion slack");
  embed->add_option("-t,--target", opt.target, "subset size to reach");
  embed->add_option("--mode", opt.mode, "singleton|block")
      ->check(CLI::IsMember({"singleton", "block"}));
  embed->add_option("--blocks", opt.blocks, "block count in block mode");

  auto* pipeline = app.add_subcommand(
      "pipeline", "full run: extract, embed, verify, report");
  add_common(pipeline, opt);
  pipeline->add_option("-e,--epsilon", opt.epsilon, "distortion slack");
  pipeline->add_option("-t,--target", opt.target, "subset size to reach");
  pipeline->add_option("--mode", opt.mode, "singleton|block")
      ->check(CLI::IsMember({"singleton", "block"}));
  pipeline->add_option("--blocks", opt.blocks, "block count in block mode");
  pipeline->add_flag("--with-hilbert", opt.with_hilbert,
                     "append Euclidean coordinates of the image");

  auto* oracle = app.add_subcommand(
      "oracle", "exhaustive best-subset search under a distortion bound");
  add_common(oracle, opt);
  oracle->add_option("-e,--epsilon", opt.epsilon,
                     "default bound is 1 + epsilon");
  oracle->add_option("--bound", opt.bound, "explicit distortion bound");
  oracle->add_option("--cap", opt.cap, "largest instance size accepted");

  auto* hilbert = app.add_subcommand(
      "hilbert", "Euclidean coordinates of an ultrametric matrix");
  add_common(hilbert, opt);

  auto* verify = app.add_subcommand(
      "verify", "re-run a saved report and check it reproduces");
  add_common(verify, opt);
  verify->add_option("-r,--report", opt.report, "report file to re-check")
      ->required();

  CLI11_PARSE(app, argc, argv);

  for (auto* sub : app.get_subcommands()) return run_command(sub->get_name(), opt);
  return 1;
}
