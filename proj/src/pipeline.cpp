#include "pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "generate.hpp"
#include "hilbert.hpp"
#include "oracle.hpp"

namespace ue {

namespace {

PointStream load_stream(const RunConfig& cfg) {
  if (!cfg.generator_json.empty()) {
    std::string gen = cfg.generator_json;
    if (cfg.seed >= 0) {
      auto j = ordered_json::parse(gen);
      j["seed"] = cfg.seed;
      gen = j.dump();
    }
    return generate_stream(gen);
  }
  if (cfg.input_path.empty())
    throw Error(ErrorCode::InvalidArgument,
                "either --input or --generator is required");
  const std::string text = read_file(cfg.input_path);
  FiniteMetricSpace m;
  if (cfg.input_path.size() > 5 &&
      cfg.input_path.substr(cfg.input_path.size() - 5) == ".json")
    m = matrix_from_json(text);
  else
    m = matrix_from_csv(text);
  return PointStream::from_matrix(m);
}

FiniteMetricSpace validated_prefix(const PointStream& stream) {
  FiniteMetricSpace m = stream.prefix(stream.horizon);
  return validate_metric(m.size(), m.dense(), m.labels());
}

std::string render_text(const ordered_json& j) {
  std::ostringstream os;
  for (const auto& [key, value] : j.items()) {
    if (key == "pairs" || key == "certificate") {
      os << key << ": [" << value.size() << " entries]\n";
    } else {
      os << key << ": " << value.dump() << "\n";
    }
  }
  return os.str();
}

ordered_json pipeline_report(const RunConfig& cfg, const PointStream& stream,
                             const FiniteMetricSpace& full, bool do_embed,
                             FiniteMetricSpace* product_out);

// Re-runs the configuration recorded in a report and compares the two
// reports byte for byte (ignoring the echoed config itself), then re-checks
// every recorded inequality.
ordered_json verify_report(const RunConfig& cfg) {
  if (cfg.report_path.empty())
    throw Error(ErrorCode::InvalidArgument, "verify needs --report");
  ordered_json report = ordered_json::parse(read_file(cfg.report_path));
  if (!report.contains("config"))
    throw Error(ErrorCode::InvalidArgument,
                "report carries no config echo; cannot re-run");
  RunConfig replay = config_from_json(report["config"].dump());
  if (!cfg.input_path.empty()) replay.input_path = cfg.input_path;
  replay.output_path.clear();
  RunOutcome rerun = run(replay);

  ordered_json result;
  result["report"] = cfg.report_path;
  // The config echo may legitimately differ (e.g. a relocated input file);
  // everything else must reproduce byte for byte.
  ordered_json a = rerun.report;
  ordered_json b = report;
  a.erase("config");
  b.erase("config");
  bool agree = a == b;
  result["reproduced"] = agree;

  std::size_t checked = 0, failed = 0;
  if (report.contains("embedding") &&
      report["embedding"].contains("certificate")) {
    for (const auto& e : report["embedding"]["certificate"]) {
      ++checked;
      const double lhs = e.at("lhs").get<double>();
      const double rhs = e.at("rhs").get<double>();
      const double margin = e.at("margin").get<double>();
      if (!(lhs <= rhs) || margin != rhs - lhs) ++failed;
    }
  }
  if (report.contains("extraction") &&
      report["extraction"].contains("certificate")) {
    for (const auto& e : report["extraction"]["certificate"]) {
      ++checked;
      const double lhs = e.at("lhs").get<double>();
      const double rhs = e.at("rhs").get<double>();
      const double margin = e.at("margin").get<double>();
      if (!(lhs <= rhs) || margin != rhs - lhs) ++failed;
    }
  }
  result["inequalities_checked"] = checked;
  result["inequalities_failed"] = failed;
  result["pass"] = agree && failed == 0;
  if (!result["pass"].get<bool>())
    throw Error(ErrorCode::BoundViolation,
                "verification failed: " + result.dump());
  return result;
}

ordered_json pipeline_report(const RunConfig& cfg, const PointStream& stream,
                             const FiniteMetricSpace& full, bool do_embed,
                             FiniteMetricSpace* product_out) {
  ordered_json rep;
  rep["config"] = config_to_json(cfg);
  rep["epsilon"] = cfg.epsilon;
  rep["n"] = stream.horizon;

  if (!cfg.block_mode) {
    ExtractionResult ext = extract(stream, cfg.epsilon, cfg.target);
    rep["extraction"] = extraction_to_json(ext);
    rep["case"] = to_string(ext.label);
    rep["subset"] = ext.indices;
    rep["size"] = ext.indices.size();
    if (!ext.decided())
      throw Error(ErrorCode::Undecided,
                  "extraction undecided: found " +
                      std::to_string(ext.indices.size()) + " of " +
                      std::to_string(cfg.target) + " indices");
    if (do_embed) {
      auto blocks = blocks_from_extraction(ext, stream);
      EmbeddingReport emb = embed(blocks, full, cfg.epsilon, false, ext.label);
      rep["embedding"] = embedding_to_json(emb);
      rep["distortion"] = emb.dist.distortion;
      rep["scale"] = emb.dist.scale;
      if (product_out) *product_out = emb.product.rho;
      if (cfg.with_hilbert) {
        UltraSpace u = ultra_from_matrix(emb.product.rho);
        CoordinateEmbedding coords = coordinates(u);
        rep["hilbert"] = {{"dim", coords.dim},
                          {"min_eigenvalue", coords.min_eigenvalue},
                          {"max_reconstruction_error",
                           coords.max_reconstruction_error},
                          {"coordinates_csv", coordinates_to_csv(coords)}};
      }
    }
  } else {
    BlockFamily fam = block_partition(full, cfg.blocks);
    CaseLabel label = CaseLabel::Undecided;
    double scale = 1.0;
    auto blocks = plan_blocks(full, fam.blocks, cfg.epsilon, &label, &scale);
    ordered_json sets = ordered_json::array();
    for (const auto& b : fam.blocks) sets.push_back(b);
    rep["blocks"] = sets;
    rep["case"] = to_string(label);
    std::size_t image_size = 0;
    for (std::size_t i = 1; i < blocks.size(); ++i)
      image_size += blocks[i].indices.size();
    rep["size"] = image_size;
    if (do_embed) {
      EmbeddingReport emb =
          embed(blocks, full, cfg.epsilon, true, label, scale);
      rep["embedding"] = embedding_to_json(emb);
      rep["distortion"] = emb.dist.distortion;
      rep["scale"] = emb.dist.scale;
      if (product_out) *product_out = emb.product.rho;
    }
  }
  return rep;
}

}  // namespace

RunConfig config_from_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  RunConfig cfg;
  cfg.command = j.value("command", std::string{});
  cfg.epsilon = j.value("epsilon", 1.0);
  cfg.target = j.value("target", std::size_t{8});
  cfg.input_path = j.value("input", std::string{});
  if (j.contains("generator")) cfg.generator_json = j["generator"].dump();
  cfg.seed = j.value("seed", std::int64_t{-1});
  cfg.output_path = j.value("output", std::string{});
  cfg.format = j.value("format", std::string{"json"});
  cfg.tolerance = j.value("tolerance", -1.0);
  cfg.block_mode = j.value("mode", std::string{"singleton"}) == "block";
  cfg.blocks = j.value("blocks", std::size_t{4});
  cfg.report_path = j.value("report", std::string{});
  cfg.oracle_bound = j.value("bound", -1.0);
  cfg.cap = j.value("cap", std::size_t{16});
  cfg.with_hilbert = j.value("with_hilbert", false);
  return cfg;
}

ordered_json config_to_json(const RunConfig& cfg) {
  ordered_json j;
  j["command"] = cfg.command;
  j["epsilon"] = cfg.epsilon;
  j["target"] = cfg.target;
  if (!cfg.input_path.empty()) j["input"] = cfg.input_path;
  if (!cfg.generator_json.empty())
    j["generator"] = ordered_json::parse(cfg.generator_json);
  j["seed"] = cfg.seed;
  j["format"] = cfg.format;
  j["tolerance"] = cfg.tolerance;
  j["mode"] = cfg.block_mode ? "block" : "singleton";
  j["blocks"] = cfg.blocks;
  if (!cfg.report_path.empty()) j["report"] = cfg.report_path;
  j["bound"] = cfg.oracle_bound;
  j["cap"] = cfg.cap;
  j["with_hilbert"] = cfg.with_hilbert;
  return j;
}

RunOutcome run(const RunConfig& cfg) {
  RunOutcome out;
  std::string alt_rendered;
  try {
    if (cfg.command == "verify") {
      out.report = verify_report(cfg);
    } else if (cfg.command == "validate") {
      PointStream stream = load_stream(cfg);
      FiniteMetricSpace m = validated_prefix(stream);
      out.report["config"] = config_to_json(cfg);
      out.report["valid"] = true;
      out.report["n"] = m.size();
      TripleWitness w;
      const double tol =
          cfg.tolerance >= 0.0 ? cfg.tolerance : default_tolerance(m);
      out.report["ultrametric"] = is_ultrametric(m, tol, &w);
    } else if (cfg.command == "classify") {
      PointStream stream = load_stream(cfg);
      validated_prefix(stream);
      ExtractionResult a = extract_unbounded(stream, cfg.epsilon, cfg.target);
      ExtractionResult b = extract_equilateral(stream, cfg.epsilon, cfg.target);
      ExtractionResult c = extract_cauchy(stream, cfg.epsilon, cfg.target);
      ExtractionResult best = extract(stream, cfg.epsilon, cfg.target);
      out.report["config"] = config_to_json(cfg);
      out.report["unbounded_size"] = a.indices.size();
      out.report["equilateral_size"] = b.indices.size();
      out.report["cauchy_size"] = c.indices.size();
      out.report["case"] = to_string(best.label);
      if (!best.decided())
        throw Error(ErrorCode::Undecided, "all three extractors fell short");
    } else if (cfg.command == "extract") {
      PointStream stream = load_stream(cfg);
      validated_prefix(stream);
      ExtractionResult ext = extract(stream, cfg.epsilon, cfg.target);
      out.report = extraction_to_json(ext);
      out.report["config"] = config_to_json(cfg);
      if (!ext.decided())
        throw Error(ErrorCode::Undecided,
                    "extraction undecided: found " +
                        std::to_string(ext.indices.size()) + " of " +
                        std::to_string(cfg.target) + " indices");
    } else if (cfg.command == "embed" || cfg.command == "pipeline") {
      PointStream stream = load_stream(cfg);
      FiniteMetricSpace full = validated_prefix(stream);
      FiniteMetricSpace product;
      out.report = pipeline_report(cfg, stream, full, true, &product);
      if (cfg.format == "csv")
        alt_rendered = matrix_to_csv(product);
      else if (cfg.format == "newick")
        alt_rendered = tree_from_matrix(product).newick() + "\n";
    } else if (cfg.command == "oracle") {
      PointStream stream = load_stream(cfg);
      FiniteMetricSpace full = validated_prefix(stream);
      const double bound =
          cfg.oracle_bound >= 1.0 ? cfg.oracle_bound : 1.0 + cfg.epsilon;
      const auto t0 = std::chrono::steady_clock::now();
      SubsetSearchResult res =
          best_subset_under_distortion(full, bound, cfg.cap);
      const double seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
              .count();
      out.report["config"] = config_to_json(cfg);
      out.report["subset"] = res.subset;
      out.report["objective"] = res.objective;
      out.report["enumerated"] = res.enumerated;
      out.report["seconds"] = seconds;
    } else if (cfg.command == "hilbert") {
      PointStream stream = load_stream(cfg);
      FiniteMetricSpace full = validated_prefix(stream);
      UltraSpace u = ultra_from_matrix(full);
      CoordinateEmbedding coords = coordinates(u);
      out.report["config"] = config_to_json(cfg);
      out.report["n"] = coords.n;
      out.report["dim"] = coords.dim;
      out.report["min_eigenvalue"] = coords.min_eigenvalue;
      out.report["max_reconstruction_error"] = coords.max_reconstruction_error;
      out.report["coordinates_csv"] = coordinates_to_csv(coords);
      if (cfg.format == "csv") alt_rendered = coordinates_to_csv(coords);
      if (cfg.format == "newick") alt_rendered = u.tree.newick() + "\n";
    } else {
      throw Error(ErrorCode::InvalidArgument,
                  "unknown command: " + cfg.command);
    }
  } catch (const Error& e) {
    out.report["error"] = e.what();
    switch (e.code()) {
      case ErrorCode::BoundViolation:
        out.exit_code = 2;
        break;
      case ErrorCode::Undecided:
        out.exit_code = 3;
        break;
      default:
        out.exit_code = 1;
        break;
    }
  }

  if (!alt_rendered.empty() && out.exit_code == 0)
    out.rendered = alt_rendered;
  else if (cfg.format == "text")
    out.rendered = render_text(out.report);
  else
    out.rendered = out.report.dump(2) + "\n";
  if (!cfg.output_path.empty()) write_file(cfg.output_path, out.rendered);
  return out;
}

}  // namespace ue
