// Command-line front end: triangulate one image, or sweep (t, d) grids.
//
//   triangulate <input> [--threshold N] [--density N] [--seed N]
//               [--random-points N] [--no-frame] [--dump-stages] [--out PATH]
//   triangulate sweep <input> --thresholds 25,50,75 --densities 35,60,85
//               [--csv PATH] [--json PATH]
//
// Exit codes: 0 success, 2 parameter error, 3 degenerate input, 4 I/O error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lowpoly/codec.hpp"
#include "lowpoly/error.hpp"
#include "lowpoly/filters.hpp"
#include "lowpoly/mesh_json.hpp"
#include "lowpoly/pipeline.hpp"

namespace fs = std::filesystem;
using namespace lowpoly;

namespace {

constexpr int kExitParameter = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitIo = 4;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parameter: return kExitParameter;
    case ErrorKind::Degenerate: return kExitDegenerate;
    case ErrorKind::Decode:
    case ErrorKind::Io: return kExitIo;
  }
  return 1;
}

void write_text(const fs::path& path, const std::string& text) {
  write_file(path, std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

void write_png(const fs::path& path, const RasterImage& img) { write_file(path, encode_png(img)); }

struct CommonOptions {
  std::string input;
  int threshold = kDefaultThreshold;
  int density = kDefaultDensity;
  std::uint64_t seed = 0;
  std::optional<int> random_points;
  bool no_frame = false;
  unsigned threads = 0;

  PipelineConfig config() const {
    PipelineConfig cfg;
    cfg.threshold = threshold;
    cfg.density = density;
    cfg.seed = seed;
    cfg.random_points = random_points;
    cfg.include_frame = !no_frame;
    cfg.threads = threads;
    return cfg;
  }
};

void add_common(CLI::App& app, CommonOptions& opts, bool with_td) {
  app.add_option("input", opts.input, "PNG or JPEG image")->required();
  if (with_td) {
    app.add_option("-t,--threshold", opts.threshold, "Sobel magnitude threshold [0, 255]")->capture_default_str();
    app.add_option("-d,--density", opts.density, "keep one vertex per d edge pixels")->capture_default_str();
  }
  app.add_option("--seed", opts.seed, "sampling seed")->capture_default_str();
  app.add_option("--random-points", opts.random_points, "use N uniformly random vertices instead of edges");
  app.add_flag("--no-frame", opts.no_frame, "do not add the four canvas corners");
  app.add_option("--threads", opts.threads, "worker threads for filters (0 = all cores)")->capture_default_str();
}

int run_single(const CommonOptions& opts, bool dump_stages, const std::string& out_arg) {
  const fs::path input(opts.input);
  const std::string stem = input.stem().string();
  const fs::path out = out_arg.empty() ? fs::path(stem + "_final.png") : fs::path(out_arg);

  PipelineConfig cfg = opts.config();
  cfg.dump_stages = dump_stages;
  const RasterImage img = decode_image(read_file(input));
  const PipelineResult result = run_pipeline(img, cfg);

  if (out.has_parent_path()) fs::create_directories(out.parent_path());
  write_png(out, result.image);

  if (result.stages) {
    const fs::path dir = out.has_parent_path() ? out.parent_path() : fs::path(".");
    auto named = [&](const std::string& suffix) { return dir / (stem + suffix); };
    write_png(named("_gray.png"), gray_to_rgb(result.stages->gray));
    write_png(named("_sharp.png"), gray_to_rgb(result.stages->sharp));
    write_png(named("_sobel.png"), gray_to_rgb(edge_map_image(result.stages->edges)));
    write_png(named("_wire.png"), result.stages->wireframe);
    write_png(named("_final.png"), result.image);
    write_text(named("_mesh.json"), mesh_to_json(result.mesh).dump() + "\n");
    nlohmann::json stats = stats_to_json(result.stats, cfg, img.width(), img.height());
    stats["timings_ms"] = timings_to_json(result.stats);
    write_text(named("_stats.json"), stats.dump(2) + "\n");
  }

  std::cout << "edge_pixels=" << result.stats.edge_pixel_count << " vertices=" << result.stats.vertex_count
            << " triangles=" << result.stats.triangle_count << " -> " << out.string() << "\n";
  return 0;
}

int run_sweep(const CommonOptions& opts, const std::vector<int>& thresholds, const std::vector<int>& densities,
              const std::string& csv_path, const std::string& json_path) {
  const RasterImage img = decode_image(read_file(opts.input));
  const auto cells = sweep(img, thresholds, densities, opts.config());
  const std::string csv = sweep_to_csv(cells, opts.seed);
  if (csv_path.empty() || csv_path == "-") {
    std::cout << csv;
  } else {
    write_text(csv_path, csv);
  }
  if (!json_path.empty()) write_text(json_path, sweep_to_json(cells, opts.seed).dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge-guided low-poly image triangulation"};
  app.require_subcommand(0, 1);

  CommonOptions single;
  bool dump_stages = false;
  std::string out;
  add_common(app, single, true);
  app.add_flag("--dump-stages", dump_stages, "write gray/sharp/sobel/wire/final PNGs plus mesh and stats JSON");
  app.add_option("-o,--out", out, "final image path (default <stem>_final.png)");

  CommonOptions swept;
  std::vector<int> thresholds{kDefaultThreshold};
  std::vector<int> densities{kDefaultDensity};
  std::string csv_path;
  std::string json_path;
  auto* sweep_cmd = app.add_subcommand("sweep", "run a grid of thresholds x densities and tabulate counts");
  add_common(*sweep_cmd, swept, false);
  sweep_cmd->add_option("--thresholds", thresholds, "comma-separated thresholds")->delimiter(',')->capture_default_str();
  sweep_cmd->add_option("--densities", densities, "comma-separated densities")->delimiter(',')->capture_default_str();
  sweep_cmd->add_option("--csv", csv_path, "CSV output path (default stdout)");
  sweep_cmd->add_option("--json", json_path, "optional JSON output path");

  // The top-level positional is only required when no subcommand is given.
  app.get_option("input")->required(false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParameter;
  }

  try {
    if (*sweep_cmd) return run_sweep(swept, thresholds, densities, csv_path, json_path);
    if (single.input.empty()) {
      std::cerr << "input image is required\n" << app.help();
      return kExitParameter;
    }
    return run_single(single, dump_stages, out);
  } catch (const Error& e) {
    std::cerr << "error";
    if (!e.stage().empty()) std::cerr << " [" << e.stage() << "]";
    std::cerr << ": " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}
