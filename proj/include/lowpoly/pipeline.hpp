#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "lowpoly/delaunay.hpp"
#include "lowpoly/error.hpp"
#include "lowpoly/filters.hpp"
#include "lowpoly/raster.hpp"
#include "lowpoly/sampling.hpp"

namespace lowpoly {

struct PipelineConfig {
  int threshold = kDefaultThreshold;
  int density = kDefaultDensity;
  std::uint64_t seed = 0;
  std::optional<int> random_points;  // replaces edge sampling when set
  bool include_frame = true;
  bool dump_stages = false;
  unsigned threads = 0;  // 0 = hardware concurrency; never affects output

  /// Throws Error{Parameter} on out-of-range fields.
  void validate() const;
};

struct StageTiming {
  std::string stage;
  double ms = 0.0;
};

struct RunStats {
  std::size_t edge_pixel_count = 0;  // |S|
  std::size_t sampled_count = 0;     // edge or random vertices before framing
  std::size_t frame_count = 0;       // corners actually added
  std::size_t vertex_count = 0;
  std::size_t triangle_count = 0;
  std::vector<StageTiming> timings;
};

struct StageImages {
  GrayImage gray;
  GrayImage sharp;
  EdgeMap edges;
  RasterImage wireframe;
};

struct PipelineResult {
  RasterImage image;
  Triangulation mesh;
  PointSet points;
  RunStats stats;
  std::optional<StageImages> stages;  // filled when cfg.dump_stages
};

/// grayscale -> sharpen -> sobel -> threshold -> subsample (or random points)
/// -> frame -> triangulate -> color -> rasterize. Deterministic in (img, cfg).
/// Errors carry the name of the failing stage.
PipelineResult run_pipeline(const RasterImage& img, const PipelineConfig& cfg);

/// Resumes from a grayscale image of the original.
PipelineResult run_from_gray(const RasterImage& original, const GrayImage& gray, const PipelineConfig& cfg);

/// Resumes from an edge map whose offset maps into `original`.
PipelineResult run_from_edges(const RasterImage& original, const EdgeMap& edges, const PipelineConfig& cfg);

struct SweepCell {
  int threshold = 0;
  int density = 0;
  std::optional<RunStats> stats;
  std::string error;  // set when the cell failed
  std::optional<ErrorKind> error_kind;
};

/// Runs every (t, d) pair; failing cells are recorded and the sweep goes on.
/// Cells are listed threshold-major. Throws Error{Parameter} on empty lists.
std::vector<SweepCell> sweep(const RasterImage& img, std::span<const int> thresholds, std::span<const int> densities,
                             const PipelineConfig& base);

std::string sweep_to_csv(std::span<const SweepCell> cells, std::uint64_t seed);
nlohmann::json sweep_to_json(std::span<const SweepCell> cells, std::uint64_t seed);

nlohmann::json config_to_json(const PipelineConfig& cfg);

/// Reads the fields of config_to_json (all optional, defaults as in
/// PipelineConfig) and validates them. Unknown keys or wrong types throw
/// Error{Parameter}. `threads` is not part of the wire format.
PipelineConfig config_from_json(const nlohmann::json& doc);

/// Counts only; byte-stable for a given (image, config).
nlohmann::json stats_to_json(const RunStats& stats, const PipelineConfig& cfg, int width, int height);

nlohmann::json timings_to_json(const RunStats& stats);

}  // namespace lowpoly
