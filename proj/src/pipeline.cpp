#include "lowpoly/pipeline.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "lowpoly/render.hpp"
#include "parallel.hpp"

namespace lowpoly {

void PipelineConfig::validate() const {
  if (threshold < 0 || threshold > 255) {
    throw Error(ErrorKind::Parameter, "threshold must be in [0, 255], got " + std::to_string(threshold));
  }
  if (density < 1) throw Error(ErrorKind::Parameter, "density must be >= 1, got " + std::to_string(density));
  if (random_points && *random_points < 3) {
    throw Error(ErrorKind::Parameter, "random point count must be >= 3, got " + std::to_string(*random_points));
  }
}

namespace {

// Times one stage and tags any library error with the stage name.
template <typename Fn>
auto timed(const char* name, RunStats& stats, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  auto record = [&] {
    const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    stats.timings.push_back({name, ms.count()});
  };
  try {
    auto result = fn();
    record();
    return result;
  } catch (const Error& e) {
    throw Error(e.kind(), e.what(), e.stage().empty() ? name : e.stage());
  }
}

std::string combo(const PipelineConfig& cfg) {
  if (cfg.random_points) return "random_points=" + std::to_string(*cfg.random_points);
  return "t=" + std::to_string(cfg.threshold) + " d=" + std::to_string(cfg.density);
}

PipelineResult finish(const RasterImage& original, const EdgeMap& edges, const PipelineConfig& cfg, RunStats stats,
                      std::optional<StageImages> stages) {
  const int w = original.width();
  const int h = original.height();

  const ThresholdedPixels s = timed("threshold", stats, [&] { return threshold_pixels(edges, cfg.threshold); });
  stats.edge_pixel_count = s.coords.size();

  PointSet points = timed("sample", stats, [&] {
    if (cfg.random_points) return random_points(w, h, *cfg.random_points, cfg.seed);
    SamplerConfig sc;
    sc.density = cfg.density;
    sc.seed = cfg.seed;
    sc.include_frame = cfg.include_frame;
    return subsample_uniform(s, sc);
  });
  stats.sampled_count = points.size();
  if (cfg.include_frame) points = add_frame_points(std::move(points), w, h);
  stats.frame_count = points.count(Provenance::Frame);

  Triangulation mesh = timed("triangulate", stats, [&] {
    try {
      return triangulate(points);
    } catch (const Error& e) {
      throw Error(e.kind(), combo(cfg) + ": " + e.what());
    }
  });
  stats.vertex_count = mesh.vertices.size();
  stats.triangle_count = mesh.triangles.size();

  const std::vector<Rgb> colors = timed("color", stats, [&] { return triangle_colors(mesh, original); });
  RasterImage image = timed("rasterize", stats, [&] { return rasterize(mesh, colors, w, h); });
  if (stages) stages->wireframe = timed("wireframe", stats, [&] { return render_wireframe(mesh, w, h); });

  PipelineResult out;
  out.image = std::move(image);
  out.mesh = std::move(mesh);
  out.points = std::move(points);
  out.stats = std::move(stats);
  out.stages = std::move(stages);
  return out;
}

void check_inputs(const RasterImage& img, const PipelineConfig& cfg) {
  try {
    cfg.validate();
    require_pipeline_size(img);
  } catch (const Error& e) {
    throw Error(e.kind(), e.what(), "validate");
  }
}

}  // namespace

PipelineResult run_from_gray(const RasterImage& original, const GrayImage& gray, const PipelineConfig& cfg) {
  check_inputs(original, cfg);
  RunStats stats;
  GrayImage sharp = timed("sharpen", stats, [&] { return sharpen(gray, cfg.threads); });
  EdgeMap edges = timed("sobel", stats, [&] { return sobel(sharp, cfg.threads); });
  std::optional<StageImages> stages;
  if (cfg.dump_stages) stages = StageImages{gray, std::move(sharp), edges, {}};
  return finish(original, edges, cfg, std::move(stats), std::move(stages));
}

PipelineResult run_pipeline(const RasterImage& img, const PipelineConfig& cfg) {
  check_inputs(img, cfg);
  RunStats stats;
  GrayImage gray = timed("grayscale", stats, [&] { return to_grayscale(img, cfg.threads); });
  PipelineResult out = run_from_gray(img, gray, cfg);
  stats.timings.insert(stats.timings.end(), out.stats.timings.begin(), out.stats.timings.end());
  out.stats.timings = std::move(stats.timings);
  return out;
}

PipelineResult run_from_edges(const RasterImage& original, const EdgeMap& edges, const PipelineConfig& cfg) {
  check_inputs(original, cfg);
  std::optional<StageImages> stages;
  if (cfg.dump_stages) stages = StageImages{{}, {}, edges, {}};
  return finish(original, edges, cfg, RunStats{}, std::move(stages));
}

std::vector<SweepCell> sweep(const RasterImage& img, std::span<const int> thresholds, std::span<const int> densities,
                             const PipelineConfig& base) {
  if (thresholds.empty() || densities.empty()) {
    throw Error(ErrorKind::Parameter, "sweep needs at least one threshold and one density");
  }
  std::vector<SweepCell> cells;
  for (int t : thresholds)
    for (int d : densities) cells.push_back({t, d, std::nullopt, {}, std::nullopt});

  // Cells run concurrently, one single-threaded pipeline each.
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      SweepCell& cell = cells[i];
      PipelineConfig cfg = base;
      cfg.threshold = cell.threshold;
      cfg.density = cell.density;
      cfg.dump_stages = false;
      cfg.threads = 1;
      try {
        cell.stats = run_pipeline(img, cfg).stats;
      } catch (const Error& e) {
        cell.error = e.stage().empty() ? e.what() : e.stage() + ": " + e.what();
        cell.error_kind = e.kind();
      }
    }
  };
  const unsigned workers = std::min<unsigned>(detail::resolve_threads(base.threads), static_cast<unsigned>(cells.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
  }
  return cells;
}

std::string sweep_to_csv(std::span<const SweepCell> cells, std::uint64_t seed) {
  std::ostringstream out;
  out << "threshold,density,seed,edge_pixels,sampled,vertices,triangles,status,error\n";
  for (const auto& c : cells) {
    out << c.threshold << ',' << c.density << ',' << seed << ',';
    if (c.stats) {
      out << c.stats->edge_pixel_count << ',' << c.stats->sampled_count << ',' << c.stats->vertex_count << ','
          << c.stats->triangle_count << ",ok,\n";
    } else {
      std::string msg = c.error;
      for (auto& ch : msg)
        if (ch == '"') ch = '\'';
      out << ",,,,error,\"" << msg << "\"\n";
    }
  }
  return out.str();
}

nlohmann::json sweep_to_json(std::span<const SweepCell> cells, std::uint64_t seed) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& c : cells) {
    nlohmann::json row = {{"threshold", c.threshold}, {"density", c.density}, {"seed", seed}};
    if (c.stats) {
      row["edge_pixels"] = c.stats->edge_pixel_count;
      row["sampled"] = c.stats->sampled_count;
      row["vertices"] = c.stats->vertex_count;
      row["triangles"] = c.stats->triangle_count;
      row["status"] = "ok";
    } else {
      row["status"] = "error";
      row["error"] = c.error;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json config_to_json(const PipelineConfig& cfg) {
  return {
      {"threshold", cfg.threshold},
      {"density", cfg.density},
      {"seed", cfg.seed},
      {"random_points", cfg.random_points ? nlohmann::json(*cfg.random_points) : nlohmann::json(nullptr)},
      {"include_frame", cfg.include_frame},
      {"dump_stages", cfg.dump_stages},
  };
}

PipelineConfig config_from_json(const nlohmann::json& doc) {
  if (doc.is_null()) return {};
  if (!doc.is_object()) throw Error(ErrorKind::Parameter, "config must be a JSON object");
  PipelineConfig cfg;
  for (const auto& [key, value] : doc.items()) {
    auto need_int = [&] {
      if (!value.is_number_integer()) throw Error(ErrorKind::Parameter, key + " must be an integer");
      const auto v = value.get<std::int64_t>();
      if (v < INT32_MIN || v > INT32_MAX) throw Error(ErrorKind::Parameter, key + " is out of range");
      return static_cast<int>(v);
    };
    auto need_bool = [&] {
      if (!value.is_boolean()) throw Error(ErrorKind::Parameter, key + " must be a boolean");
      return value.get<bool>();
    };
    if (key == "threshold") {
      cfg.threshold = need_int();
    } else if (key == "density") {
      cfg.density = need_int();
    } else if (key == "seed") {
      if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
        throw Error(ErrorKind::Parameter, "seed must be a non-negative integer");
      }
      cfg.seed = value.get<std::uint64_t>();
    } else if (key == "random_points") {
      if (!value.is_null()) cfg.random_points = need_int();
    } else if (key == "include_frame") {
      cfg.include_frame = need_bool();
    } else if (key == "dump_stages") {
      cfg.dump_stages = need_bool();
    } else {
      throw Error(ErrorKind::Parameter, "unknown config field '" + key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

nlohmann::json stats_to_json(const RunStats& stats, const PipelineConfig& cfg, int width, int height) {
  return {
      {"edge_pixel_count", stats.edge_pixel_count},
      {"sampled_count", stats.sampled_count},
      {"frame_count", stats.frame_count},
      {"vertex_count", stats.vertex_count},
      {"triangle_count", stats.triangle_count},
      {"width", width},
      {"height", height},
      {"rng", kRngAlgorithm},
      {"config", config_to_json(cfg)},
  };
}

nlohmann::json timings_to_json(const RunStats& stats) {
  nlohmann::json t = nlohmann::json::object();
  for (const auto& s : stats.timings) t[s.stage] = s.ms;
  return t;
}

}  // namespace lowpoly
