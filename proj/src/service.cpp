#include "lowpoly/service.hpp"

#include <openssl/evp.h>

#include <array>
#include <filesystem>
#include <iomanip>
#include <sstream>

#include <httplib.h>
#include <json.hpp>

#include "lowpoly/codec.hpp"
#include "lowpoly/error.hpp"
#include "lowpoly/lru_cache.hpp"
#include "lowpoly/mesh_json.hpp"
#include "lowpoly/pipeline.hpp"

namespace lowpoly::service {

using nlohmann::json;

std::string content_hash(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr)) {
    throw Error(ErrorKind::Io, "sha256 failed");
  }
  std::ostringstream hex;
  hex << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < len; ++i) hex << std::setw(2) << static_cast<int>(digest[i]);
  return hex.str();
}

std::string base64_encode(std::span<const std::uint8_t> bytes) {
  std::string out(4 * ((bytes.size() + 2) / 3), '\0');
  const int n = EVP_EncodeBlock(reinterpret_cast<unsigned char*>(out.data()), bytes.data(), static_cast<int>(bytes.size()));
  out.resize(static_cast<std::size_t>(n));
  return out;
}

namespace {

const char* const kStages[] = {"gray", "sharp", "sobel", "wire", "final"};

struct CachedResult {
  std::string body;
  std::string server_timing;
  std::map<std::string, std::vector<std::uint8_t>, std::less<>> stage_pngs;
};

Reply json_reply(int status, const json& doc) {
  Reply r;
  r.status = status;
  r.body = doc.dump();
  return r;
}

Reply error_reply(int status, const std::string& message, const std::string& stage = {}) {
  json doc = {{"error", message}};
  if (!stage.empty()) doc["stage"] = stage;
  return json_reply(status, doc);
}

Reply png_reply(std::vector<std::uint8_t> bytes) {
  Reply r;
  r.content_type = "image/png";
  r.body.assign(bytes.begin(), bytes.end());
  return r;
}

std::string server_timing(const RunStats& stats) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3);
  for (std::size_t i = 0; i < stats.timings.size(); ++i) {
    if (i) out << ", ";
    out << stats.timings[i].stage << ";dur=" << stats.timings[i].ms;
  }
  return out.str();
}

std::span<const std::uint8_t> as_bytes(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

}  // namespace

struct Service::Impl {
  explicit Impl(ServiceOptions opts)
      : options(std::move(opts)), images(options.cache_bytes / 2), results(options.cache_bytes - options.cache_bytes / 2) {}

  ServiceOptions options;
  LruCache<RasterImage> images;
  LruCache<CachedResult> results;
  httplib::Server http;

  void install_routes(Service& self);
};

Service::Service(ServiceOptions options) : impl_(std::make_unique<Impl>(std::move(options))) {
  impl_->install_routes(*this);
}

Service::~Service() { stop(); }

Reply Service::upload(std::string_view bytes) {
  if (bytes.size() > impl_->options.max_upload_bytes) {
    return error_reply(413, "upload of " + std::to_string(bytes.size()) + " bytes exceeds the " +
                                std::to_string(impl_->options.max_upload_bytes) + " byte limit");
  }
  const std::string id = content_hash(bytes).substr(0, 32);
  auto img = impl_->images.get(id);
  if (!img) {
    try {
      auto decoded = std::make_shared<const RasterImage>(decode_image(as_bytes(bytes)));
      require_pipeline_size(*decoded);
      img = decoded;
    } catch (const Error& e) {
      return error_reply(e.kind() == ErrorKind::Decode ? 415 : 422, e.what());
    }
    impl_->images.put(id, img, img->pixels().size_bytes());
  }
  return json_reply(200, {{"image_id", id}, {"width", img->width()}, {"height", img->height()}});
}

Reply Service::original_png(const std::string& image_id) {
  auto img = impl_->images.get(image_id);
  if (!img) return error_reply(404, "unknown image_id '" + image_id + "'");
  return png_reply(encode_png(*img));
}

Reply Service::triangulate(std::string_view request_body) {
  json req;
  try {
    req = json::parse(request_body);
  } catch (const json::parse_error& e) {
    return error_reply(400, std::string("request body is not valid JSON: ") + e.what());
  }
  if (!req.is_object() || !req.contains("image_id") || !req["image_id"].is_string()) {
    return error_reply(422, "request must be an object with a string image_id");
  }
  for (const auto& [key, _] : req.items()) {
    if (key != "image_id" && key != "config") return error_reply(422, "unknown request field '" + key + "'");
  }
  const std::string image_id = req["image_id"].get<std::string>();
  PipelineConfig cfg;
  try {
    cfg = config_from_json(req.value("config", json(nullptr)));
  } catch (const Error& e) {
    return error_reply(422, e.what());
  }
  cfg.threads = impl_->options.pipeline_threads;

  auto img = impl_->images.get(image_id);
  if (!img) return error_reply(404, "unknown image_id '" + image_id + "'");

  const std::string result_id = content_hash(image_id + "\n" + config_to_json(cfg).dump()).substr(0, 32);
  auto cached = impl_->results.get(result_id);
  if (!cached) {
    PipelineResult run;
    try {
      run = run_pipeline(*img, cfg);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Parameter && e.stage() == "validate") return error_reply(422, e.what());
      return error_reply(500, e.what(), e.stage());
    }
    auto entry = std::make_shared<CachedResult>();
    const auto final_png = encode_png(run.image);
    json doc = {
        {"image_id", image_id},
        {"result_id", result_id},
        {"width", img->width()},
        {"height", img->height()},
        {"image_png_base64", base64_encode(final_png)},
        {"mesh", mesh_to_json(run.mesh)},
        {"stats", stats_to_json(run.stats, cfg, img->width(), img->height())},
    };
    std::size_t bytes = 0;
    if (run.stages) {
      entry->stage_pngs["gray"] = encode_png(gray_to_rgb(run.stages->gray));
      entry->stage_pngs["sharp"] = encode_png(gray_to_rgb(run.stages->sharp));
      entry->stage_pngs["sobel"] = encode_png(gray_to_rgb(edge_map_image(run.stages->edges)));
      entry->stage_pngs["wire"] = encode_png(run.stages->wireframe);
      entry->stage_pngs["final"] = final_png;
      json urls = json::object();
      for (const char* s : kStages) urls[s] = "/results/" + result_id + "/" + s + ".png";
      doc["stages"] = std::move(urls);
      for (const auto& [_, png] : entry->stage_pngs) bytes += png.size();
    }
    entry->body = doc.dump();
    entry->server_timing = server_timing(run.stats);
    bytes += entry->body.size();
    impl_->results.put(result_id, entry, bytes);
    cached = entry;
  }
  Reply r;
  r.body = cached->body;
  r.headers["Server-Timing"] = cached->server_timing;
  return r;
}

Reply Service::stage_png(const std::string& result_id, const std::string& stage) {
  auto cached = impl_->results.get(result_id);
  if (!cached) return error_reply(404, "unknown or evicted result '" + result_id + "'");
  auto it = cached->stage_pngs.find(stage);
  if (it == cached->stage_pngs.end()) return error_reply(404, "no stage '" + stage + "' for this result");
  return png_reply(it->second);
}

void Service::Impl::install_routes(Service& self) {
  auto send = [](httplib::Response& res, const Reply& r) {
    res.status = r.status;
    for (const auto& [k, v] : r.headers) res.set_header(k, v);
    res.set_content(r.body, r.content_type);
  };

  // Leave room for multipart framing; the file itself is checked in upload().
  http.set_payload_max_length(options.max_upload_bytes + (64u << 10));

  http.Post("/images", [&self, send](const httplib::Request& req, httplib::Response& res) {
    if (req.is_multipart_form_data()) {
      if (req.has_file("image")) return send(res, self.upload(req.get_file_value("image").content));
      if (!req.files.empty()) return send(res, self.upload(req.files.begin()->second.content));
      return send(res, error_reply(415, "multipart upload has no file part"));
    }
    send(res, self.upload(req.body));
  });
  http.Get(R"(/images/([0-9a-f]+)\.png)", [&self, send](const httplib::Request& req, httplib::Response& res) {
    send(res, self.original_png(req.matches[1]));
  });
  http.Post("/triangulate", [&self, send](const httplib::Request& req, httplib::Response& res) {
    send(res, self.triangulate(req.body));
  });
  http.Get(R"(/results/([0-9a-f]+)/([a-z]+)\.png)", [&self, send](const httplib::Request& req, httplib::Response& res) {
    send(res, self.stage_png(req.matches[1], req.matches[2]));
  });
  http.Get("/healthz", [](const httplib::Request&, httplib::Response& res) { res.set_content("ok", "text/plain"); });

  if (!options.static_dir.empty() && std::filesystem::is_directory(options.static_dir)) {
    http.set_mount_point("/", options.static_dir);
  } else {
    http.Get("/", [](const httplib::Request&, httplib::Response& res) {
      res.set_content("tuner UI bundle not installed; API is available under /images and /triangulate\n",
                      "text/plain");
    });
  }
}

bool Service::listen(const std::string& host, int port) { return impl_->http.listen(host, port); }

int Service::bind_to_any_port(const std::string& host) { return impl_->http.bind_to_any_port(host); }

bool Service::listen_after_bind() { return impl_->http.listen_after_bind(); }

void Service::wait_until_ready() const { impl_->http.wait_until_ready(); }

void Service::stop() {
  if (impl_ && impl_->http.is_running()) impl_->http.stop();
}

}  // namespace lowpoly::service
