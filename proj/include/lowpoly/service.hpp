#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>

namespace lowpoly::service {

struct ServiceOptions {
  std::size_t max_upload_bytes = 32u << 20;
  std::size_t cache_bytes = 256u << 20;  // shared by uploads and results
  std::string static_dir;                // tuner UI bundle served at "/"
  unsigned pipeline_threads = 1;
};

/// Transport-independent reply.
struct Reply {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
  std::map<std::string, std::string> headers;
};

/// Hex SHA-256 of `bytes`.
std::string content_hash(std::string_view bytes);

std::string base64_encode(std::span<const std::uint8_t> bytes);

/// HTTP facade over run_pipeline.
///
///   POST /images                   multipart field "image" (or raw body)
///                                  -> {image_id, width, height}; 413, 415
///   GET  /images/<id>.png          original image
///   POST /triangulate              {image_id, config} -> result JSON; 404, 422, 500
///   GET  /results/<rid>/<stage>.png  gray | sharp | sobel | wire | final
///   GET  /healthz
///
/// Uploads are keyed by content hash and results by (image_id, config), so
/// repeated requests are served from cache with identical bodies.
class Service {
 public:
  explicit Service(ServiceOptions options = {});
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  Reply upload(std::string_view bytes);
  Reply original_png(const std::string& image_id);
  Reply triangulate(std::string_view request_body);
  Reply stage_png(const std::string& result_id, const std::string& stage);

  /// Blocking.
  bool listen(const std::string& host, int port);
  /// Binds an ephemeral port and returns it (-1 on failure); then call listen_after_bind.
  int bind_to_any_port(const std::string& host);
  bool listen_after_bind();
  void wait_until_ready() const;
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace lowpoly::service
