// HTTP service for the interactive tuner.

#include <csignal>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lowpoly/service.hpp"

namespace {
lowpoly::service::Service* g_service = nullptr;
void on_signal(int) {
  if (g_service) g_service->stop();
}
}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Low-poly triangulation HTTP service"};
  std::string host = "127.0.0.1";
  int port = 8080;
  std::size_t cache_mb = 256;
  std::size_t max_upload_mb = 32;
  std::string static_dir = "ui/dist";
  unsigned threads = 1;
  app.add_option("--host", host)->capture_default_str();
  app.add_option("--port", port)->capture_default_str()->check(CLI::Range(0, 65535));
  app.add_option("--cache-mb", cache_mb, "byte budget for upload and result caches")->capture_default_str();
  app.add_option("--max-upload-mb", max_upload_mb)->capture_default_str();
  app.add_option("--static-dir", static_dir, "tuner UI bundle served at /")->capture_default_str();
  app.add_option("--pipeline-threads", threads, "filter threads per request")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  lowpoly::service::ServiceOptions opts;
  opts.cache_bytes = cache_mb << 20;
  opts.max_upload_bytes = max_upload_mb << 20;
  opts.static_dir = static_dir;
  opts.pipeline_threads = threads;
  lowpoly::service::Service service(opts);
  g_service = &service;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);

  std::cerr << "listening on http://" << host << ":" << port << "\n";
  if (!service.listen(host, port)) {
    std::cerr << "failed to listen on " << host << ":" << port << "\n";
    return 4;
  }
  return 0;
}
