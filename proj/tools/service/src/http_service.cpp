#include "evidence/service/http_service.hpp"

#include <httplib.h>

#include <nlohmann/json.hpp>

#include "evidence/diagnosis.hpp"
#include "evidence/error.hpp"
#include "evidence/service/report.hpp"

namespace evidence::service {
namespace {

constexpr const char* kJson = "application/json";

constexpr const char* kPlaceholderPage = R"(<!doctype html>
<html><head><meta charset="utf-8"><title>dsdiag</title></head>
<body>
<h1>dsdiag service</h1>
<p>No UI bundle is mounted. Start the server with <code>--ui &lt;dir&gt;</code> to serve one.</p>
<p>API: <code>GET /api/kb</code>, <code>POST /api/diagnose</code>.</p>
</body></html>
)";

std::string error_body(const std::string& message) {
  return nlohmann::json{{"error", message}}.dump();
}

}  // namespace

HttpReply handle_diagnose(const KnowledgeBase& kb, std::string_view body) {
  DiagnoseRequest req;
  try {
    req = parse_request(nlohmann::json::parse(body));
  } catch (const nlohmann::json::exception& e) {
    return {400, error_body(std::string("invalid request: ") + e.what())};
  } catch (const std::invalid_argument& e) {
    return {400, error_body(std::string("invalid request: ") + e.what())};
  }
  try {
    const auto d = diagnose(kb, req.condition, req.symptoms);
    return {200, to_json(d, req.trace).dump()};
  } catch (const Error& e) {
    return {400, error_body(e.what())};
  }
}

HttpReply handle_kb(const KnowledgeBase& kb) { return {200, kb_summary(kb).dump()}; }

HttpService::HttpService(KnowledgeBase kb, std::optional<std::string> ui_dir)
    : kb_(std::make_shared<const KnowledgeBase>(std::move(kb))),
      server_(std::make_unique<httplib::Server>()) {
  auto kb_ptr = kb_;
  server_->Get("/api/kb", [kb_ptr](const httplib::Request&, httplib::Response& res) {
    const auto reply = handle_kb(*kb_ptr);
    res.status = reply.status;
    res.set_content(reply.body, kJson);
  });
  server_->Post("/api/diagnose", [kb_ptr](const httplib::Request& req, httplib::Response& res) {
    const auto reply = handle_diagnose(*kb_ptr, req.body);
    res.status = reply.status;
    res.set_content(reply.body, kJson);
  });
  if (!ui_dir || !server_->set_mount_point("/", *ui_dir)) {
    server_->Get("/", [](const httplib::Request&, httplib::Response& res) {
      res.set_content(kPlaceholderPage, "text/html; charset=utf-8");
    });
  }
}

HttpService::~HttpService() { stop(); }

bool HttpService::bind(const std::string& host, int port) { return server_->bind_to_port(host, port); }

int HttpService::bind_any_port(const std::string& host) { return server_->bind_to_any_port(host); }

bool HttpService::listen() { return server_->listen_after_bind(); }

void HttpService::stop() {
  if (server_->is_running()) server_->stop();
}

void HttpService::wait_until_ready() const { server_->wait_until_ready(); }

}  // namespace evidence::service
