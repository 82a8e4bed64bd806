#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "evidence/knowledge_base.hpp"

namespace httplib {
class Server;
}

namespace evidence::service {

struct HttpReply {
  int status;
  std::string body;  // JSON document
};

/// POST /api/diagnose without the transport: 200 with a DiagnoseResponse, or
/// 400 with {"error": "..."} for malformed requests and engine input errors.
HttpReply handle_diagnose(const KnowledgeBase& kb, std::string_view body);

/// GET /api/kb.
HttpReply handle_kb(const KnowledgeBase& kb);

/// Stateless JSON service over one read-only knowledge base. Requests are
/// served concurrently by the underlying thread pool.
class HttpService {
 public:
  explicit HttpService(KnowledgeBase kb, std::optional<std::string> ui_dir = std::nullopt);
  ~HttpService();

  HttpService(const HttpService&) = delete;
  HttpService& operator=(const HttpService&) = delete;

  bool bind(const std::string& host, int port);
  /// Returns the chosen port, or -1 on failure.
  int bind_any_port(const std::string& host);
  /// Blocks serving requests until stop() is called.
  bool listen();
  void stop();
  void wait_until_ready() const;

 private:
  std::shared_ptr<const KnowledgeBase> kb_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace evidence::service
