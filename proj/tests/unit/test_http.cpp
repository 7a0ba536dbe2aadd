#include <thread>

#include "doctest.h"
#include "httplib.h"
#include "json.hpp"
#include "pae/error.hpp"
#include "pae/extract/llm.hpp"
#include "pae/match/embedding.hpp"

using namespace pae;

namespace {

// Local server on an ephemeral port, stopped on destruction.
struct LocalServer {
  httplib::Server server;
  std::thread thread;
  int port = 0;
  void start() {
    port = server.bind_to_any_port("127.0.0.1");
    thread = std::thread([this] { server.listen_after_bind(); });
    server.wait_until_ready();
  }
  ~LocalServer() {
    server.stop();
    if (thread.joinable()) thread.join();
  }
  std::string url(const std::string& path) const { return "http://127.0.0.1:" + std::to_string(port) + path; }
};

}  // namespace

TEST_SUITE("http") {
  TEST_CASE("llm backend request and response") {
    LocalServer s;
    nlohmann::json seen;
    std::string auth;
    int status = 200;
    s.server.Post("/v1/generate", [&](const httplib::Request& req, httplib::Response& res) {
      seen = nlohmann::json::parse(req.body);
      auth = req.get_header_value("Authorization");
      res.status = status;
      res.set_content(R"({"text": "Color: Olive"})", "application/json");
    });
    s.start();

    extract::HttpLlmBackend backend({s.url("/v1/generate"), "m1", "secret", 5});
    extract::LlmRequest req;
    req.prompt = "Generate me color";
    req.image = extract::InlineImage{"image/png", "iVBOR"};
    extract::ModelParams params;
    params.temperature = 0.3;
    CHECK(backend.complete(req, params) == "Color: Olive");
    CHECK(seen["model"] == "m1");
    CHECK(seen["temperature"] == 0.3);
    CHECK(seen["parts"][0]["text"] == "Generate me color");
    CHECK(seen["parts"][1]["inlineData"]["mimeType"] == "image/png");
    CHECK(seen["parts"][1]["inlineData"]["data"] == "iVBOR");
    CHECK(auth == "Bearer secret");

    status = 503;
    try {
      backend.complete(req, params);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::BackendUnavailable);
    }
    status = 400;
    try {
      backend.complete(req, params);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::BackendRejected);
    }
  }

  TEST_CASE("unreachable llm endpoint is transient") {
    LocalServer s;
    s.start();
    const auto url = s.url("/x");
    s.server.stop();
    s.thread.join();
    extract::HttpLlmBackend backend({url, "m", "", 1});
    try {
      backend.complete({}, {});
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::BackendUnavailable);
    }
  }

  TEST_CASE("embedding provider pools per-token vectors") {
    LocalServer s;
    s.server.Post("/embed", [&](const httplib::Request& req, httplib::Response& res) {
      const auto body = nlohmann::json::parse(req.body);
      nlohmann::json vectors = nlohmann::json::array();
      for (const auto& t : body["texts"]) {
        if (t == "flat")
          vectors.push_back({1.0, 2.0});
        else
          vectors.push_back({{1.0, 0.0}, {3.0, 4.0}});
      }
      res.set_content(nlohmann::json{{"vectors", vectors}}.dump(), "application/json");
    });
    s.start();
    match::HttpEmbeddingProvider p({s.url("/embed"), "e1", "", 5});
    const auto out = p.embed_batch({"flat", "tokens"});
    REQUIRE(out.size() == 2);
    CHECK(out[0].values == std::vector<double>{1.0, 2.0});
    CHECK(out[1].values == std::vector<double>{2.0, 2.0});
    CHECK(p.dim() == 2);
    CHECK(p.id() == "http:e1");
  }

  TEST_CASE("url splitting") {
    const auto u = extract::split_url("https://api.example.com:8443/v1/models/x:generate");
    CHECK(u.scheme_host_port == "https://api.example.com:8443");
    CHECK(u.path == "/v1/models/x:generate");
    CHECK(extract::split_url("http://h").path == "/");
    CHECK_THROWS_AS(extract::split_url("nohost"), Error);
  }
}
