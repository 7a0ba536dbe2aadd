#include "httplib.h"
#include "json.hpp"
#include "pae/error.hpp"
#include "pae/extract/llm.hpp"

namespace pae::extract {

UrlParts split_url(const std::string& url) {
  const auto scheme = url.find("://");
  if (scheme == std::string::npos) throw Error(ErrorCode::ConfigInvalid, "endpoint URL needs a scheme: " + url);
  const auto path = url.find('/', scheme + 3);
  if (path == std::string::npos) return {url, "/"};
  return {url.substr(0, path), url.substr(path)};
}

std::string llm_request_body(const LlmRequest& request, const ModelParams& params, const std::string& model) {
  nlohmann::ordered_json body;
  body["model"] = model;
  body["temperature"] = params.temperature;
  nlohmann::ordered_json parts = nlohmann::ordered_json::array();
  parts.push_back({{"text", request.prompt}});
  if (request.image)
    parts.push_back({{"inlineData", {{"mimeType", request.image->mime_type}, {"data", request.image->data}}}});
  body["parts"] = std::move(parts);
  return body.dump();
}

HttpLlmBackend::HttpLlmBackend(HttpBackendConfig config) : config_(std::move(config)) {
  if (config_.endpoint.empty()) throw Error(ErrorCode::ConfigInvalid, "LLM endpoint URL is not set");
  split_url(config_.endpoint);
}

std::string HttpLlmBackend::complete(const LlmRequest& request, const ModelParams& params) {
  const auto url = split_url(config_.endpoint);
  httplib::Client client(url.scheme_host_port);
  client.set_connection_timeout(config_.timeout_seconds);
  client.set_read_timeout(config_.timeout_seconds);
  httplib::Headers headers;
  if (!config_.token.empty()) headers.emplace("Authorization", "Bearer " + config_.token);
  auto res = client.Post(url.path, headers, llm_request_body(request, params, config_.model), "application/json");
  if (!res) throw Error(ErrorCode::BackendUnavailable, "transport error: " + httplib::to_string(res.error()));
  const int status = res->status;
  if (status == 408 || status == 429 || status >= 500)
    throw Error(ErrorCode::BackendUnavailable, "HTTP " + std::to_string(status));
  if (status != 200) throw Error(ErrorCode::BackendRejected, "HTTP " + std::to_string(status) + ": " + res->body);
  try {
    auto j = nlohmann::json::parse(res->body);
    if (!j.contains("text") || !j["text"].is_string())
      throw Error(ErrorCode::BackendRejected, "response has no string field 'text'");
    return j["text"].get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::BackendRejected, std::string("response is not JSON: ") + e.what());
  }
}

}  // namespace pae::extract
