#pragma once

#include <chrono>
#include <condition_variable>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "pae/extract/attributes.hpp"
#include "pae/extract/prompt.hpp"

namespace pae::extract {

struct ModelParams {
  double temperature = 0.2;
  int max_retries = 2;
  std::string backend_id = "mock";
};

// Throws Error(ConfigInvalid) when temperature is outside [0, 1] or
// max_retries is negative.
void validate(const ModelParams& params);

// Backends signal transient failures with Error(BackendUnavailable) and
// permanent ones with Error(BackendRejected).
class LlmBackend {
 public:
  virtual ~LlmBackend() = default;
  virtual std::string id() const = 0;
  virtual bool concurrent() const { return true; }
  virtual std::string complete(const LlmRequest& request, const ModelParams& params) = 0;
};

struct RetryPolicy {
  std::chrono::milliseconds base{1000};
  double factor = 2.0;
  std::function<void(std::chrono::milliseconds)> sleep;  // defaults to this_thread::sleep_for
};

// Retries transient failures up to params.max_retries times with
// exponential backoff (base, base*factor, ...).
LlmResponse query_llm(LlmBackend& backend, const LlmRequest& request, const ModelParams& params,
                      const RetryPolicy& policy = {});

// Caps in-flight calls into `inner` at `limit`; a backend that is not
// concurrent is capped at one regardless.
class LimitedBackend final : public LlmBackend {
 public:
  LimitedBackend(LlmBackend& inner, int limit);
  std::string id() const override { return inner_.id(); }
  std::string complete(const LlmRequest& request, const ModelParams& params) override;

 private:
  LlmBackend& inner_;
  int limit_;
  int in_flight_ = 0;
  std::mutex mu_;
  std::condition_variable cv_;
};

// Hermetic backend. Text requests: every lexicon phrase found in the
// payload (case-insensitively, on word boundaries, whitespace runs
// collapsed) contributes its value under its attribute. Image requests: the
// SHA-256 of the decoded image selects a canned response; unknown images
// get an empty answer. Temperature is ignored.
struct LexiconEntry {
  std::string match;
  std::string value;
};

struct MockLexicon {
  std::map<AttributeKey, std::vector<LexiconEntry>> text;
  std::map<std::string, std::string> images;  // sha256 hex -> response
};

// JSON: {"text": {"Color": ["phrase", {"match": "...", "value": "..."}]},
//        "images": {"<sha256 hex>": "Color: ...\n..."}}
MockLexicon load_lexicon(const std::string& path);
MockLexicon parse_lexicon(const std::string& json_text);

class MockLlmBackend final : public LlmBackend {
 public:
  explicit MockLlmBackend(MockLexicon lexicon) : lexicon_(std::move(lexicon)) {}
  std::string id() const override { return "mock"; }
  std::string complete(const LlmRequest& request, const ModelParams& params) override;

 private:
  MockLexicon lexicon_;
};

// POSTs {"model", "temperature", "parts": [{"text"}, {"inlineData": {"mimeType", "data"}}]}
// to `endpoint` and reads {"text"} back. 408/429/5xx and transport errors
// are transient; other non-200 statuses are rejections.
struct HttpBackendConfig {
  std::string endpoint;  // http(s)://host[:port]/path
  std::string model;
  std::string token;  // sent as "Authorization: Bearer ..." when non-empty
  int timeout_seconds = 60;
};

class HttpLlmBackend final : public LlmBackend {
 public:
  explicit HttpLlmBackend(HttpBackendConfig config);
  std::string id() const override { return "http"; }
  std::string complete(const LlmRequest& request, const ModelParams& params) override;

 private:
  HttpBackendConfig config_;
};

std::string llm_request_body(const LlmRequest& request, const ModelParams& params, const std::string& model);

struct UrlParts {
  std::string scheme_host_port;
  std::string path;
};
UrlParts split_url(const std::string& url);

}  // namespace pae::extract
