#include "pae/extract/llm.hpp"

#include <cmath>
#include <thread>

#include "pae/error.hpp"

namespace pae::extract {

void validate(const ModelParams& params) {
  if (!(params.temperature >= 0.0 && params.temperature <= 1.0))
    throw Error(ErrorCode::ConfigInvalid, "temperature must be within [0, 1]");
  if (params.max_retries < 0) throw Error(ErrorCode::ConfigInvalid, "max_retries must be >= 0");
}

LlmResponse query_llm(LlmBackend& backend, const LlmRequest& request, const ModelParams& params,
                      const RetryPolicy& policy) {
  validate(params);
  for (int attempt = 0;; ++attempt) {
    const auto start = std::chrono::steady_clock::now();
    try {
      LlmResponse resp;
      resp.text = backend.complete(request, params);
      resp.latency_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      return resp;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BackendUnavailable) throw;
      if (attempt >= params.max_retries)
        throw Error(ErrorCode::BackendUnavailable,
                    backend.id() + " failed after " + std::to_string(attempt) + " retries: " + e.what());
      const auto delay = std::chrono::milliseconds(
          static_cast<std::int64_t>(static_cast<double>(policy.base.count()) * std::pow(policy.factor, attempt)));
      if (policy.sleep) policy.sleep(delay);
      else std::this_thread::sleep_for(delay);
    }
  }
}

LimitedBackend::LimitedBackend(LlmBackend& inner, int limit)
    : inner_(inner), limit_(inner.concurrent() ? std::max(1, limit) : 1) {}

std::string LimitedBackend::complete(const LlmRequest& request, const ModelParams& params) {
  {
    std::unique_lock lock(mu_);
    cv_.wait(lock, [&] { return in_flight_ < limit_; });
    ++in_flight_;
  }
  struct Release {
    LimitedBackend* self;
    ~Release() {
      {
        std::lock_guard lock(self->mu_);
        --self->in_flight_;
      }
      self->cv_.notify_one();
    }
  } release{this};
  return inner_.complete(request, params);
}

}  // namespace pae::extract
