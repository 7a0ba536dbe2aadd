#include "pae/match/embedding.hpp"

#include <algorithm>
#include <cmath>

#include "httplib.h"
#include "json.hpp"
#include "pae/error.hpp"
#include "pae/extract/llm.hpp"
#include "pae/kernels/similarity.hpp"
#include "pae/util/strings.hpp"

namespace pae::match {

namespace {

void check_text(const std::string& text) {
  if (util::trim(text).empty()) throw Error(ErrorCode::EmptyText, "cannot embed an empty string");
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

EmbeddingVector embed(EmbeddingProvider& provider, const std::string& text) {
  check_text(text);
  auto out = provider.embed_batch({text});
  if (out.size() != 1) throw Error(ErrorCode::ProviderUnavailable, "provider returned the wrong number of vectors");
  return std::move(out.front());
}

double cosine_similarity(const EmbeddingVector& a, const EmbeddingVector& b) {
  if (a.values.size() != b.values.size())
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(a.values.size()) + " vs " + std::to_string(b.values.size()) + " dimensions");
  if (kernels::l2_norm(a.values) == 0.0 || kernels::l2_norm(b.values) == 0.0)
    throw Error(ErrorCode::ZeroVector, "cosine of an all-zero vector");
  return kernels::cosine_unchecked(a.values, b.values);
}

TrigramProvider::TrigramProvider(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw Error(ErrorCode::ConfigInvalid, "embedding dimension must be positive");
}

EmbeddingVector TrigramProvider::embed_one(const std::string& text) const {
  check_text(text);
  const std::string padded = " " + util::to_lower(util::collapse_whitespace(text)) + " ";
  EmbeddingVector v{std::vector<double>(dim_, 0.0), dim_, id()};
  for (std::size_t i = 0; i + 3 <= padded.size(); ++i) v.values[fnv1a(std::string_view(padded).substr(i, 3)) % dim_] += 1.0;
  const double n = kernels::l2_norm(v.values);
  for (auto& x : v.values) x /= n;
  return v;
}

std::vector<EmbeddingVector> TrigramProvider::embed_batch(const std::vector<std::string>& texts) {
  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(embed_one(t));
  return out;
}

HttpEmbeddingProvider::HttpEmbeddingProvider(HttpEmbeddingConfig config) : config_(std::move(config)) {
  if (config_.endpoint.empty()) throw Error(ErrorCode::ConfigInvalid, "embedding endpoint URL is not set");
  extract::split_url(config_.endpoint);
}

std::vector<EmbeddingVector> HttpEmbeddingProvider::embed_batch(const std::vector<std::string>& texts) {
  for (const auto& t : texts) check_text(t);
  if (texts.empty()) return {};
  const auto url = extract::split_url(config_.endpoint);
  httplib::Client client(url.scheme_host_port);
  client.set_connection_timeout(config_.timeout_seconds);
  client.set_read_timeout(config_.timeout_seconds);
  httplib::Headers headers;
  if (!config_.token.empty()) headers.emplace("Authorization", "Bearer " + config_.token);
  nlohmann::ordered_json body;
  body["model"] = config_.model;
  body["texts"] = texts;
  auto res = client.Post(url.path, headers, body.dump(), "application/json");
  if (!res) throw Error(ErrorCode::ProviderUnavailable, "transport error: " + httplib::to_string(res.error()));
  if (res->status != 200) throw Error(ErrorCode::ProviderUnavailable, "HTTP " + std::to_string(res->status));

  std::vector<EmbeddingVector> out;
  try {
    const auto j = nlohmann::json::parse(res->body);
    const auto& vectors = j.at("vectors");
    if (!vectors.is_array() || vectors.size() != texts.size())
      throw Error(ErrorCode::ProviderUnavailable, "response has the wrong number of vectors");
    for (const auto& v : vectors) {
      EmbeddingVector e;
      e.provider_id = id();
      if (!v.empty() && v.front().is_array()) {
        for (const auto& tok : v) {
          if (e.values.empty()) e.values.assign(tok.size(), 0.0);
          if (tok.size() != e.values.size()) throw Error(ErrorCode::ProviderUnavailable, "ragged token vectors");
          for (std::size_t k = 0; k < tok.size(); ++k) e.values[k] += tok[k].get<double>();
        }
        for (auto& x : e.values) x /= static_cast<double>(v.size());
      } else {
        e.values = v.get<std::vector<double>>();
      }
      if (e.values.empty()) throw Error(ErrorCode::ProviderUnavailable, "empty vector in response");
      e.dim = e.values.size();
      out.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ProviderUnavailable, std::string("malformed response: ") + e.what());
  }
  std::lock_guard lock(mu_);
  for (const auto& e : out) {
    if (dim_ == 0) dim_ = e.dim;
    if (e.dim != dim_) throw Error(ErrorCode::DimensionMismatch, "provider changed dimension mid-run");
  }
  return out;
}

std::vector<EmbeddingVector> EmbeddingCache::get(const std::vector<std::string>& texts) {
  std::vector<std::string> missing;
  {
    std::lock_guard lock(mu_);
    for (const auto& t : texts)
      if (!cache_.count(t) && std::find(missing.begin(), missing.end(), t) == missing.end()) missing.push_back(t);
  }
  if (!missing.empty()) {
    for (const auto& t : missing) check_text(t);
    auto fresh = provider_.embed_batch(missing);
    if (fresh.size() != missing.size())
      throw Error(ErrorCode::ProviderUnavailable, "provider returned the wrong number of vectors");
    std::lock_guard lock(mu_);
    for (std::size_t i = 0; i < missing.size(); ++i)
      cache_.try_emplace(missing[i], std::make_shared<const EmbeddingVector>(std::move(fresh[i])));
  }
  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  std::lock_guard lock(mu_);
  for (const auto& t : texts) out.push_back(*cache_.at(t));
  return out;
}

std::size_t EmbeddingCache::size() const {
  std::lock_guard lock(mu_);
  return cache_.size();
}

}  // namespace pae::match
