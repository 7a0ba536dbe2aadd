#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace pae::match {

struct EmbeddingVector {
  std::vector<double> values;
  std::size_t dim = 0;
  std::string provider_id;
};

class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;
  virtual std::string id() const = 0;
  virtual std::size_t dim() const = 0;
  // `texts` are non-empty. Throws Error(ProviderUnavailable) on failure.
  virtual std::vector<EmbeddingVector> embed_batch(const std::vector<std::string>& texts) = 0;
};

// Throws Error(EmptyText) for an empty or all-whitespace string.
EmbeddingVector embed(EmbeddingProvider& provider, const std::string& text);

// Throws Error(DimensionMismatch) or Error(ZeroVector); clamps to [-1, 1].
double cosine_similarity(const EmbeddingVector& a, const EmbeddingVector& b);

// Lower-cased, whitespace-collapsed text padded with one space each side;
// every character trigram adds 1 to bucket fnv1a(trigram) % dim; the
// result is L2-normalized.
class TrigramProvider final : public EmbeddingProvider {
 public:
  explicit TrigramProvider(std::size_t dim = 256);
  std::string id() const override { return "trigram"; }
  std::size_t dim() const override { return dim_; }
  std::vector<EmbeddingVector> embed_batch(const std::vector<std::string>& texts) override;

  EmbeddingVector embed_one(const std::string& text) const;

 private:
  std::size_t dim_;
};

// POSTs {"model", "texts": [...]} and reads {"vectors": [...]}. Each vector
// is either flat ([dim]) or per-token ([tokens][dim]); per-token outputs are
// mean-pooled.
struct HttpEmbeddingConfig {
  std::string endpoint;
  std::string model;
  std::string token;  // PAE_EMBED_TOKEN
  int timeout_seconds = 60;
};

class HttpEmbeddingProvider final : public EmbeddingProvider {
 public:
  explicit HttpEmbeddingProvider(HttpEmbeddingConfig config);
  std::string id() const override { return "http:" + config_.model; }
  std::size_t dim() const override { return dim_; }
  std::vector<EmbeddingVector> embed_batch(const std::vector<std::string>& texts) override;

 private:
  HttpEmbeddingConfig config_;
  std::size_t dim_ = 0;  // learned from the first response
  std::mutex mu_;
};

// Per-string cache shared across pages of one run.
class EmbeddingCache {
 public:
  explicit EmbeddingCache(EmbeddingProvider& provider) : provider_(provider) {}
  EmbeddingProvider& provider() { return provider_; }
  // Embeds the strings not cached yet in one batch, then returns all of them.
  std::vector<EmbeddingVector> get(const std::vector<std::string>& texts);
  std::size_t size() const;

 private:
  EmbeddingProvider& provider_;
  mutable std::mutex mu_;
  std::unordered_map<std::string, std::shared_ptr<const EmbeddingVector>> cache_;
};

}  // namespace pae::match
