#include "pae/match/matcher.hpp"

#include "pae/error.hpp"
#include "pae/kernels/similarity.hpp"

namespace pae::match {

namespace {

std::vector<double> flatten(const std::vector<EmbeddingVector>& vs, std::size_t dim) {
  std::vector<double> out;
  out.reserve(vs.size() * dim);
  for (const auto& v : vs) {
    if (v.values.size() != dim) throw Error(ErrorCode::DimensionMismatch, "embedding dimensions differ");
    if (kernels::l2_norm(v.values) == 0.0) throw Error(ErrorCode::ZeroVector, "all-zero embedding");
    out.insert(out.end(), v.values.begin(), v.values.end());
  }
  return out;
}

std::vector<EmbeddingVector> embed_labelled(EmbeddingCache& cache, const std::vector<std::string>& texts) {
  try {
    return cache.get(texts);
  } catch (const Error& e) {
    // Narrow down to the first string that fails on its own.
    for (const auto& t : texts) {
      try {
        cache.get({t});
      } catch (const Error& one) {
        throw Error(one.code(), "while embedding '" + t + "': " + one.what());
      }
    }
    throw;
  }
}

}  // namespace

std::vector<MatchResult> match_attributes(const normalize::MergedPageAttributes& predicted, const Catalog& catalog,
                                          EmbeddingCache& cache, double threshold) {
  if (!(threshold >= 0.0 && threshold <= 1.0))
    throw Error(ErrorCode::ConfigInvalid, "threshold must lie in [0, 1]");
  std::vector<MatchResult> out;
  for (auto key : extract::kAllAttributes) {
    if (!predicted.attributes.mentioned(key)) continue;
    const auto& preds = predicted.attributes.values(key);
    std::vector<std::string> lane;
    for (const auto& e : catalog)
      if (e.attribute == key) lane.push_back(e.value);
    if (lane.empty()) {
      for (const auto& p : preds) out.push_back({p, key, std::nullopt, 0.0, false});
      continue;
    }
    const auto pv = embed_labelled(cache, preds);
    const auto cv = embed_labelled(cache, lane);
    const std::size_t dim = pv.front().values.size();
    const auto sims = kernels::cosine_matrix(flatten(pv, dim), flatten(cv, dim), dim);
    for (std::size_t i = 0; i < preds.size(); ++i) {
      std::size_t best = 0;
      for (std::size_t j = 1; j < lane.size(); ++j)
        if (sims[i * lane.size() + j] > sims[i * lane.size() + best]) best = j;
      const double s = sims[i * lane.size() + best];
      out.push_back({preds[i], key, lane[best], s, s >= threshold});
    }
  }
  return out;
}

std::vector<MatchResult> match_attributes(const normalize::MergedPageAttributes& predicted, const Catalog& catalog,
                                          EmbeddingProvider& provider, double threshold) {
  EmbeddingCache cache(provider);
  return match_attributes(predicted, catalog, cache, threshold);
}

}  // namespace pae::match
