#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pae/eval/metrics.hpp"
#include "pae/extract/response_parser.hpp"
#include "pae/match/embedding.hpp"
#include "pae/match/matcher.hpp"
#include "pae/normalize/merge.hpp"
#include "pae/util/base64.hpp"

namespace testing::props {

namespace extract = pae::extract;
namespace match = pae::match;
namespace normalize = pae::normalize;
namespace eval = pae::eval;
namespace util = pae::util;

inline constexpr std::uint64_t kSeed = 0x5eed2024;
inline constexpr int kCases = 1000;
inline constexpr double kTol = 1e-9;

struct Outcome {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
};

using Rng = std::mt19937_64;

inline Outcome run(const std::string& name, const std::function<std::string(Rng&)>& one_case) {
  Outcome out{name, 0, 0, {}};
  Rng rng(kSeed);
  for (int i = 0; i < kCases; ++i) {
    ++out.cases;
    const auto err = one_case(rng);
    if (!err.empty() && out.failures++ == 0) out.first_failure = "case " + std::to_string(i) + ": " + err;
  }
  return out;
}

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline std::vector<double> random_vector(Rng& rng, std::size_t dim) {
  std::normal_distribution<double> nd;
  std::vector<double> v(dim);
  do {
    for (auto& x : v) x = nd(rng);
  } while (std::all_of(v.begin(), v.end(), [](double x) { return x == 0; }));
  return v;
}

inline const std::vector<std::string>& vocabulary() {
  static const std::vector<std::string> v = {
      "V-Neck",  "vneck",   "v neck", "Crew Neck", "crewneck", "Long Sleeve", "long sleeves", "Olive",  "stone",
      "Ecru",    "Cosy",    "cosy",   "Soft Finish", "Boxy",   "Wool Blend",  "Merino Wool",  "Adult",  "Youthful",
      "Casual",  "Knitwear", "Raglan Sleeves", "Turtleneck", "roll neck", "Patch Pockets", "Multicolor"};
  return v;
}

inline const std::vector<std::string>& noise_values() {
  static const std::vector<std::string> v = {"Not Mentioned", "not mentioned", "N/A", "none", "NA", "", "   "};
  return v;
}

inline extract::AttributeSet random_set(Rng& rng, std::size_t page, extract::Source src, bool with_noise) {
  extract::AttributeSet s(src, page);
  const auto& vocab = vocabulary();
  for (auto key : extract::kAllAttributes) {
    const auto n = uniform(rng, 0, 3);
    for (std::size_t i = 0; i < n; ++i) s.add(key, vocab[uniform(rng, 0, vocab.size() - 1)]);
    if (with_noise && uniform(rng, 0, 2) == 0) s.add(key, noise_values()[uniform(rng, 0, noise_values().size() - 1)]);
  }
  return s;
}

inline bool sentinel_exclusive(const extract::AttributeSet& s) {
  for (auto key : extract::kAllAttributes) {
    const auto& vs = s.values(key);
    if (vs.empty()) return false;
    if (vs.size() == 1 && vs[0] == extract::kNotMentioned) continue;
    for (const auto& v : vs)
      if (extract::is_absent_marker(v) || v.empty()) return false;
  }
  return true;
}

inline std::map<extract::AttributeKey, std::set<std::string>> as_sets(const extract::AttributeSet& s) {
  std::map<extract::AttributeKey, std::set<std::string>> out;
  for (auto key : extract::kAllAttributes) out[key] = {s.values(key).begin(), s.values(key).end()};
  return out;
}

inline Outcome base64_round_trip() {
  return run("base64 round trip", [](Rng& rng) -> std::string {
    std::vector<std::uint8_t> bytes(uniform(rng, 0, 300));
    for (auto& b : bytes) b = static_cast<std::uint8_t>(rng());
    const auto text = util::base64_encode(bytes);
    if (text.size() != 4 * ((bytes.size() + 2) / 3)) return "encoded length";
    if (util::base64_decode(text) != bytes) return "decode(encode(x)) != x for " + std::to_string(bytes.size()) + " bytes";
    return {};
  });
}

inline Outcome cosine_laws() {
  return run("cosine symmetry, bounds, scale invariance", [](Rng& rng) -> std::string {
    const auto dim = uniform(rng, 1, 64);
    match::EmbeddingVector a{random_vector(rng, dim), dim, "p"}, b{random_vector(rng, dim), dim, "p"};
    const double ab = match::cosine_similarity(a, b), ba = match::cosine_similarity(b, a);
    if (std::abs(ab - ba) > kTol) return "asymmetric";
    if (ab < -1.0 || ab > 1.0) return "out of bounds";
    if (std::abs(match::cosine_similarity(a, a) - 1.0) > kTol) return "cos(a, a) != 1";
    const double k = std::exp(std::uniform_real_distribution<double>(-7, 7)(rng));
    auto scaled = a;
    for (auto& x : scaled.values) x *= k;
    if (std::abs(match::cosine_similarity(scaled, b) - ab) > kTol) return "not scale invariant";
    return {};
  });
}

// Multiplies every vector of the wrapped provider by a positive factor
// drawn per text.
class ScaledProvider final : public match::EmbeddingProvider {
 public:
  ScaledProvider(match::EmbeddingProvider& inner, std::uint64_t salt) : inner_(inner), salt_(salt) {}
  std::string id() const override { return "scaled:" + inner_.id(); }
  std::size_t dim() const override { return inner_.dim(); }
  std::vector<match::EmbeddingVector> embed_batch(const std::vector<std::string>& texts) override {
    auto out = inner_.embed_batch(texts);
    for (std::size_t i = 0; i < texts.size(); ++i) {
      Rng r(salt_ ^ std::hash<std::string>{}(texts[i]));
      const double k = std::exp(std::uniform_real_distribution<double>(-5, 5)(r));
      for (auto& x : out[i].values) x *= k;
    }
    return out;
  }

 private:
  match::EmbeddingProvider& inner_;
  std::uint64_t salt_;
};

inline Outcome argmax_scaling() {
  match::TrigramProvider base;
  return run("argmax invariance under positive scaling", [&](Rng& rng) -> std::string {
    ScaledProvider scaled(base, rng());
    const auto aliases = normalize::default_alias_table();
    normalize::MergedPageAttributes pred;
    pred.attributes = normalize::canonicalize_set(random_set(rng, 0, extract::Source::Merged, false), aliases);
    match::Catalog catalog;
    std::set<std::pair<extract::AttributeKey, std::string>> seen;
    const auto& vocab = vocabulary();
    for (std::size_t i = 0, n = uniform(rng, 0, 20); i < n; ++i) {
      const auto key = extract::kAllAttributes[uniform(rng, 0, extract::kAttributeCount - 1)];
      const auto value = normalize::canonicalize_value(vocab[uniform(rng, 0, vocab.size() - 1)], aliases);
      if (seen.insert({key, value}).second) catalog.push_back({key, value, std::nullopt});
    }
    const double threshold = std::uniform_real_distribution<double>(0, 1)(rng);
    const auto plain = match::match_attributes(pred, catalog, base, threshold);
    const auto scaled_out = match::match_attributes(pred, catalog, scaled, threshold);
    if (plain.size() != scaled_out.size()) return "result count differs";
    for (std::size_t i = 0; i < plain.size(); ++i) {
      if (plain[i].best_catalog_value != scaled_out[i].best_catalog_value)
        return "argmax changed for " + plain[i].predicted_value;
      if (std::abs(plain[i].similarity - scaled_out[i].similarity) > kTol) return "similarity changed";
    }
    return {};
  });
}

inline Outcome merge_laws() {
  const auto aliases = normalize::default_alias_table();
  return run("merge idempotence and order-insensitivity", [&](Rng& rng) -> std::string {
    const auto page = uniform(rng, 0, 50);
    std::vector<extract::AttributeSet> sets;
    for (std::size_t i = 0, n = uniform(rng, 1, 5); i < n; ++i)
      sets.push_back(random_set(rng, page, i == 0 ? extract::Source::Text : extract::Source::Image, true));
    const auto merged = normalize::merge_attribute_sets(sets, aliases);
    const auto again = normalize::merge_attribute_sets({merged.attributes}, aliases);
    if (!(again.attributes == merged.attributes)) return "merge is not idempotent";
    const auto twice = normalize::merge_attribute_sets({merged.attributes, merged.attributes}, aliases);
    if (!(twice.attributes == merged.attributes)) return "merge(m, m) != m";
    auto shuffled = sets;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const auto other = normalize::merge_attribute_sets(shuffled, aliases);
    if (as_sets(other.attributes) != as_sets(merged.attributes)) return "value sets depend on input order";
    if (other.provenance != merged.provenance) return "provenance depends on input order";
    return {};
  });
}

inline Outcome sentinel_exclusivity() {
  const auto aliases = normalize::default_alias_table();
  return run("sentinel exclusivity", [&](Rng& rng) -> std::string {
    const auto set = random_set(rng, 0, extract::Source::Text, true);
    if (!sentinel_exclusive(set)) return "built set mixes sentinel and values";
    std::string raw;
    for (auto key : extract::kAllAttributes) {
      if (uniform(rng, 0, 3) == 0) continue;
      raw += std::string(extract::display_name(key)) + ": ";
      for (std::size_t i = 0, n = uniform(rng, 1, 3); i < n; ++i) {
        const bool noise = uniform(rng, 0, 3) == 0;
        raw += (i ? ", " : "") + (noise ? noise_values()[uniform(rng, 0, noise_values().size() - 1)]
                                        : vocabulary()[uniform(rng, 0, vocabulary().size() - 1)]);
      }
      raw += "\n";
    }
    if (!sentinel_exclusive(extract::parse_attribute_response(raw, 0, extract::Source::Text)))
      return "parsed set mixes sentinel and values";
    const auto merged = normalize::merge_attribute_sets({set, random_set(rng, 0, extract::Source::Image, true)}, aliases);
    if (!sentinel_exclusive(merged.attributes)) return "merged set mixes sentinel and values";
    return {};
  });
}

inline Outcome compare_swap() {
  const auto aliases = normalize::default_alias_table();
  return run("compare_page fp/fn swap symmetry", [&](Rng& rng) -> std::string {
    const auto a = normalize::canonicalize_set(random_set(rng, 0, extract::Source::Merged, true), aliases);
    const auto b = normalize::canonicalize_set(random_set(rng, 0, extract::Source::Merged, true), aliases);
    const auto ab = eval::compare_page(a, b), ba = eval::compare_page(b, a);
    if (ab.tp != ba.tp || ab.tn != ba.tn) return "tp or tn changed under swap";
    if (ab.fp != ba.fn || ab.fn != ba.fp) return "fp and fn did not swap";
    const auto self = eval::compare_page(a, a);
    if (self.fp != 0 || self.fn != 0) return "self comparison has errors";
    return {};
  });
}

inline Outcome f1_bracketing() {
  return run("F1 min/max bracketing", [](Rng& rng) -> std::string {
    eval::MetricCounts c{uniform(rng, 0, 60), uniform(rng, 0, 60), uniform(rng, 0, 60), uniform(rng, 0, 60)};
    const auto p = eval::precision(c), r = eval::recall(c), f = eval::f1(c), acc = eval::accuracy(c);
    for (const auto& m : {p, r, f, acc})
      if (m && (*m < 0.0 || *m > 1.0)) return "metric outside [0, 1]";
    if (f && (!p || !r)) return "f1 defined without precision and recall";
    if (f && (*f < std::min(*p, *r) - kTol || *f > std::max(*p, *r) + kTol)) return "f1 outside [min, max]";
    std::uniform_real_distribution<double> u(0, 1);
    const double pp = u(rng), rr = u(rng);
    const auto ff = eval::f1(pp, rr);
    if (!ff || *ff < std::min(pp, rr) - kTol || *ff > std::max(pp, rr) + kTol) return "f1(p, r) outside [min, max]";
    return {};
  });
}

inline std::vector<Outcome> all() {
  return {base64_round_trip(), cosine_laws(),  argmax_scaling(), merge_laws(),
          sentinel_exclusivity(), compare_swap(), f1_bracketing()};
}

}  // namespace testing::props
