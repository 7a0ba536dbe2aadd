#include "pae/pipeline/synth.hpp"

#include <random>

#include "json.hpp"
#include "pae/error.hpp"
#include "pae/ingest/pdf_writer.hpp"
#include "pae/ingest/png.hpp"
#include "pae/util/sha256.hpp"
#include "pae/util/strings.hpp"

namespace pae::pipeline {

namespace {

const std::vector<std::string> kFiller = {
    "the",     "season",   "brings",   "a",        "relaxed",   "silhouette", "with",     "soft",    "drape",
    "and",     "easy",     "layering", "for",      "everyday",  "wear",       "across",   "city",    "weekend",
    "looks",   "updated",  "classics", "feel",     "fresh",     "when",       "paired",   "tonal",   "accents",
    "minimal", "hardware", "clean",    "lines",    "balance",   "volume",     "texture",  "through", "mixed",
    "surface", "interest", "core",     "pieces",   "carry",     "over",       "from",     "last",    "drop",
    "while",   "new",      "shapes",   "test",     "proportion", "in",        "key",      "stores",  "expect",
    "strong",  "sell",     "through",  "on",       "versatile", "styles",     "that",     "work",    "hard",
    "outfit",  "building", "is",       "central",  "to",        "this",       "story",    "of",      "quiet",
    "comfort", "craft",    "detail",   "matters",  "most"};

struct Planted {
  const char* attribute;
  const char* phrase;
};

const std::vector<Planted> kPlanted = {
    {"Color", "navy"},         {"Color", "ecru"},          {"Color", "sage green"},   {"Color", "burgundy"},
    {"Sleeve Style", "raglan sleeves"}, {"Sleeve Style", "puff sleeves"}, {"Sleeve Style", "sleeveless"},
    {"Product Type", "cardigan"}, {"Product Type", "sweater"}, {"Product Type", "blouse"},
    {"Material", "cotton"},    {"Material", "wool"},       {"Material", "linen"},
    {"Features", "ribbed"},    {"Features", "oversized"},  {"Features", "cropped"},
    {"Categories", "knitwear"}, {"Categories", "tops"},
    {"Age", "youthful"},       {"Age", "adult"},
    {"Neck", "crew neck"},     {"Neck", "v-neck"},         {"Neck", "turtleneck"}};

const std::vector<std::string> kTags = {"newseason", "knitstory", "quietluxury", "citywear", "craftfocus",
                                        "softtailoring", "weekendmood", "colourpop"};

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) { return lo + rng() % (hi - lo + 1); }

std::vector<std::uint8_t> pattern(std::mt19937_64& rng, std::size_t side) {
  std::vector<std::uint8_t> px(side * side * 3);
  const unsigned a = rng() % 7 + 1, b = rng() % 5 + 1, c = rng() % 256, stripe = rng() % 12 + 4;
  const unsigned tint[3] = {static_cast<unsigned>(rng() % 256), static_cast<unsigned>(rng() % 256),
                            static_cast<unsigned>(rng() % 256)};
  for (std::size_t y = 0; y < side; ++y)
    for (std::size_t x = 0; x < side; ++x)
      for (int ch = 0; ch < 3; ++ch) {
        const unsigned base = (a * x + b * y + c) & 0xFF;
        const unsigned band = ((x + y) / stripe) % 2 ? tint[ch] : base;
        px[(y * side + x) * 3 + ch] = static_cast<std::uint8_t>((base + band) / 2);
      }
  return px;
}

}  // namespace

void validate(const SynthSpec& s) {
  const auto bad = [](const char* m) { throw Error(ErrorCode::PreconditionViolation, m); };
  if (s.pages == 0) bad("synthetic document needs at least one page");
  if (s.words_min == 0 || s.words_min > s.words_max) bad("bad words-per-page range");
  if (s.images_min > s.images_max) bad("bad images-per-page range");
  if (s.images_max > 12) bad("at most 12 images per page fit the layout");
  if (s.words_max > 1400) bad("at most 1400 words per page fit the layout");
  if (s.image_px_min == 0 || s.image_px_min > s.image_px_max) bad("bad image size range");
}

SynthDocument generate_synthetic(const SynthSpec& spec) {
  validate(spec);
  std::mt19937_64 rng(spec.seed);
  SynthDocument out;
  out.manifest.spec = spec;
  std::vector<ingest::PdfPageSpec> pdf_pages;

  for (std::size_t p = 0; p < spec.pages; ++p) {
    SynthPage page;
    page.page = p;
    const std::size_t words = pick(rng, spec.words_min, spec.words_max);
    std::vector<std::string> tokens;
    tokens.reserve(words);
    const std::size_t n_tags = pick(rng, 1, 2);
    const std::size_t n_attrs = pick(rng, 3, 6);
    // Planted phrases and hashtags overwrite filler tokens, so the word count holds.
    while (tokens.size() < words) tokens.push_back(kFiller[rng() % kFiller.size()]);
    for (std::size_t k = 0; k < n_attrs; ++k) {
      std::string phrase = kPlanted[rng() % kPlanted.size()].phrase;
      auto parts = util::split(phrase, ' ');
      const std::size_t at = rng() % (words - parts.size() + 1);
      for (std::size_t w = 0; w < parts.size(); ++w) tokens[at + w] = parts[w];
    }
    for (std::size_t k = 0; k < n_tags; ++k) {
      const std::string tag = kTags[rng() % kTags.size()];
      tokens[rng() % words] = "#" + tag;
    }
    for (const auto& t : tokens)
      if (t.front() == '#') page.hashtags.push_back(t.substr(1));

    ingest::PdfPageSpec ps;
    ingest::PdfTextSpec text;
    text.left = 54;
    text.top = 40;
    text.font_size = 6;
    text.leading = 7;
    for (std::size_t i = 0; i < tokens.size(); i += 18) {
      std::vector<std::string> line(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                                    tokens.begin() + static_cast<std::ptrdiff_t>(std::min(i + 18, tokens.size())));
      text.lines.push_back(util::join(line, " "));
    }
    page.text = util::join(text.lines, "\n");
    page.word_count = tokens.size();
    ps.text.push_back(std::move(text));

    const std::size_t n_images = pick(rng, spec.images_min, spec.images_max);
    for (std::size_t k = 0; k < n_images; ++k) {
      ingest::PdfImageSpec img;
      img.width = img.height = pick(rng, spec.image_px_min, spec.image_px_max);
      img.channels = 3;
      img.pixels = pattern(rng, img.width);
      img.left = 54 + static_cast<double>(k % 6) * 84;
      img.top = 560 + static_cast<double>(k / 6) * 100;
      img.draw_width = img.draw_height = 78;
      const auto png = ingest::encode_png(img.pixels, img.width, img.height, 3);
      page.image_hashes.push_back(util::to_hex(util::sha256(png)));
      ps.images.push_back(std::move(img));
    }
    pdf_pages.push_back(std::move(ps));
    out.manifest.pages.push_back(std::move(page));
  }
  out.pdf = ingest::write_pdf(pdf_pages);
  return out;
}

std::string manifest_json(const SynthManifest& m) {
  nlohmann::ordered_json j;
  j["seed"] = m.spec.seed;
  j["words_per_page"] = {m.spec.words_min, m.spec.words_max};
  j["images_per_page"] = {m.spec.images_min, m.spec.images_max};
  nlohmann::ordered_json pages = nlohmann::ordered_json::array();
  for (const auto& p : m.pages) {
    nlohmann::ordered_json pj;
    pj["page"] = p.page;
    pj["word_count"] = p.word_count;
    pj["text"] = p.text;
    pj["image_hashes"] = p.image_hashes;
    pj["hashtags"] = p.hashtags;
    pages.push_back(std::move(pj));
  }
  j["pages"] = std::move(pages);
  return j.dump(2) + "\n";
}

SynthManifest generate_synthetic_document(const SynthSpec& spec, const std::string& out_path) {
  auto doc = generate_synthetic(spec);
  util::write_file(out_path, doc.pdf);
  util::write_file(out_path + ".manifest.json", manifest_json(doc.manifest));
  return doc.manifest;
}

std::string synthetic_lexicon_json() {
  nlohmann::ordered_json text = nlohmann::ordered_json::object();
  for (const auto& p : kPlanted) text[p.attribute].push_back(p.phrase);
  nlohmann::ordered_json j;
  j["text"] = std::move(text);
  j["images"] = nlohmann::ordered_json::object();
  return j.dump(2) + "\n";
}

}  // namespace pae::pipeline
