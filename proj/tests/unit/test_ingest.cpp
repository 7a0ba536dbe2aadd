#include <regex>

#include <functional>

#include "doctest.h"
#include "pae/error.hpp"
#include "pae/ingest/clean.hpp"
#include "pae/ingest/document.hpp"
#include "pae/ingest/ocr.hpp"
#include "pae/ingest/png.hpp"
#include "pae/ingest/raster.hpp"
#include "pae/pipeline/synth.hpp"
#include "pae/util/strings.hpp"
#include "support.hpp"

using namespace pae;
using namespace pae::ingest;
using testing::solid_image;
using testing::text_at;

namespace {

Document doc_of(const std::vector<PdfPageSpec>& pages) { return load_document_from_memory(write_pdf(pages)); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::IoError;
}

ExtractedImage png_image(std::size_t w, std::size_t h, std::uint8_t shade) {
  std::vector<std::uint8_t> px(w * h, shade);
  return make_image(encode_png(px, w, h, 1), ImageFormat::Png, w, h, 0);
}

}  // namespace

TEST_SUITE("ingest") {
  TEST_CASE("text round trip") {
    PdfPageSpec p;
    p.text.push_back(text_at(72, 100, {"The Slouchy V-Neck"}));
    const auto doc = doc_of({p});
    CHECK(doc.page_count == 1);
    const auto blocks = extract_text_native(doc, 0);
    REQUIRE(blocks.size() == 1);
    CHECK(blocks[0].text == "The Slouchy V-Neck");
    CHECK(blocks[0].origin == TextOrigin::Native);
  }

  TEST_CASE("reading order is top to bottom then left to right") {
    PdfPageSpec p;
    p.text.push_back(text_at(72, 500, {"C"}));
    p.text.push_back(text_at(320, 100, {"B"}));
    p.text.push_back(text_at(72, 100, {"A"}));
    const auto blocks = extract_text_native(doc_of({p}), 0);
    REQUIRE(blocks.size() == 3);
    CHECK(blocks[0].text == "A");
    CHECK(blocks[1].text == "B");
    CHECK(blocks[2].text == "C");
  }

  TEST_CASE("image-only page has no text") {
    PdfPageSpec p;
    p.images.push_back(solid_image(80, 80, 40));
    const auto doc = doc_of({p});
    CHECK(extract_text_native(doc, 0).empty());
    CHECK(extract_images(doc, 0).size() == 1);
  }

  TEST_CASE("load errors") {
    testing::TempDir tmp("ingest");
    util::write_file(tmp.file("empty.pdf"), "");
    CHECK(code_of([&] { load_document(tmp.file("empty.pdf")); }) == ErrorCode::NotAPdf);
    CHECK(code_of([&] { load_document(tmp.file("missing.pdf")); }) == ErrorCode::FileNotFound);
    CHECK(code_of([&] { load_document_from_memory("hello, not a pdf"); }) == ErrorCode::NotAPdf);
  }

  TEST_CASE("synthetic page count matches an independent count of page objects") {
    pipeline::SynthSpec spec;
    spec.pages = 10;
    spec.words_min = 50;
    spec.words_max = 60;
    const auto synth = pipeline::generate_synthetic(spec);
    const std::regex page_obj(R"(/Type\s*/Page[^s])");
    const auto n = std::distance(std::sregex_iterator(synth.pdf.begin(), synth.pdf.end(), page_obj),
                                 std::sregex_iterator());
    CHECK(n == 10);
    CHECK(load_document_from_memory(synth.pdf).page_count == 10);
  }

  TEST_CASE("synthetic text and images match the manifest") {
    pipeline::SynthSpec spec;
    spec.pages = 3;
    const auto synth = pipeline::generate_synthetic(spec);
    const auto doc = load_document_from_memory(synth.pdf);
    for (std::size_t i = 0; i < 3; ++i) {
      std::string text;
      for (const auto& b : extract_text_native(doc, i)) text += (text.empty() ? "" : "\n\n") + b.text;
      CHECK(text == synth.manifest.pages[i].text);
      const auto imgs = extract_images(doc, i);
      REQUIRE(imgs.size() == synth.manifest.pages[i].image_hashes.size());
      for (std::size_t k = 0; k < imgs.size(); ++k)
        CHECK(util::to_hex(imgs[k].content_hash) == synth.manifest.pages[i].image_hashes[k]);
    }
  }

  TEST_CASE("raster size follows the media box") {
    PdfPageSpec p;
    p.text.push_back(text_at(72, 100, {"x"}));
    const auto doc = doc_of({p});
    const auto r = rasterize_page(doc, 0, 200);
    CHECK(r.width == 1700);
    CHECK(r.height == 2200);
    const auto unit = rasterize_page(doc, 0, 72);
    CHECK(unit.width == 612);
    CHECK(unit.height == 792);
    CHECK(code_of([&] { rasterize_page(doc, 0, 1000); }) == ErrorCode::PreconditionViolation);
    CHECK(code_of([&] { rasterize_page(doc, 3, 72); }) == ErrorCode::PageOutOfRange);
  }

  TEST_CASE("preprocess of grayscale equals its three-channel copy") {
    Raster g;
    g.width = 9;
    g.height = 7;
    g.channels = 1;
    for (std::size_t i = 0; i < 63; ++i) g.pixels.push_back(static_cast<std::uint8_t>(i * 37));
    Raster rgb = g;
    rgb.channels = 3;
    rgb.pixels.clear();
    for (auto v : g.pixels) rgb.pixels.insert(rgb.pixels.end(), {v, v, v});
    const auto a = preprocess_raster(g), b = preprocess_raster(rgb);
    CHECK(a.channels == 1);
    CHECK(a.pixels == b.pixels);
    CHECK(preprocess_raster_serial(rgb).pixels == b.pixels);
  }

  TEST_CASE("images with matching dimensions and a corrupt stream") {
    PdfPageSpec p;
    p.images.push_back(solid_image(90, 70, 10));
    p.images.push_back(solid_image(120, 100, 200, 300));
    auto doc = doc_of({p});
    auto imgs = extract_images(doc, 0);
    REQUIRE(imgs.size() == 2);
    CHECK(imgs[0].width == 90);
    CHECK(imgs[0].height == 70);
    CHECK(imgs[1].width == 120);
    CHECK(imgs[1].format == ImageFormat::Png);

    p.images[1].corrupt = true;
    std::vector<std::string> warnings;
    imgs = extract_images(doc_of({p}), 0, &warnings);
    CHECK(imgs.size() == 1);
    CHECK(warnings.size() == 1);

    PdfPageSpec text_only;
    text_only.text.push_back(text_at(72, 72, {"words"}));
    CHECK(extract_images(doc_of({text_only}), 0).empty());
  }

  TEST_CASE("clean images") {
    const auto a = png_image(100, 100, 1);
    const auto c = png_image(200, 50, 2);
    const auto kept = clean_images({a, a, c}, CleanPolicy{64, 64});
    REQUIRE(kept.size() == 1);
    CHECK(kept[0].content_hash == a.content_hash);
    CHECK(clean_images({png_image(16, 16, 3)}).empty());
    CHECK(clean_images({a, a}).size() == 1);
  }

  TEST_CASE("ocr") {
    Raster r;
    r.width = r.height = 4;
    r.pixels.assign(16, 0);
    MockOcrEngine hello("hello");
    const auto blocks = extract_text_ocr(r, hello, 2);
    REQUIRE(blocks.size() == 1);
    CHECK(blocks[0].text == "hello");
    CHECK(blocks[0].origin == TextOrigin::Ocr);
    CHECK(blocks[0].page_index == 2);
    MockOcrEngine two("one\n\n  \n\ntwo");
    CHECK(extract_text_ocr(r, two).size() == 2);
    MockOcrEngine empty("");
    CHECK(extract_text_ocr(r, empty).empty());
    NoOcrEngine none;
    CHECK(code_of([&] { extract_text_ocr(r, none); }) == ErrorCode::EngineUnavailable);
    MockOcrEngine broken("x", true);
    CHECK(code_of([&] { extract_text_ocr(r, broken); }) == ErrorCode::EngineFailure);
  }

  TEST_CASE("spelling") {
    IdentityCorrector id;
    CHECK(correct_spelling("cosy wardrobe", id) == "cosy wardrobe");
    CHECK(correct_spelling("", id).empty());
    DictionaryCorrector dict(std::map<std::string, std::string>{{"slouohy", "slouchy"}});
    CHECK(correct_spelling("a slouohy look", dict) == "a slouchy look");

    std::vector<TextBlock> blocks(2);
    blocks[0].text = "slouohy";
    blocks[1].text = "slouohy";
    blocks[1].origin = TextOrigin::Ocr;
    correct_ocr_blocks(blocks, dict);
    CHECK(blocks[0].text == "slouohy");
    CHECK(blocks[1].text == "slouchy");
  }

  TEST_CASE("png header sizes") {
    const auto img = png_image(33, 21, 5);
    const auto size = png_size(img.bytes);
    REQUIRE(size);
    CHECK(size->width == 33);
    CHECK(size->height == 21);
    CHECK_FALSE(png_size(std::vector<std::uint8_t>{1, 2, 3}));
  }
}
