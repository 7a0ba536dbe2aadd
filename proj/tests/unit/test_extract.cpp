#include <atomic>
#include <thread>

#include "doctest.h"
#include "pae/error.hpp"
#include "pae/extract/hashtags.hpp"
#include "pae/extract/llm.hpp"
#include "pae/extract/page_attributes.hpp"
#include "pae/extract/response_parser.hpp"
#include "pae/ingest/png.hpp"
#include "sample_text.hpp"

using namespace pae;
using namespace pae::extract;
using V = std::vector<std::string>;

namespace {

struct Scripted final : LlmBackend {
  std::vector<ErrorCode> failures;  // thrown in order before answering
  std::string answer = "Color: Red";
  int calls = 0;
  std::string id() const override { return "scripted"; }
  std::string complete(const LlmRequest&, const ModelParams&) override {
    const auto n = static_cast<std::size_t>(calls++);
    if (n < failures.size()) throw Error(failures[n], "scripted failure");
    return answer;
  }
};

ingest::ExtractedImage tiny_png(std::uint8_t shade) {
  std::vector<std::uint8_t> px(80 * 80, shade);
  return ingest::make_image(ingest::encode_png(px, 80, 80, 1), ingest::ImageFormat::Png, 80, 80, 0);
}

std::vector<std::string> tags(const std::vector<Hashtag>& hs) {
  std::vector<std::string> out;
  for (const auto& h : hs) out.push_back(h.tag);
  return out;
}

}  // namespace

TEST_SUITE("extract") {
  TEST_CASE("default text prompt") {
    const auto req = build_text_prompt(builtin_template("default"), testing::kSlouchyPassage);
    CHECK(req.prompt.rfind(
              "Generate me color, sleeve style, product type, material, features, categories, age and neck attributes",
              0) == 0);
    CHECK(req.prompt.find("#countrycalling") != std::string::npos);
    CHECK(req.payload == testing::kSlouchyPassage);
    CHECK_FALSE(req.image);
  }

  TEST_CASE("template rules") {
    const auto identity = make_template("id", "{text}", Modality::Text);
    CHECK(build_text_prompt(identity, "X").prompt == "X");
    CHECK_THROWS_AS(make_template("bad", "no placeholder", Modality::Text), Error);
    CHECK_THROWS_AS(make_template("bad", "{text} {text}", Modality::Text), Error);
    try {
      build_text_prompt(builtin_template("image-default"), "X");
      FAIL("expected WrongModality");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::WrongModality);
    }
    for (const auto& id : builtin_template_ids()) CHECK(builtin_template(id).id == id);
  }

  TEST_CASE("image prompts") {
    auto img = tiny_png(9);
    const auto req = build_image_prompt(builtin_template("image-default"), img);
    REQUIRE(req.image);
    CHECK(req.image->mime_type == "image/png");
    CHECK(req.image->data.rfind("iVBORw0KGgo", 0) == 0);
    img.format = ingest::ImageFormat::Jpeg;
    CHECK(build_image_prompt(builtin_template("image-default"), img).image->mime_type == "image/jpeg");
    img.format = ingest::ImageFormat::Other;
    CHECK_THROWS_AS(build_image_prompt(builtin_template("image-default"), img), Error);
    ingest::ExtractedImage man;
    man.bytes = {'M', 'a', 'n'};
    CHECK(encode_image_base64(man) == "TWFu");
    man.bytes.clear();
    CHECK_THROWS_AS(encode_image_base64(man), Error);
  }

  TEST_CASE("parse the text response") {
    std::vector<std::string> warnings;
    const auto s = parse_attribute_response(testing::kSlouchyResponse, 0, Source::Text, &warnings);
    CHECK(warnings.empty());
    CHECK(s.values(AttributeKey::Color) == V{"Earthy Greens And Grey Tones"});
    CHECK(s.values(AttributeKey::SleeveStyle) == V{"Raglan Sleeves"});
    CHECK(s.values(AttributeKey::ProductType) == V{"V-Neck Sweater"});
    CHECK(s.values(AttributeKey::Material) == V{"Sustainable Brushed Super-Kid Mohair Yarn"});
    CHECK(s.values(AttributeKey::Features) == V{"Cosy", "Soft Finish"});
    CHECK(s.values(AttributeKey::Categories) == V{"Casual", "Knitwear"});
    CHECK(s.values(AttributeKey::Age) == V{"Youthful"});
    CHECK(s.values(AttributeKey::Neck) == V{"Deep V-Neckline"});
  }

  TEST_CASE("parse the image response") {
    const auto s = parse_attribute_response(testing::kPulloverResponse, 0, Source::Image);
    CHECK(s.values(AttributeKey::Color) == V{"Multicolor"});
    CHECK(s.values(AttributeKey::SleeveStyle) == V{"Long Sleeve"});
    CHECK(s.values(AttributeKey::ProductType) == V{"Pullover"});
    CHECK(s.values(AttributeKey::Material) == V{"Wool Blend"});
    CHECK(s.values(AttributeKey::Features) == V{"V-Neck", "Drop Shoulder"});
    CHECK(s.values(AttributeKey::Categories) == V{"Women's Fashion"});
    CHECK(s.values(AttributeKey::Age) == V{"Adult"});
    CHECK(s.values(AttributeKey::Neck) == V{"V-Neck"});
  }

  TEST_CASE("parser tolerance") {
    std::vector<std::string> warnings;
    CHECK(parse_attribute_response("", 0, Source::Text, &warnings).all_sentinel());
    CHECK(warnings.empty());
    CHECK(parse_attribute_response("I cannot help with that.", 0, Source::Text, &warnings).all_sentinel());
    CHECK(warnings.size() == 1);
    const auto s = parse_attribute_response(
        "- **Age Group**: \"Adult\"\n* Neck Style: [Crew Neck]\nProduct Categories: Knitwear\nFabric: Wool\n"
        "Color: Not Mentioned",
        3, Source::Text, &warnings);
    CHECK(s.page_index() == 3);
    CHECK(s.values(AttributeKey::Age) == V{"Adult"});
    CHECK(s.values(AttributeKey::Neck) == V{"Crew Neck"});
    CHECK(s.values(AttributeKey::Categories) == V{"Knitwear"});
    CHECK_FALSE(s.mentioned(AttributeKey::Color));
    CHECK(warnings.size() == 2);
  }

  TEST_CASE("attribute set sentinel rule") {
    AttributeSet s;
    CHECK(s.values(AttributeKey::Neck) == V{std::string(kNotMentioned)});
    s.add(AttributeKey::Neck, "  V-Neck ");
    s.add(AttributeKey::Neck, "V-Neck");
    s.add(AttributeKey::Neck, "N/A");
    CHECK(s.values(AttributeKey::Neck) == V{"V-Neck"});
    s.clear(AttributeKey::Neck);
    CHECK_FALSE(s.mentioned(AttributeKey::Neck));
    CHECK(parse_attribute_key("sleeve_style") == AttributeKey::SleeveStyle);
    CHECK_FALSE(parse_attribute_key("Fabric"));
  }

  TEST_CASE("hashtags") {
    CHECK(tags(extract_hashtags(testing::kSlouchyPassage)) == V{"countrycalling", "Supersizedintarsia"});
    CHECK(extract_hashtags("no tags here").empty());
    CHECK(tags(extract_hashtags("#a #a #b-c")) == V{"a", "a", "b"});
    CHECK(extract_hashtags("# alone").empty());
    CHECK(extract_hashtags("x #t", 4)[0].page_index == 4);
  }

  TEST_CASE("retries") {
    std::vector<std::chrono::milliseconds> slept;
    RetryPolicy policy;
    policy.base = std::chrono::milliseconds(10);
    policy.sleep = [&](std::chrono::milliseconds d) { slept.push_back(d); };
    ModelParams params;

    Scripted ok;
    CHECK(query_llm(ok, {}, params, policy).text == "Color: Red");

    Scripted flaky;
    flaky.failures = {ErrorCode::BackendUnavailable, ErrorCode::BackendUnavailable};
    params.max_retries = 3;
    CHECK(query_llm(flaky, {}, params, policy).text == "Color: Red");
    CHECK(flaky.calls == 3);
    REQUIRE(slept.size() == 2);
    CHECK(slept[0].count() == 10);
    CHECK(slept[1].count() == 20);

    Scripted once;
    once.failures = {ErrorCode::BackendUnavailable};
    params.max_retries = 0;
    try {
      query_llm(once, {}, params, policy);
      FAIL("expected BackendUnavailable");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::BackendUnavailable);
    }

    Scripted rejected;
    rejected.failures = {ErrorCode::BackendRejected};
    params.max_retries = 5;
    CHECK_THROWS_AS(query_llm(rejected, {}, params, policy), Error);
    CHECK(rejected.calls == 1);

    params.temperature = 1.5;
    CHECK_THROWS_AS(validate(params), Error);
  }

  TEST_CASE("limited backend caps in-flight calls") {
    struct Slow final : LlmBackend {
      std::atomic<int> now{0}, peak{0};
      std::string id() const override { return "slow"; }
      std::string complete(const LlmRequest&, const ModelParams&) override {
        const int n = ++now;
        int p = peak.load();
        while (n > p && !peak.compare_exchange_weak(p, n)) {
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(5));
        --now;
        return "";
      }
    } slow;
    LimitedBackend limited(slow, 2);
    std::vector<std::thread> threads;
    for (int i = 0; i < 6; ++i)
      threads.emplace_back([&] {
        for (int k = 0; k < 3; ++k) limited.complete({}, {});
      });
    for (auto& t : threads) t.join();
    CHECK(slow.peak.load() <= 2);
    CHECK(slow.peak.load() >= 1);
  }

  TEST_CASE("mock backend") {
    const auto lex = parse_lexicon(R"({"text": {"Neck": ["V-neck", {"match": "crew neck", "value": "Crew Neck"}],
                                                 "Age": ["youthful"]}})");
    MockLlmBackend mock(lex);
    LlmRequest req;
    req.payload = "A deep v-NECK and a\n  crew   neck, youthfulness aside";
    const auto s = parse_attribute_response(mock.complete(req, {}), 0, Source::Text);
    CHECK(s.values(AttributeKey::Neck) == V{"V-neck", "Crew Neck"});
    CHECK_FALSE(s.mentioned(AttributeKey::Age));
    LlmRequest img;
    img.image = InlineImage{"image/png", "AAAA"};
    CHECK(mock.complete(img, {}).empty());
  }

  TEST_CASE("page attributes") {
    const auto img_a = tiny_png(1), img_b = tiny_png(2), img_c = tiny_png(3);
    MockLexicon lex;
    lex.text[AttributeKey::Color].push_back({"olive", "Olive"});
    lex.images[util::to_hex(img_a.content_hash)] = "Color: Red";
    MockLlmBackend mock(lex);

    ingest::Page page;
    page.index = 5;
    ingest::TextBlock b;
    b.text = "olive #tag";
    page.text_blocks = {b};
    auto pa = extract_page_attributes(page, mock, {}, {});
    CHECK(pa.image_sets.empty());
    CHECK(pa.text_set.values(AttributeKey::Color) == V{"Olive"});
    CHECK(pa.hashtags.size() == 1);

    page.images = {img_a, img_b, img_c};
    pa = extract_page_attributes(page, mock, {}, {});
    REQUIRE(pa.image_sets.size() == 3);
    CHECK(pa.image_sets[0].image_hash() == img_a.content_hash);
    CHECK(pa.image_sets[2].image_hash() == img_c.content_hash);
    CHECK(pa.image_sets[0].values(AttributeKey::Color) == V{"Red"});
    CHECK(pa.image_sets[1].all_sentinel());

    page.text_blocks.clear();
    pa = extract_page_attributes(page, mock, {}, {});
    CHECK(pa.text_set.all_sentinel());
    CHECK(pa.hashtags.empty());

    PageExtractOptions no_images;
    no_images.include_images = false;
    CHECK(extract_page_attributes(page, mock, {}, {}, no_images).image_sets.empty());
  }

  TEST_CASE("failed calls are recorded") {
    Scripted broken;
    broken.failures.assign(10, ErrorCode::BackendRejected);
    ingest::Page page;
    ingest::TextBlock b;
    b.text = "some text";
    page.text_blocks = {b};
    page.images = {tiny_png(4)};
    const auto pa = extract_page_attributes(page, broken, {}, {});
    CHECK(pa.text_set.all_sentinel());
    CHECK(pa.image_sets.empty());
    REQUIRE(pa.errors.size() == 2);
    CHECK_FALSE(pa.errors[0].image_position);
    CHECK(pa.errors[1].image_position == 0u);
  }
}
