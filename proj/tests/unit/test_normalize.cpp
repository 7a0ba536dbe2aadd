#include "doctest.h"
#include "pae/error.hpp"
#include "pae/normalize/alias_table.hpp"
#include "pae/normalize/boilerplate.hpp"
#include "pae/normalize/merge.hpp"
#include "pae/util/sha256.hpp"

using namespace pae;
using namespace pae::normalize;
using extract::AttributeKey;
using extract::AttributeSet;
using extract::Source;
using V = std::vector<std::string>;

namespace {

ingest::TextBlock block(std::string text, std::size_t page, double top) {
  ingest::TextBlock b;
  b.text = std::move(text);
  b.page_index = page;
  b.top = top;
  return b;
}

}  // namespace

TEST_SUITE("normalize") {
  TEST_CASE("canonical values") {
    const auto aliases = default_alias_table();
    CHECK(canonicalize_value("vneck", aliases) == "V-Neck");
    CHECK(canonicalize_value("v neck", aliases) == "V-Neck");
    CHECK(canonicalize_value("V-Neck", aliases) == "V-Neck");
    CHECK(canonicalize_value("crewneck", aliases) == "Crew Neck");
    CHECK(canonicalize_value("longsleeve", aliases) == "Long Sleeve");
    CHECK(canonicalize_value("  earthy   greens and grey tones ", aliases) == "Earthy Greens And Grey Tones");
    CHECK_THROWS_AS(canonicalize_value("   ", aliases), Error);
    CHECK(alias_key("V-Neck") == "vneck");
  }

  TEST_CASE("alias files") {
    auto t = parse_alias_table("# comment\nboat neckline => Boat Neck\n\n", default_alias_table());
    CHECK(canonicalize_value("BOAT  neckline", t) == "Boat Neck");
    CHECK(canonicalize_value("Boat Neck", t) == "Boat Neck");
    CHECK_THROWS_AS(parse_alias_table("no arrow here"), Error);
    CHECK_THROWS_AS(parse_alias_table("vneck => Crew Neck", default_alias_table()), Error);
  }

  TEST_CASE("merge text and image") {
    AttributeSet text(Source::Text, 0);
    text.add(AttributeKey::Neck, "Deep V-Neckline");
    AttributeSet image(Source::Image, 0);
    image.set_image_hash(util::sha256({}));
    image.add(AttributeKey::Neck, "V-Neck");
    image.add(AttributeKey::Color, "Multicolor");
    const auto m = merge_attribute_sets({text, image}, default_alias_table());
    CHECK(m.attributes.source() == Source::Merged);
    CHECK(m.attributes.values(AttributeKey::Neck) == V{"Deep V-Neckline", "V-Neck"});
    CHECK(m.attributes.values(AttributeKey::Color) == V{"Multicolor"});
    CHECK_FALSE(m.attributes.mentioned(AttributeKey::Age));
    const auto& prov = m.provenance.at(AttributeKey::Neck);
    CHECK(prov.at("Deep V-Neckline") == std::set<std::string>{"text"});
    CHECK(prov.at("V-Neck") == std::set<std::string>{"image:" + util::to_hex(util::sha256({}))});
  }

  TEST_CASE("merge folds alias variants") {
    AttributeSet a(Source::Text, 2), b(Source::Image, 2);
    a.add(AttributeKey::Neck, "vneck");
    b.add(AttributeKey::Neck, "V-Neck");
    const auto m = merge_attribute_sets({a, b}, default_alias_table());
    CHECK(m.page_index == 2);
    CHECK(m.attributes.values(AttributeKey::Neck) == V{"V-Neck"});
    CHECK(m.provenance.at(AttributeKey::Neck).at("V-Neck").size() == 2);
  }

  TEST_CASE("single set merge is canonicalization") {
    AttributeSet a(Source::Text, 0);
    a.add(AttributeKey::Features, "soft finish");
    const auto m = merge_attribute_sets({a}, default_alias_table());
    auto c = canonicalize_set(a, default_alias_table());
    CHECK(m.attributes.values(AttributeKey::Features) == V{"Soft Finish"});
    CHECK(c.values(AttributeKey::Features) == V{"Soft Finish"});
  }

  TEST_CASE("merge errors") {
    CHECK_THROWS_AS(merge_attribute_sets({}, default_alias_table()), Error);
    try {
      merge_attribute_sets({AttributeSet(Source::Text, 0), AttributeSet(Source::Text, 1)}, default_alias_table());
      FAIL("expected MixedPages");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::MixedPages);
    }
  }

  TEST_CASE("page numbers and unique text") {
    const auto out = filter_boilerplate({block("12", 0, 770), block("Page 3", 0, 770), block("3 of 10", 0, 770),
                                         block("Body paragraph about knitwear.", 0, 100)});
    REQUIRE(out.size() == 1);
    CHECK(out[0].text == "Body paragraph about knitwear.");
  }

  TEST_CASE("repeated header on 5 of 6 pages") {
    std::vector<ingest::TextBlock> blocks;
    for (std::size_t p = 0; p < 6; ++p) {
      if (p != 3) blocks.push_back(block("TREND REPORT A/W", p, 36));
      blocks.push_back(block("body " + std::to_string(p), p, 120));
    }
    const auto out = filter_boilerplate(blocks);
    CHECK(out.size() == 6);
    for (const auto& b : out) CHECK(b.text.rfind("body", 0) == 0);

    BoilerplateRules keep;
    keep.drop_repeated = false;
    CHECK(filter_boilerplate(blocks, keep).size() == 11);
  }

  TEST_CASE("repeated text in a different band survives") {
    const auto out = filter_boilerplate({block("Knitwear", 0, 36), block("Knitwear", 1, 400)});
    CHECK(out.size() == 2);
  }

  TEST_CASE("extra patterns") {
    BoilerplateRules rules;
    rules.extra_patterns = {"(?:c|C)onfidential"};
    CHECK(filter_boilerplate({block("Confidential", 0, 10), block("keep", 0, 50)}, rules).size() == 1);
    rules.extra_patterns = {"(unclosed"};
    CHECK_THROWS_AS(filter_boilerplate({block("x", 0, 0)}, rules), Error);
  }
}
