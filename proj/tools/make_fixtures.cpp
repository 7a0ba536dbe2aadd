// Regenerates the bundled trend report and its mock lexicon:
//   make_fixtures <dir>   -> <dir>/trend_report.pdf, <dir>/lexicon.json
#include <cstdio>
#include <filesystem>
#include <iostream>

#include "json.hpp"
#include "pae/ingest/pdf_writer.hpp"
#include "pae/ingest/png.hpp"
#include "pae/util/sha256.hpp"
#include "pae/util/strings.hpp"

using namespace pae;
using ingest::PdfImageSpec;
using ingest::PdfPageSpec;
using ingest::PdfTextSpec;

namespace {

PdfImageSpec swatch(std::size_t w, std::size_t h, int channels, unsigned seed, double left, double top, double dw,
                    double dh) {
  PdfImageSpec img;
  img.width = w;
  img.height = h;
  img.channels = channels;
  img.pixels.resize(w * h * static_cast<std::size_t>(channels));
  for (std::size_t y = 0; y < h; ++y)
    for (std::size_t x = 0; x < w; ++x)
      for (int c = 0; c < channels; ++c) {
        const unsigned v = (x * (seed % 5 + 1) + y * (seed % 3 + 2) + seed * 37 + static_cast<unsigned>(c) * 80) ^
                           (((x / 16 + y / 16) % 2) ? 0x3F : 0x00);
        img.pixels[(y * w + x) * static_cast<std::size_t>(channels) + static_cast<std::size_t>(c)] =
            static_cast<std::uint8_t>(v & 0xFF);
      }
  img.left = left;
  img.top = top;
  img.draw_width = dw;
  img.draw_height = dh;
  return img;
}

std::string hash_of(const PdfImageSpec& img) {
  return util::to_hex(util::sha256(ingest::encode_png(img.pixels, img.width, img.height, img.channels)));
}

PdfTextSpec block(double top, double size, std::vector<std::string> lines) {
  PdfTextSpec t;
  t.left = 72;
  t.top = top;
  t.font_size = size;
  t.leading = size * 1.3;
  t.lines = std::move(lines);
  return t;
}

void chrome(PdfPageSpec& page, int number) {
  page.text.push_back(block(36, 9, {"TREND REPORT A/W"}));
  page.text.push_back(block(770, 9, {std::to_string(number)}));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures <dir>\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::vector<PdfPageSpec> pages(4);

  chrome(pages[0], 1);
  pages[0].text.push_back(block(90, 11,
                                {"The Slouchy V-Neck Why is it key? Slouchy, over-",
                                 "sized and boxy silhouettes continue to drive casual",
                                 "V-neck styles, in line with the growing desire for a",
                                 "cosy, comfortable wardrobe that reassuringly envelops",
                                 "the wearer for A/W. A recognisable knitwear shape",
                                 "ripe for a youthful update, the #countrycalling trend",
                                 "we\xE2\x80\x99re tracking is reworking classic patterns in larger",
                                 "scales. #Supersizedintarsia argyle motifs are a bold and",
                                 "contemporary example.",
                                 "Design details: use 5gg yarn, ensuring a deep V-neckline",
                                 "and raglan sleeves to heighten the slouchy look. Knit in",
                                 "sustainable brushed super-kid mohair yarn for a cosy,",
                                 "soft finish, using a palette of earthy greens and grey",
                                 "tones."}));
  const auto pullover = swatch(160, 200, 3, 11, 72, 330, 160, 200);
  pages[0].images.push_back(pullover);

  chrome(pages[1], 2);
  pages[1].text.push_back(block(90, 11,
                                {"The Utility Cardigan Why is it key? Workwear codes keep",
                                 "feeding into knitwear, and the utility cardigan is the",
                                 "easiest entry point. Expect olive and stone shades,",
                                 "cotton twill trims and patch pockets. #workwearrevival",
                                 "Design details: long sleeves, a neat crewneck and horn",
                                 "buttons give an adult, polished finish."}));
  const auto c1 = swatch(128, 128, 3, 23, 72, 220, 120, 120);
  auto c1_copy = c1;
  c1_copy.left = 200;
  const auto c2 = swatch(120, 140, 3, 31, 328, 220, 120, 140);
  const auto icon = swatch(48, 48, 3, 41, 460, 220, 24, 24);
  const auto c3 = swatch(100, 100, 1, 53, 72, 400, 100, 100);
  pages[1].images = {c1, c1_copy, c2, icon, c3};

  chrome(pages[2], 3);
  const auto turtle = swatch(150, 150, 3, 67, 150, 200, 300, 300);
  pages[2].images.push_back(turtle);

  chrome(pages[3], 4);
  pages[3].text.push_back(block(90, 11,
                                {"Fine-Gauge Essentials Why is it key? Lightweight layers",
                                 "sell through all season. A vneck tank in ecru pairs with a",
                                 "long-sleeve crewneck tee in organic cotton for youthful",
                                 "weekend edits. #essentials #essentials"}));

  util::write_file((dir / "trend_report.pdf").string(), ingest::write_pdf(pages));

  nlohmann::ordered_json text;
  const auto entry = [&](const char* key, const char* match, const char* value) {
    text[key].push_back({{"match", match}, {"value", value}});
  };
  entry("Color", "earthy greens and grey tones", "Earthy Greens And Grey Tones");
  entry("Color", "olive", "Olive");
  entry("Color", "stone", "Stone");
  entry("Color", "ecru", "Ecru");
  entry("Sleeve Style", "raglan sleeves", "Raglan Sleeves");
  entry("Sleeve Style", "long sleeves", "long sleeves");
  entry("Sleeve Style", "long-sleeve", "long-sleeve");
  entry("Product Type", "slouchy v-neck", "V-Neck Sweater");
  entry("Product Type", "utility cardigan", "Cardigan");
  entry("Product Type", "tank", "Tank Top");
  entry("Product Type", "tee", "T-Shirt");
  entry("Material", "sustainable brushed super-kid mohair yarn", "Sustainable Brushed Super-Kid Mohair Yarn");
  entry("Material", "cotton twill", "Cotton Twill");
  entry("Material", "organic cotton", "Organic Cotton");
  entry("Features", "cosy", "Cosy");
  entry("Features", "soft finish", "Soft Finish");
  entry("Features", "patch pockets", "Patch Pockets");
  entry("Features", "horn buttons", "Horn Buttons");
  entry("Categories", "casual", "Casual");
  entry("Categories", "knitwear", "Knitwear");
  entry("Age", "youthful", "Youthful");
  entry("Age", "adult", "Adult");
  entry("Neck", "deep v-neckline", "Deep V-Neckline");
  entry("Neck", "crewneck", "crewneck");
  entry("Neck", "vneck", "vneck");

  nlohmann::ordered_json images;
  images[hash_of(pullover)] =
      "Color: Multicolor,\nSleeve Style: Long Sleeve\nProduct Type: Pullover\nMaterial: Wool Blend\n"
      "Features: V-Neck, Drop Shoulder\nCategories: Women's Fashion\nAge: Adult\nNeck: V-Neck";
  images[hash_of(c1)] =
      "- Color: Olive\n- Sleeve Style: Long Sleeve\n- Product Type: Cardigan\n- Material: Cotton Twill\n"
      "- Features: Patch Pockets\n- Categories: Outerwear\n- Age: Adult\n- Neck: crew neck";
  images[hash_of(c2)] = "**Color**: Stone\n**Product Type**: Cardigan\n**Neck**: Not Mentioned";
  images[hash_of(c3)] = "Features: Horn Buttons.";
  images[hash_of(icon)] = "Color: Red\nProduct Type: Logo";
  images[hash_of(turtle)] =
      "Color: Charcoal\nProduct Type: Turtleneck Sweater\nMaterial: Merino Wool\nAge: Adult\nNeck: roll neck";

  nlohmann::ordered_json lex;
  lex["text"] = std::move(text);
  lex["images"] = std::move(images);
  util::write_file((dir / "lexicon.json").string(), lex.dump(2) + "\n");
  std::cout << "wrote " << (dir / "trend_report.pdf").string() << " and " << (dir / "lexicon.json").string() << "\n";
  return 0;
}
