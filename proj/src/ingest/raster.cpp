#include "pae/ingest/raster.hpp"

#include <algorithm>
#include <cmath>

#include "image_decode.hpp"
#include "pae/error.hpp"
#include "pae/ingest/content_stream.hpp"
#include "pae/kernels/morphology.hpp"

namespace pae::ingest {

namespace {

constexpr std::size_t kMaxSide = 32768;

class Renderer final : public pdf::ContentVisitor {
 public:
  Renderer(const pdf::File& file, const pdf::Rect& box, Raster& canvas, std::vector<std::string>& warnings)
      : file_(file), box_(box), canvas_(canvas), warnings_(warnings), scale_(canvas.dpi / 72.0) {}

  void text(const pdf::TextRun& run) override {
    const double glyph_w = std::max(run.glyph_width * 0.8, run.font_size * 0.3);
    const double glyph_h = run.font_size * 0.7;
    for (std::size_t i = 0; i < run.glyph_origins.size(); ++i) {
      if (i < run.glyph_blank.size() && run.glyph_blank[i]) continue;
      const auto& o = run.glyph_origins[i];
      fill(o[0], o[1], o[0] + glyph_w, o[1] + glyph_h, 0);
    }
  }

  void image(const pdf::ImagePlacement& p) override {
    const auto a = pdf::apply(p.ctm, 0, 0), b = pdf::apply(p.ctm, 1, 0), c = pdf::apply(p.ctm, 0, 1),
               d = pdf::apply(p.ctm, 1, 1);
    const double x0 = std::min({a[0], b[0], c[0], d[0]}), x1 = std::max({a[0], b[0], c[0], d[0]});
    const double y0 = std::min({a[1], b[1], c[1], d[1]}), y1 = std::max({a[1], b[1], c[1], d[1]});
    std::optional<detail::Pixels> px;
    try {
      px = detail::decode_image(file_, *p.stream, 0).pixels;
    } catch (const Error& e) {
      warnings_.push_back(std::string("image ") + p.name + " not rendered: " + e.what());
      return;
    }
    const auto [cx0, cy0, cx1, cy1] = to_pixels(x0, y0, x1, y1);
    if (cx1 <= cx0 || cy1 <= cy0) return;
    for (std::size_t y = cy0; y < cy1; ++y) {
      for (std::size_t x = cx0; x < cx1; ++x) {
        std::uint8_t* dst = &canvas_.pixels[(y * canvas_.width + x) * 3];
        if (!px) {
          dst[0] = dst[1] = dst[2] = 128;  // codec we cannot decode: grey placeholder
          continue;
        }
        const auto sx = std::min(px->width - 1, (x - cx0) * px->width / (cx1 - cx0));
        const auto sy = std::min(px->height - 1, (y - cy0) * px->height / (cy1 - cy0));
        const std::uint8_t* src = &px->data[(sy * px->width + sx) * static_cast<std::size_t>(px->channels)];
        for (int k = 0; k < 3; ++k) dst[k] = px->channels == 1 ? src[0] : src[k];
      }
    }
  }

 private:
  // Page rectangle (points, y up) -> clipped pixel rectangle (y down).
  std::array<std::size_t, 4> to_pixels(double x0, double y0, double x1, double y1) const {
    auto clamp_x = [&](double v) {
      return static_cast<std::size_t>(std::clamp(std::lround(v), 0L, static_cast<long>(canvas_.width)));
    };
    auto clamp_y = [&](double v) {
      return static_cast<std::size_t>(std::clamp(std::lround(v), 0L, static_cast<long>(canvas_.height)));
    };
    return {clamp_x((x0 - box_.x0) * scale_), clamp_y((box_.y1 - y1) * scale_), clamp_x((x1 - box_.x0) * scale_),
            clamp_y((box_.y1 - y0) * scale_)};
  }

  void fill(double x0, double y0, double x1, double y1, std::uint8_t value) {
    const auto [cx0, cy0, cx1, cy1] = to_pixels(x0, y0, x1, y1);
    for (std::size_t y = cy0; y < cy1; ++y)
      std::fill_n(&canvas_.pixels[(y * canvas_.width + cx0) * 3], (cx1 - cx0) * 3, value);
  }

  const pdf::File& file_;
  pdf::Rect box_;
  Raster& canvas_;
  std::vector<std::string>& warnings_;
  double scale_;
};

Raster preprocess_impl(const Raster& r, GradientParams params, bool parallel) {
  if ((r.channels != 1 && r.channels != 3) ||
      r.pixels.size() != r.width * r.height * static_cast<std::size_t>(r.channels))
    throw Error(ErrorCode::PreconditionViolation, "raster must have 1 or 3 channels and matching pixel data");
  Raster gray{r.width, r.height, 1, std::vector<std::uint8_t>(r.width * r.height), r.dpi};
  if (r.channels == 3) {
    parallel ? kernels::grayscale(r.pixels, gray.pixels) : kernels::grayscale_serial(r.pixels, gray.pixels);
  } else {
    gray.pixels = r.pixels;
  }
  Raster out{r.width, r.height, 1, std::vector<std::uint8_t>(r.width * r.height), r.dpi};
  if (parallel)
    kernels::morph_gradient(gray.pixels, r.width, r.height, out.pixels, params.radius, params.iterations);
  else
    kernels::morph_gradient_serial(gray.pixels, r.width, r.height, out.pixels, params.radius, params.iterations);
  return out;
}

}  // namespace

Raster rasterize_page(const Document& doc, std::size_t page_index, int dpi) {
  if (page_index >= doc.page_count)
    throw Error(ErrorCode::PageOutOfRange, "page " + std::to_string(page_index) + " of " + std::to_string(doc.page_count));
  if (dpi < kMinDpi || dpi > kMaxDpi)
    throw Error(ErrorCode::PreconditionViolation, "dpi must be within [72, 600], got " + std::to_string(dpi));
  const auto& node = doc.file->pages()[page_index];
  const double w = std::round(node.media_box.width() * dpi / 72.0);
  const double h = std::round(node.media_box.height() * dpi / 72.0);
  if (!(w >= 1 && h >= 1) || w > kMaxSide || h > kMaxSide)
    throw Error(ErrorCode::RenderFailure, "unusable media box for page " + std::to_string(page_index));
  Raster canvas;
  canvas.width = static_cast<std::size_t>(w);
  canvas.height = static_cast<std::size_t>(h);
  canvas.channels = 3;
  canvas.dpi = dpi;
  canvas.pixels.assign(canvas.width * canvas.height * 3, 255);
  std::vector<std::string> warnings;
  Renderer renderer(*doc.file, node.media_box, canvas, warnings);
  pdf::interpret_page(*doc.file, node, renderer, warnings);
  return canvas;
}

Raster preprocess_raster(const Raster& raster, GradientParams params) { return preprocess_impl(raster, params, true); }

Raster preprocess_raster_serial(const Raster& raster, GradientParams params) {
  return preprocess_impl(raster, params, false);
}

}  // namespace pae::ingest
