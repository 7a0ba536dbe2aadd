#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "pae/kernels/morphology.hpp"
#include "pae/kernels/similarity.hpp"

using namespace pae;

TEST_SUITE("kernels") {
  TEST_CASE("grayscale serial and parallel agree") {
    std::mt19937 rng(7);
    std::vector<std::uint8_t> rgb(3 * 333 * 77);
    for (auto& v : rgb) v = static_cast<std::uint8_t>(rng());
    std::vector<std::uint8_t> a(333 * 77), b(333 * 77);
    kernels::grayscale_serial(rgb, a);
    kernels::grayscale(rgb, b);
    CHECK(a == b);
    CHECK(kernels::luma(255, 255, 255) == 255);
    CHECK(kernels::luma(10, 10, 10) == 10);
  }

  TEST_CASE("gradient serial and parallel agree") {
    std::mt19937 rng(11);
    const std::size_t w = 157, h = 93;
    std::vector<std::uint8_t> g(w * h);
    for (auto& v : g) v = static_cast<std::uint8_t>(rng());
    for (int radius : {1, 2}) {
      for (int it : {1, 2}) {
        std::vector<std::uint8_t> a(w * h), b(w * h);
        kernels::morph_gradient_serial(g, w, h, a, radius, it);
        kernels::morph_gradient(g, w, h, b, radius, it);
        CHECK(a == b);
      }
    }
  }

  TEST_CASE("gradient of a single pixel covers its 3x3 neighbourhood") {
    std::vector<std::uint8_t> g(25, 0), out(25);
    g[2 * 5 + 2] = 255;
    kernels::morph_gradient_serial(g, 5, 5, out);
    for (std::size_t y = 0; y < 5; ++y)
      for (std::size_t x = 0; x < 5; ++x) {
        const bool inside = x >= 1 && x <= 3 && y >= 1 && y <= 3;
        CHECK(out[y * 5 + x] == (inside ? 255 : 0));
      }
  }

  TEST_CASE("gradient of a constant image is zero") {
    std::vector<std::uint8_t> g(64, 90), out(64, 1);
    kernels::morph_gradient(g, 8, 8, out);
    for (auto v : out) CHECK(v == 0);
  }

  TEST_CASE("cosine oracles") {
    const std::vector<double> a{1, 2, 2}, b{2, 1, 2};
    CHECK(kernels::cosine_unchecked(a, b) == doctest::Approx(8.0 / 9.0).epsilon(1e-12));
    CHECK(kernels::cosine_unchecked(a, a) == 1.0);
    const std::vector<double> x{1, 0}, y{0, 1};
    CHECK(kernels::cosine_unchecked(x, y) == 0.0);
  }

  TEST_CASE("cosine matrix serial and parallel agree") {
    std::mt19937 rng(3);
    std::normal_distribution<double> nd;
    const std::size_t dim = 17, n = 40, m = 23;
    std::vector<double> a(n * dim), b(m * dim);
    for (auto& v : a) v = nd(rng);
    for (auto& v : b) v = nd(rng);
    const auto s = kernels::cosine_matrix_serial(a, b, dim);
    const auto p = kernels::cosine_matrix(a, b, dim);
    REQUIRE(s.size() == n * m);
    CHECK(s == p);
  }
}
