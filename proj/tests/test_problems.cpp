#include "doctest.h"

#include <cmath>
#include <sstream>

#include "lsa/pgm.hpp"
#include "lsa/problems.hpp"
#include "lsa/rng.hpp"
#include "test_util.hpp"

using namespace lsa;
using test::lab;

namespace {

GrayImage make_image(int w, int h, std::uint64_t seed)
{
  GrayImage img;
  img.width = w;
  img.height = h;
  img.pixels.resize(static_cast<std::size_t>(w) * h);
  for (std::size_t i = 0; i < img.pixels.size(); ++i)
    img.pixels[i] = to_unit_double(mix64(seed * 1000 + i));
  return img;
}

}

TEST_SUITE("problems") {

TEST_CASE("deconvolution of a single pixel")
{
  GrayImage img;
  img.width = 1;
  img.height = 1;
  img.pixels = {0.0};
  BinaryEnergy e = build_deconvolution_energy(img);
  CHECK(e.constant() == 0.0);
  CHECK(e.unary() == std::vector<double>{1.0 / 81.0});
  CHECK(e.pairwise().empty());
  CHECK(eval_energy(e, lab({1})) == 1.0 / 81.0);
  CHECK(eval_energy(e, lab({0})) == 0.0);
}

TEST_CASE("deconvolution matches the direct objective")
{
  GrayImage img = make_image(5, 5, 9);
  BinaryEnergy e = build_deconvolution_energy(img);

  for (const PairTerm& t : e.pairwise())
    CHECK(t.w > 0.0);

  CHECK(eval_energy(e, Labeling::zeros(25))
        == doctest::Approx(test::deconv_direct(img, Labeling::zeros(25))).epsilon(1e-12));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Labeling s = test::random_labeling(25, 4000 + seed);
    CHECK(std::abs(eval_energy(e, s) - test::deconv_direct(img, s)) <= 1e-9);
  }

  GrayImage zero = make_image(4, 4, 1);
  for (double& p : zero.pixels)
    p = 0.0;
  BinaryEnergy ez = build_deconvolution_energy(zero);
  CHECK(eval_energy(ez, Labeling::zeros(16)) == 0.0);

  GrayImage empty;
  CHECK_THROWS_AS(build_deconvolution_energy(empty), dimension_error);
}

TEST_CASE("deconvolution positive mass equals the window-pair count")
{
  GrayImage img = make_image(5, 4, 3);
  BinaryEnergy e = build_deconvolution_energy(img);
  double pos_sum = 0.0;
  for (const PairTerm& t : e.pairwise())
    pos_sum += t.w;

  double want = 0.0;
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x) {
      const int wx = std::min(x + 1, img.width - 1) - std::max(x - 1, 0) + 1;
      const int wy = std::min(y + 1, img.height - 1) - std::max(y - 1, 0) + 1;
      const int members = wx * wy;
      want += members * (members - 1) / 2 * (2.0 / 81.0);
    }
  CHECK(pos_sum == doctest::Approx(want).epsilon(1e-9));
}

TEST_CASE("synthesize extremes under zero noise")
{
  ShapeSpec tiny;
  tiny.extent = 1e-6;
  DeconvInstance none = synthesize_deconv_instance(8, 8, tiny, 0.0, 5);
  CHECK(none.ground_truth == Labeling::zeros(64));
  for (double p : none.observed.pixels)
    CHECK(p == 0.0);

  ShapeSpec huge;
  huge.extent = 10.0;
  DeconvInstance all = synthesize_deconv_instance(6, 6, huge, 0.0, 5);
  CHECK(all.ground_truth == Labeling::ones(36));
  CHECK(all.observed.at(2, 2) == 1.0);
  CHECK(all.observed.at(0, 0) == doctest::Approx(4.0 / 9.0).epsilon(1e-14));
  CHECK(all.observed.at(3, 0) == doctest::Approx(6.0 / 9.0).epsilon(1e-14));
}

TEST_CASE("synthesize is deterministic and validates input")
{
  ShapeSpec spec;
  DeconvInstance a = synthesize_deconv_instance(16, 12, spec, 0.05, 77);
  DeconvInstance b = synthesize_deconv_instance(16, 12, spec, 0.05, 77);
  CHECK(a.observed.pixels == b.observed.pixels);
  CHECK(a.ground_truth == b.ground_truth);
  DeconvInstance c = synthesize_deconv_instance(16, 12, spec, 0.05, 78);
  CHECK(a.observed.pixels != c.observed.pixels);

  ShapeSpec rect;
  rect.kind = ShapeKind::rectangle;
  rect.extent = 0.5;
  DeconvInstance r = synthesize_deconv_instance(16, 16, rect, 0.0, 1);
  int fg = 0;
  for (int p = 0; p < 256; ++p)
    fg += r.ground_truth[p];
  CHECK(fg > 0);
  CHECK(fg < 256);

  CHECK_THROWS_AS(synthesize_deconv_instance(0, 8, spec, 0.05, 1), dimension_error);
  CHECK_THROWS_AS(synthesize_deconv_instance(8, 8, spec, -0.1, 1), parameter_error);
  ShapeSpec bad;
  bad.extent = 0.0;
  CHECK_THROWS_AS(synthesize_deconv_instance(8, 8, bad, 0.05, 1), parameter_error);
}

TEST_CASE("repulsion hand pairs")
{
  RepulsionParams params;
  params.lambda_reg = 1.0;

  GrayImage same;
  same.width = 2;
  same.height = 1;
  same.pixels = {0.2, 0.2};
  BinaryEnergy attract = build_repulsion_energy(same, params);
  REQUIRE(attract.pairwise().size() == 1);
  CHECK(attract.pairwise()[0].w == doctest::Approx(-0.12).epsilon(1e-12));
  CHECK(attract.unary()[0] == doctest::Approx(-1.5 + 0.06).epsilon(1e-12));
  CHECK(attract.unary()[1] == doctest::Approx(-1.5 + 0.06).epsilon(1e-12));

  GrayImage contrast;
  contrast.width = 2;
  contrast.height = 1;
  contrast.pixels = {0.0, 1.0};
  BinaryEnergy repulse = build_repulsion_energy(contrast, params);
  REQUIRE(repulse.pairwise().size() == 1);
  CHECK(repulse.pairwise()[0].w == doctest::Approx(1.88).epsilon(1e-12));
  CHECK(repulse.pairwise()[0].w > 0.0);
}

TEST_CASE("repulsion drops pairs exactly at the attraction boundary")
{
  RepulsionParams params;
  params.c = 0.0625;
  GrayImage img;
  img.width = 2;
  img.height = 1;
  img.pixels = {0.25, 0.3125};
  BinaryEnergy e = build_repulsion_energy(img, params);
  CHECK(e.pairwise().empty());
}

TEST_CASE("potts expansion identity")
{
  const double v = 0.37;
  for (int x = 0; x <= 1; ++x)
    for (int y = 0; y <= 1; ++y)
      CHECK(v * std::abs(x - y) == v * x + v * y - 2.0 * v * x * y);
}

TEST_CASE("repulsion stencil covers the 16-neighborhood")
{
  GrayImage img = make_image(5, 5, 21);
  BinaryEnergy e = build_repulsion_energy(img, RepulsionParams{});
  CHECK(e.pairwise().size() == 120);

  const int center = 2 * 5 + 2;
  int touching = 0;
  for (const PairTerm& t : e.pairwise())
    touching += t.p == center || t.q == center;
  CHECK(touching == 16);

  RepulsionParams bad;
  bad.sigma_app = 0.0;
  CHECK_THROWS_AS(build_repulsion_energy(img, bad), parameter_error);
  bad = {};
  bad.lambda_reg = -1.0;
  CHECK_THROWS_AS(build_repulsion_energy(img, bad), parameter_error);
}

TEST_CASE("large attraction constant makes the energy submodular")
{
  RepulsionParams params;
  params.c = 2.0;
  GrayImage img = make_image(6, 6, 33);
  BinaryEnergy e = build_repulsion_energy(img, params);
  CHECK(!e.pairwise().empty());
  for (const PairTerm& t : e.pairwise())
    CHECK(t.w < 0.0);
}

TEST_CASE("random_energy honors densities and the seed")
{
  BinaryEnergy sub = random_energy(10, 1.0, 0.0, 2.0, 50);
  CHECK(sub.pairwise().size() == 45);
  for (const PairTerm& t : sub.pairwise())
    CHECK(t.w <= 0.0);

  BinaryEnergy sup = random_energy(10, 1.0, 1.0, 2.0, 50);
  for (const PairTerm& t : sup.pairwise())
    CHECK(t.w > 0.0);

  CHECK(random_energy(10, 0.0, 0.5, 2.0, 50).pairwise().empty());

  BinaryEnergy a = random_energy(12, 0.5, 0.4, 2.0, 51);
  BinaryEnergy b = random_energy(12, 0.5, 0.4, 2.0, 51);
  CHECK(a.constant() == b.constant());
  CHECK(a.unary() == b.unary());
  REQUIRE(a.pairwise().size() == b.pairwise().size());
  for (std::size_t i = 0; i < a.pairwise().size(); ++i) {
    CHECK(a.pairwise()[i].p == b.pairwise()[i].p);
    CHECK(a.pairwise()[i].q == b.pairwise()[i].q);
    CHECK(a.pairwise()[i].w == b.pairwise()[i].w);
  }
  for (double u : a.unary())
    CHECK(std::abs(u) < 2.0);

  CHECK_THROWS_AS(random_energy(0, 0.5, 0.5, 2.0, 1), parameter_error);
  CHECK_THROWS_AS(random_energy(5, 1.5, 0.5, 2.0, 1), parameter_error);
  CHECK_THROWS_AS(random_energy(5, 0.5, -0.1, 2.0, 1), parameter_error);
  CHECK_THROWS_AS(random_energy(5, 0.5, 0.5, -1.0, 1), parameter_error);
}

TEST_CASE("pgm ascii round trip")
{
  PgmImage img;
  img.width = 3;
  img.height = 2;
  img.maxval = 255;
  img.pixels = {0, 100, 255, 7, 42, 199};
  std::ostringstream out;
  write_pgm(out, img);
  CHECK(out.str().substr(0, 2) == "P2");
  std::istringstream in(out.str());
  PgmImage back = read_pgm(in);
  CHECK(back.width == 3);
  CHECK(back.height == 2);
  CHECK(back.maxval == 255);
  CHECK(back.pixels == img.pixels);
}

TEST_CASE("pgm reads comments and binary payloads")
{
  std::istringstream ascii("P2 # magic\n# a comment line\n 2 2\n255\n0 1\n2 3\n");
  PgmImage a = read_pgm(ascii);
  CHECK(a.pixels == std::vector<int>{0, 1, 2, 3});

  std::string p5 = "P5\n2 2\n255\n";
  p5 += std::string({'\x00', '\x7f', '\x01', '\xff'});
  std::istringstream bin(p5, std::ios::binary);
  PgmImage b = read_pgm(bin);
  CHECK(b.pixels == std::vector<int>{0, 127, 1, 255});

  std::string p5w = "P5\n1 2\n65535\n";
  p5w += std::string({'\x01', '\x00', '\x00', '\x02'});
  std::istringstream wide(p5w, std::ios::binary);
  PgmImage w = read_pgm(wide);
  CHECK(w.maxval == 65535);
  CHECK(w.pixels == std::vector<int>{256, 2});
}

TEST_CASE("pgm rejects malformed input")
{
  std::istringstream bad_magic("P6 2 2 255 0 0 0 0");
  CHECK_THROWS_AS(read_pgm(bad_magic), parse_error);
  std::istringstream out_of_range("P2 1 1 10 11");
  CHECK_THROWS_AS(read_pgm(out_of_range), parse_error);
  std::istringstream truncated("P2 2 2 255 0 1 2");
  CHECK_THROWS_AS(read_pgm(truncated), parse_error);
  std::istringstream bad_maxval("P2 1 1 0 0");
  CHECK_THROWS_AS(read_pgm(bad_maxval), parse_error);
  std::istringstream huge_maxval("P2 1 1 70000 0");
  CHECK_THROWS_AS(read_pgm(huge_maxval), parse_error);
}

TEST_CASE("image and labeling conversions")
{
  PgmImage img;
  img.width = 2;
  img.height = 1;
  img.maxval = 200;
  img.pixels = {0, 150};
  GrayImage g = gray_from_pgm(img);
  CHECK(g.pixels == std::vector<double>{0.0, 0.75});

  PgmImage q = pgm_from_gray(g, 200);
  CHECK(q.pixels == img.pixels);

  Labeling s = lab({1, 0, 1, 1});
  PgmImage ls = pgm_from_labeling(s, 4, 1);
  CHECK(ls.maxval == 1);
  CHECK(labeling_from_pgm(ls) == s);

  PgmImage nonbinary;
  nonbinary.width = 2;
  nonbinary.height = 1;
  nonbinary.maxval = 2;
  nonbinary.pixels = {0, 1};
  CHECK_THROWS_AS(labeling_from_pgm(nonbinary), parse_error);
}

TEST_CASE("pgm lines stay below 70 characters")
{
  PgmImage img;
  img.width = 40;
  img.height = 3;
  img.maxval = 65535;
  img.pixels.assign(120, 65535);
  std::ostringstream out;
  write_pgm(out, img);
  std::istringstream lines(out.str());
  std::string line;
  while (std::getline(lines, line))
    CHECK(line.size() <= 69);
}

}
