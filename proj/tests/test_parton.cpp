#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "squeeze/parton.hpp"

namespace {

namespace fs = std::filesystem;
using squeeze::Longitudinal;
using squeeze::QuadratureGrid;

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("squeeze_parton_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) const {
    const fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p;
  }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

TEST(LongitudinalDensity, RestFrameIsHalfVarianceGaussian) {
  const auto m = squeeze::longitudinal_density(0.0, Longitudinal::z, QuadratureGrid::standard());
  EXPECT_NEAR(m.variance, 0.5, 1e-10);
  EXPECT_NEAR(m.mean, 0.0, 1e-14);
  EXPECT_NEAR(m.area(), 1.0, 1e-12);
  for (const auto& s : m.samples) {
    EXPECT_GE(s.density, 0.0);
    EXPECT_NEAR(s.density, std::exp(-s.coordinate * s.coordinate) / std::sqrt(std::numbers::pi), 1e-10);
  }
}

TEST(LongitudinalDensity, VarianceLawBothVariables) {
  const auto grid = QuadratureGrid::standard();
  for (double eta : {0.0, 0.5, 1.0, 2.0, -1.0})
    for (Longitudinal v : {Longitudinal::z, Longitudinal::qz}) {
      const auto m = squeeze::longitudinal_density(eta, v, grid);
      EXPECT_NEAR(m.variance, std::cosh(eta) / 2.0, 1e-6) << eta;
      EXPECT_NEAR(std::sqrt(m.variance), squeeze::width(eta), 1e-6);
    }
  EXPECT_NEAR(squeeze::longitudinal_density(2.0, Longitudinal::z, grid).variance, 1.881098, 1e-6);
}

TEST(LongitudinalDensity, WidthsGrowTogether) {
  const auto grid = QuadratureGrid::standard();
  double prev = 0.0;
  for (double eta : {0.0, 0.5, 1.0, 1.5, 2.0}) {
    const double z = squeeze::longitudinal_density(eta, Longitudinal::z, grid).variance;
    const double q = squeeze::longitudinal_density(eta, Longitudinal::qz, grid).variance;
    EXPECT_GT(z, prev);
    EXPECT_NEAR(z, q, 1e-9);
    // the uncertainty product is not constant: it tracks cosh(eta)/2
    EXPECT_NEAR(std::sqrt(z * q), std::cosh(eta) / 2.0, 1e-6);
    prev = z;
  }
}

TEST(LongitudinalDensity, FlagsUnderResolvedGrid) {
  EXPECT_THROW(squeeze::longitudinal_density(4.0, Longitudinal::z, QuadratureGrid::standard()),
               squeeze::grid_resolution_error);
}

TEST(Width, Values) {
  EXPECT_NEAR(squeeze::width(0.0), std::sqrt(0.5), 1e-16);
  EXPECT_NEAR(squeeze::width(0.0), 0.70711, 1e-5);
  EXPECT_NEAR(squeeze::width(2.0), 1.3715312047276998538, 1e-15);
  double prev = 0.0;
  for (int i = 0; i <= 40; ++i) {
    EXPECT_GT(squeeze::width(0.1 * i), prev);
    EXPECT_EQ(squeeze::width(-0.1 * i), squeeze::width(0.1 * i));
    prev = squeeze::width(0.1 * i);
  }
}

TEST(LightConeConcentration, MatchesErfOracle) {
  // |psi|^2 factorizes in (u, v); the v marginal has sigma = e^{-eta/2}/sqrt2
  for (double eta : {0.0, 1.0, 4.0}) {
    const double expected = std::erf(0.25 * std::exp(eta / 2.0));
    EXPECT_NEAR(squeeze::light_cone_concentration(eta, 0.25), expected, 1e-7) << eta;
  }
  EXPECT_NEAR(squeeze::light_cone_concentration(4.0, 0.25), 0.99100978045164210071, 1e-7);
  EXPECT_GT(squeeze::light_cone_concentration(4.0, 0.25), 0.95);
}

TEST(GaussianPdf, RestFrameSymmetricPeak) {
  const auto rows = squeeze::gaussian_pdf(0.0, 101);
  ASSERT_EQ(rows.size(), 101u);
  EXPECT_EQ(rows[50].coordinate, 0.0);
  EXPECT_NEAR(rows[50].density, std::numbers::inv_sqrtpi, 1e-12);
  for (std::size_t i = 0; i < 101; ++i) {
    EXPECT_NEAR(rows[i].coordinate, -rows[100 - i].coordinate, 1e-14);
    EXPECT_NEAR(rows[i].density, rows[100 - i].density, 1e-14);
  }
}

TEST(GaussianPdf, AreaIsOneAtLargeEta) {
  const auto rows = squeeze::gaussian_pdf(4.0, 101);
  double area = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i)
    area += 0.5 * (rows[i].density + rows[i - 1].density) * (rows[i].coordinate - rows[i - 1].coordinate);
  EXPECT_NEAR(area, 1.0, 1e-4);
}

TEST(GaussianPdf, MatchesAnalyticMarginal) {
  const double eta = 2.5;
  const double var = std::cosh(eta) / 2.0;
  for (const auto& s : squeeze::gaussian_pdf(eta, 41))
    EXPECT_NEAR(s.density, std::exp(-s.coordinate * s.coordinate / (2 * var)) / std::sqrt(2 * std::numbers::pi * var),
                1e-10);
}

TEST(GaussianPdf, RescaleKeepsArea) {
  const auto plain = squeeze::gaussian_pdf(1.0, 11);
  const auto mapped = squeeze::gaussian_pdf(1.0, 11, Longitudinal::qz, squeeze::AffineRescale{0.5, -0.1});
  for (std::size_t i = 0; i < 11; ++i) {
    EXPECT_NEAR(mapped[i].coordinate, 0.5 - 0.1 * plain[i].coordinate, 1e-15);
    EXPECT_NEAR(mapped[i].density, plain[i].density / 0.1, 1e-12);
  }
  EXPECT_THROW(squeeze::gaussian_pdf(1.0, 11, Longitudinal::qz, squeeze::AffineRescale{0.0, 0.0}), squeeze::domain_error);
}

TEST(GaussianPdf, DegenerateCount) {
  EXPECT_THROW(squeeze::gaussian_pdf(0.0, 1), squeeze::domain_error);
  EXPECT_THROW(squeeze::gaussian_pdf(0.0, 0), squeeze::domain_error);
}

TEST_F(TempDir, ExportWritesCsv) {
  const fs::path out = dir_ / "pdf.csv";
  squeeze::export_gaussian_pdf(0.0, 5, out);
  const std::string text = slurp(out);
  EXPECT_EQ(text.rfind("coordinate,model_density\n", 0), 0u);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 6);
  EXPECT_NE(text.find("\n0,0.564189583547756\n"), std::string::npos) << text;
}

TEST_F(TempDir, ExportToUnwritablePath) {
  EXPECT_THROW(squeeze::export_gaussian_pdf(0.0, 5, dir_ / "missing" / "pdf.csv"), squeeze::io_error);
}

TEST_F(TempDir, IngestTwoRows) {
  const auto s = squeeze::ingest_overlay(write("data.csv", "x,value\n0.1,2\n0.2,3.5\n"));
  ASSERT_EQ(s.points.size(), 2u);
  EXPECT_EQ(s.label, "data");
  EXPECT_EQ(s.points[1].second, 3.5);
  EXPECT_EQ(s.provenance.filename(), "data.csv");
}

TEST_F(TempDir, IngestReportsLineOfMalformedValue) {
  try {
    squeeze::ingest_overlay(write("bad.csv", "x,value\n0.1,2\n0.2,abc\n0.3,1\n"));
    FAIL() << "expected parse_error";
  } catch (const squeeze::parse_error& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("abc"), std::string::npos);
  }
}

TEST_F(TempDir, IngestRejectsMalformedShapes) {
  EXPECT_THROW(squeeze::ingest_overlay(write("h.csv", "a,b\n0,1\n1,2\n")), squeeze::parse_error);
  EXPECT_THROW(squeeze::ingest_overlay(write("f.csv", "x,value\n0,1,2\n1,2\n")), squeeze::parse_error);
  EXPECT_THROW(squeeze::ingest_overlay(write("e.csv", "x,value\n0,\n1,2\n")), squeeze::parse_error);
  EXPECT_THROW(squeeze::ingest_overlay(write("n.csv", "x,value\n0,nan\n1,2\n")), squeeze::parse_error);
  EXPECT_THROW(squeeze::ingest_overlay(dir_ / "absent.csv"), squeeze::io_error);
}

TEST_F(TempDir, IngestRejectsDecreasingAbscissa) {
  EXPECT_THROW(squeeze::ingest_overlay(write("d.csv", "x,value\n1,1\n0.5,2\n")), squeeze::validation_error);
  EXPECT_THROW(squeeze::ingest_overlay(write("r.csv", "x,value\n1,1\n1,2\n")), squeeze::validation_error);
  EXPECT_THROW(squeeze::ingest_overlay(write("o.csv", "x,value\n1,1\n")), squeeze::validation_error);
}

TEST_F(TempDir, OverlayRoundTripIsByteIdentical) {
  squeeze::OverlaySeries s{"synthetic", {}, {}};
  for (int i = 0; i < 30; ++i) s.points.emplace_back(0.05 + 0.031 * i, std::exp(-0.2 * i) * 1.2345678901234);
  const fs::path first = dir_ / "first.csv";
  const fs::path second = dir_ / "second.csv";
  squeeze::write_overlay(s, first);
  squeeze::write_overlay(squeeze::ingest_overlay(first), second);
  EXPECT_EQ(slurp(first), slurp(second));
}

TEST(OverlaySeries, LinearInterpolation) {
  const squeeze::OverlaySeries s{"s", {{0.0, 1.0}, {1.0, 3.0}, {3.0, 3.0}}, {}};
  EXPECT_EQ(*s.value_at(0.0), 1.0);
  EXPECT_EQ(*s.value_at(0.5), 2.0);
  EXPECT_EQ(*s.value_at(2.0), 3.0);
  EXPECT_FALSE(s.value_at(-0.1));
  EXPECT_FALSE(s.value_at(3.1));
}

TEST(PartonCsv, OverlayColumnEmptyOutsideRange) {
  const squeeze::OverlaySeries s{"s", {{0.0, 1.0}, {1.0, 3.0}}, {}};
  std::ostringstream out;
  squeeze::write_parton_csv(out, {{-1.0, 0.1}, {0.5, 0.2}}, &s);
  EXPECT_EQ(out.str(), "coordinate,model_density,overlay_value\n-1,0.1,\n0.5,0.2,2\n");
}

}  // namespace
