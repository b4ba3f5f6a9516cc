#include "lcorner/corner.hpp"

#include "lcorner/errors.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using lcorner::Error;
using lcorner::ParameterScale;
using lcorner::errc;
using lcorner::golden_section_init;
using lcorner::kGoldenRatio;

TEST(GoldenSectionInit, UnitIntervalPlacesReciprocalGoldenPoints) {
  const auto [l2, l3] = golden_section_init(0.0, 1.0, ParameterScale::linear);
  EXPECT_NEAR(l2, 0.38196601125010515, 1e-15);
  EXPECT_NEAR(l3, 0.61803398874989485, 1e-15);
  EXPECT_NEAR(l2 + l3, 1.0, 1e-15);
}

TEST(GoldenSectionInit, DefaultSearchRangeLinear) {
  const auto [l2, l3] = golden_section_init(1e-10, 1e-3, ParameterScale::linear);
  EXPECT_NEAR(l2, 3.81966073053504e-4, 1e-12 * 3.8e-4);
  EXPECT_NEAR(l3, 6.18034026946496e-4, 1e-12 * 6.1e-4);
}

TEST(GoldenSectionInit, DefaultSearchRangeLog) {
  const auto [l2, l3] = golden_section_init(1e-10, 1e-3, ParameterScale::log);
  EXPECT_NEAR(std::log10(l2), -7.326237921249264, 1e-12);
  EXPECT_NEAR(std::log10(l3), -5.673762078750736, 1e-12);
  EXPECT_NEAR(l2, 4.718044999416481e-8, 1e-10 * 4.7e-8);
  EXPECT_NEAR(l3, 2.1195219632786e-6, 1e-10 * 2.1e-6);
}

TEST(GoldenSectionInit, QuadrupleIsInGoldenRatio) {
  const struct {
    double lo;
    double hi;
    ParameterScale scale;
  } cases[] = {{0.5, 2.0, ParameterScale::linear},
               {1e-10, 1e-3, ParameterScale::linear},
               {1e-10, 1e-3, ParameterScale::log},
               {0.1, 10.0, ParameterScale::log}};
  for (const auto& c : cases) {
    const auto [l2, l3] = golden_section_init(c.lo, c.hi, c.scale);
    ASSERT_LT(c.lo, l2);
    ASSERT_LT(l2, l3);
    ASSERT_LT(l3, c.hi);
    double x1 = c.lo;
    double x3 = l3;
    double x4 = c.hi;
    if (c.scale == ParameterScale::log) {
      x1 = std::log10(c.lo);
      x3 = std::log10(l3);
      x4 = std::log10(c.hi);
    }
    EXPECT_NEAR((x3 - x1) / (x4 - x1), 1.0 / kGoldenRatio, 1e-12);
  }
}

TEST(GoldenSectionInit, SymmetricPlacement) {
  // lambda2 and lambda3 sit symmetrically in the interval: the distance of
  // lambda2 from the lower end equals the distance of lambda3 from the top
  const auto [l2, l3] = golden_section_init(2.0, 7.0, ParameterScale::linear);
  EXPECT_NEAR(l2 - 2.0, 7.0 - l3, 1e-12);
}

TEST(GoldenSectionInit, RejectsBadIntervals) {
  const struct {
    double lo;
    double hi;
    ParameterScale scale;
  } bad[] = {{1.0, 1.0, ParameterScale::linear},
             {2.0, 1.0, ParameterScale::linear},
             {-1.0, 1.0, ParameterScale::linear},
             {0.0, 1.0, ParameterScale::log},
             {1.0, std::numeric_limits<double>::infinity(),
              ParameterScale::linear}};
  for (const auto& c : bad) {
    try {
      golden_section_init(c.lo, c.hi, c.scale);
      FAIL() << "expected an error for [" << c.lo << ", " << c.hi << "]";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), errc::invalid_interval);
      EXPECT_NE(std::string(e.what()).find("invalid interval"),
                std::string::npos);
    }
  }
}

TEST(GoldenSectionInit, ZeroLowerEndIsLinearOnly) {
  EXPECT_NO_THROW(golden_section_init(0.0, 1.0, ParameterScale::linear));
  EXPECT_THROW(golden_section_init(0.0, 1.0, ParameterScale::log), Error);
}

TEST(CornerSearchConfigValidation, DefaultsAreValid) {
  lcorner::CornerSearchConfig config;
  EXPECT_NO_THROW(config.validate());
}

TEST(CornerSearchConfigValidation, RejectsBadFields) {
  {
    lcorner::CornerSearchConfig config;
    config.lambda_lo = 1e-3;
    config.lambda_hi = 1e-10;
    EXPECT_THROW(config.validate(), Error);
  }
  {
    lcorner::CornerSearchConfig config;
    config.lambda_lo = 0.0;
    try {
      config.validate();
      FAIL() << "expected an error";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), errc::invalid_interval);
    }
  }
  {
    lcorner::CornerSearchConfig config;
    config.epsilon = 0.0;
    try {
      config.validate();
      FAIL() << "expected an error";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), errc::invalid_config);
    }
  }
  {
    lcorner::CornerSearchConfig config;
    config.epsilon = 1.5;
    EXPECT_THROW(config.validate(), Error);
  }
  {
    lcorner::CornerSearchConfig config;
    config.max_iterations = 3;
    try {
      config.validate();
      FAIL() << "expected an error";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), errc::invalid_config);
    }
  }
}
