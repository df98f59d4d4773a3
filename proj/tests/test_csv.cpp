#include <sstream>

#include <gtest/gtest.h>

#include "h22/csv.hpp"
#include "test_util.hpp"

using namespace h22;

TEST(Csv, RoundTrip) {
  const Series f{complex(0.1, -0.2), 0.0, complex(1e-300, 3.5)};
  std::stringstream ss;
  write_coefficients_csv(ss, f);
  EXPECT_EQ(read_coefficients_csv(ss), f);
}

TEST(Csv, ToleratesCommentsHeaderAndGaps) {
  std::istringstream in("# phi\nn,re,im\n\n3, 0.5 ,0\n0,1,-1\n");
  const Series f = read_coefficients_csv(in);
  EXPECT_EQ(f, (Series{complex(1, -1), 0.0, 0.0, 0.5}));
}

TEST(Csv, Errors) {
  std::istringstream bad_fields("0,1\n");
  EXPECT_THROW(read_coefficients_csv(bad_fields), std::runtime_error);
  std::istringstream bad_number("0,abc,0\n");
  EXPECT_THROW(read_coefficients_csv(bad_number), std::runtime_error);
  std::istringstream dup("1,1,0\n1,2,0\n");
  EXPECT_THROW(read_coefficients_csv(dup), std::runtime_error);
  std::istringstream neg("-1,1,0\n");
  EXPECT_THROW(read_coefficients_csv(neg), std::runtime_error);
  std::istringstream frac("1.5,1,0\n");
  EXPECT_THROW(read_coefficients_csv(frac), std::runtime_error);
  std::istringstream empty("# nothing\n");
  EXPECT_THROW(read_coefficients_csv(empty), std::runtime_error);
}

TEST(Csv, MatrixDump) {
  std::stringstream ss;
  write_matrix_csv(ss, composition_matrix(Series{0.0, 0.5}, 1));
  EXPECT_EQ(ss.str(), "m,n,re,im\n0,0,1,0\n0,1,0,0\n1,0,0,0\n1,1,0.5,0\n");
}
