// Copyright 2026 The Commute Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "commute/matc.hpp"
#include "commute/permutation.hpp"
#include "commute/random.hpp"

namespace {

using namespace commute;

ParseError parse_error(const std::string& text) {
  try {
    from_matc_string(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no parse error for:\n" << text;
  return ParseError(0, 0, "none");
}

TEST(Matc, WritesSeventeenDigits) {
  const ComplexMatrix m = ComplexMatrix::from_rows({{0.1, Complex{1.0, -2.5}}, {1.0 / 3.0, 0.0}});
  EXPECT_EQ(to_matc_string(m),
            "MATC 1\n2 2\n0.10000000000000001 1,-2.5\n0.33333333333333331 0\n");
}

TEST(Matc, RoundTripIsBitExact) {
  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix m = random_matrix(rng, 1 + t % 4, 1 + t % 5);
    const std::string text = to_matc_string(m);
    const ComplexMatrix back = from_matc_string(text);
    EXPECT_EQ(back, m);
    EXPECT_EQ(to_matc_string(back), text);
  }
}

TEST(Matc, NegativeZeroImaginaryIsKept) {
  const ComplexMatrix m(1, 1, {Complex{1.0, -0.0}});
  const ComplexMatrix back = from_matc_string(to_matc_string(m));
  EXPECT_TRUE(std::signbit(back(0, 0).imag()));
}

TEST(Matc, AcceptsExponentsAndExtraWhitespace) {
  const ComplexMatrix m = from_matc_string("MATC 1\n1 3\n  1e-3   -2.5E+2,+1  +4 \n");
  EXPECT_EQ(m(0, 0), Complex(1e-3));
  EXPECT_EQ(m(0, 1), Complex(-250.0, 1.0));
  EXPECT_EQ(m(0, 2), Complex(4.0));
}

TEST(Matc, DiagnosticsCarryLineAndColumn) {
  ParseError e = parse_error("MATC 1\n2 2\n1 0\n0 x\n");
  EXPECT_EQ(e.line(), 4u);
  EXPECT_EQ(e.column(), 3u);

  e = parse_error("MATC 1\n1 2\n1 2,abc\n");
  EXPECT_EQ(e.line(), 3u);
  EXPECT_EQ(e.column(), 5u);

  e = parse_error("MATC 2\n1 1\n1\n");
  EXPECT_EQ(e.line(), 1u);

  e = parse_error("MATC 1\n2 2\n1 0\n");
  EXPECT_EQ(e.line(), 4u);

  e = parse_error("MATC 1\n1 2\n1 2 3\n");
  EXPECT_EQ(e.line(), 3u);
  EXPECT_EQ(e.column(), 5u);

  e = parse_error("MATC 1\n1 1\n1\n5\n");
  EXPECT_EQ(e.line(), 4u);

  e = parse_error("MATC 1\n0 1\n");
  EXPECT_EQ(e.line(), 2u);

  parse_error("MATC 1\n1 1\nnan\n");
  parse_error("MATC 1\n1 1\ninf\n");
  parse_error("MATC 1\n1 1\n1.5.2\n");
  parse_error("");
}

TEST(Perm, RoundTripAndErrors) {
  const PermutationMatrix s = build_tcm(3, 4);
  std::stringstream buf;
  write_perm(buf, s);
  EXPECT_EQ(read_perm(buf), s);

  std::istringstream dup("PERM 1\n3\n0 0 1\n");
  EXPECT_THROW(read_perm(dup), ParseError);
  std::istringstream range("PERM 1\n2\n0 2\n");
  EXPECT_THROW(read_perm(range), ParseError);
  std::istringstream shortp("PERM 1\n3\n0 1\n");
  EXPECT_THROW(read_perm(shortp), ParseError);
  std::istringstream header("MATC 1\n1\n0\n");
  EXPECT_THROW(read_perm(header), ParseError);
}

TEST(Files, MissingFileIsAnError) {
  EXPECT_THROW(load_matc("/nonexistent/dir/x.matc"), Error);
  EXPECT_THROW(load_perm("/nonexistent/dir/x.perm"), Error);
}

}  // namespace
