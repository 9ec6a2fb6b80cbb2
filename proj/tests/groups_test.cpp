// Copyright 2026 The bgclean Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "bgc/errors.hpp"
#include "bgc/groups.hpp"

namespace bgc {
namespace {

TEST(CyclicGroupTest, Arithmetic) {
  CyclicGroup z5(5);
  EXPECT_EQ(z5.multiply(3, 4), 2);
  EXPECT_EQ(z5.inverse(2), 3);
  EXPECT_EQ(z5.inverse(0), 0);
  EXPECT_FALSE(z5.contains(5));
  EXPECT_THROW(CyclicGroup(0), MalformedInputError);
}

TEST(TableGroupTest, LoadsNonAbelianGroup) {
  TableGroup s3 = TableGroup::load(BGC_TEST_DATA_DIR "/s3.table");
  EXPECT_EQ(s3.order(), 6);
  EXPECT_EQ(s3.multiply(1, 2), 4);
  EXPECT_EQ(s3.multiply(2, 1), 3);
  for (int a = 0; a < 6; ++a) {
    EXPECT_EQ(s3.multiply(a, s3.inverse(a)), 0);
  }
}

TEST(TableGroupTest, MissingFileIsAParseError) {
  EXPECT_THROW(TableGroup::load(BGC_TEST_DATA_DIR "/absent.table"),
               ParseError);
}

TEST(TableGroupTest, RejectsBrokenTables) {
  // Not associative: a Latin square that is not a group.
  EXPECT_THROW(TableGroup::parse("order 3\n0 1 2\n1 0 2\n2 2 0\ninv: 0 1 2\n"),
               ParseError);
  EXPECT_THROW(TableGroup::parse("order 2\n0 1\n1 0\ninv: 0 0\n"),
               ParseError);
  EXPECT_THROW(TableGroup::parse("order 2\n0 1\n1 0\n"), ParseError);
  EXPECT_THROW(TableGroup::parse("0 1\n1 0\ninv: 0 1\n"), ParseError);
  EXPECT_THROW(TableGroup::parse("order 2\n0 1\n1\ninv: 0 1\n"), ParseError);
}

TEST(TableGroupTest, ReportsLineNumbers) {
  try {
    TableGroup::parse("order 2\n0 1\n1 x\ninv: 0 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(RationalMatrixTest, InverseAndProduct) {
  RationalMatrix a(2, {Rational(2), Rational(1), Rational(1), Rational(1)});
  auto inv = a.inverse();
  ASSERT_TRUE(inv);
  EXPECT_TRUE((a * *inv).is_identity());
  EXPECT_EQ(inv->at(0, 1), Rational(-1));
  RationalMatrix singular(2, {Rational(1), Rational(2), Rational(2),
                              Rational(4)});
  EXPECT_FALSE(singular.inverse());
}

TEST(MatrixGroupTest, MembershipRequiresInvertibility) {
  MatrixGroup gl2(2);
  EXPECT_TRUE(gl2.contains(RationalMatrix::identity(2)));
  EXPECT_FALSE(gl2.contains(RationalMatrix(2)));
  EXPECT_FALSE(gl2.contains(RationalMatrix::identity(3)));
  RationalMatrix half(2, {Rational(1, 2), Rational(0), Rational(0),
                          Rational(3)});
  EXPECT_TRUE(gl2.equal(gl2.multiply(half, gl2.inverse(half)),
                        gl2.identity()));
}

}  // namespace
}  // namespace bgc
