// Copyright 2026 The Mermin Device Authors
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

#include "mermin/rational.h"

#include "gtest/gtest.h"

using namespace mermin;

TEST(ParseRational, forms) {
    EXPECT_EQ(parse_rational("3"), Rational(3));
    EXPECT_EQ(parse_rational("3/8"), Rational(3, 8));
    EXPECT_EQ(parse_rational("6/16"), Rational(3, 8));
    EXPECT_EQ(parse_rational("0.375"), Rational(3, 8));
    EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
    EXPECT_EQ(parse_rational(".5"), Rational(1, 2));
    EXPECT_EQ(parse_rational("-1/8"), Rational(-1, 8));
    EXPECT_EQ(parse_rational("1."), Rational(1));
}

TEST(ParseRational, rejects_garbage) {
    for (const char *bad : {"", "abc", "1/0", "1/", "/2", "1.2.3", "1/-2", "0.-5", "1e3", "."}) {
        EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
    }
}

TEST(RationalToString, canonical) {
    EXPECT_EQ(to_string(Rational(2, 4)), "1/2");
    EXPECT_EQ(to_string(Rational(4, 2)), "2");
    EXPECT_EQ(to_string(Rational(-1, 8)), "-1/8");
    EXPECT_EQ(parse_rational(to_string(Rational(281437, 750000))), Rational(281437, 750000));
}

TEST(Rational, no_overflow_with_unrelated_denominators) {
    Rational sum;
    Rational product(1);
    for (int q : {997, 991, 983, 977, 971, 967, 953, 947}) {
        sum += Rational(1, q);
        product *= Rational(q - 1, q);
    }
    EXPECT_GT(sum, Rational(0));
    EXPECT_LT(product, Rational(1));
    EXPECT_NEAR(to_double(product), 0.991807, 1e-6);
    EXPECT_EQ(to_string(Rational(1, 997) * Rational(1, 991) * Rational(1, 983) * Rational(1, 977) * Rational(1, 971) *
                        Rational(1, 967) * Rational(1, 953)),
              "1/849093466185743091697");
}
