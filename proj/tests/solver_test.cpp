// Copyright 2026 The lattice-eds Authors
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


#include "lattice_eds/solver.hpp"

#include <algorithm>
#include <vector>

#include "gtest/gtest.h"
#include "lattice_eds/constructions.hpp"
#include "oracles.hpp"

namespace lattice_eds {
namespace {

TEST(BruteForceTest, SmallGrids) {
  EXPECT_EQ(brute_force_F(Lattice::rect(3, 3)).f_value, 7);
  EXPECT_EQ(brute_force_F(Lattice::rect(1, 1)).f_value, 1);
  EXPECT_EQ(brute_force_F(Lattice::rect(2, 2)).f_value, 3);
  EXPECT_EQ(brute_force_F(Lattice::rect(4, 4)).f_value, 16);
}

TEST(BruteForceTest, WitnessIsAuditedOptimum) {
  const Lattice lat = Lattice::rect(4, 5);
  const auto r = brute_force_F(lat);
  const auto a = audit(lat, r.witness);
  EXPECT_TRUE(a.is_two_packing);
  EXPECT_EQ(a.influence, r.f_value);
  EXPECT_GT(r.explored, 0);
}

TEST(BruteForceTest, OtherLattices) {
  EXPECT_EQ(brute_force_F(Lattice::tri_torus(7, 7)).f_value, 49);
  EXPECT_EQ(brute_force_F(Lattice::hex_torus(4, 4)).f_value, 16);
  for (const Lattice& lat : {Lattice::triangle(4), Lattice::hex(3, 5), Lattice::triangle(5)}) {
    const auto adj = Graph::lattice_adjacency(lat);
    EXPECT_EQ(brute_force_F(lat).f_value, oracle::exhaustive_F(adj)) << lat.descriptor();
  }
}

TEST(BruteForceTest, LimitIsEnforced) {
  EXPECT_THROW(brute_force_F(Lattice::rect(8, 8)), LimitExceeded);
  EXPECT_NO_THROW(brute_force_F(Lattice::rect(7, 7)));
  EXPECT_THROW(brute_force_F(Lattice::rect(3, 3), 8), LimitExceeded);
}

TEST(BruteForceTest, MatchesSubsetEnumeration) {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 5; ++n) {
      if (m * n > 20) continue;
      EXPECT_EQ(brute_force_F(Lattice::rect(m, n)).f_value,
                oracle::exhaustive_F(oracle::rect_grid(m, n)))
          << m << "x" << n;
    }
  }
  for (int m = 3; m <= 4; ++m) {
    for (int n = 3; n <= 5; ++n) {
      EXPECT_EQ(brute_force_F(Lattice::rect_torus(m, n)).f_value,
                oracle::exhaustive_F(oracle::rect_grid(m, n, true)))
          << m << "x" << n << " torus";
    }
  }
}

TEST(DpTest, StripFamilies) {
  for (int n = 1; n <= 40; ++n) {
    const int expected = n % 2 == 1 ? 2 * n : 2 * n - 1;
    EXPECT_EQ(dp_F_rect(2, n).f_value, expected) << n;
  }
  EXPECT_EQ(dp_F_rect(3, 3).f_value, 7);
  for (int n = 4; n <= 40; ++n) EXPECT_EQ(dp_F_rect(3, n).f_value, 3 * n - n / 3) << n;
  for (int n = 1; n <= 20; ++n) EXPECT_EQ(dp_F_rect(1, n).f_value, n) << n;
}

TEST(DpTest, SmallSquares) {
  EXPECT_EQ(dp_F_rect(4, 4).f_value, 16);
  EXPECT_EQ(dp_F_rect(5, 5).f_value, 23);
  EXPECT_EQ(dp_F_rect(6, 6).f_value, 33);
  EXPECT_EQ(dp_F_rect(7, 7).f_value, 44);
  EXPECT_EQ(dp_F_rect(5, 5).witness, fset_square_small(5));
  EXPECT_EQ(dp_F_rect(6, 6).witness, fset_square_small(6));
}

TEST(DpTest, AgreesWithBruteForceUpToThirty) {
  for (int m = 1; m <= 30; ++m) {
    for (int n = 1; m * n <= 30; ++n) {
      EXPECT_EQ(dp_F_rect(std::min(m, n), std::max(m, n)).f_value,
                brute_force_F(Lattice::rect(m, n)).f_value)
          << m << "x" << n;
    }
  }
}

TEST(DpTest, TransposeSymmetric) {
  for (int m = 1; m <= 8; ++m) {
    for (int n = m; n <= 9; ++n) {
      EXPECT_EQ(dp_F_rect(m, n).f_value, dp_F_rect(n, m).f_value) << m << "x" << n;
    }
  }
}

TEST(DpTest, WitnessAuditsToValue) {
  for (int m = 1; m <= 9; ++m) {
    for (int n = 1; n <= 12; ++n) {
      const auto r = dp_F_rect(m, n);
      const auto a = audit(Lattice::rect(m, n), r.witness);
      ASSERT_TRUE(a.is_two_packing) << m << "x" << n;
      EXPECT_EQ(a.influence, r.f_value) << m << "x" << n;
    }
  }
}

TEST(DpTest, OnlyFourByFourIsDominatedAmongThreeToNine) {
  for (int m = 3; m <= 9; ++m) {
    for (int n = m; n <= 9; ++n) {
      const bool eds = dp_F_rect(m, n, DpOptions{kDefaultProfileWidth, false}).f_value == m * n;
      EXPECT_EQ(eds, m == 4 && n == 4) << m << "x" << n;
    }
  }
}

TEST(DpTest, WitnessCanBeSkipped) {
  const auto r = dp_F_rect(6, 6, DpOptions{kDefaultProfileWidth, false});
  EXPECT_EQ(r.f_value, 33);
  EXPECT_TRUE(r.witness.empty());
}

TEST(DpTest, LimitsAndDomain) {
  EXPECT_THROW(dp_F_rect(17, 17), LimitExceeded);
  EXPECT_THROW(dp_F_rect(5, 5, DpOptions{4, true}), LimitExceeded);
  EXPECT_THROW(dp_F_rect(0, 5), DomainError);
}

TEST(DpTest, ColumnMasksAreSpreadOut) {
  for (std::uint32_t m : detail::column_masks(8)) {
    for (int a = 0; a < 8; ++a) {
      for (int b = a + 1; b < a + 3 && b < 8; ++b) {
        EXPECT_FALSE((m >> a & 1U) && (m >> b & 1U));
      }
    }
  }
  EXPECT_EQ(detail::column_masks(1).size(), 2U);
  EXPECT_EQ(detail::column_masks(3).size(), 4U);
  EXPECT_TRUE(detail::adjacent_columns_ok(0b001, 0b100));
  EXPECT_FALSE(detail::adjacent_columns_ok(0b001, 0b010));
  EXPECT_FALSE(detail::adjacent_columns_ok(0b010, 0b010));
}

TEST(ConjectureTest, RowsInRange) {
  const auto rows = check_conjecture(7, 10);
  ASSERT_EQ(rows.size(), 4U);
  for (const auto& row : rows) {
    ASSERT_TRUE(row.dp_value.has_value());
    EXPECT_TRUE(row.match) << row.n;
    EXPECT_EQ(*row.dp_value, row.conjectured);
  }
  const auto skipped = check_conjecture(17, 18);
  for (const auto& row : skipped) {
    EXPECT_TRUE(row.skipped);
    EXPECT_FALSE(row.dp_value.has_value());
  }
  EXPECT_THROW(check_conjecture(6, 8), DomainError);
}

TEST(TableTest, VoidCounts) {
  const auto rows = table_voids(3, 9);
  ASSERT_EQ(rows.size(), 7U);
  EXPECT_EQ(*rows[0].voids, 2);  // 3x3
  EXPECT_EQ(*rows[1].voids, 0);  // 4x4
  EXPECT_FALSE(rows[0].predicted.has_value());
  for (const auto& row : rows) {
    if (row.predicted) {
      EXPECT_EQ(*row.voids, *row.predicted) << row.n;
    }
  }
  EXPECT_TRUE(table_voids(20, 20)[0].skipped);
}

}  // namespace
}  // namespace lattice_eds
