#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "confex/containment.hpp"
#include "confex/patterns.hpp"
#include "test_util.hpp"

using namespace confex;
using testutil::Rng;

namespace {

const Mode kModes[] = {Mode::CONFIGURATION, Mode::ROW_FIXED, Mode::SUBMATRIX};

}  // namespace

TEST_CASE("mode names") {
  CHECK(mode_from_string("configuration") == Mode::CONFIGURATION);
  CHECK(mode_from_string("config") == Mode::CONFIGURATION);
  CHECK(mode_from_string("row_fixed") == Mode::ROW_FIXED);
  CHECK(mode_from_string("submatrix") == Mode::SUBMATRIX);
  CHECK(to_string(Mode::SUBMATRIX) == "submatrix");
  CHECK_THROWS_AS(mode_from_string("nope"), ArgumentError);
}

TEST_CASE("containment basics") {
  AlphMatrix i2 = identity_pattern(2, 1, 0);
  AlphMatrix i3 = identity_pattern(3, 1, 0);
  auto w = contains(i2, i3, Mode::CONFIGURATION);
  REQUIRE(w);
  CHECK(verify_witness(i2, i3, *w));

  CHECK(contains(triangular_pattern(2, 0, 1), triangular_pattern(3, 1, 0),
                 Mode::CONFIGURATION));
  CHECK_FALSE(contains(i2, triangular_pattern(4, 1, 0), Mode::CONFIGURATION));
  CHECK_FALSE(contains_naive(i2, triangular_pattern(4, 1, 0),
                             Mode::CONFIGURATION));
}

TEST_CASE("naive oracle basics") {
  AlphMatrix zeros12 = AlphMatrix::from_rows(2, {{0, 0}});
  AlphMatrix host = AlphMatrix::from_rows(2, {{0, 1, 0}, {1, 1, 1}});
  CHECK(contains_naive(zeros12, host, Mode::CONFIGURATION));
  AlphMatrix one = AlphMatrix::from_rows(2, {{1}});
  AlphMatrix allzero = AlphMatrix::from_rows(2, {{0, 0}, {0, 0}});
  CHECK_FALSE(contains_naive(one, allzero, Mode::CONFIGURATION));
}

TEST_CASE("symbols outside the alphabet never match") {
  AlphMatrix big = AlphMatrix::from_rows(5, {{4}});
  AlphMatrix host = testutil::complete_matrix(2, 2);
  for (Mode mode : kModes) CHECK_FALSE(contains(big, host, mode));
}

TEST_CASE("duplicate pattern columns need distinct host columns") {
  AlphMatrix two_zero = t_copies(2, AlphMatrix::from_rows(2, {{0}}));
  AlphMatrix single = AlphMatrix::from_rows(2, {{0}});
  CHECK_FALSE(contains(two_zero, single, Mode::CONFIGURATION));
  AlphMatrix doubled = t_copies(2, single);
  auto w = contains(two_zero, doubled, Mode::CONFIGURATION);
  REQUIRE(w);
  CHECK(w->col_map[0] != w->col_map[1]);
}

TEST_CASE("verify_witness rejects tampering") {
  AlphMatrix i2 = identity_pattern(2, 1, 0);
  AlphMatrix i3 = identity_pattern(3, 1, 0);
  auto w = contains(i2, i3, Mode::SUBMATRIX);
  REQUIRE(w);
  CHECK(verify_witness(i2, i3, *w));

  ConfigWitness bad = *w;
  std::swap(bad.row_map[0], bad.row_map[1]);  // breaks SUBMATRIX monotonicity
  CHECK_FALSE(verify_witness(i2, i3, bad));

  bad = *w;
  bad.col_map[0] = bad.col_map[1];  // breaks injectivity
  CHECK_FALSE(verify_witness(i2, i3, bad));

  bad = *w;
  bad.row_map[0] = (bad.row_map[0] + 1) % 3;  // wrong entry mapping
  bad.mode = Mode::CONFIGURATION;
  CHECK_FALSE(verify_witness(i2, i3, bad));
}

TEST_CASE("oracle equivalence on random pairs") {
  Rng rng(101);
  int found = 0;
  for (int it = 0; it < 400; ++it) {
    unsigned r = testutil::pick(rng, 2, 3);
    AlphMatrix F = testutil::random_matrix(rng, testutil::pick(rng, 1, 3),
                                           testutil::pick(rng, 1, 3), r);
    AlphMatrix A = testutil::random_matrix(rng, testutil::pick(rng, 1, 5),
                                           testutil::pick(rng, 1, 8), r);
    for (Mode mode : kModes) {
      auto fast = contains(F, A, mode);
      auto naive = contains_naive(F, A, mode);
      CHECK(fast.has_value() == naive.has_value());
      if (fast) {
        ++found;
        CHECK(verify_witness(F, A, *fast));
        CHECK(verify_witness(F, A, *naive));
      }
    }
  }
  CHECK(found > 50);  // the sample must exercise the positive branch
}

TEST_CASE("reflexivity") {
  Rng rng(102);
  for (int it = 0; it < 30; ++it) {
    AlphMatrix M = testutil::random_matrix(rng, testutil::pick(rng, 1, 4),
                                           testutil::pick(rng, 1, 5),
                                           testutil::pick(rng, 2, 3));
    for (Mode mode : kModes) {
      auto w = contains(M, M, mode);
      REQUIRE(w);
      CHECK(verify_witness(M, M, *w));
    }
  }
}

TEST_CASE("transitivity under CONFIGURATION") {
  Rng rng(103);
  for (int it = 0; it < 200; ++it) {
    unsigned r = 2;
    AlphMatrix F = testutil::random_matrix(rng, 2, 2, r);
    AlphMatrix G = testutil::random_matrix(rng, 3, 4, r);
    AlphMatrix A = testutil::random_matrix(rng, 4, 6, r);
    if (contains(F, G, Mode::CONFIGURATION) &&
        contains(G, A, Mode::CONFIGURATION))
      CHECK(contains(F, A, Mode::CONFIGURATION));
  }
}

TEST_CASE("mode monotonicity") {
  Rng rng(104);
  for (int it = 0; it < 200; ++it) {
    AlphMatrix F = testutil::random_matrix(rng, 2, 2, 2);
    AlphMatrix A = testutil::random_matrix(rng, 4, 5, 2);
    if (contains(F, A, Mode::SUBMATRIX)) CHECK(contains(F, A, Mode::ROW_FIXED));
    if (contains(F, A, Mode::ROW_FIXED))
      CHECK(contains(F, A, Mode::CONFIGURATION));
  }
}

TEST_CASE("column monotonicity") {
  Rng rng(105);
  for (int it = 0; it < 100; ++it) {
    unsigned m = testutil::pick(rng, 2, 4);
    AlphMatrix F = testutil::random_matrix(rng, 2, 2, 2);
    AlphMatrix A = testutil::random_matrix(rng, m, 4, 2);
    AlphMatrix B = testutil::random_matrix(rng, m, 3, 2);
    if (contains(F, A, Mode::CONFIGURATION))
      CHECK(contains(F, concat(A, B), Mode::CONFIGURATION));
  }
}

TEST_CASE("contains_using_column") {
  Rng rng(106);
  for (int it = 0; it < 120; ++it) {
    AlphMatrix F = testutil::random_matrix(rng, 2, 2, 2);
    AlphMatrix A = testutil::random_matrix(rng, 3, 5, 2);
    for (Mode mode : kModes) {
      bool any_col = false;
      for (unsigned c = 0; c < A.cols(); ++c) {
        auto w = contains_using_column(F, A, mode, c);
        if (!w) continue;
        any_col = true;
        CHECK(verify_witness(F, A, *w));
        bool uses = false;
        for (unsigned mapped : w->col_map) uses |= mapped == c;
        CHECK(uses);
      }
      CHECK(any_col == contains(F, A, mode).has_value());
    }
  }
}

TEST_CASE("zero-column pattern is trivially contained") {
  AlphMatrix none = AlphMatrix::empty(2, 2);
  AlphMatrix host = testutil::complete_matrix(2, 2);
  for (Mode mode : kModes) CHECK(contains(none, host, mode));
}
