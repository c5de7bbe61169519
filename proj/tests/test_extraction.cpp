#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "confex/extraction.hpp"
#include "confex/search.hpp"
#include "test_util.hpp"

using namespace confex;
using testutil::Rng;

namespace {

AlphMatrix pattern_of(const ExtractionResult& res) {
  return realize(PatternSpec::generator(res.kind, res.ell, res.a, res.b));
}

void check_result(const AlphMatrix& A, const ExtractionResult& res,
                  unsigned ell) {
  CHECK(res.ell == ell);
  CHECK(res.a != res.b);
  CHECK(verify_witness(pattern_of(res), A, res.witness));
}

}  // namespace

TEST_CASE("complete 3-row binary matrix, both strategies") {
  AlphMatrix A = testutil::complete_matrix(3, 2);
  for (ExtractStrategy strat :
       {ExtractStrategy::DIRECT, ExtractStrategy::PROOF_FOLLOWING}) {
    ExtractOptions opts;
    opts.strategy = strat;
    auto res = extract_configuration(A, 2, opts);
    REQUIRE(res);
    check_result(A, *res, 2);
  }
}

TEST_CASE("deep decomposition chains take the proof-following route") {
  // The complete 3-row matrix has tree depth 2 >= C(2,2)(ell-1)+1 = 2.
  AlphMatrix A = testutil::complete_matrix(3, 2);
  ExtractOptions opts;
  opts.strategy = ExtractStrategy::PROOF_FOLLOWING;
  auto res = extract_configuration(A, 2, opts);
  REQUIRE(res);
  CHECK(res->strategy == ExtractStrategy::PROOF_FOLLOWING);
  check_result(A, *res, 2);
}

TEST_CASE("branchy nodes take the square-layout route") {
  AlphMatrix A = AlphMatrix::from_rows(
      2, {{0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}});
  ExtractOptions opts;
  opts.strategy = ExtractStrategy::PROOF_FOLLOWING;
  opts.branching_budget = 1;
  auto res = extract_configuration(A, 2, opts);
  REQUIRE(res);
  check_result(A, *res, 2);
}

TEST_CASE("triangular-only matrices never report an identity") {
  AlphMatrix A = concat(triangular_pattern(5, 1, 0),
                        AlphMatrix(2, 5, {{1, 1, 1, 1, 1}}));
  for (ExtractStrategy strat :
       {ExtractStrategy::DIRECT, ExtractStrategy::PROOF_FOLLOWING}) {
    ExtractOptions opts;
    opts.strategy = strat;
    auto res = extract_configuration(A, 2, opts);
    REQUIRE(res);
    CHECK((res->kind == PatternKind::TRIANGULAR ||
           res->kind == PatternKind::TRIANGULAR_REVERSED));
    check_result(A, *res, 2);
  }
}

TEST_CASE("small matrices yield nothing under either strategy") {
  AlphMatrix A = AlphMatrix::from_rows(2, {{0, 0, 0}, {1, 1, 1}});
  for (ExtractStrategy strat :
       {ExtractStrategy::DIRECT, ExtractStrategy::PROOF_FOLLOWING}) {
    ExtractOptions opts;
    opts.strategy = strat;
    CHECK_FALSE(extract_configuration(A, 2, opts));
  }
}

TEST_CASE("argument errors") {
  AlphMatrix A = testutil::complete_matrix(2, 2);
  CHECK_THROWS_AS(extract_configuration(A, 0), ArgumentError);
  CHECK_THROWS_AS(extract_configuration(AlphMatrix(1, 2, {{0, 0}}), 2),
                  ArgumentError);
}

TEST_CASE("random wide simple matrices always yield a pattern") {
  Rng rng(601);
  SimplicityBound s1(1);
  for (unsigned m : {3u, 4u}) {
    unsigned threshold =
        forb_exact(m, 2, family_T(2, 2), s1).value;
    for (int it = 0; it < 50; ++it) {
      unsigned n = testutil::pick(rng, threshold + 1, 1u << m);
      AlphMatrix A = testutil::random_s_simple(rng, m, n, 2, 1);
      for (ExtractStrategy strat :
           {ExtractStrategy::DIRECT, ExtractStrategy::PROOF_FOLLOWING}) {
        ExtractOptions opts;
        opts.strategy = strat;
        auto res = extract_configuration(A, 2, opts);
        REQUIRE(res);
        check_result(A, *res, 2);
      }
    }
  }
}

TEST_CASE("case1_pigeonhole") {
  // 3x3 over {0,1}: off-diagonal 0, diagonal all 1.
  AlphMatrix S = AlphMatrix::from_rows(2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  auto [b, pos] = case1_pigeonhole(S, 0, 2);
  CHECK(b == 1);
  CHECK(pos.size() >= 2);
  for (unsigned p : pos) CHECK(S.at(p, p) == 1);

  // Mixed diagonal over {0,1,2}, side (r-1)(ell-1)+1 = 3.
  AlphMatrix T = AlphMatrix::from_rows(3, {{1, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  auto [b2, pos2] = case1_pigeonhole(T, 0, 2);
  CHECK(b2 == 2);
  CHECK(pos2 == std::vector<unsigned>{1, 2});

  CHECK_THROWS_AS(case1_pigeonhole(S, 0, 4), ArgumentError);  // too small
  AlphMatrix bad = AlphMatrix::from_rows(2, {{1, 0}, {0, 0}});
  CHECK_THROWS_AS(case1_pigeonhole(bad, 0, 2), ArgumentError);  // diag hit
}

TEST_CASE("case1_pigeonhole on random kernels") {
  Rng rng(602);
  for (int it = 0; it < 60; ++it) {
    unsigned r = testutil::pick(rng, 2, 4);
    unsigned ell = testutil::pick(rng, 2, 4);
    Symbol off = static_cast<Symbol>(testutil::pick(rng, 0, r - 1));
    unsigned side = (r - 1) * (ell - 1) + 1;
    std::vector<std::vector<unsigned>> rows(side,
                                            std::vector<unsigned>(side, off));
    for (unsigned i = 0; i < side; ++i) {
      Symbol d;
      do d = static_cast<Symbol>(testutil::pick(rng, 0, r - 1));
      while (d == off);
      rows[i][i] = d;
    }
    AlphMatrix S = AlphMatrix::from_rows(r, rows);
    auto [b, pos] = case1_pigeonhole(S, off, ell);
    CHECK(b != off);
    CHECK(pos.size() >= ell);
    for (unsigned p : pos) CHECK(S.at(p, p) == b);
    CHECK(std::is_sorted(pos.begin(), pos.end()));
  }
}

TEST_CASE("case2_alternate_deletion") {
  auto [rows, cols] = case2_alternate_deletion(2);
  CHECK(rows == std::vector<unsigned>{0, 2});
  CHECK(cols == std::vector<unsigned>{1, 3});

  // The surviving square of a below/b-elsewhere 2ell-square is T_ell(a,b).
  for (unsigned ell = 2; ell <= 4; ++ell) {
    auto [kr, kc] = case2_alternate_deletion(ell);
    AlphMatrix big = triangular_pattern(2 * ell, 1, 0);
    CHECK(select_cols(select_rows(big, kr), kc) ==
          triangular_pattern(ell, 1, 0));
  }
}

TEST_CASE("es_monotone") {
  auto run = es_monotone({5, 4, 3, 2, 1}, 3);
  REQUIRE(run);
  CHECK_FALSE(run->increasing);
  CHECK(run->indices == std::vector<unsigned>{0, 1, 2});

  run = es_monotone({3, 1, 2}, 2);
  REQUIRE(run);
  CHECK(run->increasing);
  CHECK(run->indices == std::vector<unsigned>{1, 2});

  CHECK_FALSE(es_monotone({1, 2}, 3));
  CHECK(es_monotone({7, 7, 7}, 1));

  // Every permutation of length 5 = (3-1)^2 + 1 has a monotone triple.
  std::vector<unsigned> perm = {0, 1, 2, 3, 4};
  do {
    auto r = es_monotone(perm, 3);
    REQUIRE(r);
    REQUIRE(r->indices.size() == 3);
    for (unsigned k = 0; k + 1 < 3; ++k) {
      CHECK(r->indices[k] < r->indices[k + 1]);
      if (r->increasing)
        CHECK(perm[r->indices[k]] < perm[r->indices[k + 1]]);
      else
        CHECK(perm[r->indices[k]] > perm[r->indices[k + 1]]);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("extract_submatrix") {
  AlphMatrix A = testutil::complete_matrix(4, 2);
  auto res = extract_submatrix(A, 2);
  REQUIRE(res);
  CHECK(res->ell == 2);
  CHECK(res->witness.mode == Mode::SUBMATRIX);
  CHECK(verify_witness(pattern_of(*res), A, res->witness));

  // Identity-only input: the unreversed identity comes back.
  auto id = extract_submatrix(identity_pattern(4, 1, 0), 2);
  REQUIRE(id);
  CHECK(id->kind == PatternKind::IDENTITY);
  CHECK(id->a == 1);
  CHECK(id->b == 0);

  CHECK_FALSE(extract_submatrix(AlphMatrix::from_rows(2, {{0, 1}, {1, 0}}), 2));
}
