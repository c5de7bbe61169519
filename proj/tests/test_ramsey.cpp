#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "confex/ramsey.hpp"
#include "test_util.hpp"

using namespace confex;
using testutil::Rng;

namespace {

BigCount binom(unsigned n, unsigned k) {
  BigCount out = 1;
  for (unsigned i = 0; i < k; ++i) {
    out *= n - i;
    out /= i + 1;
  }
  return out;
}

SquareLayout two_vertex_layout(const Column& top, Symbol below) {
  SquareLayout layout;
  layout.order = 2;
  layout.width = 2;
  layout.alphabet = 2;
  layout.cells = {{{0, 1}, top}, {{below, below}, {0, 1}}};
  return layout;
}

}  // namespace

TEST_CASE("ramsey_upper values") {
  CHECK(ramsey_upper({3, 3}) == 6);
  CHECK(ramsey_upper({2, 2}) == 2);
  CHECK(ramsey_upper({3, 3, 3}) == 90);
  CHECK(ramsey_upper({5}) == 5);
  CHECK(ramsey_upper({1, 7, 9}) == 1);
  CHECK_THROWS_AS(ramsey_upper({}), ArgumentError);
}

TEST_CASE("ramsey_upper two-colour closed form") {
  for (unsigned a = 2; a <= 6; ++a)
    for (unsigned b = 2; b <= 6; ++b)
      CHECK(ramsey_upper({a, b}) == binom(a + b - 2, a - 1));
}

TEST_CASE("ramsey_upper symmetry, monotonicity, and the factorial path") {
  Rng rng(301);
  for (int it = 0; it < 80; ++it) {
    std::vector<unsigned> ks;
    unsigned n = testutil::pick(rng, 2, 5);
    for (unsigned i = 0; i < n; ++i) ks.push_back(testutil::pick(rng, 2, 6));
    BigCount base = ramsey_upper(ks);
    CHECK(base == ramsey_upper_factorial(ks));
    std::vector<unsigned> shuffled = ks;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(ramsey_upper(shuffled) == base);
    std::vector<unsigned> bumped = ks;
    bumped[testutil::pick(rng, 0, n - 1)] += 1;
    CHECK(ramsey_upper(bumped) >= base);
  }
}

TEST_CASE("u and its bound chain") {
  CHECK(u_value(2, 2) == 67267200);
  CHECK(ramsey_upper_factorial(u_arguments(2, 2)) == 67267200);
  CHECK(u_closed(2, 2) == BigCount(1) << 60);

  std::vector<unsigned> args = u_arguments(2, 3);
  CHECK(std::count(args.begin(), args.end(), 3u) == 3);
  CHECK(std::count(args.begin(), args.end(), 4u) == 12);
  CHECK(args.size() == 15);

  for (unsigned r = 2; r <= 4; ++r)
    for (unsigned ell = 1; ell <= 5; ++ell) {
      CHECK(u_value(ell, r) <= u_mid(ell, r));
      CHECK(u_mid(ell, r) <= u_closed(ell, r));
    }
}

TEST_CASE("T and v") {
  CHECK(T_value(2, 2) == 3);
  for (unsigned r = 2; r <= 5; ++r) CHECK(T_value(r, 1) == 1);

  std::vector<unsigned> args = v_arguments(2, 2, 2);
  CHECK(std::count(args.begin(), args.end(), 2u) == 8);
  CHECK(std::count(args.begin(), args.end(), 8u) == 12);
  CHECK(v_value(2, 2, 2) == ramsey_upper_factorial(args));
}

TEST_CASE("colour counts") {
  CHECK(colour_count_main(2) == 6);
  CHECK(colour_count_main(3) == 15);
  CHECK(colour_count_t(2, 3) == 20);
}

TEST_CASE("layout validation") {
  SquareLayout ok = two_vertex_layout({0, 0}, 0);
  CHECK_NOTHROW(ok.validate());

  SquareLayout bad_below = ok;
  bad_below.cells[1][0] = {0, 1};
  CHECK_THROWS_AS(bad_below.validate(), ArgumentError);

  SquareLayout bad_diag = ok;
  bad_diag.cells[0][0] = {1, 0};
  CHECK_THROWS_AS(bad_diag.validate(), ArgumentError);
}

TEST_CASE("edge colour classes at width 2") {
  auto colour_of = [](const Column& top, Symbol below) {
    return colour_edges(two_vertex_layout(top, below)).edge(0, 1);
  };
  EdgeColour c = colour_of({0, 0}, 0);
  CHECK(c.kind == EdgeColour::Kind::DIAGONAL_CONSTANT);
  CHECK(c.a == 0);

  c = colour_of({1, 0}, 0);
  CHECK(c.kind == EdgeColour::Kind::FIRST_COLUMN);
  CHECK(c.a == 0);
  CHECK(c.b == 1);

  c = colour_of({0, 1}, 0);
  CHECK(c.kind == EdgeColour::Kind::SECOND_COLUMN);
  CHECK(c.a == 0);
  CHECK(c.b == 1);

  // Tie break: (1,1) over (0,0) fits both column classes; first wins.
  c = colour_of({1, 1}, 0);
  CHECK(c.kind == EdgeColour::Kind::FIRST_COLUMN);
}

TEST_CASE("edge colour classes at width 2T") {
  SquareLayout layout;
  layout.order = 2;
  layout.width = 4;
  layout.alphabet = 2;
  Column diag = {0, 0, 1, 1};
  layout.cells = {{diag, {0, 1, 0, 1}}, {{0, 1, 0, 1}, diag}};
  EdgeColoring col = colour_edges(layout);
  CHECK(col.edge(0, 1).kind == EdgeColour::Kind::CLASS_ALPHA);
  CHECK(col.edge(0, 1).alpha == Column{0, 1});

  layout.cells[0][1] = {0, 1, 1, 1};
  col = colour_edges(layout);
  EdgeColour c = col.edge(0, 1);
  CHECK(c.kind == EdgeColour::Kind::CLASS_ABI);
  CHECK(c.a == 0);
  CHECK(c.b == 1);
  CHECK(c.i == 2);
}

TEST_CASE("find_mono_clique") {
  // Single colour K4: the whole vertex set.
  EdgeColoring mono;
  mono.vertex_count = 4;
  EdgeColour red;
  red.kind = EdgeColour::Kind::DIAGONAL_CONSTANT;
  mono.upper = {{red, red, red}, {red, red}, {red}};
  auto hit = find_mono_clique(mono, {{red, 4}});
  REQUIRE(hit);
  CHECK(hit->second == std::vector<unsigned>{0, 1, 2, 3});

  // C5 against its complement: no monochromatic triangle.
  EdgeColour blue = red;
  blue.a = 1;
  EdgeColoring c5;
  c5.vertex_count = 5;
  c5.upper.resize(5);
  for (unsigned i = 0; i < 5; ++i)
    for (unsigned j = i + 1; j < 5; ++j) {
      bool cycle = j - i == 1 || j - i == 4;
      c5.upper[i].push_back(cycle ? red : blue);
    }
  CHECK_FALSE(find_mono_clique(c5, {{red, 3}, {blue, 3}}));

  // Random 2-colourings of K6 always contain a mono triangle (R(3,3)=6).
  Rng rng(302);
  for (int it = 0; it < 60; ++it) {
    EdgeColoring k6;
    k6.vertex_count = 6;
    k6.upper.resize(6);
    for (unsigned i = 0; i < 6; ++i)
      for (unsigned j = i + 1; j < 6; ++j)
        k6.upper[i].push_back(testutil::pick(rng, 0, 1) ? red : blue);
    auto tri = find_mono_clique(k6, {{red, 3}, {blue, 3}});
    REQUIRE(tri);
    for (unsigned x = 0; x < 3; ++x)
      for (unsigned y = x + 1; y < 3; ++y)
        CHECK(k6.edge(tri->second[x], tri->second[y]) == tri->first);
  }
}

TEST_CASE("bound_main") {
  BoundReport rep = bound_main(2, 2);
  CHECK(rep.general == BigCount(1) << 120);
  REQUIRE(rep.r2_specialized);
  CHECK(*rep.r2_specialized == 2176782336);  // 6^12
  REQUIRE(rep.r2_family_bb);
  BigCount six36 = 1;
  for (int i = 0; i < 36; ++i) six36 *= 6;
  CHECK(*rep.r2_family_bb == six36);

  // r=2 recursion: f(1) = 3, f(0) = 2 R_6(2) f(1) + 2 with R_6(2) = 720.
  REQUIRE(rep.f0_r2);
  CHECK(ramsey_upper(std::vector<unsigned>(6, 2)) == 720);
  CHECK(*rep.f0_r2 == 2 * 720 * 3 + 2);

  CHECK(rep.f0 > 0);
  BoundReport rep3 = bound_main(2, 3);
  CHECK_FALSE(rep3.r2_specialized);
  CHECK(rep3.general > rep.general);
}
