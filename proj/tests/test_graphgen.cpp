#include <doctest.h>

#include "copzero/copositivity.hpp"
#include "copzero/graphgen.hpp"
#include "copzero/zerograph.hpp"

using namespace copzero;

TEST_SUITE("graphgen") {
  TEST_CASE("matrix_from_graph") {
    SUBCASE("two disjoint edges on four vertices") {
      const auto y = matrix_from_graph(PlainGraph::make(4, {{0, 1}, {2, 3}}));
      for (int i = 0; i < 4; ++i) CHECK(y.at(i, i) == Rational(0));
      CHECK(y.at(0, 1) == Rational(0));
      CHECK(y.at(2, 3) == Rational(0));
      CHECK(y.at(0, 2) == Rational(1));
      CHECK(y.at(0, 3) == Rational(1));
      CHECK(y.at(1, 2) == Rational(1));
      CHECK(y.at(1, 3) == Rational(1));
    }
    SUBCASE("single vertex") {
      const auto y = matrix_from_graph(PlainGraph::make(1, {}));
      CHECK(y.dim() == 1);
      CHECK(y.at(0, 0) == Rational(0));
    }
    SUBCASE("complete graph gives the zero matrix") {
      const auto y = matrix_from_graph(PlainGraph::make(3, {{0, 1}, {0, 2}, {1, 2}}));
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(y.at(i, j) == Rational(0));
    }
    SUBCASE("graph validation") {
      CHECK_THROWS_AS(PlainGraph::make(0, {}), std::invalid_argument);
      CHECK_THROWS_AS(PlainGraph::make(3, {{1, 1}}), std::invalid_argument);
      CHECK_THROWS_AS(PlainGraph::make(3, {{0, 3}}), std::invalid_argument);
    }
  }

  TEST_CASE("round trips on the worked example graphs") {
    CHECK(round_trip(PlainGraph::make(4, {{0, 1}, {2, 3}})));
    CHECK(round_trip(PlainGraph::make(3, {})));                     // all-ones off-diagonal
    CHECK(round_trip(PlainGraph::make(3, {{0, 1}, {0, 2}, {1, 2}})));  // zero matrix
  }

  TEST_CASE("random corpus round-trips on up to 8 vertices") {
    int count = 0;
    for (int n = 1; n <= 8; ++n)
      for (double prob : {0.2, 0.5, 0.8}) {
        const auto g = random_graph(n, prob, 4200 + static_cast<std::uint64_t>(count));
        CHECK(round_trip(g));
        CHECK(round_trip(g, Exec::serial));
        ++count;
      }
    CHECK(count == 24);
  }

  TEST_CASE("realizations are copositive") {
    for (int i = 0; i < 8; ++i) {
      const auto g = random_graph(5, 0.5, 99 + static_cast<std::uint64_t>(i));
      CHECK(check_copositive(matrix_from_graph(g)).is_copositive);
    }
  }

  TEST_CASE("edge-definition equivalence on realizations") {
    for (int i = 0; i < 10; ++i) {
      const auto g = random_graph(6, 0.4, 555 + static_cast<std::uint64_t>(i));
      const auto y = matrix_from_graph(g);
      const auto zs = enumerate_minimal_zeros(y);
      const auto e = extended_support_set(y, zs.zeros);
      CHECK(build_graph(e) == build_graph_quadratic(y, zs.zeros));
    }
  }
}
