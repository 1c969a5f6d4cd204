#include "sphalg/linalg.hpp"
#include "support.hpp"

using namespace sphalg;
using namespace sphalg::test;
using linalg::SparseRow;

namespace {

GaussianRational dot(const SparseRow& row, const linalg::Vector& x) {
  GaussianRational acc;
  for (const auto& [col, v] : row) acc += v * x[col];
  return acc;
}

}  // namespace

TEST_CASE("rank of small systems") {
  const std::vector<SparseRow> rows{{{0, 1}, {1, 2}}, {{0, 2}, {1, 4}}, {{2, GaussianRational::i()}}};
  CHECK(linalg::rank(rows) == 2);
  CHECK(linalg::rank(std::vector<SparseRow>{}) == 0);
  CHECK(linalg::rank(std::vector<SparseRow>{{}}) == 0);

  linalg::Echelon e;
  CHECK(e.insert({{0, 1}, {1, 1}}));
  CHECK(e.insert({{1, 1}}));
  CHECK_FALSE(e.insert({{0, 3}, {1, Z(1, 1, 1, 1)}}));
  CHECK_FALSE(e.insert({{0, 2}}));
  CHECK(e.insert({{2, GaussianRational::i()}}));
  CHECK(e.rank() == 3);
}

TEST_CASE("solve and nullspace") {
  // x0 + x1 = 3, x0 - x1 = i.
  const std::vector<SparseRow> rows{{{0, 1}, {1, 1}}, {{0, 1}, {1, -1}}};
  const std::vector<GaussianRational> rhs{3, GaussianRational::i()};
  const linalg::Solution s = linalg::solve(rows, rhs, 2);
  REQUIRE(s.consistent);
  CHECK(s.unique);
  CHECK(s.x[0] == Z(3, 2, 1, 2));
  CHECK(s.x[1] == Z(3, 2, -1, 2));

  const std::vector<SparseRow> bad{{{0, 1}}, {{0, 1}}};
  const std::vector<GaussianRational> bad_rhs{1, 2};
  CHECK_FALSE(linalg::solve(bad, bad_rhs, 1).consistent);

  const std::vector<SparseRow> under{{{0, 1}, {2, -1}}};
  const linalg::Solution u = linalg::solve(under, std::vector<GaussianRational>{5}, 3);
  CHECK(u.consistent);
  CHECK_FALSE(u.unique);
  CHECK(dot(under[0], u.x) == 5);
  const auto ns = linalg::nullspace(under, 3);
  CHECK(ns.size() == 2);
  for (const auto& v : ns) CHECK(dot(under[0], v) == 0);
}

TEST_CASE("nullspace vectors solve random homogeneous systems") {
  Gen g(12);
  for (int t = 0; t < 60; ++t) {
    const std::size_t cols = static_cast<std::size_t>(g.uniform(1, 7));
    const long nrows = g.uniform(0, 6);
    std::vector<SparseRow> rows(static_cast<std::size_t>(nrows));
    for (SparseRow& r : rows) {
      for (std::size_t c = 0; c < cols; ++c) {
        if (g.uniform(0, 2) == 0) r[c] = g.nonzero_scalar();
      }
    }
    const auto ns = linalg::nullspace(rows, cols);
    CHECK(ns.size() + linalg::rank(rows) == cols);
    for (const auto& v : ns) {
      for (const SparseRow& r : rows) CHECK(dot(r, v) == 0);
    }
  }
}

TEST_CASE("monomial rows") {
  linalg::MonomialIndex idx;
  const SparseRow r = linalg::to_row(P("x1^2 - 3*x1*x2", 2), idx);
  CHECK(idx.size() == 2);
  CHECK(r.at(*idx.find(Monomial{2, 0})) == 1);
  CHECK(r.at(*idx.find(Monomial{1, 1})) == -3);
  CHECK_FALSE(idx.find(Monomial{0, 2}).has_value());
}
