#include "trilinear/generator.hpp"

#include <algorithm>

namespace trilinear {

namespace {

// Entry (i, j) of a 3×3 matrix of linear forms in x0..x3, as coefficient rows.
TriTensor from_linear_forms(const std::array<std::array<std::array<long, 4>, 3>, 3>& m) {
  TriTensor t({3, 3, 4}, Field::rationals());
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 4; ++k) t(i, j, k) = Scalar(t.field(), m[i][j][k]);
    }
  }
  return t;
}

bool no_three_collinear(const std::vector<PlanePoint>& pts) {
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      for (std::size_t c = b + 1; c < pts.size(); ++c) {
        DenseMatrix m = DenseMatrix::from_rows(pts[a].field(), {pts[a].coords(), pts[b].coords(), pts[c].coords()});
        if (determinant(m).is_zero()) return false;
      }
    }
  }
  return true;
}

bool on_a_conic(const std::vector<PlanePoint>& pts) {
  std::vector<Vector> rows;
  for (const auto& p : pts) {
    const auto& x = p.coords();
    rows.push_back({x[0] * x[0], x[0] * x[1], x[0] * x[2], x[1] * x[1], x[1] * x[2], x[2] * x[2]});
  }
  return determinant(DenseMatrix::from_rows(pts[0].field(), rows)).is_zero();
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"cayley6", "doubleline-1", "doubleline-2", "jump7", "zero"};
  return names;
}

std::vector<PlanePoint> cayley6_points() {
  return parse_points(Field::rationals(), "(1:0:0),(0:1:0),(0:0:1),(1:1:1),(1:2:3),(1:4:9)");
}

TriTensor fixture(const std::string& name) {
  if (name == "doubleline-1") {
    // [[x0, 0, x1], [0, x1, -x0], [-x2, -x3, 0]]
    return from_linear_forms({{
        {{{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 0}}},
        {{{0, 0, 0, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}}},
        {{{0, 0, -1, 0}, {0, 0, 0, -1}, {0, 0, 0, 0}}},
    }});
  }
  if (name == "doubleline-2") {
    // [[x3, -x2, -x0], [-x1, 0, x3], [0, x3, -x1]]
    return from_linear_forms({{
        {{{0, 0, 0, 1}, {0, 0, -1, 0}, {-1, 0, 0, 0}}},
        {{{0, -1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}}},
        {{{0, 0, 0, 0}, {0, 0, 0, 1}, {0, -1, 0, 0}}},
    }});
  }
  if (name == "cayley6") return points_to_tensor(cayley6_points());
  if (name == "zero") return TriTensor({3, 3, 4}, Field::rationals());
  if (name == "jump7") {
    TriTensor t({3, 3, 4}, Field::rationals());
    const std::array<std::array<std::size_t, 3>, 8> ones{{
        {0, 0, 1}, {0, 2, 1}, {0, 2, 2}, {0, 2, 3}, {1, 0, 0}, {1, 2, 3}, {2, 0, 3}, {2, 1, 2},
    }};
    for (auto [i, j, k] : ones) t(i, j, k) = Scalar(t.field(), 1);
    return t;
  }
  throw UnknownFixture(name);
}

TriTensor random_tensor(std::mt19937_64& rng, TriTensor::Dims dims, Field f, long bound) {
  if (bound < 0) throw std::invalid_argument("entry bound must be nonnegative");
  TriTensor t(dims, f);
  const auto width = static_cast<std::uint64_t>(2 * bound + 1);
  for (std::size_t i = 0; i < dims[0]; ++i) {
    for (std::size_t j = 0; j < dims[1]; ++j) {
      for (std::size_t k = 0; k < dims[2]; ++k) {
        t(i, j, k) = Scalar(f, static_cast<long>(rng() % width) - bound);
      }
    }
  }
  return t;
}

std::vector<PlanePoint> random_general_points(std::mt19937_64& rng, Field f, long bound) {
  const auto width = static_cast<std::uint64_t>(2 * bound + 1);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<PlanePoint> pts;
    while (pts.size() < 6) {
      Vector c;
      for (int q = 0; q < 3; ++q) c.push_back(Scalar(f, static_cast<long>(rng() % width) - bound));
      if (is_zero(c)) continue;
      PlanePoint p(c);
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    if (!no_three_collinear(pts) || on_a_conic(pts)) continue;
    try {
      linear_syzygies(cubics_through_points(pts));
      return pts;
    } catch (const SpecialPosition&) {
      continue;
    }
  }
  throw std::runtime_error("no general point configuration found");
}

TriTensor generate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorSpec::Kind::Fixture:
      return fixture(spec.fixture);
    case GeneratorSpec::Kind::FromPoints: {
      auto pts = parse_points(spec.field, spec.points);
      return points_to_tensor(pts);
    }
    case GeneratorSpec::Kind::RandomEntries: {
      std::mt19937_64 rng(spec.seed);
      return random_tensor(rng, spec.dims, spec.field, spec.bound);
    }
  }
  throw std::logic_error("unhandled generator kind");
}

}  // namespace trilinear
