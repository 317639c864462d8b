#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "trilinear/hilbert_burch.hpp"
#include "trilinear/tensor.hpp"

namespace trilinear {

struct GeneratorSpec {
  enum class Kind { RandomEntries, FromPoints, Fixture } kind = Kind::RandomEntries;
  std::uint64_t seed = 0;
  Field field;
  long bound = 5;
  std::string fixture;
  std::string points;
  TriTensor::Dims dims{3, 3, 4};
};

class UnknownFixture : public std::invalid_argument {
 public:
  explicit UnknownFixture(const std::string& name) : std::invalid_argument("unknown fixture '" + name + "'") {}
};

/// doubleline-1, doubleline-2, cayley6, zero, jump7.
const std::vector<std::string>& fixture_names();
TriTensor fixture(const std::string& name);

/// The six points behind the cayley6 fixture.
std::vector<PlanePoint> cayley6_points();

/// Entries rng() % (2b+1) - b, row-major.
TriTensor random_tensor(std::mt19937_64& rng, TriTensor::Dims dims, Field f, long bound);

/// Six points with integer coordinates in [-b, b], no three collinear and not
/// on a conic.
std::vector<PlanePoint> random_general_points(std::mt19937_64& rng, Field f, long bound);

TriTensor generate(const GeneratorSpec& spec);

}  // namespace trilinear
