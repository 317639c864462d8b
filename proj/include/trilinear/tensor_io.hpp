#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "trilinear/tensor.hpp"

namespace trilinear {

using Json = nlohmann::json;

/// Malformed user input; the CLI maps it to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"schema":"tritensor/1","dims":[..],"field":"Q","legs":[..],"entries":[[[..]]]}
Json tensor_to_json(const TriTensor& t);
TriTensor tensor_from_json(const Json& j);
TriTensor read_tensor(const std::string& text);

Json vector_to_json(const Vector& v);

/// Pretty-printed with sorted keys and a trailing newline.
std::string dump(const Json& j);

/// Removes every "elapsed_ms" member, recursively.
Json strip_timing(Json j);

}  // namespace trilinear
