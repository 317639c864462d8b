#include "trilinear/tensor_io.hpp"

namespace trilinear {

Json tensor_to_json(const TriTensor& t) {
  const auto& d = t.dims();
  Json entries = Json::array();
  for (std::size_t i = 0; i < d[0]; ++i) {
    Json plane = Json::array();
    for (std::size_t j = 0; j < d[1]; ++j) {
      Json row = Json::array();
      for (std::size_t k = 0; k < d[2]; ++k) row.push_back(t(i, j, k).to_string());
      plane.push_back(std::move(row));
    }
    entries.push_back(std::move(plane));
  }
  const auto& legs = t.legs();
  return Json{{"schema", "tritensor/1"},
              {"dims", {d[0], d[1], d[2]}},
              {"field", t.field().name()},
              {"legs", {legs[0], legs[1], legs[2]}},
              {"entries", std::move(entries)}};
}

TriTensor tensor_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw InputError("tensor JSON must be an object");
    if (j.value("schema", "") != "tritensor/1") throw InputError("schema must be \"tritensor/1\"");
    const auto& dj = j.at("dims");
    if (!dj.is_array() || dj.size() != 3) throw InputError("dims must be three integers");
    TriTensor::Dims dims{};
    for (std::size_t a = 0; a < 3; ++a) {
      long v = dj[a].get<long>();
      if (v <= 0 || v > 16) throw InputError("dims must lie in 1..16");
      dims[a] = static_cast<std::size_t>(v);
    }
    Field f = Field::parse(j.at("field").get<std::string>());
    TriTensor::Legs legs{"U*", "W", "V*"};
    if (j.contains("legs")) {
      const auto& lj = j.at("legs");
      if (!lj.is_array() || lj.size() != 3) throw InputError("legs must be three strings");
      for (std::size_t a = 0; a < 3; ++a) legs[a] = lj[a].get<std::string>();
    }
    TriTensor t(dims, f, legs);
    const auto& e = j.at("entries");
    if (!e.is_array() || e.size() != dims[0]) throw InputError("entries: wrong length on leg 0");
    for (std::size_t i = 0; i < dims[0]; ++i) {
      if (!e[i].is_array() || e[i].size() != dims[1]) throw InputError("entries: wrong length on leg 1");
      for (std::size_t k1 = 0; k1 < dims[1]; ++k1) {
        const auto& row = e[i][k1];
        if (!row.is_array() || row.size() != dims[2]) throw InputError("entries: wrong length on leg 2");
        for (std::size_t k = 0; k < dims[2]; ++k) {
          const auto& v = row[k];
          std::string s = v.is_string() ? v.get<std::string>() : v.is_number_integer() ? v.dump() : "";
          if (s.empty()) throw InputError("entries must be strings such as \"3\" or \"-1/2\"");
          t(i, k1, k) = Scalar::parse(f, s);
        }
      }
    }
    return t;
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& ex) {
    throw InputError(std::string("bad tensor JSON: ") + ex.what());
  }
}

TriTensor read_tensor(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& ex) {
    throw InputError(std::string("JSON parse error: ") + ex.what());
  }
  return tensor_from_json(j);
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json strip_timing(Json j) {
  if (j.is_object()) {
    j.erase("elapsed_ms");
    for (auto& [key, value] : j.items()) value = strip_timing(value);
  } else if (j.is_array()) {
    for (auto& value : j) value = strip_timing(value);
  }
  return j;
}

}  // namespace trilinear
