#include "mcgsig/json_io.hpp"

#include <stdexcept>

namespace mcgsig {

using nlohmann::json;

json mat_to_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat mat_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("mat_from_json: expected array of rows");
  std::vector<Vec> rows;
  std::size_t cols = 0;
  for (const auto& jr : j) {
    Vec row;
    for (const auto& je : jr) {
      if (je.is_number_integer())
        row.push_back(Rat(je.get<long>()));
      else
        row.push_back(rat_from_string(je.get<std::string>()));
    }
    if (rows.empty())
      cols = row.size();
    else if (row.size() != cols)
      throw std::invalid_argument("mat_from_json: ragged rows");
    rows.push_back(std::move(row));
  }
  return Mat::from_rows(rows, cols);
}

json vec_to_json(const Vec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rat_to_string(x));
  return out;
}

Vec vec_from_json(const json& j) {
  Vec v;
  for (const auto& je : j) {
    if (je.is_number_integer())
      v.push_back(Rat(je.get<long>()));
    else
      v.push_back(rat_from_string(je.get<std::string>()));
  }
  return v;
}

json qp1_to_json(const ProjectiveRational& x) {
  return json::array({x.p().get_str(), x.q().get_str()});
}

ProjectiveRational qp1_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("qp1_from_json: expected [p, q]");
  auto as_int = [](const json& je) {
    return je.is_number_integer() ? Int(je.get<long>()) : Int(je.get<std::string>());
  };
  return ProjectiveRational(as_int(j[0]), as_int(j[1]));
}

TwistGenerator generator_from_json(const json& j) {
  TwistGenerator gen;
  gen.name = j.at("name").get<std::string>();
  gen.cls = vec_from_json(j.at("class"));
  gen.handedness = j.value("handedness", +1);
  if (gen.handedness != 1 && gen.handedness != -1)
    throw std::invalid_argument("generator_from_json: handedness must be +-1");
  return gen;
}

WallTriple wall_triple_from_json(const json& j) {
  const Mat omega = mat_from_json(j.at("omega"));
  const std::size_t n = omega.rows();
  auto subspace = [&](const char* key) {
    const Mat rows = mat_from_json(j.at(key));
    if (rows.rows() == 0) return Subspace(n);
    return Subspace::span_of_rows(rows);
  };
  return {omega, subspace("A"), subspace("B"), subspace("C")};
}

}  // namespace mcgsig
