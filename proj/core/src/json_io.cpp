#include "weddle/json_io.hpp"

#include <stdexcept>

namespace weddle {

Json rat_to_json(const Rat& r) { return to_string(r); }

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw std::invalid_argument("expected a rational as string or integer");
}

Json matrix_to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

RatMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a nonempty array of rows");
  std::vector<std::vector<Rat>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw std::invalid_argument("matrix rows must be arrays");
    std::vector<Rat> row;
    for (const auto& x : r) row.push_back(rat_from_json(x));
    if (!rows.empty() && row.size() != rows.front().size())
      throw std::invalid_argument("ragged matrix");
    rows.push_back(row);
  }
  return RatMatrix::from_rows(rows);
}

Json point_to_json(const std::vector<Rat>& p) {
  Json a = Json::array();
  for (const auto& x : p) a.push_back(rat_to_json(x));
  return a;
}

std::vector<Rat> point_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("point must be an array");
  std::vector<Rat> p;
  for (const auto& x : j) p.push_back(rat_from_json(x));
  return p;
}

Json tensor_to_json(const Tensor3& t) {
  Json faces = Json::array();
  for (std::size_t k = 0; k < t.dim(); ++k) faces.push_back(matrix_to_json(t.face(k)));
  return Json{{"dim", t.dim()}, {"faces", faces}};
}

Tensor3 tensor_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("faces")) throw std::invalid_argument("tensor JSON needs a faces array");
  std::vector<RatMatrix> faces;
  for (const auto& f : j.at("faces")) faces.push_back(matrix_from_json(f));
  const std::size_t d = faces.size();
  if (j.contains("dim") && j.at("dim").get<std::size_t>() != d)
    throw std::invalid_argument("dim does not match the number of faces");
  for (const auto& f : faces)
    if (f.rows() != d || f.cols() != d) throw std::invalid_argument("tensor is not cubic");
  return Tensor3::from_faces(faces);
}

Json system_to_json(const LinearSystem& sys) {
  Json qs = Json::array();
  for (const auto& q : sys.quadrics) qs.push_back(matrix_to_json(q));
  return Json{{"n", sys.n}, {"quadrics", qs}};
}

LinearSystem system_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("quadrics"))
    throw std::invalid_argument("system JSON needs n and quadrics");
  LinearSystem sys;
  sys.n = j.at("n").get<std::size_t>();
  for (const auto& q : j.at("quadrics")) sys.quadrics.push_back(matrix_from_json(q));
  sys.validate();
  return sys;
}

Json poly_to_json(const MultiPoly& p) { return Json{{"nvars", p.nvars()}, {"poly", to_string(p)}}; }

MultiPoly poly_from_json(const Json& j) {
  if (j.is_string()) return parse_poly(j.get<std::string>());
  if (!j.is_object() || !j.contains("poly")) throw std::invalid_argument("polynomial JSON needs a poly field");
  const std::size_t nv = j.value("nvars", std::size_t{1});
  return parse_poly(j.at("poly").get<std::string>(), nv);
}

Json cpoint_to_json(const CPoint& p) {
  Json a = Json::array();
  for (const auto& c : p) a.push_back(Json::array({c.real(), c.imag()}));
  return a;
}

Json solution_set_to_json(const SolutionSet& s) {
  Json clusters = Json::array();
  for (const auto& c : s.clusters) {
    Json e{{"point", cpoint_to_json(c.point)}, {"multiplicity", c.multiplicity}, {"residual", c.residual}};
    e["rational_match"] = c.rational_match ? point_to_json(*c.rational_match) : Json(nullptr);
    clusters.push_back(e);
  }
  Json out{{"projective", s.projective},
           {"count", s.count()},
           {"bezout_bound", s.bezout_bound},
           {"paths_tracked", s.paths_tracked},
           {"paths_failed", s.paths_failed},
           {"at_infinity", s.at_infinity},
           {"discarded", s.discarded},
           {"charts_used", s.charts_used},
           {"certified", s.certified},
           {"clusters", clusters}};
  out["notes"] = s.notes;
  return out;
}

}  // namespace weddle
