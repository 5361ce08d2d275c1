#include "epr/json_io.hpp"

#include <fstream>

#include "epr/error.hpp"

namespace epr {

nlohmann::json complex_to_json(const EprComplex& e) {
  nlohmann::json j;
  j["n_phi"] = e.n_phi;
  j["objects"] = e.objects;
  j["edges"] = nlohmann::json::array();
  for (const auto& [a, b] : e.edges) {
    j["edges"].push_back(nlohmann::json::array({a, b}));
  }
  return j;
}

EprComplex complex_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n_phi") || !j.contains("objects") ||
      !j.contains("edges")) {
    fail(ErrorCode::ParseError,
         "complex JSON requires the fields n_phi, objects, edges");
  }
  if (!j["n_phi"].is_number_integer() || !j["objects"].is_array() ||
      !j["edges"].is_array()) {
    fail(ErrorCode::ParseError,
         "complex JSON fields have the wrong types");
  }
  std::vector<ObjectId> objects;
  for (const auto& o : j["objects"]) {
    if (!o.is_number_integer()) {
      fail(ErrorCode::ParseError, "objects must be integers");
    }
    objects.push_back(o.get<ObjectId>());
  }
  std::vector<Edge> edges;
  for (const auto& pair : j["edges"]) {
    if (!pair.is_array() || pair.size() != 2 ||
        !pair[0].is_number_integer() || !pair[1].is_number_integer()) {
      fail(ErrorCode::ParseError, "edges must be two-element integer arrays");
    }
    edges.emplace_back(pair[0].get<ObjectId>(), pair[1].get<ObjectId>());
  }
  return make_complex(j["n_phi"].get<int>(), std::move(objects),
                      std::move(edges));
}

nlohmann::json group_to_json(const PermGroup& g) {
  nlohmann::json j;
  j["degree"] = g.degree;
  j["generators"] = nlohmann::json::array();
  for (const auto& gen : g.generators) {
    j["generators"].push_back(gen.images());
  }
  return j;
}

PermGroup group_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("generators")) {
    fail(ErrorCode::ParseError,
         "group JSON requires the fields degree, generators");
  }
  if (!j["degree"].is_number_integer() || !j["generators"].is_array()) {
    fail(ErrorCode::ParseError, "group JSON fields have the wrong types");
  }
  std::vector<Permutation> generators;
  for (const auto& images_json : j["generators"]) {
    if (!images_json.is_array()) {
      fail(ErrorCode::ParseError, "generators must be image arrays");
    }
    std::vector<int> images;
    for (const auto& x : images_json) {
      if (!x.is_number_integer()) {
        fail(ErrorCode::ParseError, "permutation images must be integers");
      }
      images.push_back(x.get<int>());
    }
    generators.emplace_back(std::move(images));
  }
  return make_group(j["degree"].get<int>(), std::move(generators));
}

std::string dump_canonical(const nlohmann::json& j) {
  // nlohmann::json keeps object keys sorted; a fixed indent makes the text a
  // pure function of the value.
  return j.dump(2) + "\n";
}

nlohmann::json parse_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    fail(ErrorCode::ParseError, "input is not valid JSON");
  }
  return j;
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    fail(ErrorCode::IoError, "cannot open " + path + " for reading");
  }
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_json_text(text);
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    fail(ErrorCode::IoError, "cannot open " + path + " for writing");
  }
  out << dump_canonical(j);
  if (!out) {
    fail(ErrorCode::IoError, "failed writing " + path);
  }
}

EprComplex read_complex_file(const std::string& path) {
  return complex_from_json(read_json_file(path));
}

void write_complex_file(const std::string& path, const EprComplex& e) {
  write_json_file(path, complex_to_json(e));
}

}  // namespace epr
