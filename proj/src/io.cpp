#include "php/io.hpp"

#include <fstream>
#include <sstream>

namespace php {

namespace {

std::vector<uint8_t> colors_from_json(const nlohmann::json& arr, int n) {
  std::vector<uint8_t> colors;
  for (const auto& v : arr) {
    int c = v.get<int>();
    if (c < 0 || c >= n) throw std::invalid_argument("color out of range in file");
    colors.push_back(static_cast<uint8_t>(c));
  }
  return colors;
}

}  // namespace

nlohmann::ordered_json family_to_json(const FunctionFamily& family) {
  nlohmann::ordered_json j;
  j["m"] = family.shape.m;
  j["n"] = family.shape.n;
  j["functions"] = nlohmann::ordered_json::array();
  for (const auto& f : family.functions)
    j["functions"].push_back(std::vector<int>(f.colors.begin(), f.colors.end()));
  return j;
}

FunctionFamily family_from_json(const nlohmann::json& j) {
  Shape s(j.at("m").get<int>(), j.at("n").get<int>());
  std::vector<ColorFunction> fns;
  for (const auto& arr : j.at("functions"))
    fns.emplace_back(s, colors_from_json(arr, s.n));
  return FunctionFamily(s, std::move(fns));
}

namespace {

nlohmann::ordered_json code_map_to_json(const std::map<uint64_t, uint64_t>& m) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [k, v] : m) j[std::to_string(k)] = std::to_string(v);
  return j;
}

std::map<uint64_t, uint64_t> code_map_from_json(const nlohmann::json& j) {
  std::map<uint64_t, uint64_t> m;
  for (const auto& [k, v] : j.items())
    m[std::stoull(k)] = std::stoull(v.get<std::string>());
  return m;
}

}  // namespace

nlohmann::ordered_json witness_to_json(const ReductionWitness& w) {
  nlohmann::ordered_json j;
  j["forward"] = code_map_to_json(w.forward);
  j["backward"] = code_map_to_json(w.backward);
  return j;
}

ReductionWitness witness_from_json(const nlohmann::json& j) {
  ReductionWitness w;
  w.forward = code_map_from_json(j.at("forward"));
  w.backward = code_map_from_json(j.at("backward"));
  return w;
}

nlohmann::ordered_json design_to_json(const ResolvableDesign& d) {
  nlohmann::ordered_json j;
  j["v"] = d.v;
  j["blockSize"] = d.block_size;
  j["lambda"] = d.lambda;
  j["classes"] = d.classes;
  return j;
}

ResolvableDesign design_from_json(const nlohmann::json& j) {
  ResolvableDesign d;
  d.v = j.at("v").get<int>();
  d.block_size = j.at("blockSize").get<int>();
  d.lambda = j.at("lambda").get<int>();
  d.classes = j.at("classes").get<std::vector<std::vector<std::vector<int>>>>();
  return d;
}

nlohmann::ordered_json mols_to_json(const std::vector<LatinSquare>& squares) {
  nlohmann::ordered_json j;
  j["order"] = squares.empty() ? 0 : squares[0].order;
  j["grids"] = nlohmann::ordered_json::array();
  for (const auto& sq : squares) j["grids"].push_back(sq.grid);
  return j;
}

std::vector<LatinSquare> mols_from_json(const nlohmann::json& j) {
  int order = j.at("order").get<int>();
  std::vector<LatinSquare> out;
  for (const auto& grid : j.at("grids")) {
    LatinSquare sq;
    sq.order = order;
    sq.grid = grid.get<std::vector<std::vector<int>>>();
    out.push_back(std::move(sq));
  }
  return out;
}

namespace {

std::string injection_key(const Injection& sigma) {
  std::string key;
  for (size_t i = 0; i < sigma.size(); ++i) {
    if (i) key += ",";
    key += std::to_string(sigma[i]);
  }
  return key;
}

Injection injection_from_key(const std::string& key) {
  Injection sigma;
  if (key.empty()) return sigma;
  std::istringstream in(key);
  std::string part;
  while (std::getline(in, part, ',')) sigma.push_back(std::stoi(part));
  return sigma;
}

}  // namespace

nlohmann::ordered_json cktree_to_json(const CkTree& t) {
  nlohmann::ordered_json j;
  j["k"] = t.k;
  j["m"] = t.shape.m;
  j["n"] = t.shape.n;
  j["nodes"] = nlohmann::ordered_json::object();
  for (const auto& [sigma, f] : t.nodes)
    j["nodes"][injection_key(sigma)] =
        std::vector<int>(f.colors.begin(), f.colors.end());
  return j;
}

CkTree cktree_from_json(const nlohmann::json& j) {
  CkTree t;
  t.k = j.at("k").get<int>();
  t.shape = Shape(j.at("m").get<int>(), j.at("n").get<int>());
  for (const auto& [key, arr] : j.at("nodes").items())
    t.nodes[injection_from_key(key)] =
        ColorFunction(t.shape, colors_from_json(arr, t.shape.n));
  return t;
}

nlohmann::ordered_json auc_to_json(const AucWitness& w) {
  nlohmann::ordered_json j = family_to_json(FunctionFamily(w.shape, w.f_list));
  j["g"] = std::vector<int>(w.g.colors.begin(), w.g.colors.end());
  return j;
}

AucWitness auc_from_json(const nlohmann::json& j) {
  FunctionFamily family = family_from_json(j);
  AucWitness w;
  w.shape = family.shape;
  w.g = ColorFunction(family.shape, colors_from_json(j.at("g"), family.shape.n));
  w.f_list = std::move(family.functions);
  return w;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace php
