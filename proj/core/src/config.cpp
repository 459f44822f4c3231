#include "kul/config.hpp"

#include <fstream>
#include <sstream>

#include "kul/error.hpp"

namespace kul {

namespace {

IntMatrix gram_from_json(const Json& j) {
  IntMatrix g = int_matrix_from_json(j);
  if (g.rows() == 0 || !g.is_symmetric()) throw InputError("Gram matrix must be square and symmetric: " + j.dump());
  return g;
}

}  // namespace

VarietySpec variety_spec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) throw InputError("variety spec needs a kind: " + j.dump());
  VarietySpec spec;
  spec.kind = parse_variety_kind(j.at("kind").get<std::string>());
  if (j.contains("gram")) spec.gram = gram_from_json(j.at("gram"));
  if (j.contains("overrides")) {
    for (const Json& o : j.at("overrides")) {
      if (!o.contains("a") || !o.contains("b") || !o.contains("product")) {
        throw InputError("intersection override needs a, b and product: " + o.dump());
      }
      IntersectionOverride io{o.at("a").get<std::string>(), o.at("b").get<std::string>(), {}};
      for (const auto& [name, value] : o.at("product").items()) io.product.emplace_back(name, rational_from_json(value));
      spec.overrides.push_back(std::move(io));
    }
  }
  return spec;
}

SetupSpec setup_spec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) throw InputError("setup spec needs a kind: " + j.dump());
  SetupSpec spec{parse_setup_kind(j.at("kind").get<std::string>()), std::nullopt};
  if (j.contains("gram")) spec.gram = gram_from_json(j.at("gram"));
  return spec;
}

Config parse_config(const Json& j) {
  if (!j.is_object()) throw InputError("config must be a JSON object");
  Config config;
  try {
    if (j.contains("varieties"))
      for (const auto& [name, spec] : j.at("varieties").items()) config.varieties[name] = variety_spec_from_json(spec);
    if (j.contains("setups"))
      for (const auto& [name, spec] : j.at("setups").items()) config.setups[name] = setup_spec_from_json(spec);
    if (j.contains("box")) {
      config.box = j.at("box").get<long>();
      if (*config.box < 1) throw InputError("box must be at least 1");
    }
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed config: ") + e.what());
  }
  return config;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file " + path);
  try {
    return parse_config(Json::parse(in));
  } catch (const Json::parse_error& e) {
    throw InputError("config " + path + " is not valid JSON: " + e.what());
  }
}

Json to_json(const VarietySpec& spec) {
  Json out{{"kind", std::string(to_string(spec.kind))}};
  if (spec.gram) out["gram"] = to_json(*spec.gram);
  if (!spec.overrides.empty()) {
    Json list = Json::array();
    for (const auto& o : spec.overrides) {
      Json product = Json::object();
      for (const auto& [name, value] : o.product) product[name] = to_json(value);
      list.push_back(Json{{"a", o.a}, {"b", o.b}, {"product", product}});
    }
    out["overrides"] = list;
  }
  return out;
}

Json to_json(const SetupSpec& spec) {
  Json out{{"kind", std::string(to_string(spec.kind))}};
  if (spec.gram) out["gram"] = to_json(*spec.gram);
  return out;
}

Json to_json(const Config& config) {
  Json varieties = Json::object();
  for (const auto& [name, spec] : config.varieties) varieties[name] = to_json(spec);
  Json setups = Json::object();
  for (const auto& [name, spec] : config.setups) setups[name] = to_json(spec);
  Json out{{"varieties", varieties}, {"setups", setups}};
  if (config.box) out["box"] = *config.box;
  return out;
}

Json to_json(const CoverSetup& setup) {
  Json collection = Json::array();
  for (const auto& e : setup.exceptional_collection) collection.push_back(Json{{"name", e.name}, {"ch", to_json(e.ch)}});
  Json basis_ch = Json::array();
  for (const auto& c : setup.target_basis.basis_ch) basis_ch.push_back(to_json(c));
  Json out{{"name", setup.name},
           {"kind", std::string(to_string(setup.kind))},
           {"source", std::string(setup.source.name())},
           {"target", std::string(setup.target.name())},
           {"divisor_class", to_json(setup.divisor_class)},
           {"twist", setup.twist},
           {"td_tj", to_json(setup.td_tj)},
           {"exceptional_collection", collection},
           {"target_basis", Json{{"name", setup.target_basis.name},
                                 {"gram", to_json(setup.target_basis.gram)},
                                 {"basis_ch", basis_ch}}}};
  if (setup.source.picard_gram()) out["source_gram"] = to_json(*setup.source.picard_gram());
  return out;
}

VarietyModel resolve_variety(const std::string& name, const std::optional<IntMatrix>& gram, const Config* config) {
  VarietySpec spec;
  if (config && config->varieties.count(name)) {
    spec = config->varieties.at(name);
  } else {
    spec.kind = parse_variety_kind(name);
  }
  if (gram) spec.gram = gram;
  return make_variety_model(spec);
}

CoverSetup resolve_setup(const std::string& name, const std::optional<IntMatrix>& gram, const Config* config) {
  SetupSpec spec;
  if (config && config->setups.count(name)) {
    spec = config->setups.at(name);
  } else if (name == "qds-line") {
    spec = {SetupKind::QuarticDoubleSolid, IntMatrix{{4, 1}, {1, -2}}};
  } else {
    spec.kind = parse_setup_kind(name);
  }
  if (gram) spec.gram = gram;
  return make_setup(spec.kind, spec.gram);
}

IntMatrix parse_gram(const std::string& text) {
  IntVector entries;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const Rational q = parse_rational(item);
    if (!is_integer(q)) throw InputError("Gram entries must be integers: " + text);
    entries.push_back(q.get_num());
  }
  std::size_t n = 0;
  while (n * n < entries.size()) ++n;
  if (n == 0 || n * n != entries.size()) throw InputError("Gram matrix needs a square number of entries: " + text);
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < entries.size(); ++i) g(i / n, i % n) = entries[i];
  return g;
}

}  // namespace kul
