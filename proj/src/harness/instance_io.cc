#include "prophet/harness/instance_io.h"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace prophet::harness {

namespace {

using nlohmann::json;

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw ConfigError(std::string("instance file: missing field '") + key + "'");
  return obj.at(key);
}

template <typename T>
T get(const json& obj, const char* key) {
  try {
    return field(obj, key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("instance file: bad field '") + key + "': " + e.what());
  }
}

// Accepts a nested rows x cols array or a flat row-major one.
template <typename T>
std::vector<std::vector<T>> matrix(const json& obj, const char* key, int rows, int cols) {
  const json& value = field(obj, key);
  try {
    if (value.is_array() && !value.empty() && value.front().is_array()) {
      auto m = value.get<std::vector<std::vector<T>>>();
      if (static_cast<int>(m.size()) != rows) throw ConfigError(std::string("instance file: '") + key + "' has wrong row count");
      for (const auto& row : m) {
        if (static_cast<int>(row.size()) != cols) throw ConfigError(std::string("instance file: '") + key + "' has wrong row length");
      }
      return m;
    }
    auto flat = value.get<std::vector<T>>();
    if (static_cast<long>(flat.size()) != static_cast<long>(rows) * cols) {
      throw ConfigError(std::string("instance file: '") + key + "' must have d * n entries");
    }
    std::vector<std::vector<T>> m(rows, std::vector<T>(cols));
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) m[i][j] = flat[static_cast<std::size_t>(i) * cols + j];
    }
    return m;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("instance file: bad field '") + key + "': " + e.what());
  }
}

arrivals::ArrivalModel parse_arrival(const json& a) {
  const auto kind = get<std::string>(a, "kind");
  if (kind == "multinomial") return arrivals::ArrivalModel::multinomial(get<std::vector<double>>(a, "p"));
  if (kind == "poisson") {
    std::vector<double> breakpoints;
    if (a.contains("breakpoints")) breakpoints = get<std::vector<double>>(a, "breakpoints");
    return arrivals::ArrivalModel::poisson(get<double>(a, "horizon"), std::move(breakpoints),
                                           get<std::vector<std::vector<double>>>(a, "rates"));
  }
  if (kind == "markov") {
    return arrivals::ArrivalModel::markov(get<std::vector<std::vector<double>>>(a, "transition"),
                                          get<std::vector<double>>(a, "initial"));
  }
  throw ConfigError("instance file: unknown arrival kind '" + kind + "'");
}

}  // namespace

InstanceFile parse_instance_json(const std::string& text, const std::string& name) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("instance file: invalid JSON: " + std::string(e.what()));
  }
  if (!doc.is_object()) throw ConfigError("instance file: top level must be an object");

  const std::string inst_name = doc.contains("name") ? get<std::string>(doc, "name") : name;
  const auto kind = get<std::string>(doc, "kind");
  const int d = get<int>(doc, "d");
  const int n = get<int>(doc, "n");
  if (d < 1 || n < 1) throw ConfigError("instance file: d and n must be positive");
  auto budgets = get<std::vector<int>>(doc, "budgets");
  const int horizon = get<int>(doc, "horizon");
  auto arrival = parse_arrival(field(doc, "arrival"));

  InstanceFile out;
  if (kind == "packing") {
    out.instance = AllocationInstance::packing(inst_name, matrix<int>(doc, "A", d, n),
                                               get<std::vector<double>>(doc, "rewards"), std::move(budgets), horizon,
                                               std::move(arrival));
  } else if (kind == "matching") {
    std::vector<std::vector<int>> adjacency;
    if (doc.contains("adjacency")) adjacency = matrix<int>(doc, "adjacency", d, n);
    out.instance = AllocationInstance::matching(inst_name, matrix<double>(doc, "rewards", d, n), std::move(budgets),
                                                horizon, std::move(arrival), adjacency);
  } else if (kind == "allocation") {
    const json& per_type = field(doc, "bundles");
    if (!per_type.is_array() || static_cast<int>(per_type.size()) != n) {
      throw ConfigError("instance file: 'bundles' needs one list per type");
    }
    std::vector<std::vector<Bundle>> bundles(n);
    for (int j = 0; j < n; ++j) {
      for (const auto& b : per_type[j]) {
        Bundle bundle;
        bundle.consumption.assign(d, 0);
        for (int r : get<std::vector<int>>(b, "resources")) {
          if (r < 0 || r >= d) throw ConfigError("instance file: bundle resource out of range");
          ++bundle.consumption[r];
        }
        bundle.reward = get<double>(b, "reward");
        bundles[j].push_back(std::move(bundle));
      }
    }
    out.instance = AllocationInstance::allocation(inst_name, d, std::move(bundles), std::move(budgets), horizon,
                                                  std::move(arrival));
  } else {
    throw ConfigError("instance file: unknown kind '" + kind + "' (expected packing, matching or allocation)");
  }
  if (doc.contains("kappa")) out.instance.kappa = get<double>(doc, "kappa");
  if (out.instance.d != d || out.instance.n != n) throw ConfigError("instance file: d or n does not match the data");
  out.instance.validate();

  if (doc.contains("scaling")) {
    const json& s = doc.at("scaling");
    out.scaling = ScalingRule::parse(get<std::string>(s, "rule"));
    if (s.contains("k_list")) out.k_list = get<std::vector<int>>(s, "k_list");
  }
  return out;
}

InstanceFile load_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read instance file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_json(buf.str(), path.stem().string());
}

}  // namespace prophet::harness
