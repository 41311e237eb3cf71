#include "tauh/serialize.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "tauh/errors.hpp"

namespace tauh::io {

namespace {

void check_keys(const Json& obj, const std::string& where,
                std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional = {}) {
  if (!obj.is_object()) throw InputError(where + ": expected an object");
  std::set<std::string> allowed;
  for (const char* k : required) {
    allowed.insert(k);
    if (!obj.contains(k)) {
      throw InputError(where + ": missing field \"" + std::string(k) + "\"");
    }
  }
  for (const char* k : optional) allowed.insert(k);
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) {
      throw InputError(where + ": unknown field \"" + key + "\"");
    }
  }
}

void check_version(const Json& j, const std::string& where) {
  const auto& v = j.at("schema_version");
  if (!v.is_number_integer() || v.get<int>() != kSchemaVersion) {
    throw InputError(where + ": unsupported schema_version");
  }
}

std::int64_t as_int(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) throw InputError(where + ": expected an integer");
  return v.get<std::int64_t>();
}

double as_double(const Json& v, const std::string& where) {
  if (!v.is_number()) throw InputError(where + ": expected a number");
  return v.get<double>();
}

const Json& as_array(const Json& v, const std::string& where) {
  if (!v.is_array()) throw InputError(where + ": expected an array");
  return v;
}

Side parse_side(const Json& v) {
  if (v == "primal") return Side::primal;
  if (v == "dual") return Side::dual;
  throw InputError("side must be \"primal\" or \"dual\"");
}

Json axis_to_json(const affine::UniformAxis& axis) {
  Json j;
  j["min"] = axis.min;
  j["max"] = axis.max;
  j["count"] = axis.count;
  return j;
}

affine::UniformAxis axis_from_json(const Json& j, const std::string& where) {
  check_keys(j, where, {"min", "max", "count"});
  const std::int64_t count = as_int(j.at("count"), where + ".count");
  if (count < 2) throw InputError(where + ".count must be >= 2");
  return {as_double(j.at("min"), where + ".min"),
          as_double(j.at("max"), where + ".max"),
          static_cast<std::size_t>(count)};
}

std::size_t node_index(const affine::UniformAxis& axis, double x,
                       const std::string& where) {
  const double pos = (x - axis.min) / axis.step();
  const auto i = static_cast<std::int64_t>(std::llround(pos));
  if (i < 0 || i >= static_cast<std::int64_t>(axis.count) ||
      std::abs(axis.node(static_cast<std::size_t>(i)) - x) >
          1e-9 * std::max(1.0, std::abs(x))) {
    std::ostringstream os;
    os << where << ": coordinate " << x << " is not a grid node";
    throw InputError(os.str());
  }
  return static_cast<std::size_t>(i);
}

template <typename Fn>
auto guarded(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(e.what());
  }
}

}  // namespace

Json group_spec_to_json(const TauSystem& sys) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "finite_semidirect";
  j["role"] = sys.is_dual() ? "dual" : "primal";
  j["K"]["divisors"] = std::vector<std::int64_t>(sys.K().divisors().begin(),
                                                 sys.K().divisors().end());
  Json labels = Json::array();
  Json autos = Json::array();
  Json delta = Json::array();
  for (std::size_t h = 0; h < sys.h_count(); ++h) {
    labels.push_back(sys.label(h));
    autos.push_back(sys.tau(h).matrix().rows());
    delta.push_back(sys.delta(h).value());
  }
  j["H"]["labels"] = labels;
  j["H"]["automorphisms"] = autos;
  j["H"]["cayley"] = sys.cayley();
  j["H"]["delta"] = delta;
  return j;
}

TauSystem group_spec_from_json(const Json& j, std::int64_t max_order) {
  return guarded([&] {
    check_keys(j, "group spec", {"schema_version", "kind", "K", "H"}, {"role"});
    check_version(j, "group spec");
    if (j.at("kind") != "finite_semidirect") {
      throw InputError("group spec: kind must be \"finite_semidirect\"");
    }
    if (j.contains("role") && j.at("role") != "primal" && j.at("role") != "dual") {
      throw InputError("group spec: role must be \"primal\" or \"dual\"");
    }
    check_keys(j.at("K"), "K", {"divisors"});
    std::vector<std::int64_t> divisors;
    for (const auto& d : as_array(j.at("K").at("divisors"), "K.divisors")) {
      divisors.push_back(as_int(d, "K.divisors"));
    }
    const FiniteLcaGroup K(divisors, max_order);

    const Json& H = j.at("H");
    check_keys(H, "H", {"labels", "automorphisms"}, {"cayley", "delta"});
    TauSystemSpec spec{K, {}, {}, std::nullopt, std::nullopt};
    for (const auto& l : as_array(H.at("labels"), "H.labels")) {
      if (!l.is_string()) throw InputError("H.labels: expected strings");
      spec.labels.push_back(l.get<std::string>());
    }
    for (const auto& m : as_array(H.at("automorphisms"), "H.automorphisms")) {
      std::vector<std::vector<std::int64_t>> rows;
      for (const auto& row : as_array(m, "H.automorphisms[]")) {
        std::vector<std::int64_t> r;
        for (const auto& x : as_array(row, "H.automorphisms[][]")) {
          r.push_back(as_int(x, "H.automorphisms entry"));
        }
        rows.push_back(std::move(r));
      }
      spec.automorphisms.emplace_back(K, IntMatrix::from_rows(rows));
    }
    if (H.contains("cayley")) {
      CayleyTable table;
      for (const auto& row : as_array(H.at("cayley"), "H.cayley")) {
        std::vector<std::size_t> r;
        for (const auto& x : as_array(row, "H.cayley[]")) {
          const std::int64_t v = as_int(x, "H.cayley entry");
          if (v < 0) throw InputError("H.cayley: negative entry");
          r.push_back(static_cast<std::size_t>(v));
        }
        table.push_back(std::move(r));
      }
      spec.cayley = std::move(table);
    }
    if (H.contains("delta")) {
      std::vector<double> delta;
      for (const auto& x : as_array(H.at("delta"), "H.delta")) {
        delta.push_back(as_double(x, "H.delta"));
      }
      spec.delta = std::move(delta);
    }
    return TauSystem(std::move(spec), max_order);
  });
}

Json grid_spec_to_json(const affine::AffineGrid& grid) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "affine_continuum";
  j["grid"]["a"] = axis_to_json(grid.a);
  j["grid"]["b"] = axis_to_json(grid.b);
  j["grid"]["omega"] = axis_to_json(grid.omega);
  return j;
}

affine::AffineGrid grid_spec_from_json(const Json& j) {
  return guarded([&] {
    check_keys(j, "group spec", {"schema_version", "kind", "grid"});
    check_version(j, "group spec");
    if (j.at("kind") != "affine_continuum") {
      throw InputError("group spec: kind must be \"affine_continuum\"");
    }
    const Json& g = j.at("grid");
    check_keys(g, "grid", {"a", "b", "omega"});
    affine::AffineGrid grid{axis_from_json(g.at("a"), "grid.a"),
                            axis_from_json(g.at("b"), "grid.b"),
                            axis_from_json(g.at("omega"), "grid.omega")};
    grid.validate();
    return grid;
  });
}

Json function_to_json(const GroupFunction& f) {
  const TauSystem& sys = f.system();
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["side"] = to_string(f.side());
  Json entries = Json::array();
  for (std::size_t h = 0; h < sys.h_count(); ++h) {
    const auto row = f.row(h);
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] == Complex{}) continue;
      Json e;
      e["h"] = sys.label(h);
      e["k_or_omega"] = sys.K().element_at(k).coords;
      e["re"] = row[k].real();
      e["im"] = row[k].imag();
      entries.push_back(std::move(e));
    }
  }
  j["entries"] = std::move(entries);
  return j;
}

GroupFunction function_from_json(const Json& j, const TauSystem& sys) {
  return guarded([&] {
    check_keys(j, "function file", {"schema_version", "side", "entries"});
    check_version(j, "function file");
    GroupFunction f(sys, parse_side(j.at("side")));
    std::set<std::size_t> seen;
    for (const auto& e : as_array(j.at("entries"), "entries")) {
      check_keys(e, "entry", {"h", "k_or_omega", "re", "im"});
      if (!e.at("h").is_string()) throw InputError("entry.h: expected a label");
      const auto h = sys.find_label(e.at("h").get<std::string>());
      if (!h) throw InputError("entry.h: unknown label " + e.at("h").dump());
      GroupElement k;
      for (const auto& c : as_array(e.at("k_or_omega"), "entry.k_or_omega")) {
        k.coords.push_back(as_int(c, "entry.k_or_omega"));
      }
      if (!sys.K().contains(k)) {
        throw InputError("entry.k_or_omega: coordinates out of range for " +
                         sys.K().describe());
      }
      const std::size_t idx = *h * f.row_size() + sys.K().index_of(k);
      if (!seen.insert(idx).second) throw InputError("duplicate entry");
      f.values()[idx] = {as_double(e.at("re"), "entry.re"),
                         as_double(e.at("im"), "entry.im")};
    }
    return f;
  });
}

Json affine_function_to_json(const affine::SampledAffineFunction& f) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["side"] = f.domain == affine::AffineDomain::space ? "primal" : "dual";
  const affine::UniformAxis& inner =
      f.domain == affine::AffineDomain::space ? f.grid.b : f.grid.omega;
  Json entries = Json::array();
  for (std::size_t i = 0; i < f.grid.a.count; ++i) {
    for (std::size_t m = 0; m < inner.count; ++m) {
      const Complex z = f.at(i, m);
      if (z == Complex{}) continue;
      Json e;
      e["h"] = f.grid.a.node(i);
      e["k_or_omega"] = Json::array({inner.node(m)});
      e["re"] = z.real();
      e["im"] = z.imag();
      entries.push_back(std::move(e));
    }
  }
  j["entries"] = std::move(entries);
  return j;
}

affine::SampledAffineFunction affine_function_from_json(
    const Json& j, const affine::AffineGrid& grid) {
  return guarded([&] {
    check_keys(j, "function file", {"schema_version", "side", "entries"});
    check_version(j, "function file");
    const auto domain = parse_side(j.at("side")) == Side::primal
                            ? affine::AffineDomain::space
                            : affine::AffineDomain::frequency;
    affine::SampledAffineFunction f(grid, domain);
    const affine::UniformAxis& inner =
        domain == affine::AffineDomain::space ? grid.b : grid.omega;
    std::set<std::size_t> seen;
    for (const auto& e : as_array(j.at("entries"), "entries")) {
      check_keys(e, "entry", {"h", "k_or_omega", "re", "im"});
      const std::size_t i = node_index(grid.a, as_double(e.at("h"), "entry.h"), "entry.h");
      const Json& coords = as_array(e.at("k_or_omega"), "entry.k_or_omega");
      if (coords.size() != 1) throw InputError("entry.k_or_omega: expected one coordinate");
      const std::size_t m =
          node_index(inner, as_double(coords[0], "entry.k_or_omega"), "entry.k_or_omega");
      const std::size_t idx = i * f.row_size() + m;
      if (!seen.insert(idx).second) throw InputError("duplicate entry");
      f.values[idx] = {as_double(e.at("re"), "entry.re"),
                       as_double(e.at("im"), "entry.im")};
    }
    return f;
  });
}

LoadedSpec load_group_spec(const std::string& name_or_path,
                           std::int64_t max_order) {
  if (name_or_path == "affine-continuum:default") {
    return {name_or_path, std::nullopt, affine::AffineGrid::desk_default(),
            std::nullopt};
  }
  if (auto entry = catalog_lookup(name_or_path)) {
    if (entry->system.order() > max_order) {
      throw CapacityError("|H|*|K| exceeds cap of " + std::to_string(max_order));
    }
    LoadedSpec spec{name_or_path, entry->system, std::nullopt, std::nullopt};
    spec.catalog = std::move(entry);
    return spec;
  }
  const Json j = parse_file(name_or_path);
  const bool continuum =
      j.is_object() && j.contains("kind") && j.at("kind") == "affine_continuum";
  if (continuum) {
    return {name_or_path, std::nullopt, grid_spec_from_json(j), std::nullopt};
  }
  return {name_or_path, group_spec_from_json(j, max_order), std::nullopt,
          std::nullopt};
}

Json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << dump(j) << '\n';
}

std::string dump(const Json& j) { return j.dump(2); }

}  // namespace tauh::io
