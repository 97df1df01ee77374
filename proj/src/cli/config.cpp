#include "ndspec/cli/config.hpp"

#include <cmath>
#include <set>
#include <string>

#include "ndspec/errors.hpp"

namespace ndspec::cli {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

constexpr int kDefaultTruncation = 64;
constexpr int kDefaultWindow = 512;

// Collects violations while walking the document.
class Checker {
 public:
  void fail(const std::string& path, const std::string& message) { violations_.push_back({path, message}); }

  bool ok() const { return violations_.empty(); }
  std::size_t count() const { return violations_.size(); }
  std::vector<Violation> take() { return std::move(violations_); }

  void only_keys(const json& object, const std::string& path, std::initializer_list<const char*> allowed) {
    const std::set<std::string> keys(allowed.begin(), allowed.end());
    for (const auto& [key, value] : object.items()) {
      if (!keys.contains(key)) fail(join(path, key), "unknown field");
    }
  }

  static std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
  }
  static std::string index(const std::string& path, std::size_t i) {
    return path + "[" + std::to_string(i) + "]";
  }

 private:
  std::vector<Violation> violations_;
};

std::optional<cplx> read_complex(const json& value, const std::string& path, Checker& check) {
  if (value.is_number()) return cplx(value.get<double>(), 0.0);
  if (value.is_array() && value.size() == 2 && value[0].is_number() && value[1].is_number()) {
    return cplx(value[0].get<double>(), value[1].get<double>());
  }
  check.fail(path, "expected a number or [re, im]");
  return std::nullopt;
}

// A bare number or [re, im]; for n = 1 this stands for the whole vector or matrix.
bool is_scalar(const json& value) {
  return value.is_number() || (value.is_array() && value.size() == 2 && value[0].is_number() && value[1].is_number());
}

std::optional<Matrix> read_matrix(const json& value, Eigen::Index n, const std::string& path, Checker& check) {
  if (n == 1 && is_scalar(value)) {
    const auto z = read_complex(value, path, check);
    return z ? std::optional<Matrix>(Matrix::Constant(1, 1, *z)) : std::nullopt;
  }
  if (!value.is_array() || static_cast<Eigen::Index>(value.size()) != n) {
    check.fail(path, "expected a " + std::to_string(n) + "x" + std::to_string(n) + " row-major nested array");
    return std::nullopt;
  }
  Matrix m(n, n);
  const std::size_t before = check.count();
  for (Eigen::Index r = 0; r < n; ++r) {
    const json& row = value[static_cast<std::size_t>(r)];
    const std::string row_path = Checker::index(path, static_cast<std::size_t>(r));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      check.fail(row_path, "expected a row of length " + std::to_string(n));
      continue;
    }
    for (Eigen::Index c = 0; c < n; ++c) {
      if (auto z = read_complex(row[static_cast<std::size_t>(c)], Checker::index(row_path, static_cast<std::size_t>(c)), check)) {
        m(r, c) = *z;
      }
    }
  }
  if (check.count() != before) return std::nullopt;
  return m;
}

std::optional<Vector> read_vector(const json& value, Eigen::Index n, const std::string& path, Checker& check) {
  if (n == 1 && is_scalar(value)) {
    const auto z = read_complex(value, path, check);
    return z ? std::optional<Vector>(Vector::Constant(1, *z)) : std::nullopt;
  }
  if (!value.is_array() || static_cast<Eigen::Index>(value.size()) != n) {
    check.fail(path, "expected an array of " + std::to_string(n) + " entries");
    return std::nullopt;
  }
  Vector v(n);
  const std::size_t before = check.count();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (auto z = read_complex(value[static_cast<std::size_t>(i)], Checker::index(path, static_cast<std::size_t>(i)), check)) {
      v(i) = *z;
    }
  }
  if (check.count() != before) return std::nullopt;
  return v;
}

std::optional<double> read_number(const json& object, const char* key, const std::string& path, Checker& check) {
  if (!object.contains(key)) return std::nullopt;
  if (!object[key].is_number()) {
    check.fail(Checker::join(path, key), "expected a number");
    return std::nullopt;
  }
  return object[key].get<double>();
}

std::optional<long long> read_integer(const json& object, const char* key, const std::string& path, Checker& check) {
  if (!object.contains(key)) return std::nullopt;
  if (!object[key].is_number_integer()) {
    check.fail(Checker::join(path, key), "expected an integer");
    return std::nullopt;
  }
  return object[key].get<long long>();
}

std::vector<json> as_list(const json& value) {
  if (value.is_array()) return {value.begin(), value.end()};
  return {value};
}

// Reads a length in radians from `key` or in full turns from `key_turns`.
std::optional<double> read_length(const json& object, const std::string& key, const std::string& path,
                                  Checker& check) {
  const std::string turns_key = key + "_turns";
  const bool has_plain = object.contains(key);
  const bool has_turns = object.contains(turns_key);
  if (has_plain == has_turns) {
    check.fail(Checker::join(path, key), "give exactly one of '" + key + "' or '" + turns_key + "'");
    return std::nullopt;
  }
  const std::string& used = has_plain ? key : turns_key;
  if (!object[used].is_number()) {
    check.fail(Checker::join(path, used), "expected a number");
    return std::nullopt;
  }
  const double value = object[used].get<double>();
  return has_plain ? value : value * kTwoPi;
}

std::optional<DelayProfile> read_profile(const json& value, double span, const std::string& path, Checker& check) {
  if (!value.is_object() || !value.contains("type") || !value["type"].is_string()) {
    check.fail(path, "expected an object with a string 'type'");
    return std::nullopt;
  }
  const std::string type = value["type"].get<std::string>();
  if (type == "constant") {
    check.only_keys(value, path, {"type", "value"});
    return DelayProfile::constant(read_number(value, "value", path, check).value_or(1.0));
  }
  if (type == "exponential") {
    check.only_keys(value, path, {"type", "rate"});
    const auto rate = read_number(value, "rate", path, check);
    if (!rate) {
      check.fail(Checker::join(path, "rate"), "required");
      return std::nullopt;
    }
    return DelayProfile::exponential(*rate);
  }
  if (type == "samples") {
    check.only_keys(value, path, {"type", "values"});
    const std::string values_path = Checker::join(path, "values");
    if (!value.contains("values") || !value["values"].is_array() || value["values"].size() < 2) {
      check.fail(values_path, "expected an array of at least two numbers");
      return std::nullopt;
    }
    std::vector<double> samples;
    for (std::size_t i = 0; i < value["values"].size(); ++i) {
      const json& v = value["values"][i];
      if (!v.is_number()) {
        check.fail(Checker::index(values_path, i), "expected a number");
        return std::nullopt;
      }
      samples.push_back(v.get<double>());
    }
    if (!(span > 0.0)) return std::nullopt;
    return DelayProfile::samples(std::move(samples), span);
  }
  check.fail(Checker::join(path, "type"), "unknown profile type '" + type + "'");
  return std::nullopt;
}

DelayFunctional read_delay(const json& value, Eigen::Index n, const std::string& path, Checker& check,
                           ordered_json& resolved) {
  if (!value.is_object()) {
    check.fail(path, "expected an object");
    return DelayFunctional(n);
  }
  check.only_keys(value, path, {"periods", "atoms", "distributed"});

  struct PendingAtom {
    Matrix coef;
    double lag;
    std::string path;
  };
  struct PendingPart {
    Matrix coef;
    double span;
    json profile;
    int panels;
    std::string path;
  };
  std::vector<PendingAtom> atoms;
  std::vector<PendingPart> parts;
  double longest = 0.0;

  if (value.contains("atoms")) {
    const std::string atoms_path = Checker::join(path, "atoms");
    if (!value["atoms"].is_array()) {
      check.fail(atoms_path, "expected an array");
    } else {
      for (std::size_t i = 0; i < value["atoms"].size(); ++i) {
        const json& atom = value["atoms"][i];
        const std::string atom_path = Checker::index(atoms_path, i);
        if (!atom.is_object()) {
          check.fail(atom_path, "expected an object");
          continue;
        }
        check.only_keys(atom, atom_path, {"coef", "lag", "lag_turns"});
        std::optional<Matrix> coef;
        if (!atom.contains("coef")) {
          check.fail(Checker::join(atom_path, "coef"), "required");
        } else {
          coef = read_matrix(atom["coef"], n, Checker::join(atom_path, "coef"), check);
        }
        const auto lag = read_length(atom, "lag", atom_path, check);
        if (lag && !(*lag >= 0.0)) check.fail(Checker::join(atom_path, "lag"), "lag must be >= 0");
        if (coef && lag && *lag >= 0.0) {
          atoms.push_back({*coef, *lag, atom_path});
          longest = std::max(longest, *lag);
        }
      }
    }
  }

  if (value.contains("distributed")) {
    const std::string dist_path = Checker::join(path, "distributed");
    const bool is_list = value["distributed"].is_array();
    const auto entries = as_list(value["distributed"]);
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const json& part = entries[i];
      const std::string part_path = is_list ? Checker::index(dist_path, i) : dist_path;
      if (!part.is_object()) {
        check.fail(part_path, "expected an object");
        continue;
      }
      check.only_keys(part, part_path, {"coef", "span", "span_turns", "profile", "panels"});
      std::optional<Matrix> coef;
      if (!part.contains("coef")) {
        check.fail(Checker::join(part_path, "coef"), "required");
      } else {
        coef = read_matrix(part["coef"], n, Checker::join(part_path, "coef"), check);
      }
      const auto span = read_length(part, "span", part_path, check);
      if (span && !(*span > 0.0)) check.fail(Checker::join(part_path, "span"), "span must be > 0");
      const auto panels = read_integer(part, "panels", part_path, check).value_or(64);
      if (panels <= 0) check.fail(Checker::join(part_path, "panels"), "must be positive");
      const json profile = part.contains("profile") ? part["profile"] : json{{"type", "constant"}};
      if (coef && span && *span > 0.0 && panels > 0) {
        parts.push_back({*coef, *span, profile, static_cast<int>(panels), part_path});
        longest = std::max(longest, *span);
      }
    }
  }

  long long periods = std::max<long long>(1, static_cast<long long>(std::ceil(longest / kTwoPi - 1e-12)));
  if (auto given = read_integer(value, "periods", path, check)) {
    if (*given <= 0) {
      check.fail(Checker::join(path, "periods"), "must be a positive integer");
    } else {
      periods = *given;
    }
  }

  DelayFunctional functional(n, static_cast<int>(periods));
  for (const auto& atom : atoms) {
    try {
      functional.add_atom(atom.coef, atom.lag);
    } catch (const Error& e) {
      check.fail(Checker::join(atom.path, "lag"), e.what());
    }
  }
  for (const auto& part : parts) {
    auto profile = read_profile(part.profile, part.span, Checker::join(part.path, "profile"), check);
    if (!profile) continue;
    try {
      functional.add_distributed({part.coef, part.span, std::move(*profile), part.panels});
    } catch (const Error& e) {
      check.fail(Checker::join(part.path, "span"), e.what());
    }
  }

  resolved = ordered_json::object();
  resolved["periods"] = periods;
  resolved["atoms"] = value.contains("atoms") ? ordered_json(value["atoms"]) : ordered_json::array();
  resolved["distributed"] =
      value.contains("distributed") ? ordered_json(as_list(value["distributed"])) : ordered_json::array();
  return functional;
}

KernelSpec read_kernel(const json& value, const std::string& path, Checker& check) {
  KernelSpec kernel;
  if (!value.is_object()) {
    check.fail(path, "expected an object");
    return kernel;
  }
  check.only_keys(value, path, {"terms"});
  if (!value.contains("terms")) return kernel;
  const std::string terms_path = Checker::join(path, "terms");
  if (!value["terms"].is_array()) {
    check.fail(terms_path, "expected an array");
    return kernel;
  }
  for (std::size_t i = 0; i < value["terms"].size(); ++i) {
    const json& term = value["terms"][i];
    const std::string term_path = Checker::index(terms_path, i);
    if (!term.is_object()) {
      check.fail(term_path, "expected an object");
      continue;
    }
    check.only_keys(term, term_path, {"c", "m", "alpha"});
    std::optional<cplx> c = term.contains("c") ? read_complex(term["c"], Checker::join(term_path, "c"), check)
                                               : std::optional<cplx>(1.0);
    const long long m = read_integer(term, "m", term_path, check).value_or(0);
    if (m < 0) check.fail(Checker::join(term_path, "m"), "power must be >= 0");
    const auto alpha = read_number(term, "alpha", term_path, check);
    if (!alpha) {
      if (!term.contains("alpha")) check.fail(Checker::join(term_path, "alpha"), "required");
      continue;
    }
    if (!(*alpha > 0.0)) {
      check.fail(Checker::join(term_path, "alpha"), "alpha must be > 0 (kernel not in L^1)");
      continue;
    }
    if (c && m >= 0) kernel.add_term(*c, static_cast<int>(m), *alpha);
  }
  return kernel;
}

Forcing read_forcing(const json& value, Eigen::Index n, int grid_size, const std::string& path, Checker& check) {
  if (!value.is_object()) {
    check.fail(path, "expected an object");
    return Forcing::zero(n);
  }
  if (value.contains("samples")) {
    check.only_keys(value, path, {"samples"});
    const std::string samples_path = Checker::join(path, "samples");
    const json& rows = value["samples"];
    if (!rows.is_array() || rows.empty()) {
      check.fail(samples_path, "expected a non-empty array");
      return Forcing::zero(n);
    }
    if (static_cast<int>(rows.size()) != grid_size) {
      check.fail(samples_path, "expected N = " + std::to_string(grid_size) + " samples, got " +
                                   std::to_string(rows.size()));
      return Forcing::zero(n);
    }
    Matrix samples(static_cast<Eigen::Index>(rows.size()), n);
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (auto v = read_vector(rows[j], n, Checker::index(samples_path, j), check)) {
        samples.row(static_cast<Eigen::Index>(j)) = v->transpose();
      }
    }
    return Forcing::from_samples(std::move(samples));
  }

  check.only_keys(value, path, {"const", "cos", "sin", "modes"});
  TrigPolynomial poly(n);
  if (value.contains("const")) {
    if (auto v = read_vector(value["const"], n, Checker::join(path, "const"), check)) poly.add_constant(*v);
  }
  for (const char* key : {"cos", "sin"}) {
    if (!value.contains(key)) continue;
    const std::string list_path = Checker::join(path, key);
    if (!value[key].is_array()) {
      check.fail(list_path, "expected an array of harmonics 1, 2, ...");
      continue;
    }
    for (std::size_t i = 0; i < value[key].size(); ++i) {
      if (auto v = read_vector(value[key][i], n, Checker::index(list_path, i), check)) {
        const int harmonic = static_cast<int>(i) + 1;
        if (std::string(key) == "cos") {
          poly.add_cos(harmonic, *v);
        } else {
          poly.add_sin(harmonic, *v);
        }
      }
    }
  }
  if (value.contains("modes")) {
    const std::string modes_path = Checker::join(path, "modes");
    if (!value["modes"].is_array()) {
      check.fail(modes_path, "expected an array");
    } else {
      for (std::size_t i = 0; i < value["modes"].size(); ++i) {
        const json& mode = value["modes"][i];
        const std::string mode_path = Checker::index(modes_path, i);
        if (!mode.is_object()) {
          check.fail(mode_path, "expected an object");
          continue;
        }
        check.only_keys(mode, mode_path, {"k", "coef"});
        const auto k = read_integer(mode, "k", mode_path, check);
        if (!k) {
          if (!mode.contains("k")) check.fail(Checker::join(mode_path, "k"), "required");
          continue;
        }
        if (!mode.contains("coef")) {
          check.fail(Checker::join(mode_path, "coef"), "required");
          continue;
        }
        if (auto v = read_vector(mode["coef"], n, Checker::join(mode_path, "coef"), check)) {
          poly.add_mode(static_cast<int>(*k), *v);
        }
      }
    }
  }
  return Forcing(std::move(poly));
}

std::vector<int> read_int_list(const json& doc, const char* key, std::vector<int> fallback, Checker& check) {
  if (!doc.contains(key)) return fallback;
  const json& list = doc[key];
  if (!list.is_array() || list.empty()) {
    check.fail(key, "expected a non-empty array of positive integers");
    return fallback;
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (!list[i].is_number_integer() || list[i].get<long long>() <= 0) {
      check.fail(Checker::index(key, i), "expected a positive integer");
      continue;
    }
    const int v = static_cast<int>(list[i].get<long long>());
    if (!out.empty() && v <= out.back()) check.fail(Checker::index(key, i), "values must ascend");
    out.push_back(v);
  }
  return out;
}

}  // namespace

RunConfig parse_config(std::string_view text, const Overrides& overrides) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::vector<Violation>{{"", std::string("malformed JSON: ") + e.what()}});
  }
  if (!doc.is_object()) throw ConfigError(std::vector<Violation>{{"", "top level must be a JSON object"}});

  if (overrides.truncation) doc["K"] = *overrides.truncation;
  if (overrides.grid_size) doc["N"] = *overrides.grid_size;
  if (overrides.window) doc["K_diag"] = *overrides.window;
  if (overrides.seed) doc["seed"] = *overrides.seed;

  Checker check;
  check.only_keys(doc, "", {"n", "A", "L", "G", "kernel", "forcing", "K", "N", "K_diag", "besov", "N_list",
                            "K_list", "seed", "tolerances"});

  const auto n_value = read_integer(doc, "n", "", check);
  if (!doc.contains("n")) check.fail("n", "required");
  if (n_value && *n_value <= 0) check.fail("n", "state dimension must be positive");
  if (!n_value || *n_value <= 0) throw ConfigError(check.take());
  const auto n = static_cast<Eigen::Index>(*n_value);

  RunConfig config;
  std::optional<Matrix> A;
  if (!doc.contains("A")) {
    check.fail("A", "required");
  } else {
    A = read_matrix(doc["A"], n, "A", check);
  }

  const long long K = read_integer(doc, "K", "", check).value_or(kDefaultTruncation);
  if (K < 0) check.fail("K", "truncation must be non-negative");
  const long long N = read_integer(doc, "N", "", check).value_or(4 * std::max<long long>(K, 1));
  if (N <= 0) check.fail("N", "grid size must be positive");
  if (K >= 0 && N > 0 && N < 2 * K + 1) {
    check.fail("N", "N >= 2K+1 violated (N = " + std::to_string(N) + ", K = " + std::to_string(K) + ")");
  }
  const long long window = read_integer(doc, "K_diag", "", check).value_or(kDefaultWindow);
  if (window < 0) check.fail("K_diag", "window must be non-negative");

  ordered_json resolved_L, resolved_G;
  DelayFunctional L = doc.contains("L") ? read_delay(doc["L"], n, "L", check, resolved_L)
                                        : read_delay(json::object(), n, "L", check, resolved_L);
  DelayFunctional G = doc.contains("G") ? read_delay(doc["G"], n, "G", check, resolved_G)
                                        : read_delay(json::object(), n, "G", check, resolved_G);
  KernelSpec kernel = doc.contains("kernel") ? read_kernel(doc["kernel"], "kernel", check) : KernelSpec{};
  Forcing forcing = doc.contains("forcing")
                        ? read_forcing(doc["forcing"], n, static_cast<int>(std::max<long long>(N, 1)), "forcing", check)
                        : Forcing::zero(n);

  if (doc.contains("besov")) {
    const json& b = doc["besov"];
    if (!b.is_object()) {
      check.fail("besov", "expected an object");
    } else {
      check.only_keys(b, "besov", {"s", "p", "q"});
      config.besov.s = read_number(b, "s", "besov", check).value_or(config.besov.s);
      config.besov.p = read_number(b, "p", "besov", check).value_or(config.besov.p);
      config.besov.q = read_number(b, "q", "besov", check).value_or(config.besov.q);
      if (!(config.besov.s > 0.0)) check.fail("besov.s", "s must be > 0");
      if (!(config.besov.p >= 1.0)) check.fail("besov.p", "p must lie in [1, inf)");
      if (!(config.besov.q >= 1.0)) check.fail("besov.q", "q must lie in [1, inf)");
    }
  }

  config.grid_list = read_int_list(doc, "N_list", config.grid_list, check);
  if (doc.contains("K_list")) {
    config.truncation_list = read_int_list(doc, "K_list", config.truncation_list, check);
    for (std::size_t i = 0; i < config.truncation_list.size(); ++i) {
      if (N > 0 && N < 2LL * config.truncation_list[i] + 1) {
        check.fail(Checker::index("K_list", i),
                   "N >= 2K+1 violated for K = " + std::to_string(config.truncation_list[i]));
      }
    }
  } else {
    // Default sweep: the truncations the grid can hold.
    std::erase_if(config.truncation_list, [&](int k) { return 2LL * k + 1 > N; });
  }

  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned() && !(doc["seed"].is_number_integer() && doc["seed"].get<long long>() >= 0)) {
      check.fail("seed", "expected a non-negative integer");
    } else {
      config.seed = doc["seed"].get<std::uint64_t>();
    }
  }

  if (doc.contains("tolerances")) {
    const json& t = doc["tolerances"];
    if (!t.is_object()) {
      check.fail("tolerances", "expected an object");
    } else {
      check.only_keys(t, "tolerances",
                      {"singular_condition", "residual", "kernel_tail", "lag_tolerance", "interpolate_off_grid"});
      auto& tol = config.tolerances;
      tol.singular_condition = read_number(t, "singular_condition", "tolerances", check).value_or(tol.singular_condition);
      tol.residual = read_number(t, "residual", "tolerances", check).value_or(tol.residual);
      tol.kernel_tail = read_number(t, "kernel_tail", "tolerances", check).value_or(tol.kernel_tail);
      tol.lag_tolerance = read_number(t, "lag_tolerance", "tolerances", check).value_or(tol.lag_tolerance);
      if (t.contains("interpolate_off_grid")) {
        if (!t["interpolate_off_grid"].is_boolean()) {
          check.fail("tolerances.interpolate_off_grid", "expected a boolean");
        } else {
          tol.interpolate_off_grid = t["interpolate_off_grid"].get<bool>();
        }
      }
      for (const char* key : {"singular_condition", "residual", "kernel_tail", "lag_tolerance"}) {
        if (t.contains(key) && t[key].is_number() && !(t[key].get<double>() > 0.0)) {
          check.fail(Checker::join("tolerances", key), "must be > 0");
        }
      }
    }
  }

  if (!check.ok()) throw ConfigError(check.take());

  config.problem = ProblemSpec{*A, std::move(L), std::move(G), std::move(kernel), std::move(forcing),
                               static_cast<int>(K), static_cast<int>(N)};
  config.window = static_cast<int>(window);

  ordered_json& r = config.resolved;
  r["n"] = n;
  r["A"] = ordered_json(doc["A"]);
  r["L"] = resolved_L;
  r["G"] = resolved_G;
  r["kernel"] = doc.contains("kernel") ? ordered_json(doc["kernel"]) : ordered_json{{"terms", ordered_json::array()}};
  r["forcing"] = doc.contains("forcing") ? ordered_json(doc["forcing"]) : ordered_json::object();
  r["K"] = K;
  r["N"] = N;
  r["K_diag"] = window;
  r["besov"] = {{"s", config.besov.s}, {"p", config.besov.p}, {"q", config.besov.q}};
  r["N_list"] = config.grid_list;
  r["K_list"] = config.truncation_list;
  r["seed"] = config.seed;
  const auto& tol = config.tolerances;
  r["tolerances"] = {{"singular_condition", tol.singular_condition},
                     {"residual", tol.residual},
                     {"kernel_tail", tol.kernel_tail},
                     {"lag_tolerance", tol.lag_tolerance},
                     {"interpolate_off_grid", tol.interpolate_off_grid}};
  return config;
}

}  // namespace ndspec::cli
