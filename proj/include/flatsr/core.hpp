#ifndef FLATSR_CORE_HPP
#define FLATSR_CORE_HPP

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace flatsr {

/// Malformed external input: files, identity strings, out-of-range tables.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A documented precondition of an operation does not hold; the message
/// carries a witness when one exists.
struct precondition_error : std::runtime_error {
  explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

/// An exhaustive search would exceed a configured bound; the message names
/// the bound and the required amount.
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

/// Exhaustive-check and search bounds. Every bound is overridable through a
/// key=value config file (see parse_config); defaults keep the full test and
/// verification load within desk scale.
struct Config {
  int axiom_order_max = 32;       // verify_axioms input size cap
  int ideal_order_max = 16;       // multiplicative_ideals subset scan cap
  int word_element_max = 64;      // from_words element count cap
  int sat_max_vars = 8;           // satisfies variable cap
  std::uint64_t sat_eval_budget = 1000000000ull;  // satisfies assignment cap
  std::uint64_t closure_max = 200000;             // subpower closure size cap
  int materialize_max = 4096;     // tuple algebra to explicit tables cap
  int enum_order_max = 6;         // enumerate_3nilpotent cap
  int construct_param_max = 4;    // lemma_construction n, m, k cap
  std::uint64_t sep_identity_budget = 500000;     // separating-identity candidates
  int vn_n_max = 8;               // vn_generator index cap
};

inline Config& default_config() {
  static Config cfg;
  return cfg;
}

/// Parses "key = value" lines ('#' comments, blank lines ignored) and applies
/// them over `cfg`. Unknown keys raise input_error so typos do not silently
/// keep a default.
inline void apply_config_line(Config& cfg, const std::string& key, const std::string& value) {
  auto as_int = [&]() {
    try {
      return std::stoi(value);
    } catch (const std::exception&) {
      throw input_error("config value for '" + key + "' is not an integer: " + value);
    }
  };
  auto as_u64 = [&]() {
    try {
      return static_cast<std::uint64_t>(std::stoull(value));
    } catch (const std::exception&) {
      throw input_error("config value for '" + key + "' is not an integer: " + value);
    }
  };
  if (key == "axiom_order_max") cfg.axiom_order_max = as_int();
  else if (key == "ideal_order_max") cfg.ideal_order_max = as_int();
  else if (key == "word_element_max") cfg.word_element_max = as_int();
  else if (key == "sat_max_vars") cfg.sat_max_vars = as_int();
  else if (key == "sat_eval_budget") cfg.sat_eval_budget = as_u64();
  else if (key == "closure_max") cfg.closure_max = as_u64();
  else if (key == "materialize_max") cfg.materialize_max = as_int();
  else if (key == "enum_order_max") cfg.enum_order_max = as_int();
  else if (key == "construct_param_max") cfg.construct_param_max = as_int();
  else if (key == "sep_identity_budget") cfg.sep_identity_budget = as_u64();
  else if (key == "vn_n_max") cfg.vn_n_max = as_int();
  else throw input_error("unknown config key: " + key);
}

inline Config parse_config(std::istream& in, Config base = Config{}) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    std::string key, value;
    if (eq == std::string::npos) {
      std::istringstream probe(line);
      if (!(probe >> key)) continue;  // blank line
      throw input_error("config line " + std::to_string(lineno) + ": expected key=value");
    }
    {
      std::istringstream k(line.substr(0, eq)), v(line.substr(eq + 1));
      k >> key;
      v >> value;
      std::string extra;
      if (key.empty() || value.empty() || (k >> extra) || (v >> extra))
        throw input_error("config line " + std::to_string(lineno) + ": expected key=value");
    }
    apply_config_line(base, key, value);
  }
  return base;
}

inline Config load_config_file(const std::string& path, Config base = Config{}) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open config file: " + path);
  return parse_config(in, base);
}

}  // namespace flatsr

#endif
