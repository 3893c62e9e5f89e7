#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "brace.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "perm_group.hpp"
#include "sdp.hpp"

namespace skewbrace {

using json = nlohmann::json;

inline json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(in.good(), errc::bad_input, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(errc::bad_input, path.string() + ": " + e.what());
  }
}

inline void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  require(out.good(), errc::bad_input, "cannot write " + path.string());
  out << j.dump(2) << '\n';
}

inline json table_to_json(const std::vector<std::vector<int>>& rows) { return json(rows); }

inline std::vector<std::vector<int>> table_from_json(const json& j, const std::string& what) {
  try {
    return j.get<std::vector<std::vector<int>>>();
  } catch (const json::exception&) {
    fail(errc::bad_input, what + ": expected an array of integer rows");
  }
}

// Group file: {"n": <int>, "table": [[...], ...]}, identity 0.
inline json group_to_json(const FiniteGroup& g) {
  return json{{"n", g.order()}, {"table", g.table()}};
}

inline FiniteGroup group_from_json(const json& j) {
  require(j.is_object() && j.contains("n") && j.contains("table"), errc::bad_input,
          "group file needs fields n and table");
  auto rows = table_from_json(j.at("table"), "table");
  require(j.at("n").is_number_integer() && j.at("n").get<int>() == static_cast<int>(rows.size()),
          errc::bad_input, "field n does not match the table size");
  return make_group(rows);
}

// Brace file: {"n": <int>, "dot": [[...]], "circ": [[...]]}.
inline json brace_to_json(const SkewBrace& b) {
  return json{{"n", b.order()}, {"dot", b.dot_group().table()}, {"circ", b.circ_group().table()}};
}

inline SkewBrace brace_from_json(const json& j) {
  require(j.is_object() && j.contains("n") && j.contains("dot") && j.contains("circ"),
          errc::bad_input, "brace file needs fields n, dot and circ");
  auto dot = table_from_json(j.at("dot"), "dot");
  auto circ = table_from_json(j.at("circ"), "circ");
  require(j.at("n").is_number_integer() && j.at("n").get<int>() == static_cast<int>(dot.size()),
          errc::bad_input, "field n does not match the dot table size");
  return make_brace(dot, circ);
}

// Permutation set file: {"deg": <int>, "perms": [[...], ...]}; closure is
// validated on load.
inline json permset_to_json(const PermGroup& s) {
  std::vector<std::vector<int>> perms;
  for (const Perm& p : s.elements()) perms.push_back(p.images());
  return json{{"deg", s.degree()}, {"perms", perms}};
}

inline PermGroup permset_from_json(const json& j) {
  require(j.is_object() && j.contains("deg") && j.contains("perms"), errc::bad_input,
          "permutation set file needs fields deg and perms");
  auto rows = table_from_json(j.at("perms"), "perms");
  std::vector<Perm> perms;
  for (auto& r : rows) {
    require(static_cast<int>(r.size()) == j.at("deg").get<int>(), errc::bad_input,
            "permutation length does not match deg");
    perms.emplace_back(std::move(r));
  }
  return PermGroup::from_elements(std::move(perms));
}

// Semidirect-product spec file: references two brace files (relative to the
// spec file's directory) plus explicit image tables for phi and theta, each
// a sequence of permutations of A indexed by the elements of B.
inline SdpSpec sdp_spec_from_json(const json& j, const std::filesystem::path& base_dir) {
  require(j.is_object() && j.contains("A") && j.contains("B") && j.contains("phi") &&
              j.contains("theta"),
          errc::bad_input, "sdp spec file needs fields A, B, phi and theta");
  require(j.at("A").is_string() && j.at("B").is_string(), errc::bad_input,
          "fields A and B must be brace file paths");
  SkewBrace A = brace_from_json(load_json_file(base_dir / j.at("A").get<std::string>()));
  SkewBrace B = brace_from_json(load_json_file(base_dir / j.at("B").get<std::string>()));
  auto phi_rows = table_from_json(j.at("phi"), "phi");
  auto theta_rows = table_from_json(j.at("theta"), "theta");
  std::vector<Perm> phi, theta;
  for (auto& r : phi_rows) phi.emplace_back(std::move(r));
  for (auto& r : theta_rows) theta.emplace_back(std::move(r));
  return make_sdp_spec(std::move(A), std::move(B), std::move(phi), std::move(theta));
}

inline SdpSpec sdp_spec_from_file(const std::filesystem::path& path) {
  return sdp_spec_from_json(load_json_file(path), path.parent_path());
}

// Catalog file: {"circ": <group>, "entries": [{"dot": ..., "type": ...,
// "provenance": ...}, ...]}, entries in lexicographic dot-table order.
inline json catalog_to_json(const BraceCatalog& cat) {
  json entries = json::array();
  for (const auto& e : cat.entries)
    entries.push_back(json{{"dot", e.brace.dot_group().table()},
                           {"type", e.type_label},
                           {"provenance", e.provenance}});
  return json{{"circ", group_to_json(cat.circ)}, {"entries", entries}};
}

}  // namespace skewbrace
