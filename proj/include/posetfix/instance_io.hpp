#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "posetfix/fixpoint.hpp"
#include "posetfix/mapping.hpp"
#include "posetfix/oracle.hpp"
#include "posetfix/poset.hpp"

namespace posetfix {

// On-disk instance document. Canonical form: UTF-8 JSON, key order
// (elements, order, maps, meta), pair lists and object keys sorted bytewise,
// two-space indent, trailing newline. load -> serialize reproduces canonical
// input byte for byte.
struct InstanceDoc {
  std::vector<std::string> elements;
  OrderInput order_kind = OrderInput::covers;
  std::vector<LabelPair> order_pairs;
  std::map<std::string, std::map<std::string, std::string>> maps;
  nlohmann::json meta;  // object; plain json keeps keys sorted

  Poset to_poset(Exec exec = Exec::parallel) const;

  // Maps in name order; `names` selects a subfamily (empty = all).
  Family to_family(const Poset& p,
                   const std::vector<std::string>& names = {}) const;
};

InstanceDoc make_instance_doc(const Poset& p, const Family& fam,
                              nlohmann::json meta = nlohmann::json::object());

// Errors carry the offending field path / label.
InstanceDoc parse_instance(const std::string& text);
InstanceDoc load_instance_file(const std::filesystem::path& path);

std::string serialize_instance(const InstanceDoc& doc);
void write_instance_file(const std::filesystem::path& path,
                         const InstanceDoc& doc);

// FNV-1a 64 of the canonical serialization, e.g. "fnv1a64:9ae16a3b2f90404f".
std::string instance_digest(const InstanceDoc& doc);

// Report fragments shared by the CLI and the acceptance suite.
nlohmann::ordered_json labels_json(const Poset& p, const Subset& s);
nlohmann::ordered_json fix_report_json(const Poset& p, const FixReport& report,
                                       bool include_orbits = true);
nlohmann::ordered_json verdict_json(const Verdict& v);

}  // namespace posetfix
