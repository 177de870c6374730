#include "posetfix/instance_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace posetfix {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void parse_fail(const std::string& what) {
  throw PosetError(Errc::parse_error, what);
}

std::string want_string(const json& j, const std::string& where) {
  if (!j.is_string()) parse_fail(where + " must be a string");
  return j.get<std::string>();
}

std::vector<LabelPair> read_pairs(const json& j, const std::string& where) {
  if (!j.is_array()) parse_fail(where + " must be an array of label pairs");
  std::vector<LabelPair> pairs;
  pairs.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& e = j[i];
    const std::string at = where + "[" + std::to_string(i) + "]";
    if (!e.is_array() || e.size() != 2) parse_fail(at + " must be [a, b]");
    pairs.emplace_back(want_string(e[0], at + "[0]"),
                       want_string(e[1], at + "[1]"));
  }
  return pairs;
}

}  // namespace

Poset InstanceDoc::to_poset(Exec exec) const {
  return build_poset(elements, order_pairs, order_kind, exec);
}

Family InstanceDoc::to_family(const Poset& p,
                              const std::vector<std::string>& names) const {
  std::vector<MapTable> tables;
  if (names.empty()) {
    for (const auto& [name, assignments] : maps)
      tables.push_back(build_map(p, name, assignments));
  } else {
    for (const std::string& name : names) {
      auto it = maps.find(name);
      if (it == maps.end())
        parse_fail("no map named \"" + name + "\" in the instance");
      tables.push_back(build_map(p, name, it->second));
    }
  }
  return make_family(p, std::move(tables));
}

InstanceDoc make_instance_doc(const Poset& p, const Family& fam, json meta) {
  InstanceDoc doc;
  doc.elements = p.labels();
  doc.order_kind = OrderInput::full;
  for (Elem a = 0; a < p.size(); ++a)
    for (Elem b = 0; b < p.size(); ++b)
      if (p.leq_unchecked(a, b))
        doc.order_pairs.emplace_back(p.label(a), p.label(b));
  std::sort(doc.order_pairs.begin(), doc.order_pairs.end());
  for (const MapTable& f : fam.maps) {
    auto& table = doc.maps[f.name];
    for (Elem x = 0; x < p.size(); ++x) table[p.label(x)] = p.label(f.table[x]);
  }
  doc.meta = std::move(meta);
  if (!doc.meta.is_object()) parse_fail("meta must be a JSON object");
  return doc;
}

InstanceDoc parse_instance(const std::string& text) {
  json root = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (root.is_discarded()) parse_fail("document is not valid JSON");
  if (!root.is_object()) parse_fail("document must be a JSON object");
  for (const auto& [key, value] : root.items())
    if (key != "elements" && key != "order" && key != "maps" && key != "meta")
      parse_fail("unknown top-level key \"" + key + "\"");

  InstanceDoc doc;
  if (!root.contains("elements") || !root["elements"].is_array())
    parse_fail("\"elements\" must be an array of labels");
  for (std::size_t i = 0; i < root["elements"].size(); ++i)
    doc.elements.push_back(
        want_string(root["elements"][i], "elements[" + std::to_string(i) + "]"));

  if (!root.contains("order") || !root["order"].is_object())
    parse_fail("\"order\" must be an object");
  const json& order = root["order"];
  const bool has_covers = order.contains("covers");
  const bool has_full = order.contains("pairs");
  if (has_covers == has_full)
    parse_fail("\"order\" must hold exactly one of \"covers\" or \"pairs\"");
  doc.order_kind = has_covers ? OrderInput::covers : OrderInput::full;
  doc.order_pairs = read_pairs(has_covers ? order["covers"] : order["pairs"],
                               has_covers ? "order.covers" : "order.pairs");

  if (!root.contains("maps") || !root["maps"].is_object())
    parse_fail("\"maps\" must be an object of name -> assignment table");
  for (const auto& [name, table] : root["maps"].items()) {
    if (!table.is_object())
      parse_fail("maps." + name + " must be an object of label -> label");
    auto& assignments = doc.maps[name];
    for (const auto& [src, dst] : table.items())
      assignments[src] = want_string(dst, "maps." + name + "." + src);
  }

  if (root.contains("meta")) {
    if (!root["meta"].is_object()) parse_fail("\"meta\" must be an object");
    doc.meta = root["meta"];
  } else {
    doc.meta = json::object();
  }
  return doc;
}

InstanceDoc load_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_fail("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

std::string serialize_instance(const InstanceDoc& doc) {
  ordered_json root;
  root["elements"] = doc.elements;

  std::vector<LabelPair> pairs = doc.order_pairs;
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  ordered_json pair_list = ordered_json::array();
  for (const auto& [a, b] : pairs) pair_list.push_back({a, b});
  root["order"] = ordered_json::object();
  root["order"][doc.order_kind == OrderInput::covers ? "covers" : "pairs"] =
      std::move(pair_list);

  // std::map iterates name and label keys in sorted order already.
  ordered_json maps = ordered_json::object();
  for (const auto& [name, assignments] : doc.maps) {
    ordered_json table = ordered_json::object();
    for (const auto& [src, dst] : assignments) table[src] = dst;
    maps[name] = std::move(table);
  }
  root["maps"] = std::move(maps);
  root["meta"] = doc.meta;
  return root.dump(2) + "\n";
}

void write_instance_file(const std::filesystem::path& path,
                         const InstanceDoc& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) parse_fail("cannot open " + path.string() + " for writing");
  out << serialize_instance(doc);
  if (!out) parse_fail("failed writing " + path.string());
}

std::string instance_digest(const InstanceDoc& doc) {
  const std::string bytes = serialize_instance(doc);
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

ordered_json labels_json(const Poset& p, const Subset& s) {
  ordered_json out = ordered_json::array();
  for (Elem x : s) out.push_back(p.label(x));
  return out;
}

ordered_json fix_report_json(const Poset& p, const FixReport& report,
                             bool include_orbits) {
  ordered_json out;
  out["method"] = method_name(report.method);
  out["fix_set"] = labels_json(p, report.fix_set);
  out["least"] =
      report.least ? ordered_json(p.label(*report.least)) : ordered_json();
  if (!report.trace.empty()) out["trace"] = labels_json(p, report.trace);
  if (include_orbits) {
    ordered_json seeds = ordered_json::array();
    for (const OrbitResult& r : report.per_seed) {
      ordered_json one;
      one["seed"] = p.label(r.seed);
      one["orbit"] = labels_json(p, r.orbit);
      one["supremum"] = p.label(r.supremum);
      seeds.push_back(std::move(one));
    }
    out["per_seed"] = std::move(seeds);
  }
  ordered_json stats;
  stats["seeds"] = report.stats.seeds;
  stats["applications"] = report.stats.applications;
  out["stats"] = std::move(stats);
  return out;
}

ordered_json verdict_json(const Verdict& v) {
  ordered_json out;
  out["claim"] = claim_name(v.claim);
  out["holds"] = v.holds;
  out["preconds_met"] = v.preconds_met;
  if (v.witness) out["witness"] = *v.witness;
  if (!v.note.empty()) out["note"] = v.note;
  if (v.empirical) out["empirical"] = *v.empirical;
  return out;
}

}  // namespace posetfix
