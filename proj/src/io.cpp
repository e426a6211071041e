#include "ornalat/io.hpp"

#include <cctype>
#include <sstream>

namespace ornalat {

using nlohmann::json;

Labeling Labeling::natural(int n) {
  Labeling l;
  for (int i = 0; i < n; ++i) l.names.push_back(std::to_string(i + 1));
  return l;
}

Labeling Labeling::signed_cycle(int n) {
  Labeling l;
  for (int i = 0; i < 2 * n; ++i) l.names.push_back(std::to_string(signed_label(n, i)));
  return l;
}

int Labeling::index_of(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (names[i] == name) return i;
  throw ParseError("unknown element label '" + std::string(name) + "'");
}

namespace {

json members_json(SubsetMask s) {
  json arr = json::array();
  for (int i : s) arr.push_back(i + 1);
  return arr;
}

SubsetMask members_from_json(const json& arr, int n) {
  if (!arr.is_array()) throw ParseError("expected an array of members");
  SubsetMask s;
  for (const json& m : arr) {
    if (!m.is_number_integer()) throw ParseError("members must be integers");
    const int v = m.get<int>();
    if (v < 1 || v > n)
      throw ParseError("member " + std::to_string(v) + " outside 1.." + std::to_string(n));
    s = s.with(v - 1);
  }
  return s;
}

}  // namespace

json building_to_json(const PointedBuildingSet& b) {
  json fibers = json::array();
  for (int i = 0; i < b.size(); ++i) {
    json f = json::array();
    for (SubsetMask s : b.fiber(i)) f.push_back(members_json(s));
    fibers.push_back(std::move(f));
  }
  return {{"n", b.size()}, {"fibers", std::move(fibers)}};
}

PointedBuildingSet building_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("fibers"))
    throw ParseError("building set JSON needs \"n\" and \"fibers\"");
  if (!j["n"].is_number_integer()) throw ParseError("\"n\" must be an integer");
  const int n = j["n"].get<int>();
  if (n < 1 || n > 64) throw ParseError("\"n\" must lie in 1..64");
  const json& fj = j["fibers"];
  if (!fj.is_array() || static_cast<int>(fj.size()) != n)
    throw ParseError("\"fibers\" must be an array of n fibers");
  std::vector<std::vector<SubsetMask>> fibers(n);
  for (int i = 0; i < n; ++i) {
    if (!fj[i].is_array()) throw ParseError("each fiber must be an array");
    for (const json& s : fj[i]) fibers[i].push_back(members_from_json(s, n));
  }
  return PointedBuildingSet::validate(n, std::move(fibers));
}

json orn_to_json(const Ornamentation& rho) {
  json values = json::array();
  for (SubsetMask s : rho.values()) values.push_back(members_json(s));
  return {{"values", std::move(values)}};
}

Ornamentation orn_from_json(const PointedBuildingSet& b, const json& j) {
  if (!j.is_object() || !j.contains("values") || !j["values"].is_array())
    throw ParseError("ornamentation JSON needs a \"values\" array");
  std::vector<SubsetMask> values;
  for (const json& s : j["values"]) values.push_back(members_from_json(s, b.size()));
  return validate_orn(b, std::move(values));
}

json lattice_to_json(const OrnLattice& lat) {
  json elements = json::array();
  for (const Ornamentation& r : lat.elements()) elements.push_back(orn_to_json(r)["values"]);
  json covers = json::array();
  for (const Cover& c : lat.covers()) covers.push_back({c.lo, c.hi});
  return {{"elements", std::move(elements)}, {"covers", std::move(covers)}};
}

std::string format_set(SubsetMask s, const Labeling& labels) {
  std::string out = "{";
  bool first = true;
  for (int i : s) {
    if (!first) out += ',';
    out += labels.names.at(i);
    first = false;
  }
  return out + "}";
}

std::string format_orn(const Ornamentation& rho, const Labeling& labels) {
  std::string out = "[";
  for (int i = 0; i < rho.size(); ++i) {
    if (i) out += ',';
    out += format_set(rho[i], labels);
  }
  return out + "]";
}

Ornamentation parse_orn(const PointedBuildingSet& b, std::string_view text,
                        const Labeling& labels) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  std::size_t p = 0;
  auto expect = [&](char c) {
    if (p >= s.size() || s[p] != c)
      throw ParseError(std::string("expected '") + c + "' at offset " + std::to_string(p));
    ++p;
  };
  std::vector<SubsetMask> values;
  expect('[');
  while (p < s.size() && s[p] != ']') {
    if (!values.empty()) expect(',');
    expect('{');
    SubsetMask set;
    while (p < s.size() && s[p] != '}') {
      if (s[p] == ',') ++p;
      std::size_t end = s.find_first_of(",}", p);
      if (end == std::string::npos) throw ParseError("unterminated set");
      set = set.with(labels.index_of(std::string_view(s).substr(p, end - p)));
      p = end;
    }
    expect('}');
    values.push_back(set);
  }
  expect(']');
  if (p != s.size()) throw ParseError("trailing text after ornamentation");
  return validate_orn(b, std::move(values));
}

std::string hasse_dot(const OrnLattice& lat, const Labeling& labels) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t k = 0; k < lat.size(); ++k)
    out << "  " << k << " [label=\"" << format_orn(lat.element(k), labels) << "\"];\n";
  for (const Cover& c : lat.covers()) out << "  " << c.lo << " -> " << c.hi << ";\n";
  out << "}\n";
  return out.str();
}

std::string format_arcs(const ArcTorsionClass& d) {
  if (d.arcs.empty()) return "{}";
  std::string out;
  for (auto [i, j] : d.arcs) {
    if (!out.empty()) out += ' ';
    out += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  return out;
}

std::string format_table(const OperationTable& t) {
  std::string out;
  for (const auto& row : t) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(row[j] + 1);
    }
    out += '\n';
  }
  return out;
}

}  // namespace ornalat
