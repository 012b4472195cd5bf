#include "divide_forge/document.hpp"

#include "json.hpp"

#include "divide_forge/error.hpp"

namespace dforge {

namespace {

using nlohmann::json;

[[noreturn]] void schema(const std::string& what) { throw Error(Errc::SchemaError, what); }

int read_count(const json& j, const char* key) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0 || j.get<std::int64_t>() > 1 << 20) {
    schema(std::string("\"") + key + "\" must be a non-negative integer");
  }
  return j.get<int>();
}

ExpectedInvariants read_expected(const json& j) {
  if (!j.is_object()) schema("\"metadata.expected\" must be an object");
  ExpectedInvariants e;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number_integer()) schema("expected \"" + key + "\" must be an integer");
    const int x = value.get<int>();
    if (key == "g") e.g = x;
    else if (key == "c") e.c = x;
    else if (key == "v") e.v = x;
    else if (key == "k") e.k = x;
    else if (key == "h") e.h = x;
    else schema("unknown expected invariant \"" + key + "\"");
  }
  return e;
}

DocumentMetadata read_metadata(const json& j) {
  if (!j.is_object()) schema("\"metadata\" must be an object");
  DocumentMetadata m;
  for (const auto& [key, value] : j.items()) {
    if (key == "name") {
      if (!value.is_string()) schema("\"metadata.name\" must be a string");
      m.name = value.get<std::string>();
    } else if (key == "expected") {
      m.expected = read_expected(value);
    } else {
      schema("unknown metadata key \"" + key + "\"");
    }
  }
  return m;
}

void check_expected(const Divide& d, const ExpectedInvariants& e) {
  if (e.empty()) return;
  const ExpectedInvariants t = traced_invariants(d);
  auto check = [](const char* name, const std::optional<int>& want,
                  const std::optional<int>& got) {
    if (!want) return;
    if (!got) {
      throw Error(Errc::InvariantMismatch,
                  std::string(name) + " is undefined for this divide, expected " +
                      std::to_string(*want));
    }
    if (*want != *got) {
      throw Error(Errc::InvariantMismatch, std::string(name) + " = " + std::to_string(*got) +
                                               ", expected " + std::to_string(*want));
    }
  };
  check("g", e.g, t.g);
  check("c", e.c, t.c);
  check("v", e.v, t.v);
  check("k", e.k, t.k);
  check("h", e.h, t.h);
}

void write_expected(std::string& out, const ExpectedInvariants& e) {
  // Keys in sorted order: c, g, h, k, v.
  std::string body;
  auto add = [&body](const char* key, const std::optional<int>& x) {
    if (!x) return;
    if (!body.empty()) body += ", ";
    body += std::string("\"") + key + "\": " + std::to_string(*x);
  };
  add("c", e.c);
  add("g", e.g);
  add("h", e.h);
  add("k", e.k);
  add("v", e.v);
  out += "{" + body + "}";
}

}  // namespace

ExpectedInvariants traced_invariants(const Divide& divide) {
  ExpectedInvariants t;
  t.c = static_cast<int>(divide.circle_count());
  t.v = static_cast<int>(divide.double_points());
  t.k = 2 * *t.c;
  t.h = 1 + *t.v - *t.c;
  if (divide.connected()) t.g = divide.ambient_genus();
  return t;
}

DivideDocument parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(Errc::SyntaxError,
                "invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!j.is_object()) schema("document must be a JSON object");

  std::optional<std::vector<std::vector<Dart>>> rotations;
  std::uint32_t free_loops = 0;
  bool have_version = false;
  DocumentMetadata metadata;
  for (const auto& [key, value] : j.items()) {
    if (key == "format_version") {
      if (!value.is_string() || value.get<std::string>() != "1") {
        schema("\"format_version\" must be \"1\"");
      }
      have_version = true;
    } else if (key == "vertices") {
      if (!value.is_array()) schema("\"vertices\" must be an array");
      rotations.emplace();
      for (std::size_t i = 0; i < value.size(); ++i) {
        const json& vertex = value[i];
        if (!vertex.is_array() || vertex.size() != 4) {
          schema("vertex " + std::to_string(i) + " must list exactly 4 darts");
        }
        auto& rot = rotations->emplace_back();
        for (const json& dart : vertex) {
          if (!dart.is_number_integer() || dart.get<std::int64_t>() < 0 ||
              dart.get<std::int64_t>() > 0xFFFF) {
            schema("vertex " + std::to_string(i) + " has an invalid dart");
          }
          rot.push_back(dart.get<Dart>());
        }
      }
    } else if (key == "free_loops") {
      free_loops = static_cast<std::uint32_t>(read_count(value, "free_loops"));
    } else if (key == "metadata") {
      metadata = read_metadata(value);
    } else {
      schema("unknown key \"" + key + "\"");
    }
  }
  if (!have_version) schema("missing \"format_version\"");
  if (!rotations) schema("missing \"vertices\"");

  HalfEdgeMap map;
  try {
    map = HalfEdgeMap::build_xor_paired(*rotations);
  } catch (const Error& e) {
    schema(std::string("bad rotation system: ") + e.what());
  }
  DivideDocument doc{Divide(std::move(map), free_loops), std::move(metadata)};
  check_expected(doc.divide, doc.metadata.expected);
  return doc;
}

Divide parse_divide(std::string_view text) { return parse_document(text).divide; }

Divide xor_paired(const Divide& divide) {
  const HalfEdgeMap& m = divide.map();
  if (m.is_xor_paired()) return divide;
  std::vector<Dart> label(m.dart_count());
  Dart next = 0;
  for (Dart d = 0; d < m.dart_count(); ++d) {
    if (d < m.pair(d)) {
      label[d] = next++;
      label[m.pair(d)] = next++;
    }
  }
  return Divide(m.relabeled(label), divide.free_loops());
}

std::string emit_document(const DivideDocument& doc) {
  const Divide d = xor_paired(doc.divide);
  std::string out = "{\n  \"format_version\": \"1\",\n";
  out += "  \"free_loops\": " + std::to_string(d.free_loops()) + ",\n";
  const auto& md = doc.metadata;
  if (md.name || !md.expected.empty()) {
    out += "  \"metadata\": {";
    bool first = true;
    if (!md.expected.empty()) {
      out += "\"expected\": ";
      write_expected(out, md.expected);
      first = false;
    }
    if (md.name) {
      if (!first) out += ", ";
      out += "\"name\": " + json(*md.name).dump();
    }
    out += "},\n";
  }
  out += "  \"vertices\": [";
  const auto rotations = d.map().rotations();
  for (std::size_t i = 0; i < rotations.size(); ++i) {
    out += i == 0 ? "\n    [" : ",\n    [";
    for (std::size_t j = 0; j < rotations[i].size(); ++j) {
      if (j > 0) out += ", ";
      out += std::to_string(rotations[i][j]);
    }
    out += "]";
  }
  out += rotations.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

std::string emit_divide(const Divide& divide, const DocumentMetadata& metadata) {
  return emit_document(DivideDocument{divide, metadata});
}

}  // namespace dforge
