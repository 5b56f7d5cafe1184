#pragma once

// Presentation files, deterministic JSON emission, and CSV output.
//
// A presentation document is a JSON object with keys "vertices" (list of
// strings), "arrows" (list of {label, source, target, degree} records;
// degree defaults to 0) and "relations" (list of [later, earlier] label
// pairs).  The canonical form fixes key order, keeps arrows in declaration
// order, sorts relations, and always writes the degree.  All numbers are
// arbitrary-precision decimal integers.

#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stratakit/matrix.hpp"
#include "stratakit/quiver.hpp"

namespace stratakit {

// Minimal JSON tree with ordered object keys and big-integer leaves; the
// vendored parser cannot carry integers beyond 64 bits, so documents are
// emitted through this writer instead.
struct Json {
  enum class Kind { Boolean, Integer, String, Array, Object };
  Kind kind = Kind::Object;
  bool b = false;
  Int i = 0;
  std::string s;
  std::vector<Json> items;
  std::vector<std::pair<std::string, Json>> fields;

  static Json object() { return Json{}; }
  static Json array() {
    Json j;
    j.kind = Kind::Array;
    return j;
  }
  static Json boolean(bool v) {
    Json j;
    j.kind = Kind::Boolean;
    j.b = v;
    return j;
  }
  static Json integer(Int v) {
    Json j;
    j.kind = Kind::Integer;
    j.i = std::move(v);
    return j;
  }
  static Json text(std::string v) {
    Json j;
    j.kind = Kind::String;
    j.s = std::move(v);
    return j;
  }

  Json& add(const std::string& key, Json v) {
    fields.emplace_back(key, std::move(v));
    return *this;
  }
  Json& push(Json v) {
    items.push_back(std::move(v));
    return *this;
  }

  std::string dump() const {
    std::ostringstream out;
    write_(out, 0);
    return out.str();
  }

 private:
  static void write_string_(std::ostringstream& out, const std::string& v) {
    out << '"';
    for (unsigned char c : v) {
      switch (c) {
        case '"': out << "\\\""; break;
        case '\\': out << "\\\\"; break;
        case '\n': out << "\\n"; break;
        case '\t': out << "\\t"; break;
        case '\r': out << "\\r"; break;
        default:
          if (c < 0x20) {
            static const char* hex = "0123456789abcdef";
            out << "\\u00" << hex[c >> 4] << hex[c & 15];
          } else {
            out << static_cast<char>(c);
          }
      }
    }
    out << '"';
  }

  // arrays of scalars print inline; arrays of composites one per line
  bool inline_ok_() const {
    if (kind != Kind::Array) return kind != Kind::Object;
    for (const auto& it : items)
      if (it.kind == Kind::Array || it.kind == Kind::Object) return false;
    return true;
  }

  void write_(std::ostringstream& out, int depth) const {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    const std::string pad_in(static_cast<std::size_t>(depth + 1) * 2, ' ');
    switch (kind) {
      case Kind::Boolean:
        out << (b ? "true" : "false");
        return;
      case Kind::Integer:
        out << i;
        return;
      case Kind::String:
        write_string_(out, s);
        return;
      case Kind::Array:
        if (items.empty()) {
          out << "[]";
          return;
        }
        if (inline_ok_()) {
          out << '[';
          for (std::size_t k = 0; k < items.size(); ++k) {
            if (k) out << ", ";
            items[k].write_(out, depth);
          }
          out << ']';
          return;
        }
        out << "[\n";
        for (std::size_t k = 0; k < items.size(); ++k) {
          out << pad_in;
          items[k].write_(out, depth + 1);
          if (k + 1 < items.size()) out << ',';
          out << '\n';
        }
        out << pad << ']';
        return;
      case Kind::Object:
        if (fields.empty()) {
          out << "{}";
          return;
        }
        out << "{\n";
        for (std::size_t k = 0; k < fields.size(); ++k) {
          out << pad_in;
          write_string_(out, fields[k].first);
          out << ": ";
          fields[k].second.write_(out, depth + 1);
          if (k + 1 < fields.size()) out << ',';
          out << '\n';
        }
        out << pad << '}';
        return;
    }
  }
};

// ---------------------------------------------------------------------------
// Presentation documents.

inline Json presentation_json(const QuiverPresentation& pres) {
  Json doc = Json::object();
  Json verts = Json::array();
  for (const auto& v : pres.vertices) verts.push(Json::text(v));
  doc.add("vertices", std::move(verts));
  Json arrows = Json::array();
  for (const auto& a : pres.arrows) {
    Json rec = Json::object();
    rec.add("label", Json::text(a.label));
    rec.add("source", Json::text(a.source));
    rec.add("target", Json::text(a.target));
    rec.add("degree", Json::integer(a.degree));
    arrows.push(std::move(rec));
  }
  doc.add("arrows", std::move(arrows));
  Json rels = Json::array();
  for (const auto& [later, earlier] : pres.relations) {
    Json pair = Json::array();
    pair.push(Json::text(later));
    pair.push(Json::text(earlier));
    rels.push(std::move(pair));
  }
  doc.add("relations", std::move(rels));
  return doc;
}

// canonical textual form; the input must already be validated
inline std::string serialize_presentation(const QuiverPresentation& pres) {
  return presentation_json(pres).dump() + "\n";
}

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& what) {
  throw AlgebraError(ErrorCode::ParseError, what);
}

inline std::string want_string(const nlohmann::json& j,
                              const std::string& where) {
  if (!j.is_string()) parse_fail(where + " must be a string");
  return j.get<std::string>();
}

}  // namespace detail

// Parse and validate a presentation document.  Malformed documents raise
// ParseError; structurally invalid presentations raise the corresponding
// validation error.
inline QuiverPresentation parse_presentation(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) detail::parse_fail("invalid JSON");
  if (!j.is_object()) detail::parse_fail("top level must be an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "vertices" && key != "arrows" && key != "relations")
      detail::parse_fail("unknown top-level key \"" + key + "\"");
  }
  if (!j.contains("vertices") || !j["vertices"].is_array())
    detail::parse_fail("\"vertices\" must be a list of strings");
  if (!j.contains("arrows") || !j["arrows"].is_array())
    detail::parse_fail("\"arrows\" must be a list of records");
  if (!j.contains("relations") || !j["relations"].is_array())
    detail::parse_fail("\"relations\" must be a list of label pairs");

  QuiverPresentation pres;
  for (const auto& v : j["vertices"])
    pres.vertices.push_back(detail::want_string(v, "vertex"));
  for (const auto& rec : j["arrows"]) {
    if (!rec.is_object()) detail::parse_fail("arrow record must be an object");
    for (const auto& [key, value] : rec.items()) {
      (void)value;
      if (key != "label" && key != "source" && key != "target" &&
          key != "degree")
        detail::parse_fail("unknown arrow key \"" + key + "\"");
    }
    Arrow a;
    if (!rec.contains("label") || !rec.contains("source") ||
        !rec.contains("target"))
      detail::parse_fail("arrow record needs label, source and target");
    a.label = detail::want_string(rec["label"], "arrow label");
    a.source = detail::want_string(rec["source"], "arrow source");
    a.target = detail::want_string(rec["target"], "arrow target");
    if (rec.contains("degree")) {
      const auto& d = rec["degree"];
      if (!d.is_number_integer())
        detail::parse_fail("arrow degree must be an integer");
      auto wide = d.get<std::int64_t>();
      if (wide < std::numeric_limits<int>::min() ||
          wide > std::numeric_limits<int>::max())
        detail::parse_fail("arrow degree out of range");
      a.degree = static_cast<int>(wide);
    }
    pres.arrows.push_back(std::move(a));
  }
  for (const auto& rel : j["relations"]) {
    if (!rel.is_array() || rel.size() != 2)
      detail::parse_fail("relation must be a [later, earlier] pair");
    pres.relations.emplace_back(detail::want_string(rel[0], "relation label"),
                                detail::want_string(rel[1],
                                                    "relation label"));
  }
  return validate(pres);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

// ---------------------------------------------------------------------------
// CSV: comma separation, header row, quotes only when a field needs them.

inline std::string csv_field(const std::string& v) {
  bool needs = v.find_first_of(",\"\n\r") != std::string::npos;
  if (!needs) return v;
  std::string out = "\"";
  for (char c : v) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

class CsvWriter {
 public:
  void row(const std::vector<std::string>& fields) {
    for (std::size_t k = 0; k < fields.size(); ++k) {
      if (k) out_ << ',';
      out_ << csv_field(fields[k]);
    }
    out_ << '\n';
  }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

}  // namespace stratakit
