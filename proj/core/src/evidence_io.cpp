#include "gds/evidence_io.hpp"

#include <fstream>
#include <istream>
#include <set>
#include <utility>

#include <json.hpp>

namespace gds {

namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> split_labels(const std::string& key) {
  std::vector<std::string> out;
  if (key.empty()) {
    return out;
  }
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = key.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(key.substr(start));
      break;
    }
    out.push_back(key.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

double number_field(const json& obj, const char* field, const std::string& ctx) {
  if (!obj.contains(field) || !obj[field].is_number()) {
    throw ParseError(ctx + ": expected numeric field '" + field + "'");
  }
  return obj[field].get<double>();
}

Complex parse_mass(const json& value, const std::string& ctx) {
  if (!value.is_object()) {
    throw ParseError(ctx + ": mass must be an object with 'rect' or 'polar'");
  }
  const bool has_rect = value.contains("rect");
  const bool has_polar = value.contains("polar");
  if (has_rect == has_polar) {
    throw ParseError(ctx + ": mass needs exactly one of 'rect' or 'polar'");
  }
  if (has_rect) {
    const json& r = value["rect"];
    if (!r.is_object()) {
      throw ParseError(ctx + ": 'rect' must be an object");
    }
    return {number_field(r, "re", ctx), number_field(r, "im", ctx)};
  }
  const json& p = value["polar"];
  if (!p.is_object()) {
    throw ParseError(ctx + ": 'polar' must be an object");
  }
  return from_polar(Polar(number_field(p, "magnitude", ctx),
                          number_field(p, "phase_radians", ctx)));
}

/// Re-throws a validation error with body context, preserving its type.
[[noreturn]] void rethrow_with_context(const std::string& ctx) {
  try {
    throw;
  } catch (const EmptySetMass& e) {
    throw EmptySetMass(ctx + ": " + e.what());
  } catch (const MagnitudeOutOfRange& e) {
    throw MagnitudeOutOfRange(ctx + ": " + e.what());
  } catch (const NotNormalized& e) {
    throw NotNormalized(ctx + ": " + e.what());
  } catch (const FrameMismatch& e) {
    throw FrameMismatch(ctx + ": " + e.what());
  } catch (const ParseError& e) {
    throw ParseError(ctx + ": " + e.what());
  } catch (const Error& e) {
    throw ParseError(ctx + ": " + e.what());
  }
}

EvidenceBody parse_body(const json& body, const Frame& frame, double tol) {
  if (!body.is_object() || !body.contains("name") || !body["name"].is_string()) {
    throw ParseError("body: expected an object with a string 'name'");
  }
  const std::string name = body["name"].get<std::string>();
  if (name.empty()) {
    throw ParseError("body: name must be non-empty");
  }
  const std::string ctx = "body '" + name + "'";
  try {
    if (!body.contains("masses") || !body["masses"].is_object()) {
      throw ParseError("expected an object field 'masses'");
    }
    std::vector<std::pair<Proposition, Complex>> entries;
    bool real = true;
    for (const auto& [key, value] : body["masses"].items()) {
      const Proposition prop = frame.subset_of(split_labels(key));
      const Complex mass = parse_mass(value, "proposition '" + key + "'");
      real = real && mass.im() == 0.0;
      entries.emplace_back(prop, mass);
    }
    if (real) {
      std::vector<std::pair<Proposition, double>> reals;
      reals.reserve(entries.size());
      for (const auto& [prop, z] : entries) {
        reals.emplace_back(prop, z.re());
      }
      return {name, lift(validate_bba(frame, reals, tol)), true};
    }
    return {name, validate_cbba(frame, entries, tol), false};
  } catch (...) {
    rethrow_with_context(ctx);
  }
}

}  // namespace

EvidenceFile parse_evidence(std::istream& in, double normalization_tol) {
  json root;
  try {
    root = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(std::string("evidence: invalid JSON: ") + e.what());
  }
  if (!root.is_object()) {
    throw ParseError("evidence: top level must be an object");
  }
  if (!root.contains("frame") || !root["frame"].is_array()) {
    throw ParseError("evidence: expected an array field 'frame'");
  }
  std::vector<std::string> labels;
  for (const auto& l : root["frame"]) {
    if (!l.is_string()) {
      throw ParseError("evidence: frame labels must be strings");
    }
    labels.push_back(l.get<std::string>());
  }
  Frame frame = [&] {
    try {
      return Frame(std::move(labels));
    } catch (const Error& e) {
      throw ParseError(std::string("evidence: ") + e.what());
    }
  }();

  if (!root.contains("bodies") || !root["bodies"].is_array() ||
      root["bodies"].empty()) {
    throw ParseError("evidence: expected a non-empty array field 'bodies'");
  }
  EvidenceFile file{std::move(frame), {}};
  std::set<std::string> names;
  for (const auto& body : root["bodies"]) {
    EvidenceBody parsed = parse_body(body, file.frame, normalization_tol);
    if (!names.insert(parsed.name).second) {
      throw ParseError("evidence: duplicate body name '" + parsed.name + "'");
    }
    file.bodies.push_back(std::move(parsed));
  }
  return file;
}

EvidenceFile parse_evidence_file(const std::string& path, double normalization_tol) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("evidence: cannot open '" + path + "'");
  }
  return parse_evidence(in, normalization_tol);
}

std::string serialize_evidence(const EvidenceFile& file) {
  json root;
  root["frame"] = file.frame.labels();
  json bodies = json::array();
  for (const auto& body : file.bodies) {
    json masses = json::object();
    for (const auto& [bits, z] : body.cbba.mass_map()) {
      masses[file.frame.subset(bits).label()] = {
          {"rect", {{"re", z.re()}, {"im", z.im()}}}};
    }
    bodies.push_back({{"name", body.name}, {"masses", std::move(masses)}});
  }
  root["bodies"] = std::move(bodies);
  return root.dump(2) + "\n";
}

}  // namespace gds
