#include "commprob/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace commprob {

using Json = nlohmann::ordered_json;

std::string spectrum_to_json(const std::vector<SpectrumEntry>& entries) {
  Json arr = Json::array();
  for (const SpectrumEntry& e : entries) {
    Json obj;
    obj["value"] = rational_str(e.value);
    obj["witness"] = e.witness;
    obj["order"] = e.order;
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

namespace {

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("invalid JSON: ") + ex.what());
  }
}

}  // namespace

std::vector<SpectrumEntry> spectrum_from_json(const std::string& text) {
  const Json doc = parse_json(text);
  if (!doc.is_array()) throw std::invalid_argument("snapshot must be a JSON array");
  std::vector<SpectrumEntry> out;
  out.reserve(doc.size());
  for (const Json& item : doc) {
    SpectrumEntry e;
    if (item.is_string()) {
      e.value = parse_rational(item.get<std::string>());
      e.order = 0;
    } else if (item.is_object()) {
      if (!item.contains("value") || !item["value"].is_string())
        throw std::invalid_argument("snapshot entry needs a string \"value\"");
      e.value = parse_rational(item["value"].get<std::string>());
      if (item.contains("witness")) e.witness = item["witness"].get<std::string>();
      if (item.contains("order")) e.order = item["order"].get<int>();
    } else {
      throw std::invalid_argument("snapshot entries must be strings or objects");
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::string spectrum_to_csv(const std::vector<SpectrumEntry>& entries) {
  std::ostringstream os;
  os << "value,witness,order\n";
  for (const SpectrumEntry& e : entries) {
    os << csv_escape(rational_str(e.value)) << ',' << csv_escape(e.witness) << ',' << e.order
       << '\n';
  }
  return os.str();
}

std::string rationals_to_json(const std::vector<Rational>& values) {
  Json arr = Json::array();
  for (const Rational& v : values) arr.push_back(rational_str(v));
  return arr.dump(2) + "\n";
}

std::vector<Rational> rationals_from_json(const std::string& text) {
  std::vector<Rational> out;
  for (const SpectrumEntry& e : spectrum_from_json(text)) out.push_back(e.value);
  return out;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace commprob
