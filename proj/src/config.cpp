#include "powerag/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "powerag/error.hpp"

namespace powerag {

namespace {

int require_int(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw Error(std::string("config: missing integer key '") + key + "'");
  return j[key].get<int>();
}

}  // namespace

std::shared_ptr<const CodeSpec> code_from_config(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw Error("config: top level must be an object");
  if (!j.contains("curve") || !j["curve"].is_string())
    throw Error("config: missing string key 'curve'");
  const std::string curve = j["curve"].get<std::string>();

  std::shared_ptr<const Backend> backend;
  if (curve == "rational") {
    if (!j.contains("field") || !j["field"].is_object())
      throw Error("config: rational curve needs a 'field' object");
    int p = require_int(j["field"], "p");
    int m = require_int(j["field"], "m");
    backend = Backend::make_rational(Field::make(p, m));
  } else if (curve == "hermitian") {
    int q = require_int(j, "q");
    backend = Backend::make_hermitian(q);
    if (j.contains("field")) {
      int p = require_int(j["field"], "p");
      int m = require_int(j["field"], "m");
      if (backend->field().p() != p || backend->field().m() != m)
        throw Error("config: 'field' disagrees with GF(q^2) for the hermitian curve");
    }
  } else {
    throw Error("config: unknown curve '" + curve + "'");
  }

  int gamma = require_int(j, "gamma");
  PlaceSelection sel = PlaceSelection::all();
  if (j.contains("n")) sel = PlaceSelection::first_n(require_int(j, "n"));
  return code_make(backend, sel, gamma);
}

std::shared_ptr<const CodeSpec> code_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("config: cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return code_from_config(buf.str());
}

std::vector<std::uint16_t> parse_symbols(const std::string& text, const Field& field) {
  std::vector<std::uint16_t> out;
  std::string token;
  auto flush = [&]() {
    if (token.empty()) return;
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(token, &pos);
    } catch (const std::exception&) {
      throw Error("config: bad element '" + token + "'");
    }
    if (pos != token.size() || v < 0 || v >= static_cast<int>(field.size()))
      throw Error("config: bad element '" + token + "'");
    out.push_back(static_cast<std::uint16_t>(v));
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
      flush();
    else
      token.push_back(c);
  }
  flush();
  return out;
}

std::string format_symbols(std::span<const std::uint16_t> symbols) {
  std::string out;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(symbols[i]);
  }
  return out;
}

}  // namespace powerag
