// Copyright 2026 The symclone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "symclone/jsonio.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace symclone {

namespace {

std::string format_double(double v) {
  if (!std::isfinite(v)) throw ParseError("non-finite value cannot be written as JSON");
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void dump_value(const nlohmann::ordered_json& j, std::string& out, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent) * (depth + 1), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent) * depth, ' ');
  switch (j.type()) {
    case nlohmann::ordered_json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        out += nlohmann::ordered_json(it.key()).dump();
        out += ": ";
        dump_value(it.value(), out, indent, depth + 1);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case nlohmann::ordered_json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& item : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        dump_value(item, out, indent, depth + 1);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case nlohmann::ordered_json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string dump_json17(const nlohmann::ordered_json& value, int indent) {
  std::string out;
  dump_value(value, out, indent, 0);
  out += "\n";
  return out;
}

nlohmann::ordered_json state_to_json(const SymDensity& rho) {
  SymBasis basis(rho.d(), rho.M());
  nlohmann::ordered_json j;
  j["d"] = rho.d();
  j["M"] = rho.M();
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (std::int64_t r = 0; r < basis.size(); ++r) {
    for (std::int64_t c = r; c < basis.size(); ++c) {
      std::complex<double> v = rho.matrix()(r, c);
      if (v == std::complex<double>(0.0)) continue;
      nlohmann::ordered_json e;
      e["m"] = basis.at(r).counts;
      e["mp"] = basis.at(c).counts;
      e["re"] = v.real();
      e["im"] = v.imag();
      entries.push_back(std::move(e));
    }
  }
  j["entries"] = std::move(entries);
  return j;
}

namespace {

Occupation occupation_from_json(const nlohmann::json& arr, int d, int M, const char* field) {
  if (!arr.is_array()) throw ParseError(std::string("state entry field '") + field + "' must be an array");
  Occupation m;
  for (const auto& item : arr) {
    if (!item.is_number_integer()) {
      throw ParseError(std::string("state entry field '") + field + "' must hold integers");
    }
    m.counts.push_back(item.get<int>());
  }
  if (m.levels() != d) {
    throw ParseError(std::string("state entry field '") + field + "' has wrong length");
  }
  for (int c : m.counts) {
    if (c < 0) throw ParseError(std::string("negative count in state entry field '") + field + "'");
  }
  if (m.total() != M) {
    throw ParseError(std::string("state entry field '") + field + "' does not total M");
  }
  return m;
}

}  // namespace

SymDensity state_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("state JSON must be an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "d" && key != "M" && key != "entries") {
      throw ParseError("unknown field '" + key + "' in state JSON");
    }
  }
  if (!j.contains("d") || !j.contains("M") || !j.contains("entries")) {
    throw ParseError("state JSON needs fields d, M, entries");
  }
  if (!j["d"].is_number_integer() || !j["M"].is_number_integer()) {
    throw ParseError("state fields d and M must be integers");
  }
  const int d = j["d"].get<int>();
  const int M = j["M"].get<int>();
  if (d < 1 || M < 0) throw ParseError("state requires d >= 1 and M >= 0");
  if (!j["entries"].is_array()) throw ParseError("state field 'entries' must be an array");

  SymDensity rho(d, M);
  SymBasis basis(d, M);
  for (const auto& e : j["entries"]) {
    if (!e.is_object()) throw ParseError("state entries must be objects");
    for (const auto& [key, value] : e.items()) {
      (void)value;
      if (key != "m" && key != "mp" && key != "re" && key != "im") {
        throw ParseError("unknown field '" + key + "' in state entry");
      }
    }
    if (!e.contains("m") || !e.contains("mp") || !e.contains("re") || !e.contains("im")) {
      throw ParseError("state entries need fields m, mp, re, im");
    }
    if (!e["re"].is_number() || !e["im"].is_number()) {
      throw ParseError("state entry fields re and im must be numbers");
    }
    Occupation m = occupation_from_json(e["m"], d, M, "m");
    Occupation mp = occupation_from_json(e["mp"], d, M, "mp");
    std::int64_t r = basis.rank_of(m);
    std::int64_t c = basis.rank_of(mp);
    std::complex<double> v(e["re"].get<double>(), e["im"].get<double>());
    rho.matrix()(r, c) = v;
    if (r != c) rho.matrix()(c, r) = std::conj(v);
  }
  return rho;
}

SymDensity parse_state_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return state_from_json(j);
}

SymDensity read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open state file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_state_text(buffer.str());
}

std::string state_to_csv(const SymDensity& rho) {
  SymBasis basis(rho.d(), rho.M());
  std::string out = "m,mp,re,im\n";
  auto quote = [](const Occupation& m) {
    std::string s = "\"";
    for (int i = 0; i < m.levels(); ++i) {
      if (i) s += ' ';
      s += std::to_string(m.counts[static_cast<std::size_t>(i)]);
    }
    return s + "\"";
  };
  for (std::int64_t r = 0; r < basis.size(); ++r) {
    for (std::int64_t c = r; c < basis.size(); ++c) {
      std::complex<double> v = rho.matrix()(r, c);
      if (v == std::complex<double>(0.0)) continue;
      out += quote(basis.at(r)) + "," + quote(basis.at(c)) + "," + format_double(v.real()) +
             "," + format_double(v.imag()) + "\n";
    }
  }
  return out;
}

std::vector<std::complex<double>> parse_complex_list(const std::string& text) {
  std::vector<std::complex<double>> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::string token = text.substr(pos, end - pos);
    if (token.empty()) throw ParseError("empty component in amplitude list");

    const char* s = token.c_str();
    char* cursor = nullptr;
    double first = std::strtod(s, &cursor);
    if (cursor == s) throw ParseError("bad amplitude component '" + token + "'");
    double re = 0.0, im = 0.0;
    if (*cursor == 'i' && *(cursor + 1) == '\0') {
      im = first;
    } else if (*cursor == '\0') {
      re = first;
    } else if (*cursor == '+' || *cursor == '-') {
      re = first;
      const char* s2 = cursor;
      double second = std::strtod(s2, &cursor);
      if (cursor == s2 || *cursor != 'i' || *(cursor + 1) != '\0') {
        throw ParseError("bad amplitude component '" + token + "'");
      }
      im = second;
    } else {
      throw ParseError("bad amplitude component '" + token + "'");
    }
    values.emplace_back(re, im);
    pos = end + 1;
    if (end == text.size()) break;
  }
  if (values.empty()) throw ParseError("empty amplitude list");
  return values;
}

}  // namespace symclone
