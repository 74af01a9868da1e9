#include "coquartic/harness/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "coquartic/error.hpp"

namespace coq {

namespace {

constexpr const char* kAxisNames[3] = {"i", "j", "k"};

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

// what() without the leading "<code>: ".
std::string message(const Error& e) {
  const std::string w = e.what();
  const std::size_t cut = w.find(": ");
  return cut == std::string::npos ? w : w.substr(cut + 2);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Rational entry(const Json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const Error& e) {
      fail(where + ": " + message(e));
    }
  }
  if (v.is_number_integer()) return Rational(v.get<long>());
  fail(where + ": expected a rational string");
}

void require_length(const Json& v, int axis, const std::string& where) {
  if (!v.is_array()) fail(where + ": axis " + kAxisNames[axis] + " is not an array");
  if (v.size() != 4)
    fail(where + ": axis " + kAxisNames[axis] + " has " + std::to_string(v.size()) + " entries, expected 4");
}

Vector4<Rational> coords(const Json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 4) fail(where + ": a point needs 4 coordinates");
  Vector4<Rational> x;
  for (int i = 0; i < 4; ++i) x[i] = entry(v[i], where + "[" + std::to_string(i) + "]");
  return x;
}

}  // namespace

Json tritensor_to_json(const Tritensor& t) {
  Json m = Json::array();
  for (int i = 0; i < 4; ++i) {
    Json plane = Json::array();
    for (int j = 0; j < 4; ++j) {
      Json row = Json::array();
      for (int k = 0; k < 4; ++k) row.push_back(format_rational(t(i, j, k)));
      plane.push_back(row);
    }
    m.push_back(plane);
  }
  return Json{{"m", m}};
}

Tritensor tritensor_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("m")) fail("tritensor: missing field \"m\"");
  const Json& m = j["m"];
  require_length(m, 0, "m");
  Tritensor t;
  for (int i = 0; i < 4; ++i) {
    const std::string wi = "m[" + std::to_string(i) + "]";
    require_length(m[i], 1, wi);
    for (int jj = 0; jj < 4; ++jj) {
      const std::string wj = wi + "[" + std::to_string(jj) + "]";
      require_length(m[i][jj], 2, wj);
      for (int k = 0; k < 4; ++k) t(i, jj, k) = entry(m[i][jj][k], wj + "[" + std::to_string(k) + "]");
    }
  }
  return t;
}

Tritensor parse_tritensor(const std::string& path) {
  const Json j = read_json(path);
  try {
    return tritensor_from_json(j);
  } catch (const Error& e) {
    fail(path + ": " + message(e));
  }
}

void emit_tritensor(const Tritensor& t, const std::string& path) { write_json(tritensor_to_json(t), path); }

std::vector<RationalPoint> parse_points(const std::string& path) {
  const Json j = read_json(path);
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array()) fail(path + ": missing array \"points\"");
  std::vector<RationalPoint> out;
  for (std::size_t n = 0; n < j["points"].size(); ++n) {
    const std::string where = path + ": points[" + std::to_string(n) + "]";
    Vector4<Rational> x = coords(j["points"][n], where);
    try {
      out.emplace_back(x);
    } catch (const Error&) {
      fail(where + ": zero vector");
    }
  }
  return out;
}

Json points_to_json(const std::vector<RationalPoint>& points) {
  Json arr = Json::array();
  for (const RationalPoint& p : points) {
    Json c = Json::array();
    for (int i = 0; i < 4; ++i) c.push_back(format_rational(p[i]));
    arr.push_back(c);
  }
  return Json{{"points", arr}};
}

MultiPoly parse_poly_file(const std::string& path) {
  std::string text = slurp(path);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.pop_back();
  try {
    return parse_poly(text);
  } catch (const Error& e) {
    fail(path + ": " + message(e));
  }
}

Json read_json(const std::string& path) {
  const std::string text = slurp(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // locate the byte offset as line:column
    std::size_t line = 1, col = 1;
    for (std::size_t n = 0; n < e.byte && n < text.size(); ++n) {
      if (text[n] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail(path + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

void write_json(const Json& j, const std::string& path) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::PreconditionFailed, path + ": cannot write");
  out << text;
}

}  // namespace coq
