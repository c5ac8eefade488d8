#pragma once

// Text and JSON forms.
//
//   text:  3*s[2,1] - s[1,1,1]          (zero prints as "0")
//   JSON:  {"terms":[{"partition":[2,1],"coeff":"3"}, ...]}
//
// Terms are always emitted in GradedOrder, so output is byte-stable.

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "charhopf/tensor.hpp"

namespace charhopf {

/// JSON value type; keys keep insertion order so output matches the schema.
using Json = nlohmann::ordered_json;

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void append_term(std::string& out, bool first, const Integer& c, const std::string& body) {
  const bool neg = c < 0;
  const Integer mag = neg ? Integer(-c) : c;
  if (first)
    out += neg ? "-" : "";
  else
    out += neg ? " - " : " + ";
  if (mag != 1) out += mag.str() + "*";
  out += body;
}

inline std::string atom(const Partition& p, Orientation o) {
  return (o == Orientation::dual ? "s*" : "s") + to_string(p);
}

}  // namespace detail

inline std::string to_string(const SymFunc& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : f.terms()) {
    detail::append_term(out, first, c, detail::atom(p, Orientation::primal));
    first = false;
  }
  return out;
}

inline std::string to_string(const TensorSF& t) {
  if (t.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : t.terms()) {
    std::string body;
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i) body += " (x) ";
      body += detail::atom(key[i], t.orientation(i));
    }
    detail::append_term(out, first, c, body);
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON

inline Json to_json(const Partition& p) { return Json(p.parts()); }

inline Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw parse_error("partition JSON must be an array");
  std::vector<int> parts;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw parse_error("partition parts must be integers");
    parts.push_back(x.get<int>());
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what());
  }
}

inline Json to_json(const SymFunc& f) {
  Json terms = Json::array();
  for (const auto& [p, c] : f.terms()) terms.push_back({{"partition", to_json(p)}, {"coeff", c.str()}});
  return {{"terms", terms}};
}

inline Integer integer_from_string(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw parse_error("empty integer");
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw parse_error("bad integer: " + s);
  Integer v(s.substr(i));
  return s[0] == '-' ? Integer(-v) : v;
}

inline SymFunc symfunc_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw parse_error("SymFunc JSON must be an object with a \"terms\" array");
  SymFunc f;
  for (const auto& t : j["terms"]) {
    if (!t.contains("partition") || !t.contains("coeff") || !t["coeff"].is_string())
      throw parse_error("SymFunc term needs \"partition\" and string \"coeff\"");
    f.add(partition_from_json(t["partition"]), integer_from_string(t["coeff"].get<std::string>()));
  }
  return f;
}

inline Json to_json(const TensorSF& t) {
  Json orient = Json::array();
  for (auto o : t.orientation()) orient.push_back(to_string(o));
  Json terms = Json::array();
  for (const auto& [key, c] : t.terms()) {
    Json slots = Json::array();
    for (const auto& p : key) slots.push_back(to_json(p));
    terms.push_back({{"slots", slots}, {"coeff", c.str()}});
  }
  return {{"rank", t.rank()}, {"orientation", orient}, {"terms", terms}};
}

inline TensorSF tensor_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("orientation") || !j.contains("terms"))
    throw parse_error("TensorSF JSON needs \"orientation\" and \"terms\"");
  std::vector<Orientation> orient;
  for (const auto& o : j["orientation"]) {
    const auto name = o.get<std::string>();
    if (name == "primal")
      orient.push_back(Orientation::primal);
    else if (name == "dual")
      orient.push_back(Orientation::dual);
    else
      throw parse_error("unknown orientation: " + name);
  }
  if (orient.empty()) throw parse_error("TensorSF needs at least one slot");
  TensorSF t(orient);
  for (const auto& term : j["terms"]) {
    SlotKey key;
    for (const auto& p : term.at("slots")) key.push_back(partition_from_json(p));
    if (key.size() != orient.size()) throw parse_error("TensorSF term has the wrong number of slots");
    t.add(key, integer_from_string(term.at("coeff").get<std::string>()));
  }
  return t;
}

// ---------------------------------------------------------------------------
// Parsers

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool done() {
    skip_ws();
    return i_ == s_.size();
  }
  char peek() {
    skip_ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  std::string digits() {
    skip_ws();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected a number");
    return std::string(s_.substr(start, i_ - start));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error(what + " at position " + std::to_string(i_) + " in \"" + std::string(s_) + "\"");
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

inline Partition parse_bracketed(Cursor& cur) {
  cur.expect('[');
  std::vector<int> parts;
  if (!cur.eat(']')) {
    do {
      parts.push_back(std::stoi(cur.digits()));
    } while (cur.eat(','));
    cur.expect(']');
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    cur.fail(e.what());
  }
}

}  // namespace detail

/// Accepts "[2,1]", "2,1", "2" and "[]".
inline Partition parse_partition(std::string_view text) {
  detail::Cursor cur(text);
  if (cur.peek() == '[') {
    auto p = detail::parse_bracketed(cur);
    if (!cur.done()) cur.fail("trailing characters");
    return p;
  }
  std::vector<int> parts;
  if (!cur.done()) {
    do {
      parts.push_back(std::stoi(cur.digits()));
    } while (cur.eat(','));
  }
  if (!cur.done()) cur.fail("trailing characters");
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    cur.fail(e.what());
  }
}

/// Parses sums of integer multiples of Schur atoms, e.g. "s[2,1] + 2*s[1]"
/// or "3 - s[1,1]". The only operators are + and −.
inline SymFunc parse_symfunc(std::string_view text) {
  detail::Cursor cur(text);
  SymFunc f;
  if (cur.done()) cur.fail("empty expression");
  bool first = true;
  while (!cur.done()) {
    Integer sign = 1;
    if (cur.eat('-'))
      sign = -1;
    else if (!cur.eat('+') && !first)
      cur.fail("expected '+' or '-'");
    first = false;
    Integer coeff = 1;
    bool have_number = false;
    if (cur.at_digit()) {
      coeff = Integer(cur.digits());
      have_number = true;
      if (!cur.eat('*')) {
        f.add(Partition{}, sign * coeff);
        continue;
      }
    }
    if (!cur.eat('s')) cur.fail(have_number ? "expected 's[...]' after '*'" : "expected a term");
    f.add(detail::parse_bracketed(cur), sign * coeff);
  }
  return f;
}

}  // namespace charhopf
