#include "zel/half_exp.hpp"

#include <charconv>
#include <memory>
#include <mutex>
#include <ostream>
#include <unordered_map>

#include "zel/error.hpp"

namespace zel {

std::string HalfExp::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(Errc::ParseError, "not a half-integer: \"" + std::string(whole) + "\"");
  }
  return value;
}

}  // namespace

HalfExp HalfExp::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return integer(parse_int(text, text));
  const std::int64_t num = parse_int(text.substr(0, slash), text);
  const std::int64_t den = parse_int(text.substr(slash + 1), text);
  if (den != 2) {
    throw Error(Errc::ParseError, "denominator must be 2: \"" + std::string(text) + "\"");
  }
  return from_twice(num);
}

std::ostream& operator<<(std::ostream& os, HalfExp h) { return os << h.to_string(); }

namespace {

const std::string* intern(std::string_view name) {
  static std::mutex mutex;
  static std::unordered_map<std::string, std::unique_ptr<const std::string>> table;
  std::lock_guard lock(mutex);
  auto it = table.find(std::string(name));
  if (it == table.end()) {
    it = table.emplace(std::string(name), std::make_unique<const std::string>(name)).first;
  }
  return it->second.get();
}

}  // namespace

Line::Line() {
  static const std::string* const rho = intern("rho");
  name_ = rho;
}

Line::Line(std::string_view name) : name_(intern(name)) {}

CuspidalPoint twist_point(const CuspidalPoint& p, HalfExp z) { return {p.line, p.exp + z}; }

CuspidalPoint hermitian_dual_point(const CuspidalPoint& p) { return {p.line, -p.exp}; }

}  // namespace zel
