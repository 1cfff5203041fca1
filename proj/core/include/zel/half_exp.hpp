#ifndef ZEL_HALF_EXP_HPP
#define ZEL_HALF_EXP_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace zel {

/// An exact element of (1/2)Z, stored as twice its value.
///
/// Every exponent x in a twist nu^x rho handled by this library is a
/// half-integer, so doubling keeps all arithmetic in the integers.
class HalfExp {
 public:
  constexpr HalfExp() = default;

  static constexpr HalfExp from_twice(std::int64_t twice) {
    HalfExp h;
    h.twice_ = twice;
    return h;
  }
  static constexpr HalfExp integer(std::int64_t value) { return from_twice(2 * value); }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  constexpr HalfExp operator-() const { return from_twice(-twice_); }
  constexpr HalfExp& operator+=(HalfExp o) {
    twice_ += o.twice_;
    return *this;
  }
  constexpr HalfExp& operator-=(HalfExp o) {
    twice_ -= o.twice_;
    return *this;
  }
  friend constexpr HalfExp operator+(HalfExp a, HalfExp b) { return a += b; }
  friend constexpr HalfExp operator-(HalfExp a, HalfExp b) { return a -= b; }
  friend constexpr HalfExp operator+(HalfExp a, std::int64_t n) { return a += integer(n); }
  friend constexpr HalfExp operator-(HalfExp a, std::int64_t n) { return a -= integer(n); }

  friend constexpr auto operator<=>(HalfExp, HalfExp) = default;
  friend constexpr bool operator==(HalfExp, HalfExp) = default;

  /// "2", "0", "-3/2": integers bare, odd numerators with a "/2" suffix.
  std::string to_string() const;

  /// Accepts the to_string form; also tolerates "4/2" and a leading '+'.
  static HalfExp parse(std::string_view text);

 private:
  std::int64_t twice_ = 0;
};

/// p/2.
constexpr HalfExp half(std::int64_t p) { return HalfExp::from_twice(p); }

std::ostream& operator<<(std::ostream& os, HalfExp h);

/// Label of a unitarizable cuspidal representation. Labels are interned, so
/// copies are pointer-sized and equality is pointer comparison.
class Line {
 public:
  Line();  // "rho"
  explicit Line(std::string_view name);

  const std::string& name() const { return *name_; }

  friend bool operator==(const Line& a, const Line& b) { return a.name_ == b.name_; }
  friend std::strong_ordering operator<=>(const Line& a, const Line& b) {
    if (a.name_ == b.name_) return std::strong_ordering::equal;
    return *a.name_ <=> *b.name_;
  }

 private:
  const std::string* name_;
};

/// nu^exp rho on the line of rho.
struct CuspidalPoint {
  Line line;
  HalfExp exp;

  friend bool operator==(const CuspidalPoint&, const CuspidalPoint&) = default;
  friend auto operator<=>(const CuspidalPoint&, const CuspidalPoint&) = default;
};

CuspidalPoint twist_point(const CuspidalPoint& p, HalfExp z);

// The line is centered (rho is unitarizable), so the Hermitian dual just
// negates the exponent.
CuspidalPoint hermitian_dual_point(const CuspidalPoint& p);

}  // namespace zel

template <>
struct std::hash<zel::HalfExp> {
  std::size_t operator()(zel::HalfExp h) const noexcept {
    return std::hash<std::int64_t>{}(h.twice());
  }
};

#endif  // ZEL_HALF_EXP_HPP
