#include "zel/ring.hpp"

#include <algorithm>
#include <optional>

#include "zel/error.hpp"

namespace zel {

std::string_view to_string(Basis b) { return b == Basis::Z ? "Z" : "zeta"; }

RingElement RingElement::basis_element(Basis basis, const Multisegment& a, std::int64_t coef) {
  RingElement e(basis);
  e.add_term(a, coef);
  return e;
}

bool RingElement::is_positive() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

std::int64_t RingElement::coefficient(const Multisegment& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? 0 : it->second;
}

void RingElement::add_term(const Multisegment& a, std::int64_t coef) {
  if (coef == 0) return;
  if (!terms_.empty() && terms_.begin()->first.line() != a.line()) {
    throw Error(Errc::LineMismatch, "ring element terms must share one line");
  }
  auto [it, inserted] = terms_.try_emplace(a, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

std::string RingElement::to_string() const {
  if (terms_.empty()) return "0";
  const char* sym = basis_ == Basis::Z ? "Z" : "ζ";
  std::string out;
  bool first = true;
  for (const auto& [ms, coef] : terms_) {
    std::int64_t mag = coef;
    if (!first) {
      out += coef < 0 ? " - " : " + ";
      mag = coef < 0 ? -coef : coef;
    }
    if (mag != 1) out += std::to_string(mag) + "·";
    out += sym + ms.to_string();
    first = false;
  }
  return out;
}

namespace {

void require_same_basis(const RingElement& a, const RingElement& b) {
  if (a.basis() != b.basis()) {
    throw Error(Errc::BasisMismatch, std::string("cannot combine ") + std::string(to_string(a.basis())) +
                                         " and " + std::string(to_string(b.basis())) + " elements");
  }
}

}  // namespace

RingElement& RingElement::operator+=(const RingElement& other) {
  require_same_basis(*this, other);
  for (const auto& [ms, coef] : other.terms_) add_term(ms, coef);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
  require_same_basis(*this, other);
  for (const auto& [ms, coef] : other.terms_) add_term(ms, -coef);
  return *this;
}

RingElement& RingElement::operator*=(std::int64_t scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [ms, coef] : terms_) coef *= scalar;
  return *this;
}

RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
RingElement operator*(std::int64_t scalar, RingElement a) { return a *= scalar; }

RingElement zeta_mul(const RingElement& e1, const RingElement& e2) {
  if (e1.basis() != Basis::Zeta || e2.basis() != Basis::Zeta) {
    throw Error(Errc::BasisMismatch, "zeta_mul needs both factors in the zeta basis");
  }
  RingElement out(Basis::Zeta);
  for (const auto& [a, ca] : e1.terms()) {
    for (const auto& [b, cb] : e2.terms()) out.add_term(a + b, ca * cb);
  }
  return out;
}

bool is_ladder(const Multisegment& a) {
  const auto segs = a.segments();
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      if (segs[i].contains(segs[j]) || segs[j].contains(segs[i])) return false;
    }
  }
  return true;
}

namespace {

enum class Side { End, Begin };

// Enumerates the shortening patterns of a ladder. Segments are sorted by
// beginning (hence also by end). `forced(i)` says whether shortening
// segment i+1 (Side::End) or segment i (Side::Begin) forces its neighbour.
RingElement ladder_terms(const Multisegment& a, Side side) {
  if (!is_ladder(a)) throw Error(Errc::NotALadder, a.to_string() + " is not a ladder");
  const auto segs = a.segments();
  const std::size_t n = segs.size();

  RingElement out(Basis::Z);
  std::vector<bool> cut(n, false);

  auto emit = [&] {
    std::vector<Segment> next;
    for (std::size_t i = 0; i < n; ++i) {
      if (!cut[i]) {
        next.push_back(segs[i]);
      } else if (auto s = side == Side::End ? minus_end(segs[i]) : minus_begin(segs[i])) {
        next.push_back(*s);
      }
    }
    out.add_term(Multisegment(a.line(), std::move(next)), 1);
  };

  if (side == Side::End) {
    // Left to right: cutting i requires cutting i-1 when their ends touch.
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == n) return emit();
      cut[i] = false;
      self(self, i + 1);
      const bool touching = i > 0 && segs[i].end() == segs[i - 1].end() + 1;
      if (!touching || cut[i - 1]) {
        cut[i] = true;
        self(self, i + 1);
        cut[i] = false;
      }
    };
    rec(rec, 0);
  } else {
    // Right to left: cutting i requires cutting i+1 when their beginnings touch.
    auto rec = [&](auto&& self, std::size_t r) -> void {
      if (r == n) return emit();
      const std::size_t i = n - 1 - r;
      cut[i] = false;
      self(self, r + 1);
      const bool touching = i + 1 < n && segs[i + 1].begin() == segs[i].begin() + 1;
      if (!touching || cut[i + 1]) {
        cut[i] = true;
        self(self, r + 1);
        cut[i] = false;
      }
    };
    rec(rec, 0);
  }
  return out;
}

}  // namespace

RingElement derivative_ladder(const Multisegment& a) { return ladder_terms(a, Side::End); }

RingElement derivative_ladder_dual(const Multisegment& a) { return ladder_terms(a, Side::Begin); }

RingElement derivative_zeta(const RingElement& e) {
  if (e.basis() != Basis::Zeta) {
    throw Error(Errc::BasisMismatch, "derivative_zeta needs a zeta-basis element");
  }
  RingElement out(Basis::Zeta);
  for (const auto& [a, coef] : e.terms()) {
    RingElement prod = RingElement::one(Basis::Zeta, a.line());
    for (const auto& s : a) {
      RingElement factor = RingElement::basis_element(Basis::Zeta, Multisegment(a.line(), {s}));
      std::vector<Segment> shorter;
      if (auto t = minus_end(s)) shorter.push_back(*t);
      factor.add_term(Multisegment(a.line(), std::move(shorter)), 1);
      prod = zeta_mul(prod, factor);
    }
    out += coef * prod;
  }
  return out;
}

Multisegment highest_derivative(const Multisegment& a) { return minus_ends(a); }

std::vector<Multisegment> highest_derivative_product(std::span<const Multisegment> factors) {
  std::vector<Multisegment> out;
  out.reserve(factors.size());
  for (const auto& f : factors) out.push_back(minus_ends(f));
  return out;
}

}  // namespace zel
