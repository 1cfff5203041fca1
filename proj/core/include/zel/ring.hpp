#ifndef ZEL_RING_HPP
#define ZEL_RING_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "zel/multisegment.hpp"

namespace zel {

/// Which basis of the Grothendieck ring a RingElement is written in:
/// irreducibles Z(a), or standard products zeta(a) = z(Δ1) x ... x z(Δk).
enum class Basis { Z, Zeta };

std::string_view to_string(Basis b);

/// A finite Z-linear combination of basis elements indexed by multisegments.
/// Zero coefficients are never stored.
class RingElement {
 public:
  explicit RingElement(Basis basis = Basis::Z) : basis_(basis) {}

  static RingElement basis_element(Basis basis, const Multisegment& a, std::int64_t coef = 1);
  static RingElement one(Basis basis, Line line = Line{}) {
    return basis_element(basis, Multisegment(line));
  }

  Basis basis() const { return basis_; }
  const std::map<Multisegment, std::int64_t>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_positive() const;
  std::int64_t coefficient(const Multisegment& a) const;

  /// Throws LineMismatch if `a` is on another line than existing terms.
  void add_term(const Multisegment& a, std::int64_t coef);

  std::string to_string() const;  // "Z(...) + 2·Z(...)"

  RingElement& operator+=(const RingElement& other);
  RingElement& operator-=(const RingElement& other);
  RingElement& operator*=(std::int64_t scalar);

  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  Basis basis_;
  std::map<Multisegment, std::int64_t> terms_;
};

RingElement operator+(RingElement a, const RingElement& b);
RingElement operator-(RingElement a, const RingElement& b);
RingElement operator*(std::int64_t scalar, RingElement a);

/// Product in the zeta basis: zeta(a) x zeta(b) = zeta(a + b).
RingElement zeta_mul(const RingElement& e1, const RingElement& e2);

/// No segment of `a` is contained in another one.
bool is_ladder(const Multisegment& a);

/// D(Z(a)) for a ladder a, in the Z basis.
///
/// With the segments ordered Δ1 -> ... -> Δn, the terms are Z(Δ1^ε1, ...,
/// Δn^εn) for ε in {0,1}^n (ε = 1 removes the end), restricted so that
/// removing the end of Δ(i+1) forces removing the end of Δi whenever
/// e(Δ(i+1)) = e(Δi) + 1. For Speh multisegments this is the n + 1 prefix
/// terms Z(Δ1^-, ..., Δi^-, Δ(i+1), ..., Δn). Throws NotALadder.
RingElement derivative_ladder(const Multisegment& a);

/// The dual derivative ~D~(Z(a)): beginnings are removed instead of ends,
/// with the forcing running from Δi to Δ(i+1) when b(Δ(i+1)) = b(Δi) + 1.
RingElement derivative_ladder_dual(const Multisegment& a);

/// D on the zeta basis, extended multiplicatively from
/// z(Δ) -> z(Δ) + z(Δ^-). Exact, no Kazhdan–Lusztig data needed.
RingElement derivative_zeta(const RingElement& e);

/// h.d.(Z(a)) = Z(a^-).
Multisegment highest_derivative(const Multisegment& a);

/// h.d. of Z(a1) x ... x Z(ak), kept as the unexpanded list of factors.
std::vector<Multisegment> highest_derivative_product(std::span<const Multisegment> factors);

}  // namespace zel

#endif  // ZEL_RING_HPP
