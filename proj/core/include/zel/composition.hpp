#ifndef ZEL_COMPOSITION_HPP
#define ZEL_COMPOSITION_HPP

#include <utility>
#include <vector>

#include "zel/multisegment.hpp"
#include "zel/speh_params.hpp"

namespace zel {

/// Sign of the twist exponent. Plus is nu^(-k/2) x nu^(k/2) with k >= 0,
/// minus the reversed product; both have the same composition series.
enum class Sign { Plus, Minus };

/// Whether factor multisegments are read as Zelevinsky (Z) or Langlands (L)
/// parameters.
enum class Parametrization { Zelevinsky, Langlands };

std::string_view to_string(Sign s);
std::string_view to_string(Parametrization p);

/// An irreducible subquotient, tagged with its index j in the r_j family.
struct Factor {
  int index;
  Multisegment ms;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Composition series of the product of the two twisted Speh ladders of
/// `params`, together with its socle, cosocle and submodule chain.
///
/// `factors` is in submodule order: the socle first, the cosocle last.
/// `lattice[i]` lists the indices of the composition factors of the i-th
/// non-zero submodule; the last entry is the whole module.
struct CompositionReport {
  SpehPairParams params;
  Parametrization basis = Parametrization::Zelevinsky;
  Sign sign = Sign::Plus;
  std::vector<Factor> factors;
  Multisegment socle;
  Multisegment cosocle;
  std::vector<std::vector<int>> lattice;

  std::size_t length() const { return factors.size(); }

  friend bool operator==(const CompositionReport&, const CompositionReport&) = default;
};

/// Z-side composition series: r_0 and every r_i with
/// max(n-k+1,1) <= i <= min(n-k+d,n). For Plus the socle is the largest
/// index and the cosocle r_0; Minus swaps them.
CompositionReport compose_zelevinsky(int n, int d, int k, Sign sign = Sign::Plus,
                                     Line line = Line{});

/// L-side composition series of L(a(n,d)) x L(a(n,d)) twisted by -+k/2.
///
/// Computed from the Z-side series of (d,n,k) through mw_dual and checked
/// against the direct r_i(n,d,k) list; any disagreement throws
/// InternalInconsistency. For Plus the socle is L(r_0).
CompositionReport compose_langlands(int n, int d, int k, Sign sign = Sign::Plus,
                                    Line line = Line{});

/// (socle, cosocle) of the Z-side product for 1 <= k <= n+d-1, built
/// without the r_j family: one is a_- + a_+, the other is the involution of
/// the concatenated transposed pair. Throws OutOfRange otherwise.
std::pair<Multisegment, Multisegment> socle_cosocle(int n, int d, int k, Sign sign = Sign::Plus,
                                                    Line line = Line{});

struct LatticeLevel {
  std::vector<int> indices;
  std::vector<Multisegment> members;
};

/// The chain of non-zero submodules (the lattice is a chain). Throws
/// OutOfRange outside the reducible range 1 <= k <= n+d-1.
std::vector<LatticeLevel> lattice_chain(int n, int d, int k, Sign sign = Sign::Plus,
                                        Line line = Line{});

/// How the extra membership condition "1 <= n - j - 1" of the conjectural
/// recipe is treated.
enum class SideCondition { None, Verbatim };

struct ConjectureResult {
  std::vector<Factor> factors;  // index 0 first, then increasing j
  std::vector<int> index_set;   // the j >= 1 that were admitted
  bool conjectural = true;
};

/// Predicted Langlands-side composition factors of L(pi1) x L(pi2) for two
/// essentially Speh multisegments (ladders of equal-length segments with
/// unit steps; the two lengths may differ). Not a theorem: the result is
/// always flagged conjectural. Throws NotSpeh or LineMismatch.
ConjectureResult conjecture_jh(const Multisegment& pi1, const Multisegment& pi2,
                               SideCondition side = SideCondition::None);

/// True for a non-empty ladder of equal-length segments with unit steps.
bool is_essentially_speh(const Multisegment& a);

}  // namespace zel

#endif  // ZEL_COMPOSITION_HPP
