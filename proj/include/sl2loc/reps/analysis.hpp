#pragma once

#include <variant>

#include "sl2loc/reps/global.hpp"

namespace sl2loc::reps {

// --- weights ---------------------------------------------------------------

struct WeightList {
  std::vector<std::pair<long, Rational>> entries;  // (index, H eigenvalue)
};
struct NotAWeightBasis {
  long witness_shift;  // an off-diagonal shift H produces with nonzero coefficient
};
using WeightsResult = std::variant<WeightList, NotAWeightBasis>;

/// True when H acts diagonally on the basis at the module's numeric
/// parameters.
bool is_weight_basis(const Sl2Module& M);

WeightsResult weights(const Sl2Module& M, long window);

/// H eigenvalue of a single basis index (weight-basis modules only).
Rational weight_of(const Sl2Module& M, long k);

// --- Casimir ----------------------------------------------------------------

/// Applies H^2 + 2EF + 2FE to every basis element of the window, asserts
/// the action is by one scalar, and returns it. Must always come out to
/// (t-1)^2 + 2(t-1).
Rational casimir_scalar(const Sl2Module& M, long window);

// --- vector solves ----------------------------------------------------------

/// Exact solutions of E v = 0 (resp. F v = 0) supported on the window,
/// intersected with H eigenvectors.
std::vector<Element> highest_weight_vectors(const Sl2Module& M, long window);
std::vector<Element> lowest_weight_vectors(const Sl2Module& M, long window);

/// Exact solutions of (E - eta) v = 0 supported on the window.
std::vector<Element> whittaker_vectors(const Sl2Module& M, const Rational& eta,
                                       long window);

/// Exact solutions of H v = c v (some rational c) supported on the window.
/// For a non-weight module this is empty for every window.
std::vector<Element> h_eigenvectors(const Sl2Module& M, long window);

// --- generated subspaces ----------------------------------------------------

struct GeneratedSubspace {
  std::vector<Element> basis;  // reduced row echelon basis
  bool window_closed;          // false when an image was truncated at the window edge
};

/// Closure of span{v} under E, F, H, truncated to the window slice.
GeneratedSubspace submodule_generated(const Sl2Module& M, const Element& v,
                                      long window);

// --- composition ------------------------------------------------------------

struct WeightEntry {
  long index;
  Rational weight;
};

struct CompositionReport {
  Family family;
  Rational t;
  long window = 0;
  std::vector<long> sub_indices;
  std::vector<Rational> sub_weights;
  bool sub_invariant = false;
  bool sub_irreducible = false;
  std::optional<WeightEntry> quotient_highest;  // highest-weight generator mod sub
  std::optional<WeightEntry> quotient_lowest;   // lowest-weight generator mod sub
  std::vector<Rational> quotient_upper_weights;  // highest-weight piece, from its top
  std::vector<Rational> quotient_lower_weights;  // lowest-weight piece, from its bottom
  bool split_verified = false;
  bool window_stable = false;  // rerun at twice the window reaches the same structure

  std::string describe() const;
};

/// Finds the t-dimensional submodule span{b_0..b_{t-1}} and analyzes the
/// quotient: for DualVermaOpen the quotient is a highest-weight module with
/// highest weight -t-1; for PrincipalEven it splits into a lowest-weight
/// piece (lowest weight t+1) and a highest-weight piece (highest weight
/// -t-1). Other families are rejected.
CompositionReport composition_report(Family family, const Rational& t, long window);

// --- irreducibility ---------------------------------------------------------

struct Certificate {
  enum class Kind { IrreducibleWeight, IrreducibleWhittaker, Reducible, Unknown };
  Kind kind = Kind::Unknown;
  std::vector<long> witness;  // invariant basis-index set when Reducible
  bool window_stable = false;
  std::string detail;

  bool irreducible() const {
    return kind == Kind::IrreducibleWeight || kind == Kind::IrreducibleWhittaker;
  }
  std::string describe() const;
};

/// Certifies irreducibility by one of two strategies, chosen by module
/// shape: (a) multiplicity-one weight modules, by mutual reachability of
/// window basis vectors (submodules of such modules are spanned by basis
/// vectors); (b) the Whittaker shape with eta != 0, where E - eta strictly
/// lowers with coefficients that provably never vanish on positive indices
/// and b_0 generates the window upward. Returns Reducible with a verified
/// invariant subset, or Unknown when neither strategy applies.
/// window_stable records that a rerun at twice the window agrees.
Certificate irreducibility_certificate(const Sl2Module& M, long window);

// --- K-weight parity --------------------------------------------------------

struct ParityReport {
  Family family;
  int parity = 0;  // 0 even, 1 odd: parity of every H eigenvalue
  bool single_parity = false;
  int other_parity = 0;  // parity of the other principal-series family
  bool distinct = false;
};

/// The K types of a principal-series module are read off the parities of
/// its H eigenvalues; the two families must show a single parity each, and
/// opposite ones. Rejects other families.
ParityReport k_weight_parity(Family family, const Rational& t, long window = 24);

// --- Borel-Weil dimension count ----------------------------------------------

/// Dimension of the space of section pairs (p, q) with p(z) = z^n q(1/z),
/// computed by solving the pairing constraint over bounded-degree
/// polynomial pairs with exact linear algebra (not by the closed form).
long borel_weil_dim(long n);

}  // namespace sl2loc::reps
