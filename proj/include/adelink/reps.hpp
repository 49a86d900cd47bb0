#pragma once

#include <map>
#include <string>

#include "adelink/exactla.hpp"
#include "adelink/roots.hpp"

namespace adelink {

enum class RepKind { Pab, ZPhi, PabBar };

const char* rep_kind_name(RepKind k);

// One of the three Weyl representations. All three act by signed
// permutations of their basis, which is what the generator data stores:
// gen(i)[b] = (image index, sign).
//   Pab:    basis t_alpha over the positive roots, s_i: t_a -> t_{|s_i.a|}
//   ZPhi:   basis T_alpha over all roots, s_i: T_a -> T_{s_i.a}
//   PabBar: basis tbar_alpha over the positive roots,
//           s_i: tbar_a -> sign(s_i.a) tbar_{|s_i.a|}
struct WRepresentation {
  RepKind kind;
  int rank = 0;
  int dim = 0;
  std::vector<std::vector<std::pair<int, int>>> gens;  // [i-1][basis] -> (image, sign)

  const std::vector<std::pair<int, int>>& gen(int i) const { return gens[i - 1]; }
  IntMatrix gen_matrix(int i) const;
  std::vector<std::int64_t> apply_gen(int i, const std::vector<std::int64_t>& v) const;
};

WRepresentation build_rep(const RootSystem& rs, RepKind kind);

// An equivariant map dom -> cod as a sparse matrix; entries are +-1 within
// a single orbit of the generator actions on (row, column) pairs.
struct SparseMap {
  int rows = 0, cols = 0;
  std::vector<std::tuple<int, int, int>> entries;  // (row, col, sign)
};

struct EquivariantMapSpace {
  const WRepresentation* dom = nullptr;
  const WRepresentation* cod = nullptr;
  // Rational basis of {F : F s_i = s_i F}; for these signed-permutation
  // representations the orbit matrices also form a lattice basis of the
  // integral maps (disjoint +-1 supports).
  std::vector<SparseMap> basis;
};

// Commutant computation by signed-orbit closure on index pairs. Each basis
// element is verified to commute with every generator before returning.
EquivariantMapSpace equivariant_maps(const WRepresentation& dom,
                                     const WRepresentation& cod);

struct VerificationReport {
  std::string lemma_id;
  std::string diagram;
  std::string anchor;  // human-readable lemma tag for logs
  bool pass = false;
  nlohmann::json witness;
  nlohmann::json residuals = nlohmann::json::array();
  double runtime_ms = 0.0;

  nlohmann::json to_json() const;
};

// Exactness of 0 -> PabBar -> ZPhi -> Pab -> 0 over the integers, plus a
// plain (non-equivariant) splitting.
VerificationReport verify_ses(const RootSystem& rs);

// No equivariant integral right-splitting of ZPhi -> Pab exists (normal-form
// infeasibility certificate), while t_a -> (T_a + T_{-a})/2 splits after
// inverting 2.
VerificationReport verify_nonsplit(const RootSystem& rs);

// The constrained equivariant endomorphisms of Pab (resp. ZPhi) are exactly
// {Id, -Id}.
VerificationReport verify_splitting_lemma(const RootSystem& rs, RepKind variant);

// Height-induction construction of the unique equivariant map out of the
// chosen representation, from its values on the simple generators. Keys of
// `a` are vertices 1..rank; values are coordinate vectors in `target`.
// For ZPhi the returned table covers all of Phi (negative-root columns are
// built by the mirrored induction); otherwise it covers the positive roots.
std::vector<std::vector<std::int64_t>> build_from_simples(
    const RootSystem& rs, const WRepresentation& target,
    const std::map<int, std::vector<std::int64_t>>& a, RepKind variant);

// Identity tables via build_from_simples for all three variants, with
// equivariance of each result rechecked against every generator.
VerificationReport verify_mapfrompab(const RootSystem& rs);

// Character-level verification of the pairs-permutation decomposition of
// S_{n+1}: dimension (n+1 choose 2), <chi,chi> in {1,2,3}, and trivial /
// standard / residual multiplicities matching the three stated cases.
VerificationReport verify_an_decomposition(int n);

// decompose_positive is nonempty on every non-simple positive root and
// every member satisfies s_i.alpha = beta.
VerificationReport verify_positive_simple(const RootSystem& rs);

// Generator matrices of W and of all three representations satisfy the
// defining relations (squares, braid, commutation) as exact identities.
VerificationReport verify_relations(const RootSystem& rs);

}  // namespace adelink
