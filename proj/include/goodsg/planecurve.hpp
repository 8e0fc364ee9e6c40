#pragma once

#include <string>
#include <vector>

#include "goodsg/levels.hpp"
#include "goodsg/numerical.hpp"
#include "goodsg/report.hpp"

namespace goodsg {

// tau_i = min{h >= 1 : (h+1) g_i in <g_1..g_{i-1}>} for i = 2..n.
// Searches h up to g_1 * g_i and throws past that.
std::vector<int> tau_values(const std::vector<int>& gens);
bool is_plane_branch(const std::vector<int>& gens);

struct PlaneBranchProfile {
  std::vector<int> generators;  // minimal, ascending
  std::vector<int> tau;         // tau_2..tau_n
  std::vector<int> apery;       // Ap(S, g_1), ascending
  bool plane = false;

  static PlaneBranchProfile from_generators(const std::vector<int>& gens);
  static PlaneBranchProfile from_semigroup(const NumericalSemigroup& S);
  int e() const { return generators.front(); }
  NumericalSemigroup semigroup() const { return NumericalSemigroup::from_generators(generators); }
};

// A' = {w_i - (i-1)e}, S' = A' + eN. Throws PreconditionError for a non
// plane branch and ConsistencyError if A' is not Ap(S', e).
NumericalSemigroup blowup_numerical(const PlaneBranchProfile& S);

// (u_j - (j-1)e_1, v_k - (k-1)e_2), 1-based indices.
Point omega_jk(const std::vector<int>& u, const std::vector<int>& v, const Point& e, int j, int k);

struct ShiftReport {
  std::vector<std::string> preconditions;   // failed preconditions
  std::vector<std::string> level_failures;  // per level, empty when A_i = A_i' + (i-1)e
  bool level_ok(int i) const { return level_failures.at(i - 1).empty(); }
  bool ok() const;
  std::string str() const;
};

// Non-local blowup case: S' = blowup(S_1) x blowup(S_2), A' by the closed form.
ShiftReport verify_apery_shift(const GoodSemigroup& S, int margin = 1);
// Local blowup case: S' supplied by the caller, A' its generic partition.
ShiftReport verify_apery_shift_compat(const GoodSemigroup& S, const GoodSemigroup& Sprime, int margin = 1);

// Absolutes of A_i are omega_{j,k} + (i-1)e with j + k - 1 = i, and the
// absolute successor property between consecutive levels.
CheckReport check_absolute_levels(const GoodSemigroup& S, int margin = 1);
// Candidates {a in A_i' : Delta^{S'}(a) ⊆ A'} shifted, for a caller-supplied S'.
CheckReport check_absolute_levels_compat(const GoodSemigroup& S, const GoodSemigroup& Sprime, int margin = 1);

struct TwoBranchBlowupResult {
  GoodSemigroup S;
  Point e;
  NumericalSemigroup S1p, S2p;
  GoodSemigroup Sprime;
  LevelPartition Aprime;  // Apery levels of S' w.r.t. e
  LevelPartition A;       // Apery levels of S w.r.t. e
  ValidationReport validation;
  bool local = false, symmetric = false, well_behaved = false, delta_e_nonempty = false;
  ShiftReport shift;
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
  std::string str() const;
};

// S = union of A + ke with A_i = A_i' + (i-1)e. Throws ConsistencyError if
// the result fails validation; split = false throws PreconditionError.
TwoBranchBlowupResult reconstruct_from_blowup(const PlaneBranchProfile& S1, const PlaneBranchProfile& S2,
                                              bool split = true, int margin = 1);
// Same without throwing on failed checks.
TwoBranchBlowupResult reconstruct_unchecked(const PlaneBranchProfile& S1, const PlaneBranchProfile& S2,
                                            int margin = 1);

// Generic partition vs domination partition of Ap(S, e).
CheckReport compare_partitions_planecurve(const GoodSemigroup& S, int margin = 1);

// Absolute elements of S lie in Ap(S, e); needs Delta^S(e) nonempty.
CheckReport absolutes_in_apery(const GoodSemigroup& S, int margin = 1);
// Elements of A_i below gamma + e share a coordinate with an absolute of A_i
// or with the boundary element of a ray of A_i, and no element needs the
// one-sided clauses of the level structure.
CheckReport shared_coordinates(const GoodSemigroup& S, int margin = 1);
// u_{e} = u_j + u_{e-j+1}.
CheckReport branch_symmetry(const PlaneBranchProfile& S);
// Ray coordinates of A_i: s_i = gamma_1 + e_1 - u_{e_1-j+1}, j = i - e_2, and
// the mirrored statement for rows.
CheckReport ray_coordinates(const GoodSemigroup& S, int margin = 1);

}  // namespace goodsg
