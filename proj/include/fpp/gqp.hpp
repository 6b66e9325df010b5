#pragma once

#include <string>
#include <vector>

#include "fpp/charpoly.hpp"
#include "fpp/permset.hpp"
#include "fpp/rational.hpp"

namespace fpp {

/// Validated triple (d, Q, P) with 1 != Q normal in P <= Sym(d), d >= 3,
/// together with the Q-cosets of P (identity coset first).
struct GqpSpec {
  int degree = 0;
  PermSet Q;
  PermSet P;
  std::vector<Coset> coset_list;
  long index() const { return static_cast<long>(coset_list.size()); }
};

/// Builds and validates a GqpSpec. Each failed requirement raises a distinct
/// ValidationError: d < 3, Q trivial, Q not a subgroup, Q not normal.
GqpSpec validate_gqp(int degree, const std::vector<Perm>& Qgens, const std::vector<Perm>& Pgens);
GqpSpec validate_gqp(int degree, const PermSet& Q, const PermSet& P);

/// FPP of the tree group: the mean over cosets A of FPP(W_A). Exact summands
/// stay exact; bracket summands propagate by exact interval arithmetic.
FppValue fpp_gqp(const GqpSpec& spec, int precision_bits = kDefaultPrecisionBits);

/// Level-transitivity reduces to transitivity of Q.
bool level_transitive(const GqpSpec& spec);

/// The fixed-point process is a martingale exactly when Q is transitive;
/// reported separately so the coincidence with level_transitive is visible.
bool martingale(const GqpSpec& spec);

struct HausdorffDim {
  Integer group_order;  // |Q|
  Integer full_order;   // d!
  double approx;        // log|Q| / log(d!)
};
HausdorffDim hausdorff_dimension(const GqpSpec& spec);

enum class TfgKind { Tfg, NotTfgCommutator, NotTfgGlobalFixedPoint, Unknown };
struct TfgStatus {
  TfgKind kind;
  std::string reason;
};

/// Topological finite generation by the structure of Q: not finitely
/// generated when Q != Q' or Q has a global fixed point; finitely generated
/// when Q is transitive and perfect; Unknown otherwise.
TfgStatus tfg_status(const GqpSpec& spec);

struct CosetRecord {
  Perm representative;
  Rational avg_fixed;      // exact Burnside average on {1,...,d}
  bool derangement_free;   // D_A(0) = 0
  bool unifix;             // every element fixes exactly one point
  FppValue fpp;
};
std::vector<CosetRecord> classify_cosets(const GqpSpec& spec,
                                         int precision_bits = kDefaultPrecisionBits);

struct GqpReport {
  int degree = 0;
  long index = 0;
  FppValue fpp;
  bool level_transitive = false;
  bool martingale = false;
  HausdorffDim hausdorff;
  TfgStatus tfg;
  std::vector<CosetRecord> cosets;
};
GqpReport gqp_report(const GqpSpec& spec, int precision_bits = kDefaultPrecisionBits);

}  // namespace fpp
