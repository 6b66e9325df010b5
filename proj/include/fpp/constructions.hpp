#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fpp/perm.hpp"
#include "fpp/rational.hpp"

namespace fpp {

/// Square matrix over the two-element field, rows as bit masks.
class BitMatrix {
 public:
  BitMatrix(int n, std::vector<std::uint32_t> rows);
  static BitMatrix identity(int n);

  int size() const { return n_; }
  bool bit(int row, int col) const { return (rows_[static_cast<size_t>(row)] >> col) & 1u; }
  const std::vector<std::uint32_t>& rows() const { return rows_; }

  bool invertible() const;
  BitMatrix plus_identity() const;  // A + I = A - I over F_2

  /// Matrix-vector product on bit-mask vectors.
  std::uint32_t apply(std::uint32_t v) const;

 private:
  int n_;
  std::vector<std::uint32_t> rows_;
};

struct FactoredInt {
  long value = 1;
  std::vector<std::pair<long, int>> factors;  // (prime, exponent), primes increasing
};

/// Trial division; guards d <= 10^9.
FactoredInt factorize(long d);

struct GroupPair {
  std::vector<Perm> Qgens;
  std::vector<Perm> Pgens;
};

/// Construction 1: Q = translations of Z/dZ, P = invertible affine maps,
/// realized on {1,...,d} with point i standing for residue i-1.
GroupPair affine_group(int d);

/// psi(d) = #{a unit mod d : a-1 is also a unit} via the factored closed form.
long psi(long d);

/// Euler's totient via the factored closed form.
long phi(long d);

/// Exact psi(d)/Phi(d) = prod_{p | d} (p-2)/(p-1).
Rational fpp_construction1(long d);

/// Number of solutions of alpha x = beta (mod n): gcd(alpha,n) when it
/// divides beta, else 0.
long count_linear_solutions(long alpha, long beta, long n);

struct GlCount {
  long order = 0;  // |GL_n(F_2)|
  long good = 0;   // #{A invertible : A - I invertible}
};

/// Exhaustive scan of all 2^(n^2) matrices, 1 <= n <= 5.
GlCount gl_counts(int n);

/// Witness A with A and A - I invertible: blocks of the 2x2 and 3x3 seed
/// matrices. Throws for n = 1, where no witness exists.
BitMatrix block_matrix(int n);

/// Construction 2 closed form for d = 2^n r, r odd, n <= 5.
Rational fpp_construction2(long d);

/// Permutation realization of Construction 2 on d points (Cayley action of
/// Q = C_2^n x C_r; P adds GL_n(F_2) and unit-group actions), d <= 16.
GroupPair realize_construction2(int d);

struct UnifixCosetRecord {
  Perm representative;
  bool unifix;
};

struct UnifixReport {
  int degree = 0;
  std::string q_name;
  long q_order = 0;
  long p_order = 0;
  long index = 0;
  bool found = false;
  std::vector<UnifixCosetRecord> cosets;
  std::string note;
};

/// Scans the cosets of P/Q for one whose elements all fix exactly one point.
/// Q must be transitive; when P is omitted it defaults to the normalizer of
/// Q in Sym(d) (needs d! within the normalizer cap).
UnifixReport search_unifix(int d, const std::vector<Perm>& Qgens,
                           const std::optional<std::vector<Perm>>& Pgens,
                           const std::string& q_name = "Q");

/// Built-in transitive candidates for the d = 2 (mod 4) search: cyclic,
/// dihedral, elementary abelian regular (d a power of 2), and the regular
/// representation of Sym(3) at d = 6. Not a census of transitive groups.
std::vector<std::pair<std::string, std::vector<Perm>>> builtin_unifix_candidates(int d);

}  // namespace fpp
