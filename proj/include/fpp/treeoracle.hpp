#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fpp/permset.hpp"
#include "fpp/rational.hpp"

namespace fpp {

/// Automorphism of the depth-n truncation of the d-regular rooted tree,
/// described by its portrait: one permutation per internal vertex (levels
/// 0..n-1). Vertex addresses are dot-separated 1-based digit strings; the
/// root is the empty string. g(vw) = g(v) g|_v(w).
class TruncatedAutomorphism {
 public:
  /// Missing internal vertices get the identity label.
  TruncatedAutomorphism(int degree, int depth,
                        const std::map<std::string, Perm>& sparse_portrait);

  int degree() const { return degree_; }
  int depth() const { return depth_; }
  size_t internal_vertex_count() const { return labels_.size(); }
  const Perm& label(const std::string& address) const;

  /// Image of a vertex address, |address| <= depth.
  std::string apply(const std::string& address) const;

 private:
  size_t index_of(const std::string& address, int* level_out) const;
  int degree_;
  int depth_;
  std::vector<Perm> labels_;  // breadth-first over internal vertices
};

std::string apply_automorphism(const TruncatedAutomorphism& a, const std::string& address);

/// sigma_k = (#S)^((d^k - 1)/(d - 1)) for k = 0..n.
std::vector<Integer> sigma_sequence(const PermSet& S, int n);

/// Exact recurrence p_0 = 1, p_{k+1} = f_S(p_k). Representation size grows
/// like sigma_k; use recurrence_p_enclosed for deep k.
std::vector<Rational> recurrence_p(const PermSet& S, int n);

/// Certified enclosure [lo_k, hi_k] of p_k, propagated with directed dyadic
/// rounding at 2^-frac_bits. lo_k <= p_k <= hi_k holds exactly; an enclosure
/// with lo == hi pins p_k exactly.
struct Enclosure {
  Rational lo;
  Rational hi;
  bool exact() const { return lo == hi; }
};
inline constexpr int kDefaultEnclosureBits = 192;
std::vector<Enclosure> recurrence_p_enclosed(const PermSet& S, int n,
                                             int frac_bits = kDefaultEnclosureBits);

struct EnumerationResult {
  Integer sigma;   // number of portraits enumerated
  Integer fixing;  // how many fix at least one level-n vertex
  Rational proportion() const;
};

inline const Integer kDefaultEnumerationLimit = Integer(2000000);

/// Ground-truth count: iterates every portrait assignment over S in
/// mixed-radix counter order and tests each for a fixed level-n vertex.
/// Never consults the recurrence. Throws ResourceLimitError when sigma_n
/// exceeds limit.
EnumerationResult enumerate_count(const PermSet& S, int n,
                                  const Integer& limit = kDefaultEnumerationLimit);

struct GqpEnumeration {
  Integer size;
  Integer fixing;
  std::vector<EnumerationResult> per_coset;  // same order as cosets(Q, P)
};

/// Sums enumerate_count over the cosets of P/Q (portraits constrained to a
/// single coset). Requires Q normal in P.
GqpEnumeration enumerate_count_gqp(const PermSet& Q, const PermSet& P, int n,
                                   const Integer& limit = kDefaultEnumerationLimit);

struct MonteCarloResult {
  double estimate;
  double halfwidth;  // 99% normal-approximation half width
  long trials;
};

/// Samples uniform portraits (each internal label i.i.d. uniform over S) and
/// returns the fraction fixing a level-n vertex. Deterministic given seed.
MonteCarloResult monte_carlo_p(const PermSet& S, int n, long trials, std::uint64_t seed);

/// Report aggregation of the sigma/f/p sequences up to level n.
struct FppSequence {
  std::vector<Integer> sigma;
  std::optional<std::vector<Integer>> f;  // oracle counts, when enumerated
  std::vector<Rational> p;
};

/// Builds sigma and p; also enumerates f at level n when sigma_n <= limit.
FppSequence build_sequence(const PermSet& S, int n,
                           const Integer& limit = kDefaultEnumerationLimit);

}  // namespace fpp
