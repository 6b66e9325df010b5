#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fpp/permset.hpp"

namespace fpp {

inline constexpr std::uint64_t kDefaultGenerateCap = 3628800;    // 10!
inline constexpr std::uint64_t kDefaultNormalizerCap = 40320;    // 8!

/// Breadth-first closure of the generators under composition and inverse.
/// Throws ResourceLimitError when the closure would exceed cap.
PermSet generate(const std::vector<Perm>& generators,
                 std::uint64_t cap = kDefaultGenerateCap);

/// True iff the orbit of point 1 under the group generated by S is {1,...,d}.
bool is_transitive(const PermSet& S);

/// True iff g Q g^-1 = Q for a generating set of P. Requires Q, P groups with
/// Q a subset of P.
bool is_normal(const PermSet& Q, const PermSet& P);

/// Left cosets of Q in P, identity coset first, the rest ordered by their
/// lexicographically minimal element (which is also the representative).
std::vector<Coset> cosets(const PermSet& Q, const PermSet& P);

/// Derived subgroup: normal closure of the commutators of a generating set.
PermSet commutator_subgroup(const PermSet& Q);

/// N_{Sym(d)}(Q) by scanning all of Sym(d); throws ResourceLimitError when
/// d! > cap.
PermSet normalizer_in_sym(const PermSet& Q,
                          std::uint64_t cap = kDefaultNormalizerCap);

/// Smallest point (1-based) fixed by every element, if any.
std::optional<int> global_fixed_point(const PermSet& Q);

/// { g s g^-1 : s in S }.
PermSet conjugate_set(const PermSet& S, const Perm& g);

/// Greedy small generating set; returns {identity} for the trivial group.
std::vector<Perm> small_generating_set(const PermSet& group);

/// Left-translation action of `group` on itself: degree becomes |group| and
/// the returned generators correspond to small_generating_set(group).
std::vector<Perm> regular_representation(const PermSet& group);

}  // namespace fpp
