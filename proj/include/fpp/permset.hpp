#pragma once

#include <vector>

#include "fpp/perm.hpp"

namespace fpp {

/// Finite set of permutations of a common degree, sorted and deduplicated.
/// is_group() is true only when closure has been verified.
class PermSet {
 public:
  /// Sorts, deduplicates, and checks that all degrees match.
  PermSet(int degree, std::vector<Perm> elements, bool closure_verified = false);

  static PermSet from_elements(int degree, std::vector<Perm> elements);

  int degree() const { return degree_; }
  size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  bool is_group() const { return is_group_; }
  const std::vector<Perm>& elements() const { return elems_; }
  const Perm& at(size_t i) const { return elems_[i]; }

  bool contains(const Perm& p) const;

  /// Checks identity membership and closure under composition and inverse,
  /// and stamps the flag accordingly.
  PermSet with_group_check() const;

  friend bool operator==(const PermSet& a, const PermSet& b) {
    return a.degree_ == b.degree_ && a.elems_ == b.elems_;
  }

 private:
  int degree_;
  std::vector<Perm> elems_;
  bool is_group_;
};

/// Left coset representative * subgroup.
struct Coset {
  Perm representative;
  PermSet subgroup;
  PermSet elements;
};

/// Builds representative * subgroup, checking |elements| = |subgroup|.
Coset make_coset(const Perm& representative, const PermSet& subgroup);

}  // namespace fpp
