#include "fpp/permset.hpp"

#include <algorithm>

#include "fpp/errors.hpp"

namespace fpp {

PermSet::PermSet(int degree, std::vector<Perm> elements, bool closure_verified)
    : degree_(degree), elems_(std::move(elements)), is_group_(closure_verified) {
  if (degree_ < 1) throw ValidationError("degree must be >= 1");
  for (const Perm& p : elems_)
    if (p.degree() != degree_) throw ValidationError("element degree mismatch");
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

PermSet PermSet::from_elements(int degree, std::vector<Perm> elements) {
  return PermSet(degree, std::move(elements), false);
}

bool PermSet::contains(const Perm& p) const {
  return std::binary_search(elems_.begin(), elems_.end(), p);
}

PermSet PermSet::with_group_check() const {
  bool closed = contains(Perm::identity(degree_));
  for (size_t i = 0; closed && i < elems_.size(); ++i) {
    if (!contains(elems_[i].inverse())) closed = false;
    for (size_t j = 0; closed && j < elems_.size(); ++j)
      if (!contains(elems_[i].compose(elems_[j]))) closed = false;
  }
  return PermSet(degree_, elems_, closed);
}

Coset make_coset(const Perm& representative, const PermSet& subgroup) {
  if (!subgroup.is_group()) throw ValidationError("coset subgroup must be a verified group");
  if (representative.degree() != subgroup.degree())
    throw ValidationError("coset representative degree mismatch");
  std::vector<Perm> elems;
  elems.reserve(subgroup.size());
  for (const Perm& h : subgroup.elements()) elems.push_back(representative.compose(h));
  PermSet elements(subgroup.degree(), std::move(elems));
  if (elements.size() != subgroup.size()) throw InternalError("coset size mismatch");
  return Coset{representative, subgroup, std::move(elements)};
}

}  // namespace fpp
