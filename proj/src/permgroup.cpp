#include "fpp/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "fpp/errors.hpp"

namespace fpp {

namespace {

struct ImageHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = v.size();
    for (int x : v) h = h * 1000003u + static_cast<size_t>(x);
    return h;
  }
};

// Closure under composition; in a finite group this already contains
// inverses since every element has finite order.
std::vector<Perm> closure(const std::vector<Perm>& generators, std::uint64_t cap) {
  const int d = generators.front().degree();
  std::deque<Perm> queue;
  std::vector<Perm> out;

  if (d <= 16) {
    std::unordered_set<std::uint64_t> seen;
    auto push = [&](const Perm& p) {
      if (seen.insert(p.packed_key()).second) {
        if (seen.size() > cap) throw ResourceLimitError("group closure exceeds cap");
        queue.push_back(p);
        out.push_back(p);
      }
    };
    push(Perm::identity(d));
    while (!queue.empty()) {
      Perm current = std::move(queue.front());
      queue.pop_front();
      for (const Perm& g : generators) push(current.compose(g));
    }
  } else {
    std::unordered_set<std::vector<int>, ImageHash> seen;
    auto push = [&](const Perm& p) {
      if (seen.insert(p.images()).second) {
        if (seen.size() > cap) throw ResourceLimitError("group closure exceeds cap");
        queue.push_back(p);
        out.push_back(p);
      }
    };
    push(Perm::identity(d));
    while (!queue.empty()) {
      Perm current = std::move(queue.front());
      queue.pop_front();
      for (const Perm& g : generators) push(current.compose(g));
    }
  }
  return out;
}

}  // namespace

PermSet generate(const std::vector<Perm>& generators, std::uint64_t cap) {
  if (generators.empty()) throw ValidationError("generate needs at least one generator");
  if (cap < 1) throw ValidationError("cap must be >= 1");
  const int d = generators.front().degree();
  for (const Perm& g : generators)
    if (g.degree() != d) throw ValidationError("generator degree mismatch");
  return PermSet(d, closure(generators, cap), true);
}

bool is_transitive(const PermSet& S) {
  if (S.empty()) throw ValidationError("is_transitive needs a nonempty set");
  const int d = S.degree();
  std::vector<bool> in_orbit(static_cast<size_t>(d), false);
  std::deque<int> queue{0};
  in_orbit[0] = true;
  int reached = 1;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (const Perm& s : S.elements()) {
      const int y = s.apply0(x);
      if (!in_orbit[static_cast<size_t>(y)]) {
        in_orbit[static_cast<size_t>(y)] = true;
        ++reached;
        queue.push_back(y);
      }
    }
  }
  return reached == d;
}

bool is_normal(const PermSet& Q, const PermSet& P) {
  if (!Q.is_group() || !P.is_group()) throw ValidationError("is_normal needs verified groups");
  if (Q.degree() != P.degree()) throw ValidationError("degree mismatch");
  for (const Perm& q : Q.elements())
    if (!P.contains(q)) throw ValidationError("Q is not a subgroup of P");
  for (const Perm& g : small_generating_set(P)) {
    const Perm ginv = g.inverse();
    for (const Perm& q : Q.elements())
      if (!Q.contains(g.compose(q).compose(ginv))) return false;
  }
  return true;
}

std::vector<Coset> cosets(const PermSet& Q, const PermSet& P) {
  if (!Q.is_group() || !P.is_group()) throw ValidationError("cosets needs verified groups");
  if (Q.degree() != P.degree()) throw ValidationError("degree mismatch");
  for (const Perm& q : Q.elements())
    if (!P.contains(q)) throw ValidationError("Q is not a subgroup of P");

  // Scanning P in sorted order makes each coset's first untaken element its
  // lexicographic minimum; the identity coset comes first because the
  // identity is the global minimum.
  std::vector<bool> taken(P.size(), false);
  std::vector<Coset> out;
  for (size_t i = 0; i < P.size(); ++i) {
    if (taken[i]) continue;
    Coset coset = make_coset(P.at(i), Q);
    for (const Perm& e : coset.elements.elements()) {
      const auto& elems = P.elements();
      const auto it = std::lower_bound(elems.begin(), elems.end(), e);
      if (it == elems.end() || !(*it == e)) throw InternalError("coset escapes P");
      taken[static_cast<size_t>(it - elems.begin())] = true;
    }
    out.push_back(std::move(coset));
  }
  return out;
}

PermSet commutator_subgroup(const PermSet& Q) {
  if (!Q.is_group()) throw ValidationError("commutator_subgroup needs a verified group");
  const std::vector<Perm> gens = small_generating_set(Q);

  std::vector<Perm> comm_gens{Perm::identity(Q.degree())};
  for (const Perm& a : gens)
    for (const Perm& b : gens)
      comm_gens.push_back(a.inverse().compose(b.inverse()).compose(a).compose(b));
  PermSet derived = generate(comm_gens);

  // Normal closure under Q of the commutators of generators.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> extended = derived.elements();
    for (const Perm& g : gens) {
      const Perm ginv = g.inverse();
      for (const Perm& h : small_generating_set(derived)) {
        const Perm conj = g.compose(h).compose(ginv);
        if (!derived.contains(conj)) {
          extended.push_back(conj);
          grew = true;
        }
      }
    }
    if (grew) derived = generate(extended);
  }
  return derived;
}

PermSet normalizer_in_sym(const PermSet& Q, std::uint64_t cap) {
  if (!Q.is_group()) throw ValidationError("normalizer_in_sym needs a verified group");
  const int d = Q.degree();
  std::uint64_t factorial = 1;
  for (int i = 2; i <= d; ++i) factorial *= static_cast<std::uint64_t>(i);
  if (factorial > cap) throw ResourceLimitError("normalizer scan of Sym(d) exceeds cap");

  const std::vector<Perm> qgens = small_generating_set(Q);
  std::vector<int> img(static_cast<size_t>(d));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Perm> found;
  do {
    const Perm g = Perm::from_images(img);
    const Perm ginv = g.inverse();
    bool normalizes = true;
    for (const Perm& q : qgens) {
      if (!Q.contains(g.compose(q).compose(ginv))) {
        normalizes = false;
        break;
      }
    }
    if (normalizes) found.push_back(g);
  } while (std::next_permutation(img.begin(), img.end()));
  return PermSet(d, std::move(found), true);
}

std::optional<int> global_fixed_point(const PermSet& Q) {
  if (Q.empty()) throw ValidationError("global_fixed_point needs a nonempty set");
  for (int x = 0; x < Q.degree(); ++x) {
    bool fixed_by_all = true;
    for (const Perm& q : Q.elements()) {
      if (q.apply0(x) != x) {
        fixed_by_all = false;
        break;
      }
    }
    if (fixed_by_all) return x + 1;
  }
  return std::nullopt;
}

PermSet conjugate_set(const PermSet& S, const Perm& g) {
  if (S.degree() != g.degree()) throw ValidationError("degree mismatch");
  const Perm ginv = g.inverse();
  std::vector<Perm> out;
  out.reserve(S.size());
  for (const Perm& s : S.elements()) out.push_back(g.compose(s).compose(ginv));
  return PermSet(S.degree(), std::move(out), S.is_group());
}

std::vector<Perm> small_generating_set(const PermSet& group) {
  if (!group.is_group()) throw ValidationError("small_generating_set needs a verified group");
  std::vector<Perm> gens;
  PermSet current(group.degree(), {Perm::identity(group.degree())}, true);
  for (const Perm& candidate : group.elements()) {
    if (current.contains(candidate)) continue;
    gens.push_back(candidate);
    current = generate(gens, group.size());
    if (current.size() == group.size()) break;
  }
  if (gens.empty()) gens.push_back(Perm::identity(group.degree()));
  return gens;
}

std::vector<Perm> regular_representation(const PermSet& group) {
  if (!group.is_group()) throw ValidationError("regular_representation needs a verified group");
  const auto& elems = group.elements();
  const int n = static_cast<int>(elems.size());
  auto index_of = [&](const Perm& p) {
    const auto it = std::lower_bound(elems.begin(), elems.end(), p);
    return static_cast<int>(it - elems.begin());
  };
  std::vector<Perm> out;
  for (const Perm& g : small_generating_set(group)) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
      img[static_cast<size_t>(i)] = index_of(g.compose(elems[static_cast<size_t>(i)])) + 1;
    out.push_back(Perm::from_images(img));
  }
  return out;
}

}  // namespace fpp
