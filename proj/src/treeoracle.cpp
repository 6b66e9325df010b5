#include "fpp/treeoracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "fpp/charpoly.hpp"
#include "fpp/errors.hpp"
#include "fpp/permgroup.hpp"

namespace fpp {

namespace {

constexpr size_t kMaxInternalVertices = 50000000;

// Offsets of each level inside the breadth-first internal-vertex array:
// level l occupies [offsets[l], offsets[l+1]).
std::vector<size_t> level_offsets(int degree, int depth) {
  std::vector<size_t> offsets{0};
  size_t level_size = 1;
  for (int l = 0; l < depth; ++l) {
    offsets.push_back(offsets.back() + level_size);
    if (level_size > kMaxInternalVertices / static_cast<size_t>(degree))
      throw ResourceLimitError("truncated tree is too large");
    level_size *= static_cast<size_t>(degree);
  }
  if (offsets.back() > kMaxInternalVertices)
    throw ResourceLimitError("truncated tree is too large");
  return offsets;
}

std::vector<int> parse_address(const std::string& address, int degree) {
  std::vector<int> digits;
  if (address.empty()) return digits;
  std::istringstream in(address);
  std::string part;
  while (std::getline(in, part, '.')) {
    if (part.empty()) throw ValidationError("malformed vertex address");
    long value = 0;
    for (char c : part) {
      if (c < '0' || c > '9') throw ValidationError("malformed vertex address");
      value = value * 10 + (c - '0');
      if (value > degree) throw ValidationError("vertex address digit out of range");
    }
    if (value < 1) throw ValidationError("vertex address digit out of range");
    digits.push_back(static_cast<int>(value));
  }
  return digits;
}

std::string format_address(const std::vector<int>& digits) {
  std::ostringstream out;
  for (size_t i = 0; i < digits.size(); ++i) {
    if (i) out << '.';
    out << digits[i];
  }
  return out.str();
}

// True when the portrait (label indices into `elems`) fixes some level-n vertex.
bool fixes_a_leaf(const std::vector<const Perm*>& labels, const std::vector<size_t>& offsets,
                  int degree, int depth, size_t vertex, int level) {
  if (level == depth) return true;
  const Perm& p = *labels[vertex];
  const size_t child_base = offsets[static_cast<size_t>(level + 1)] +
                            (vertex - offsets[static_cast<size_t>(level)]) *
                                static_cast<size_t>(degree);
  for (int x = 0; x < degree; ++x) {
    if (p.apply0(x) != x) continue;
    if (level + 1 == depth) return true;
    if (fixes_a_leaf(labels, offsets, degree, depth, child_base + static_cast<size_t>(x),
                     level + 1))
      return true;
  }
  return false;
}

}  // namespace

TruncatedAutomorphism::TruncatedAutomorphism(int degree, int depth,
                                             const std::map<std::string, Perm>& sparse_portrait)
    : degree_(degree), depth_(depth) {
  if (degree < 1) throw ValidationError("degree must be >= 1");
  if (depth < 0) throw ValidationError("depth must be >= 0");
  const auto offsets = level_offsets(degree, depth);
  labels_.assign(offsets.back(), Perm::identity(degree));
  for (const auto& [address, perm] : sparse_portrait) {
    if (perm.degree() != degree) throw ValidationError("portrait label degree mismatch");
    int level = 0;
    const size_t index = index_of(address, &level);
    if (level >= depth) throw ValidationError("portrait label below an internal vertex");
    labels_[index] = perm;
  }
}

size_t TruncatedAutomorphism::index_of(const std::string& address, int* level_out) const {
  const auto digits = parse_address(address, degree_);
  if (static_cast<int>(digits.size()) > depth_) throw ValidationError("address out of range");
  const auto offsets = level_offsets(degree_, depth_);
  size_t index = 0;
  for (size_t i = 0; i < digits.size(); ++i) {
    index = offsets[i + 1] + (index - offsets[i]) * static_cast<size_t>(degree_) +
            static_cast<size_t>(digits[i] - 1);
  }
  *level_out = static_cast<int>(digits.size());
  return index;
}

const Perm& TruncatedAutomorphism::label(const std::string& address) const {
  int level = 0;
  const size_t index = index_of(address, &level);
  if (level >= depth_) throw ValidationError("address is not an internal vertex");
  return labels_[index];
}

std::string TruncatedAutomorphism::apply(const std::string& address) const {
  const auto digits = parse_address(address, degree_);
  if (static_cast<int>(digits.size()) > depth_) throw ValidationError("address out of range");
  const auto offsets = level_offsets(degree_, depth_);

  std::vector<int> image;
  image.reserve(digits.size());
  size_t vertex = 0;  // current vertex along the domain path
  for (size_t i = 0; i < digits.size(); ++i) {
    const int x = digits[i];
    image.push_back(labels_[vertex].apply(x));
    if (i + 1 < digits.size())
      vertex = offsets[i + 1] + (vertex - offsets[i]) * static_cast<size_t>(degree_) +
               static_cast<size_t>(x - 1);
  }
  return format_address(image);
}

std::string apply_automorphism(const TruncatedAutomorphism& a, const std::string& address) {
  return a.apply(address);
}

std::vector<Integer> sigma_sequence(const PermSet& S, int n) {
  if (n < 0) throw ValidationError("n must be >= 0");
  if (S.empty()) throw ValidationError("sigma_sequence needs a nonempty set");
  std::vector<Integer> out;
  Integer vertex_count = 0;  // (d^k - 1)/(d - 1)
  Integer level_size = 1;
  for (int k = 0; k <= n; ++k) {
    if (!vertex_count.fits_ulong_p() || vertex_count > 10000000)
      throw ResourceLimitError("sigma_sequence value would not fit in memory");
    Integer sigma;
    mpz_pow_ui(sigma.get_mpz_t(), Integer(static_cast<long>(S.size())).get_mpz_t(),
               vertex_count.get_ui());
    out.push_back(sigma);
    vertex_count += level_size;
    level_size *= S.degree();
  }
  return out;
}

std::vector<Rational> recurrence_p(const PermSet& S, int n) {
  if (n < 0) throw ValidationError("n must be >= 0");
  const RationalPoly f = char_polynomial(profile(S));
  std::vector<Rational> p{Rational(1)};
  for (int k = 0; k < n; ++k) p.push_back(f.eval(p.back()));
  return p;
}

std::vector<Enclosure> recurrence_p_enclosed(const PermSet& S, int n, int frac_bits) {
  if (n < 0) throw ValidationError("n must be >= 0");
  if (frac_bits < 1) throw ValidationError("frac_bits must be >= 1");
  const RationalPoly f = char_polynomial(profile(S));
  std::vector<Enclosure> out{{Rational(1), Rational(1)}};
  for (int k = 0; k < n; ++k) {
    // f is nondecreasing on [0,1], so endpoint images enclose the image.
    Rational lo = floor_to_dyadic(f.eval(out.back().lo), frac_bits);
    Rational hi = ceil_to_dyadic(f.eval(out.back().hi), frac_bits);
    if (lo < 0) lo = Rational(0);
    if (hi > 1) hi = Rational(1);
    out.push_back({std::move(lo), std::move(hi)});
  }
  return out;
}

Rational EnumerationResult::proportion() const {
  Rational q(fixing, sigma);
  q.canonicalize();
  return q;
}

EnumerationResult enumerate_count(const PermSet& S, int n, const Integer& limit) {
  if (n < 0) throw ValidationError("n must be >= 0");
  if (S.empty()) throw ValidationError("enumerate_count needs a nonempty set");
  const int d = S.degree();
  const auto offsets = level_offsets(d, n);
  const size_t internal = offsets.back();

  // Cheap bit-length screen before materializing #S^internal.
  const double sigma_bits =
      static_cast<double>(internal) * std::log2(static_cast<double>(S.size()));
  const double limit_bits = static_cast<double>(mpz_sizeinbase(limit.get_mpz_t(), 2));
  if (sigma_bits > limit_bits + 64)
    throw ResourceLimitError("enumeration needs sigma_n = " + std::to_string(S.size()) + "^" +
                             std::to_string(internal) + " portraits, above the limit of " +
                             limit.get_str());
  Integer sigma;
  mpz_pow_ui(sigma.get_mpz_t(), Integer(static_cast<long>(S.size())).get_mpz_t(),
             static_cast<unsigned long>(internal));
  if (sigma > limit)
    throw ResourceLimitError("enumeration needs sigma_n = " + sigma.get_str() +
                             " portraits, above the limit of " + limit.get_str());

  if (n == 0) return {Integer(1), Integer(1)};

  const size_t m = S.size();
  std::vector<size_t> odometer(internal, 0);
  std::vector<const Perm*> labels(internal, &S.at(0));
  Integer fixing = 0;
  while (true) {
    if (fixes_a_leaf(labels, offsets, d, n, 0, 0)) ++fixing;
    size_t pos = 0;
    while (pos < internal) {
      if (++odometer[pos] < m) {
        labels[pos] = &S.at(odometer[pos]);
        break;
      }
      odometer[pos] = 0;
      labels[pos] = &S.at(0);
      ++pos;
    }
    if (pos == internal) break;
  }
  return {std::move(sigma), std::move(fixing)};
}

GqpEnumeration enumerate_count_gqp(const PermSet& Q, const PermSet& P, int n,
                                   const Integer& limit) {
  if (!is_normal(Q, P)) throw ValidationError("Q must be normal in P");
  GqpEnumeration out{Integer(0), Integer(0), {}};
  for (const Coset& A : cosets(Q, P)) {
    EnumerationResult r = enumerate_count(A.elements, n, limit);
    out.size += r.sigma;
    out.fixing += r.fixing;
    out.per_coset.push_back(std::move(r));
  }
  return out;
}

MonteCarloResult monte_carlo_p(const PermSet& S, int n, long trials, std::uint64_t seed) {
  if (trials < 1) throw ValidationError("trials must be >= 1");
  if (S.empty()) throw ValidationError("monte_carlo_p needs a nonempty set");
  const int d = S.degree();
  const auto offsets = level_offsets(d, n);
  const size_t internal = offsets.back();
  const std::uint64_t m = S.size();

  std::mt19937_64 rng(seed);
  // Unbiased bounded draw by rejection; avoids distribution objects whose
  // output is implementation-defined.
  const std::uint64_t reject_above = std::numeric_limits<std::uint64_t>::max() -
                                     std::numeric_limits<std::uint64_t>::max() % m;
  auto draw = [&]() {
    for (;;) {
      const std::uint64_t r = rng();
      if (r < reject_above) return static_cast<size_t>(r % m);
    }
  };

  std::vector<const Perm*> labels(internal, &S.at(0));
  long hits = 0;
  for (long t = 0; t < trials; ++t) {
    for (size_t v = 0; v < internal; ++v) labels[v] = &S.at(draw());
    if (internal == 0 ? true : fixes_a_leaf(labels, offsets, d, n, 0, 0)) ++hits;
  }
  const double estimate = static_cast<double>(hits) / static_cast<double>(trials);
  const double halfwidth =
      2.576 * std::sqrt(estimate * (1.0 - estimate) / static_cast<double>(trials));
  return {estimate, halfwidth, trials};
}

FppSequence build_sequence(const PermSet& S, int n, const Integer& limit) {
  FppSequence seq;
  seq.sigma = sigma_sequence(S, n);
  seq.p = recurrence_p(S, n);
  if (seq.sigma.back() <= limit) {
    std::vector<Integer> f;
    for (int k = 0; k <= n; ++k) f.push_back(enumerate_count(S, k, limit).fixing);
    seq.f = std::move(f);
  }
  return seq;
}

}  // namespace fpp
