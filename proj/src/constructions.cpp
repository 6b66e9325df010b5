#include "fpp/constructions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "fpp/charpoly.hpp"
#include "fpp/errors.hpp"
#include "fpp/gqp.hpp"
#include "fpp/permgroup.hpp"
#include "fpp/permset.hpp"

namespace fpp {

namespace {

long gcd_long(long a, long b) { return std::gcd(a, b); }

// Greedy generating set of the unit group (Z/dZ)^x.
std::vector<long> unit_group_generators(long d) {
  std::vector<long> units;
  for (long a = 1; a < d; ++a)
    if (gcd_long(a, d) == 1) units.push_back(a);
  if (d == 1) units.push_back(0);

  std::vector<long> gens;
  std::vector<bool> generated(static_cast<size_t>(std::max(d, 1L)), false);
  generated[1 % std::max(d, 1L)] = true;
  long covered = 1;
  for (long u : units) {
    if (generated[static_cast<size_t>(u)]) continue;
    gens.push_back(u);
    // close the generated subgroup
    bool grew = true;
    while (grew) {
      grew = false;
      for (long a = 0; a < d; ++a) {
        if (!generated[static_cast<size_t>(a)]) continue;
        for (long g : gens) {
          const long b = (a * g) % d;
          if (!generated[static_cast<size_t>(b)]) {
            generated[static_cast<size_t>(b)] = true;
            ++covered;
            grew = true;
          }
        }
      }
    }
    if (covered == static_cast<long>(units.size())) break;
  }
  return gens;
}

Perm residue_map_to_perm(int d, const std::function<long(long)>& f) {
  std::vector<int> img(static_cast<size_t>(d));
  for (long x = 0; x < d; ++x) img[static_cast<size_t>(x)] = static_cast<int>(f(x)) + 1;
  return Perm::from_images(img);
}

}  // namespace

BitMatrix::BitMatrix(int n, std::vector<std::uint32_t> rows) : n_(n), rows_(std::move(rows)) {
  if (n < 1 || n > 31) throw ValidationError("BitMatrix size out of range");
  if (rows_.size() != static_cast<size_t>(n)) throw ValidationError("BitMatrix row count mismatch");
  const std::uint32_t mask = (1u << n) - 1u;
  for (auto& r : rows_) r &= mask;
}

BitMatrix BitMatrix::identity(int n) {
  std::vector<std::uint32_t> rows(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) rows[static_cast<size_t>(i)] = 1u << i;
  return BitMatrix(n, std::move(rows));
}

bool BitMatrix::invertible() const {
  std::vector<std::uint32_t> work = rows_;
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int r = col; r < n_; ++r) {
      if ((work[static_cast<size_t>(r)] >> col) & 1u) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return false;
    std::swap(work[static_cast<size_t>(col)], work[static_cast<size_t>(pivot)]);
    for (int r = 0; r < n_; ++r)
      if (r != col && ((work[static_cast<size_t>(r)] >> col) & 1u))
        work[static_cast<size_t>(r)] ^= work[static_cast<size_t>(col)];
  }
  return true;
}

BitMatrix BitMatrix::plus_identity() const {
  std::vector<std::uint32_t> rows = rows_;
  for (int i = 0; i < n_; ++i) rows[static_cast<size_t>(i)] ^= 1u << i;
  return BitMatrix(n_, std::move(rows));
}

std::uint32_t BitMatrix::apply(std::uint32_t v) const {
  std::uint32_t out = 0;
  for (int i = 0; i < n_; ++i)
    if (__builtin_popcount(rows_[static_cast<size_t>(i)] & v) & 1) out |= 1u << i;
  return out;
}

FactoredInt factorize(long d) {
  if (d < 1) throw ValidationError("factorize needs d >= 1");
  if (d > 1000000000L) throw ResourceLimitError("factorize guard: d <= 10^9");
  FactoredInt out;
  out.value = d;
  for (long p = 2; p * p <= d; ++p) {
    if (d % p) continue;
    int e = 0;
    while (d % p == 0) {
      d /= p;
      ++e;
    }
    out.factors.emplace_back(p, e);
  }
  if (d > 1) out.factors.emplace_back(d, 1);
  return out;
}

GroupPair affine_group(int d) {
  if (d < 3) throw ValidationError("affine_group needs d >= 3");
  GroupPair out;
  out.Qgens.push_back(residue_map_to_perm(d, [d](long x) { return (x + 1) % d; }));
  out.Pgens = out.Qgens;
  for (long a : unit_group_generators(d))
    out.Pgens.push_back(residue_map_to_perm(d, [a, d](long x) { return (a * x) % d; }));
  return out;
}

long psi(long d) {
  const FactoredInt f = factorize(d);
  long value = d;
  for (const auto& [p, e] : f.factors) {
    value /= p;
    value *= p - 2;
  }
  return value;
}

long phi(long d) {
  const FactoredInt f = factorize(d);
  long value = d;
  for (const auto& [p, e] : f.factors) {
    value /= p;
    value *= p - 1;
  }
  return value;
}

Rational fpp_construction1(long d) {
  if (d < 3) throw ValidationError("fpp_construction1 needs d >= 3");
  Rational out(psi(d), phi(d));
  out.canonicalize();
  return out;
}

long count_linear_solutions(long alpha, long beta, long n) {
  if (n < 1) throw ValidationError("count_linear_solutions needs n >= 1");
  const long g = gcd_long(((alpha % n) + n) % n, n);
  const long b = ((beta % n) + n) % n;
  return b % g == 0 ? g : 0;
}

namespace {

// Stack-allocated elimination; the scan at n = 5 visits 2^25 matrices.
inline bool rows_invertible(const std::uint32_t* rows, int n) {
  std::uint32_t work[5];
  for (int i = 0; i < n; ++i) work[i] = rows[i];
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if ((work[r] >> col) & 1u) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return false;
    std::swap(work[col], work[pivot]);
    for (int r = col + 1; r < n; ++r)
      if ((work[r] >> col) & 1u) work[r] ^= work[col];
  }
  return true;
}

}  // namespace

GlCount gl_counts(int n) {
  if (n < 1 || n > 5) throw ValidationError("gl_counts supports 1 <= n <= 5");
  GlCount out;
  const std::uint64_t total = 1ull << (n * n);
  const std::uint32_t row_mask = (1u << n) - 1u;
  std::uint32_t rows[5];
  std::uint32_t shifted[5];
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int i = 0; i < n; ++i) {
      rows[i] = static_cast<std::uint32_t>(c) & row_mask;
      c >>= n;
    }
    if (!rows_invertible(rows, n)) continue;
    ++out.order;
    for (int i = 0; i < n; ++i) shifted[i] = rows[i] ^ (1u << i);
    if (rows_invertible(shifted, n)) ++out.good;
  }
  return out;
}

BitMatrix block_matrix(int n) {
  if (n < 2)
    throw ValidationError("no witness exists for n = 1: GL_1(F_2) has only the identity");
  const std::vector<std::uint32_t> a2{0b11, 0b01};         // rows of [[1,1],[1,0]]
  const std::vector<std::uint32_t> a3{0b111, 0b011, 0b001};  // rows of [[1,1,1],[1,1,0],[1,0,0]]

  std::vector<std::uint32_t> rows(static_cast<size_t>(n), 0);
  int placed = 0;
  const int two_blocks = (n % 2 == 0) ? n / 2 : (n - 3) / 2;
  for (int b = 0; b < two_blocks; ++b) {
    for (int i = 0; i < 2; ++i) rows[static_cast<size_t>(placed + i)] = a2[static_cast<size_t>(i)] << placed;
    placed += 2;
  }
  if (n % 2 == 1) {
    for (int i = 0; i < 3; ++i) rows[static_cast<size_t>(placed + i)] = a3[static_cast<size_t>(i)] << placed;
    placed += 3;
  }

  BitMatrix A(n, std::move(rows));
  if (!A.invertible() || !A.plus_identity().invertible())
    throw InternalError("block matrix witness failed its invertibility check");
  return A;
}

Rational fpp_construction2(long d) {
  if (d < 3) throw ValidationError("fpp_construction2 needs d >= 3");
  int n = 0;
  long r = d;
  while (r % 2 == 0) {
    r /= 2;
    ++n;
  }
  Rational gl_factor(1);
  if (n > 0) {
    if (n > 5) throw ResourceLimitError("fpp_construction2 supports 2-parts up to 2^5");
    const GlCount counts = gl_counts(n);
    gl_factor = make_rational(counts.good, counts.order);
  }
  Rational odd_factor(1);
  for (const auto& [p, e] : factorize(r).factors)
    odd_factor *= make_rational(p - 2, p - 1);
  Rational out = gl_factor * odd_factor;
  out.canonicalize();
  return out;
}

GroupPair realize_construction2(int d) {
  if (d < 3) throw ValidationError("realize_construction2 needs d >= 3");
  if (d > 16) throw ValidationError("realize_construction2 supports d <= 16");
  int n = 0;
  long r = d;
  while (r % 2 == 0) {
    r /= 2;
    ++n;
  }

  // Point 1 + (v*r + z) stands for the element (vector v, residue z) of Q,
  // v ranging over F_2^n read as a binary number, z over Z/rZ.
  const long vec_count = 1L << n;
  auto point_of = [&](std::uint32_t v, long z) {
    return static_cast<int>(static_cast<long>(v) * r + z) + 1;
  };
  auto perm_from_action = [&](auto&& act) {
    std::vector<int> img(static_cast<size_t>(d));
    for (std::uint32_t v = 0; v < static_cast<std::uint32_t>(vec_count); ++v)
      for (long z = 0; z < r; ++z) {
        const auto [v2, z2] = act(v, z);
        img[static_cast<size_t>(point_of(v, z) - 1)] = point_of(v2, z2);
      }
    return Perm::from_images(img);
  };

  GroupPair out;
  // Q: translations by the basis vectors and by 1 in the residue part.
  for (int i = 0; i < n; ++i) {
    const std::uint32_t e = 1u << i;
    out.Qgens.push_back(perm_from_action(
        [e](std::uint32_t v, long z) { return std::pair<std::uint32_t, long>(v ^ e, z); }));
  }
  if (r > 1)
    out.Qgens.push_back(perm_from_action(
        [r](std::uint32_t v, long z) { return std::pair<std::uint32_t, long>(v, (z + 1) % r); }));

  // P adds Aut(Q) = GL_n(F_2) x (Z/rZ)^x acting coordinate-wise. The
  // transvections I + E_ij generate GL_n(F_2).
  out.Pgens = out.Qgens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      BitMatrix t = BitMatrix::identity(n);
      std::vector<std::uint32_t> rows = t.rows();
      rows[static_cast<size_t>(i)] |= 1u << j;
      const BitMatrix transvection(n, std::move(rows));
      out.Pgens.push_back(perm_from_action([&transvection](std::uint32_t v, long z) {
        return std::pair<std::uint32_t, long>(transvection.apply(v), z);
      }));
    }
  for (long a : unit_group_generators(r))
    out.Pgens.push_back(perm_from_action(
        [a, r](std::uint32_t v, long z) { return std::pair<std::uint32_t, long>(v, (a * z) % r); }));
  return out;
}

UnifixReport search_unifix(int d, const std::vector<Perm>& Qgens,
                           const std::optional<std::vector<Perm>>& Pgens,
                           const std::string& q_name) {
  const PermSet Q = generate(Qgens);
  if (Q.degree() != d) throw ValidationError("Q generator degree mismatch");
  if (!is_transitive(Q)) throw ValidationError("search_unifix needs a transitive Q");

  PermSet P = Pgens ? generate(*Pgens) : normalizer_in_sym(Q);
  if (Pgens && !is_normal(Q, P)) throw ValidationError("Q is not normal in the supplied P");

  UnifixReport report;
  report.degree = d;
  report.q_name = q_name;
  report.q_order = static_cast<long>(Q.size());
  report.p_order = static_cast<long>(P.size());
  for (const Coset& A : cosets(Q, P)) {
    const DerangementProfile D = profile(A.elements);
    const bool unifix = D.counts[1] == D.total;
    report.found = report.found || unifix;
    report.cosets.push_back({A.representative, unifix});
  }
  report.index = static_cast<long>(report.cosets.size());
  report.note = Pgens ? "P supplied by caller" : "P = normalizer of Q in Sym(d)";
  return report;
}

std::vector<std::pair<std::string, std::vector<Perm>>> builtin_unifix_candidates(int d) {
  if (d < 3) throw ValidationError("builtin candidates need d >= 3");
  std::vector<std::pair<std::string, std::vector<Perm>>> out;

  std::vector<int> rotation(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) rotation[static_cast<size_t>(i)] = (i + 1) % d + 1;
  out.emplace_back("cyclic", std::vector<Perm>{Perm::from_images(rotation)});

  std::vector<int> reflection(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) reflection[static_cast<size_t>(i)] = (d - i) % d + 1;
  out.emplace_back("dihedral",
                   std::vector<Perm>{Perm::from_images(rotation), Perm::from_images(reflection)});

  if ((d & (d - 1)) == 0) {
    // Elementary abelian regular representation for d = 2^k.
    std::vector<Perm> transpositions;
    int k = 0;
    for (int t = d; t > 1; t /= 2) ++k;
    for (int i = 0; i < k; ++i) {
      std::vector<int> img(static_cast<size_t>(2 * k));
      std::iota(img.begin(), img.end(), 1);
      std::swap(img[static_cast<size_t>(2 * i)], img[static_cast<size_t>(2 * i + 1)]);
      transpositions.push_back(Perm::from_images(img));
    }
    out.emplace_back("elementary_abelian", regular_representation(generate(transpositions)));
  }

  if (d == 6) {
    const PermSet sym3 = generate({parse_perm("(1,2,3)", 3), parse_perm("(1,2)", 3)});
    out.emplace_back("sym3_regular", regular_representation(sym3));
  }
  return out;
}

}  // namespace fpp
