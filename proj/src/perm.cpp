#include "fpp/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "fpp/errors.hpp"

namespace fpp {

Perm Perm::identity(int degree) {
  if (degree < 1) throw ValidationError("degree must be >= 1");
  std::vector<int> img(static_cast<size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

Perm Perm::from_images(const std::vector<int>& images_1based) {
  const int d = static_cast<int>(images_1based.size());
  if (d < 1) throw ValidationError("degree must be >= 1");
  std::vector<int> img(static_cast<size_t>(d));
  std::vector<bool> seen(static_cast<size_t>(d), false);
  for (int i = 0; i < d; ++i) {
    const int y = images_1based[static_cast<size_t>(i)];
    if (y < 1 || y > d) throw ValidationError("image out of range");
    if (seen[static_cast<size_t>(y - 1)]) throw ValidationError("image table is not a bijection");
    seen[static_cast<size_t>(y - 1)] = true;
    img[static_cast<size_t>(i)] = y - 1;
  }
  return Perm(std::move(img));
}

Perm Perm::compose(const Perm& h) const {
  if (degree() != h.degree()) throw ValidationError("degree mismatch in composition");
  std::vector<int> img(img_.size());
  for (size_t i = 0; i < img_.size(); ++i)
    img[i] = img_[static_cast<size_t>(h.img_[i])];
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<int> img(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) img[static_cast<size_t>(img_[i])] = static_cast<int>(i);
  return Perm(std::move(img));
}

int Perm::fixed_points() const {
  int count = 0;
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] == static_cast<int>(i)) ++count;
  return count;
}

bool Perm::is_identity() const { return fixed_points() == degree(); }

std::vector<int> Perm::images() const {
  std::vector<int> out(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) out[i] = img_[i] + 1;
  return out;
}

std::string Perm::cycle_string() const {
  std::ostringstream out;
  std::vector<bool> visited(img_.size(), false);
  bool any = false;
  for (size_t start = 0; start < img_.size(); ++start) {
    if (visited[start] || img_[start] == static_cast<int>(start)) continue;
    any = true;
    out << '(';
    size_t i = start;
    bool first = true;
    do {
      if (!first) out << ',';
      out << i + 1;
      first = false;
      visited[i] = true;
      i = static_cast<size_t>(img_[i]);
    } while (i != start);
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

std::uint64_t Perm::packed_key() const {
  std::uint64_t key = 0;
  for (size_t i = 0; i < img_.size(); ++i)
    key |= static_cast<std::uint64_t>(img_[i]) << (4 * i);
  return key;
}

namespace {

struct CycleParser {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos == text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw ValidationError("malformed cycle notation: expected '" + std::string(1, c) + "'");
    ++pos;
  }
  int read_int() {
    skip_ws();
    size_t begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == begin) throw ValidationError("malformed cycle notation: expected integer");
    long value = 0;
    for (size_t i = begin; i < pos; ++i) {
      value = value * 10 + (text[i] - '0');
      if (value > 1000000) throw ValidationError("point out of range");
    }
    return static_cast<int>(value);
  }
};

}  // namespace

Perm parse_perm(std::string_view text, int degree) {
  if (degree < 1) throw ValidationError("degree must be >= 1");
  CycleParser parser{text};
  if (parser.done()) throw ValidationError("malformed cycle notation: empty input");

  std::vector<std::vector<int>> cycles;
  bool empty_cycle_seen = false;
  while (!parser.done()) {
    parser.expect('(');
    if (parser.peek() == ')') {
      parser.expect(')');
      empty_cycle_seen = true;
      continue;
    }
    std::vector<int> cycle;
    cycle.push_back(parser.read_int());
    while (parser.peek() == ',') {
      parser.expect(',');
      cycle.push_back(parser.read_int());
    }
    parser.expect(')');
    if (cycle.size() < 2) throw ValidationError("malformed cycle notation: cycle needs >= 2 points");
    for (int x : cycle) {
      if (x < 1 || x > degree) throw ValidationError("point out of range");
    }
    for (size_t i = 0; i < cycle.size(); ++i)
      for (size_t j = i + 1; j < cycle.size(); ++j)
        if (cycle[i] == cycle[j]) throw ValidationError("repeated point within a cycle");
    cycles.push_back(std::move(cycle));
  }
  if (empty_cycle_seen && !cycles.empty())
    throw ValidationError("malformed cycle notation: \"()\" must stand alone");

  // Rightmost cycle acts first.
  Perm result = Perm::identity(degree);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    std::vector<int> img(static_cast<size_t>(degree));
    std::iota(img.begin(), img.end(), 1);
    const auto& cycle = *it;
    for (size_t i = 0; i < cycle.size(); ++i)
      img[static_cast<size_t>(cycle[i] - 1)] = cycle[(i + 1) % cycle.size()];
    result = Perm::from_images(img).compose(result);
  }
  return result;
}

int fixed_point_count(const Perm& p) { return p.fixed_points(); }

}  // namespace fpp
