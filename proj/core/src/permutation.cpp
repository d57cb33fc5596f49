#include "foxhom/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "foxhom/errors.hpp"

namespace foxhom {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree == 0) {
    throw Error(ErrorKind::PreconditionFailed, "permutation degree must be at least 1");
  }
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation Permutation::from_images(std::vector<int> images) {
  Permutation s(images.size());
  std::vector<bool> hit(images.size(), false);
  for (int v : images) {
    if (v < 0 || static_cast<std::size_t>(v) >= images.size() || hit[static_cast<std::size_t>(v)]) {
      throw Error(ErrorKind::PreconditionFailed, "image list is not a bijection");
    }
    hit[static_cast<std::size_t>(v)] = true;
  }
  s.images_ = std::move(images);
  return s;
}

Permutation Permutation::transposition(std::size_t degree, int i, int j) {
  Permutation s(degree);
  std::swap(s.images_[static_cast<std::size_t>(i)], s.images_[static_cast<std::size_t>(j)]);
  return s;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

Permutation operator*(const Permutation& s, const Permutation& t) {
  if (s.degree() != t.degree()) {
    throw Error(ErrorKind::PreconditionFailed, "permutation degree mismatch");
  }
  Permutation out(s.degree());
  for (std::size_t i = 0; i < s.degree(); ++i) {
    out.images_[i] = t.image(s.image(static_cast<int>(i)));
  }
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out(degree());
  for (std::size_t i = 0; i < degree(); ++i) {
    out.images_[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  }
  return out;
}

Permutation Permutation::pow(std::int64_t e) const {
  Permutation base = e >= 0 ? *this : inverse();
  std::uint64_t reps = e >= 0 ? static_cast<std::uint64_t>(e)
                              : static_cast<std::uint64_t>(-(e + 1)) + 1;
  Permutation acc(degree());
  while (reps) {
    if (reps & 1) acc = acc * base;
    base = base * base;
    reps >>= 1;
  }
  return acc;
}

std::string to_cycles(const Permutation& s) {
  std::ostringstream os;
  std::vector<bool> seen(s.degree(), false);
  bool any = false;
  for (std::size_t start = 0; start < s.degree(); ++start) {
    if (seen[start] || s.image(static_cast<int>(start)) == static_cast<int>(start)) continue;
    any = true;
    os << '(';
    int cur = static_cast<int>(start);
    bool first = true;
    do {
      seen[static_cast<std::size_t>(cur)] = true;
      if (!first) os << ' ';
      first = false;
      os << cur + 1;
      cur = s.image(cur);
    } while (cur != static_cast<int>(start));
    os << ')';
  }
  return any ? os.str() : "id";
}

Permutation parse_cycles(const std::string& text, std::size_t min_degree) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError(ErrorKind::SyntaxError, msg + " in permutation '" + text + "'", 1,
                     static_cast<int>(pos) + 1);
  };

  skip_ws();
  std::vector<std::vector<int>> cycles;
  if (text.compare(pos, 2, "id") == 0) {
    pos += 2;
  } else {
    while (pos < text.size() && text[pos] == '(') {
      ++pos;
      std::vector<int> cycle;
      while (true) {
        skip_ws();
        if (pos >= text.size()) fail("unbalanced '('");
        if (text[pos] == ')') {
          ++pos;
          break;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected point");
        int value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          value = value * 10 + (text[pos++] - '0');
          if (value > 1'000'000) fail("point out of range");
        }
        if (value < 1) fail("points are 1-based");
        cycle.push_back(value - 1);
      }
      if (cycle.size() < 2) fail("cycles need at least two points");
      cycles.push_back(std::move(cycle));
      skip_ws();
    }
    if (cycles.empty()) fail("expected 'id' or a cycle");
  }
  skip_ws();
  if (pos != text.size()) fail("trailing input");

  std::size_t degree = min_degree == 0 ? 1 : min_degree;
  for (const auto& cycle : cycles) {
    for (int v : cycle) degree = std::max(degree, static_cast<std::size_t>(v) + 1);
  }
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i];
      int to = cycle[(i + 1) % cycle.size()];
      if (used[static_cast<std::size_t>(from)]) {
        throw ParseError(ErrorKind::SyntaxError, "point repeated in '" + text + "'", 1, 1);
      }
      used[static_cast<std::size_t>(from)] = true;
      images[static_cast<std::size_t>(from)] = to;
    }
  }
  return Permutation::from_images(std::move(images));
}

}  // namespace foxhom
