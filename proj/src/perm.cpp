#include "hopfact/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hopfact/errors.hpp"

namespace hopfact {

Perm Perm::identity(int degree) {
  std::vector<int> im(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i) im[static_cast<size_t>(i)] = i;
  return Perm(std::move(im));
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || static_cast<size_t>(x) >= images_.size() || seen[static_cast<size_t>(x)])
      throw InputError("permutation image table is not a bijection");
    seen[static_cast<size_t>(x)] = 1;
  }
}

Perm Perm::from_cycles(const std::string& text, int degree) {
  std::vector<int> im(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i) im[static_cast<size_t>(i)] = i;

  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
      ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw InputError("cycle notation: expected '('");
    ++pos;
    std::vector<int> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw InputError("cycle notation: expected a point");
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        v = v * 10 + (text[pos++] - '0');
      if (v < 1 || v > degree)
        throw InputError("cycle notation: point " + std::to_string(v) + " out of range for degree " +
                         std::to_string(degree));
      cycle.push_back(v - 1);
      skip_ws();
    }
    if (pos >= text.size()) throw InputError("cycle notation: unterminated cycle");
    ++pos;  // ')'
    for (size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i];
      int to = cycle[(i + 1) % cycle.size()];
      if (im[static_cast<size_t>(from)] != from)
        throw InputError("cycle notation: point " + std::to_string(from + 1) + " repeated");
      im[static_cast<size_t>(from)] = to;
    }
    skip_ws();
  }
  return Perm(std::move(im));
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[static_cast<size_t>(i)] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[static_cast<size_t>(images_[static_cast<size_t>(i)])] = i;
  Perm p;
  p.images_ = std::move(inv);
  return p;
}

int Perm::first_moved_point() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[static_cast<size_t>(i)] != i) return i;
  return -1;
}

std::string Perm::to_cycles() const {
  std::ostringstream out;
  std::vector<char> seen(images_.size(), 0);
  bool any = false;
  for (int start = 0; start < degree(); ++start) {
    if (seen[static_cast<size_t>(start)] || images_[static_cast<size_t>(start)] == start) continue;
    any = true;
    out << '(';
    int x = start;
    bool first = true;
    do {
      seen[static_cast<size_t>(x)] = 1;
      if (!first) out << ' ';
      out << (x + 1);
      first = false;
      x = images_[static_cast<size_t>(x)];
    } while (x != start);
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw InputError("compose: degree mismatch");
  std::vector<int> im(static_cast<size_t>(p.degree()));
  for (int x = 0; x < p.degree(); ++x) im[static_cast<size_t>(x)] = p[q[x]];
  return Perm(std::move(im));
}

Perm commutator(const Perm& p, const Perm& q) {
  return compose(compose(p.inverse(), q.inverse()), compose(p, q));
}

Perm conjugate(const Perm& p, const Perm& g) {
  return compose(compose(g.inverse(), p), g);
}

size_t PermHash::operator()(const Perm& p) const { return IntVecHash{}(p.images()); }

size_t IntVecHash::operator()(const std::vector<int>& v) const {
  size_t h = 1469598103934665603ull;
  for (int x : v) {
    h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace hopfact
