#ifndef HOPFACT_PERM_HPP
#define HOPFACT_PERM_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace hopfact {

/// A permutation of {0..n-1}, stored as its image table. Immutable value
/// type; every group element in the library is one of these.
class Perm {
public:
  Perm() = default;

  /// Identity of the given degree.
  static Perm identity(int degree);

  /// From an image table. Throws InputError if not a bijection.
  explicit Perm(std::vector<int> images);

  /// Parses cycle notation, e.g. "(1 2)(3 4 5)". Points are 1-based in
  /// text form and shifted down to 0-based. Commas are accepted as
  /// separators. "()" or an empty string is the identity.
  static Perm from_cycles(const std::string& text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int x) const { return images_[static_cast<size_t>(x)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;

  Perm inverse() const;

  /// Least x with p(x) != x, or -1 for the identity.
  int first_moved_point() const;

  /// Cycle notation with 1-based points, e.g. "(1 2)(3 4 5)"; "()" for
  /// the identity.
  std::string to_cycles() const;

  friend bool operator==(const Perm& a, const Perm& b) = default;

private:
  std::vector<int> images_;
};

/// Product p*q acting as x -> p(q(x)): q is applied first.
Perm compose(const Perm& p, const Perm& q);

/// p^-1 * q^-1 * p * q.
Perm commutator(const Perm& p, const Perm& q);

/// g^-1 * p * g.
Perm conjugate(const Perm& p, const Perm& g);

struct PermHash {
  size_t operator()(const Perm& p) const;
};

struct IntVecHash {
  size_t operator()(const std::vector<int>& v) const;
};

}  // namespace hopfact

#endif
