#ifndef HOPFACT_PERM_GROUP_HPP
#define HOPFACT_PERM_GROUP_HPP

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "hopfact/perm.hpp"

namespace hopfact {

using Int = mpz_class;

/// A permutation group held as a base and strong generating set, built by
/// deterministic Schreier-Sims. Construction order is fixed (generators in
/// list order, orbit points in discovery order, base points extended by
/// lowest moved point), so two builds from the same generator list produce
/// identical bases, transversals and strong generators.
///
/// Immutable after construction.
class PermGroup {
public:
  /// One level of the stabilizer chain: the group generated by `gens`
  /// fixes all earlier base points; `orbit` is the orbit of `point` under
  /// it, in discovery order, with orbit[0] == point. reps[i] maps point to
  /// orbit[i].
  struct Level {
    int point = -1;
    std::vector<Perm> gens;
    std::vector<int> orbit;
    std::vector<int> orbit_pos;  // degree-sized; position+1 in orbit, 0 = absent
    std::vector<Perm> reps;
  };

  static PermGroup trivial(int degree);

  /// Schreier-Sims over the given generators. Throws InputError on an
  /// empty list or inconsistent degrees.
  static PermGroup from_generators(std::vector<Perm> generators);

  /// Same, but the base is forced to begin with `initial_base` (in order),
  /// extended as needed. Forced points are kept even when redundant.
  static PermGroup from_generators_with_base(std::vector<Perm> generators,
                                             std::vector<int> initial_base);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Level>& levels() const { return levels_; }
  std::vector<int> base() const;
  std::vector<Perm> strong_generators() const;

  Int order() const;
  bool is_trivial() const { return order() == 1; }

  /// Membership via sifting through the stabilizer chain.
  bool contains(const Perm& p) const;

  /// Sift from the given level; returns the residue and the level at which
  /// sifting stopped (levels_.size() when it ran through the whole chain).
  std::pair<Perm, size_t> sift(const Perm& p, size_t from_level = 0) const;

  /// Subgroup fixing the point x, via Schreier generators; satisfies
  /// |G| = |orbit(x)| * |result|.
  PermGroup point_stabilizer(int x) const;

  /// Subgroup fixing every listed point, in order.
  PermGroup pointwise_stabilizer(const std::vector<int>& points) const;

  /// Commutator subgroup: normal closure of generator-pair commutators.
  PermGroup derived_subgroup() const;

  bool is_perfect() const;
  Int abelianization_order() const;

  /// All elements in a deterministic order (products of transversal
  /// representatives). Throws ResourceError when the order exceeds bound.
  std::vector<Perm> elements(int64_t bound) const;

  /// True when every generator of H sifts to identity here.
  bool has_subgroup(const PermGroup& h) const;

private:
  PermGroup() = default;

  void ensure_level_for(const Perm& g);
  void add_generator(const Perm& g);
  void recompute_orbit(size_t i);
  void complete_chain();
  PermGroup level_group(size_t i) const;

  int degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Level> levels_;
};

}  // namespace hopfact

#endif
