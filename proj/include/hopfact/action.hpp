#ifndef HOPFACT_ACTION_HPP
#define HOPFACT_ACTION_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "hopfact/config.hpp"
#include "hopfact/perm_group.hpp"

namespace hopfact {

/// An action of (elements of) a permutation group on an indexed domain of
/// objects. apply(identity, x) == x and apply(gh, x) == apply(g, apply(h, x))
/// hold for every implementation.
class GroupAction {
public:
  virtual ~GroupAction() = default;

  virtual int64_t domain_size() const = 0;
  virtual int apply(const Perm& g, int object) const = 0;
  virtual std::string label(int object) const = 0;

  /// True when every domain object is already indexed (point and coset
  /// actions); subset actions register objects on demand.
  virtual bool materialized() const { return true; }
};

/// The natural action on {0..degree-1}.
class PointAction final : public GroupAction {
public:
  explicit PointAction(int degree) : degree_(degree) {}
  int64_t domain_size() const override { return degree_; }
  int apply(const Perm& g, int object) const override;
  std::string label(int object) const override { return std::to_string(object); }

private:
  int degree_;
};

/// Action on k-subsets of {0..degree-1}. Objects are registered the first
/// time they are seen, so indices are deterministic for a fixed query
/// sequence but the full domain is never materialized.
class SubsetAction final : public GroupAction {
public:
  SubsetAction(int degree, int k);
  int64_t domain_size() const override;
  int apply(const Perm& g, int object) const override;
  std::string label(int object) const override;
  bool materialized() const override { return false; }

  /// Index of the subset (any order, deduplicated internally).
  int index_of(std::vector<int> subset) const;
  const std::vector<int>& subset(int object) const;

private:
  int degree_;
  int k_;
  mutable std::vector<std::vector<int>> objects_;
  mutable std::unordered_map<std::vector<int>, int, IntVecHash> index_;
};

/// Canonical representative of the left coset x*H: descend H's stabilizer
/// chain, at each level multiplying by the transversal element that
/// minimizes the next base-point image. The result depends only on the
/// coset, and costs O(base length * degree).
Perm coset_canonical_rep(const PermGroup& h, const Perm& x);

/// Left-multiplication action of G on the cosets of H, fully enumerated at
/// construction with canonical representatives as labels. Object 0..n-1 in
/// BFS discovery order from the identity coset.
class CosetAction final : public GroupAction {
public:
  /// Requires H <= G (checked); throws ResourceError when the index
  /// exceeds cfg.coset_bound.
  CosetAction(const PermGroup& g, const PermGroup& h, const RunConfig& cfg = {});

  int64_t domain_size() const override { return static_cast<int64_t>(reps_.size()); }
  int apply(const Perm& g, int object) const override;
  std::string label(int object) const override;

  int identity_coset() const { return identity_coset_; }
  const Perm& representative(int object) const { return reps_[static_cast<size_t>(object)]; }
  const PermGroup& subgroup() const { return h_; }

private:
  PermGroup h_;
  std::vector<Perm> reps_;
  std::unordered_map<std::vector<int>, int, IntVecHash> index_;
  int identity_coset_ = 0;
};

/// Orbit of x with a transversal: element(i) carries x to points[i].
struct OrbitData {
  std::vector<int> points;
  std::vector<Perm> transversal;
  std::unordered_map<int, int> position;

  bool contains(int object) const { return position.count(object) != 0; }
};

/// BFS orbit of x under G's generators; throws ResourceError past bound.
OrbitData orbit(const PermGroup& g, const GroupAction& action, int x,
                const RunConfig& cfg = {});

/// Stabilizer of object x in G under the action, generated by the Schreier
/// generators of the orbit and returned with its own BSGS. Checks the
/// orbit-stabilizer identity |orbit| * |stab| = |G| exactly.
PermGroup action_stabilizer(const PermGroup& g, const GroupAction& action, int x,
                            const RunConfig& cfg = {});

/// Number of domain objects fixed by every generator of H. Requires a
/// materialized action. For the coset action of G on G/H this equals
/// |N_G(H)| / |H|; the value 1 certifies that H is self-normalizing.
Int fixed_point_count(const PermGroup& h, const GroupAction& action,
                      const RunConfig& cfg = {});

}  // namespace hopfact

#endif
