#include "hopfact/perm_group.hpp"

#include <algorithm>

#include "hopfact/errors.hpp"

namespace hopfact {

PermGroup PermGroup::trivial(int degree) {
  PermGroup g;
  g.degree_ = degree;
  g.generators_.push_back(Perm::identity(degree));
  return g;
}

PermGroup PermGroup::from_generators(std::vector<Perm> generators) {
  return from_generators_with_base(std::move(generators), {});
}

PermGroup PermGroup::from_generators_with_base(std::vector<Perm> generators,
                                               std::vector<int> initial_base) {
  if (generators.empty()) throw InputError("group construction: empty generator list");
  PermGroup g;
  g.degree_ = generators.front().degree();
  for (const Perm& p : generators)
    if (p.degree() != g.degree_) throw InputError("group construction: generator degree mismatch");

  for (int b : initial_base) {
    if (b < 0 || b >= g.degree_) throw InputError("group construction: base point out of range");
    Level lvl;
    lvl.point = b;
    g.levels_.push_back(std::move(lvl));
  }
  for (const Perm& p : generators) {
    if (p.is_identity()) continue;
    g.add_generator(p);
    g.generators_.push_back(p);
  }
  if (g.generators_.empty()) {
    // all inputs were the identity; keep it as the recorded generating set
    g.generators_.push_back(Perm::identity(g.degree_));
  }
  for (size_t i = 0; i < g.levels_.size(); ++i) g.recompute_orbit(i);
  g.complete_chain();
  return g;
}

std::vector<int> PermGroup::base() const {
  std::vector<int> b;
  b.reserve(levels_.size());
  for (const Level& lvl : levels_) b.push_back(lvl.point);
  return b;
}

std::vector<Perm> PermGroup::strong_generators() const {
  std::vector<Perm> out;
  for (const Level& lvl : levels_)
    for (const Perm& p : lvl.gens)
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  return out;
}

void PermGroup::ensure_level_for(const Perm& g) {
  for (const Level& lvl : levels_)
    if (g[lvl.point] != lvl.point) return;
  int moved = g.first_moved_point();
  if (moved < 0) return;
  Level lvl;
  lvl.point = moved;
  levels_.push_back(std::move(lvl));
}

// Appends g to every level whose group must contain it: level i holds the
// elements fixing base[0..i-1], so g belongs to levels 0..l where base[l]
// is the first base point g moves.
void PermGroup::add_generator(const Perm& g) {
  ensure_level_for(g);
  for (Level& lvl : levels_) {
    lvl.gens.push_back(g);
    if (g[lvl.point] != lvl.point) break;
  }
}

void PermGroup::recompute_orbit(size_t i) {
  Level& lvl = levels_[i];
  lvl.orbit.clear();
  lvl.orbit_pos.assign(static_cast<size_t>(degree_), 0);
  lvl.reps.clear();
  lvl.orbit.push_back(lvl.point);
  lvl.orbit_pos[static_cast<size_t>(lvl.point)] = 1;
  lvl.reps.push_back(Perm::identity(degree_));
  for (size_t pos = 0; pos < lvl.orbit.size(); ++pos) {
    for (const Perm& s : lvl.gens) {
      int image = s[lvl.orbit[pos]];
      if (lvl.orbit_pos[static_cast<size_t>(image)] == 0) {
        lvl.orbit.push_back(image);
        lvl.orbit_pos[static_cast<size_t>(image)] = static_cast<int>(lvl.orbit.size());
        lvl.reps.push_back(compose(s, lvl.reps[pos]));
      }
    }
  }
}

std::pair<Perm, size_t> PermGroup::sift(const Perm& p, size_t from_level) const {
  Perm residue = p;
  for (size_t i = from_level; i < levels_.size(); ++i) {
    const Level& lvl = levels_[i];
    int image = residue[lvl.point];
    int pos = lvl.orbit_pos[static_cast<size_t>(image)];
    if (pos == 0) return {residue, i};
    residue = compose(lvl.reps[static_cast<size_t>(pos - 1)].inverse(), residue);
  }
  return {residue, levels_.size()};
}

// Deterministic Schreier-Sims: walk the chain bottom-up; at each level test
// every Schreier generator, and when one fails to sift, add its residue as
// a strong generator and resume at the level where sifting stopped.
void PermGroup::complete_chain() {
  if (levels_.empty()) return;
  size_t i = levels_.size() - 1;
  while (true) {
    const Level& lvl = levels_[i];
    bool complete = true;
    for (size_t pos = 0; pos < lvl.orbit.size() && complete; ++pos) {
      for (const Perm& s : lvl.gens) {
        int image = s[lvl.orbit[pos]];
        const Perm& to_rep = lvl.reps[static_cast<size_t>(lvl.orbit_pos[static_cast<size_t>(image)] - 1)];
        Perm schreier = compose(to_rep.inverse(), compose(s, lvl.reps[pos]));
        if (schreier.is_identity()) continue;
        auto [residue, j] = sift(schreier, i + 1);
        if (residue.is_identity()) continue;
        if (j == levels_.size()) {
          int moved = residue.first_moved_point();
          Level fresh;
          fresh.point = moved;
          levels_.push_back(std::move(fresh));
        }
        for (size_t l = i + 1; l <= j; ++l) levels_[l].gens.push_back(residue);
        for (size_t l = i + 1; l <= j; ++l) recompute_orbit(l);
        i = j;
        complete = false;
        break;
      }
    }
    if (complete) {
      if (i == 0) break;
      --i;
    }
  }
}

Int PermGroup::order() const {
  Int n = 1;
  for (const Level& lvl : levels_) n *= static_cast<unsigned long>(lvl.orbit.size());
  return n;
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) throw InputError("membership test: degree mismatch");
  auto [residue, level] = sift(p);
  (void)level;
  return residue.is_identity();
}

PermGroup PermGroup::level_group(size_t i) const {
  if (i >= levels_.size() || levels_[i].gens.empty()) return trivial(degree_);
  return from_generators(levels_[i].gens);
}

PermGroup PermGroup::point_stabilizer(int x) const {
  if (x < 0 || x >= degree_) throw InputError("point stabilizer: point out of range");
  PermGroup rebased = from_generators_with_base(generators_, {x});
  return rebased.level_group(1);
}

PermGroup PermGroup::pointwise_stabilizer(const std::vector<int>& points) const {
  PermGroup rebased = from_generators_with_base(generators_, points);
  return rebased.level_group(points.size());
}

PermGroup PermGroup::derived_subgroup() const {
  std::vector<Perm> closure_gens;
  for (size_t i = 0; i < generators_.size(); ++i)
    for (size_t j = i + 1; j < generators_.size(); ++j) {
      Perm c = commutator(generators_[i], generators_[j]);
      if (!c.is_identity()) closure_gens.push_back(c);
    }
  if (closure_gens.empty()) return trivial(degree_);

  PermGroup k = from_generators(closure_gens);
  // Normal closure: conjugate the accumulated generators by the group's
  // generators until membership stabilizes. Each extension at least
  // doubles |K|, so the loop rebuilds O(log |G|) times.
  bool grew = true;
  while (grew) {
    grew = false;
    for (size_t gi = 0; gi < closure_gens.size() && !grew; ++gi) {
      for (const Perm& g : generators_) {
        Perm c = conjugate(closure_gens[gi], g);
        if (!k.contains(c)) {
          closure_gens.push_back(c);
          k = from_generators(closure_gens);
          grew = true;
          break;
        }
      }
    }
  }
  return k;
}

bool PermGroup::is_perfect() const { return derived_subgroup().order() == order(); }

Int PermGroup::abelianization_order() const {
  Int d = derived_subgroup().order();
  Int q;
  mpz_divexact(q.get_mpz_t(), order().get_mpz_t(), d.get_mpz_t());
  return q;
}

std::vector<Perm> PermGroup::elements(int64_t bound) const {
  Int n = order();
  if (n > bound) throw ResourceError("element enumeration: order " + n.get_str() +
                                     " exceeds bound " + std::to_string(bound));
  std::vector<Perm> out{Perm::identity(degree_)};
  // Walk levels deepest-first so each element is rep_0 * rep_1 * ... with
  // deterministic transversal order.
  for (size_t i = levels_.size(); i-- > 0;) {
    std::vector<Perm> next;
    next.reserve(out.size() * levels_[i].reps.size());
    for (const Perm& rep : levels_[i].reps)
      for (const Perm& tail : out) next.push_back(compose(rep, tail));
    out = std::move(next);
  }
  return out;
}

bool PermGroup::has_subgroup(const PermGroup& h) const {
  if (h.degree() != degree_) return false;
  for (const Perm& g : h.generators())
    if (!contains(g)) return false;
  return true;
}

}  // namespace hopfact
