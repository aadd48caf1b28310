#include "hopfact/action.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "hopfact/errors.hpp"

namespace hopfact {

int effective_threads(const RunConfig& cfg) {
  int n = cfg.threads;
  if (n <= 0) {
    if (const char* env = std::getenv("HOPFACT_THREADS")) n = std::atoi(env);
  }
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  return std::max(1, std::min(n, 64));
}

int PointAction::apply(const Perm& g, int object) const {
  if (object < 0 || object >= degree_) throw InputError("point action: object out of range");
  return g[object];
}

SubsetAction::SubsetAction(int degree, int k) : degree_(degree), k_(k) {
  if (k < 0 || k > degree) throw InputError("subset action: invalid subset size");
}

int64_t SubsetAction::domain_size() const {
  Int n = 1;
  for (int i = 0; i < k_; ++i) {
    n *= degree_ - i;
    n /= i + 1;
  }
  if (!n.fits_slong_p()) throw ResourceError("subset action: domain too large");
  return static_cast<int64_t>(n.get_si());
}

int SubsetAction::index_of(std::vector<int> subset) const {
  std::sort(subset.begin(), subset.end());
  if (static_cast<int>(subset.size()) != k_)
    throw InputError("subset action: wrong subset size");
  for (int p : subset)
    if (p < 0 || p >= degree_) throw InputError("subset action: point out of range");
  auto it = index_.find(subset);
  if (it != index_.end()) return it->second;
  int id = static_cast<int>(objects_.size());
  index_.emplace(subset, id);
  objects_.push_back(std::move(subset));
  return id;
}

const std::vector<int>& SubsetAction::subset(int object) const {
  return objects_.at(static_cast<size_t>(object));
}

int SubsetAction::apply(const Perm& g, int object) const {
  const std::vector<int>& s = subset(object);
  std::vector<int> image;
  image.reserve(s.size());
  for (int p : s) image.push_back(g[p]);
  return index_of(std::move(image));
}

std::string SubsetAction::label(int object) const {
  std::ostringstream out;
  out << '{';
  const std::vector<int>& s = subset(object);
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out << ' ';
    out << s[i];
  }
  out << '}';
  return out.str();
}

Perm coset_canonical_rep(const PermGroup& h, const Perm& x) {
  Perm g = x;
  for (const PermGroup::Level& lvl : h.levels()) {
    // The candidates for the next image are g(w) over the orbit of the base
    // point; g is injective, so the minimum is reached at a unique w.
    int best = lvl.orbit[0];
    for (int w : lvl.orbit)
      if (g[w] < g[best]) best = w;
    if (best != lvl.orbit[0]) {
      int pos = lvl.orbit_pos[static_cast<size_t>(best)] - 1;
      g = compose(g, lvl.reps[static_cast<size_t>(pos)]);
    }
  }
  return g;
}

CosetAction::CosetAction(const PermGroup& g, const PermGroup& h, const RunConfig& cfg) : h_(h) {
  if (g.degree() != h.degree()) throw InputError("coset action: degree mismatch");
  if (!g.has_subgroup(h)) throw InputError("coset action: H is not a subgroup of G");

  Int index_bound = g.order() / h.order();
  if (index_bound > cfg.coset_bound)
    throw ResourceError("coset action: index " + index_bound.get_str() + " exceeds bound " +
                        std::to_string(cfg.coset_bound));

  Perm start = coset_canonical_rep(h_, Perm::identity(g.degree()));
  reps_.push_back(start);
  index_.emplace(start.images(), 0);
  identity_coset_ = 0;
  for (size_t pos = 0; pos < reps_.size(); ++pos) {
    for (const Perm& gen : g.generators()) {
      Perm moved = coset_canonical_rep(h_, compose(gen, reps_[pos]));
      if (index_.find(moved.images()) == index_.end()) {
        int id = static_cast<int>(reps_.size());
        index_.emplace(moved.images(), id);
        reps_.push_back(std::move(moved));
      }
    }
  }
  if (Int(static_cast<unsigned long>(reps_.size())) != index_bound)
    throw ConstructionError("coset action: enumeration found " + std::to_string(reps_.size()) +
                            " cosets, expected " + index_bound.get_str());
}

int CosetAction::apply(const Perm& g, int object) const {
  Perm moved = coset_canonical_rep(h_, compose(g, reps_[static_cast<size_t>(object)]));
  auto it = index_.find(moved.images());
  if (it == index_.end())
    throw InputError("coset action: element does not preserve the coset domain");
  return it->second;
}

std::string CosetAction::label(int object) const {
  return reps_[static_cast<size_t>(object)].to_cycles();
}

OrbitData orbit(const PermGroup& g, const GroupAction& action, int x, const RunConfig& cfg) {
  if (x < 0 || (action.materialized() && x >= action.domain_size()))
    throw InputError("orbit: object index out of range");
  OrbitData o;
  o.points.push_back(x);
  o.transversal.push_back(Perm::identity(g.degree()));
  o.position.emplace(x, 0);
  for (size_t pos = 0; pos < o.points.size(); ++pos) {
    for (const Perm& gen : g.generators()) {
      int image = action.apply(gen, o.points[pos]);
      if (o.position.count(image)) continue;
      if (static_cast<int64_t>(o.points.size()) >= cfg.coset_bound)
        throw ResourceError("orbit: size exceeds bound " + std::to_string(cfg.coset_bound));
      o.position.emplace(image, static_cast<int>(o.points.size()));
      o.points.push_back(image);
      o.transversal.push_back(compose(gen, o.transversal[pos]));
    }
  }
  return o;
}

PermGroup action_stabilizer(const PermGroup& g, const GroupAction& action, int x,
                            const RunConfig& cfg) {
  OrbitData o = orbit(g, action, x, cfg);
  PermGroup stab = PermGroup::trivial(g.degree());
  std::vector<Perm> stab_gens;
  for (size_t pos = 0; pos < o.points.size(); ++pos) {
    for (const Perm& gen : g.generators()) {
      int image = action.apply(gen, o.points[pos]);
      const Perm& to_rep = o.transversal[static_cast<size_t>(o.position.at(image))];
      Perm schreier = compose(to_rep.inverse(), compose(gen, o.transversal[pos]));
      if (schreier.is_identity() || stab.contains(schreier)) continue;
      stab_gens.push_back(std::move(schreier));
      stab = PermGroup::from_generators(stab_gens);
    }
  }
  if (stab.order() * static_cast<unsigned long>(o.points.size()) != g.order())
    throw ConstructionError("action stabilizer: orbit-stabilizer identity violated");
  return stab;
}

Int fixed_point_count(const PermGroup& h, const GroupAction& action, const RunConfig& cfg) {
  if (!action.materialized())
    throw InputError("fixed point count: requires a materialized action");
  for (const Perm& gen : h.generators())
    if (gen.degree() != h.degree()) throw InputError("fixed point count: degree mismatch");

  int64_t n = action.domain_size();
  int threads = effective_threads(cfg);
  if (threads <= 1 || n < 4096) {
    long count = 0;
    for (int64_t i = 0; i < n; ++i) {
      bool fixed = true;
      for (const Perm& gen : h.generators())
        if (action.apply(gen, static_cast<int>(i)) != i) {
          fixed = false;
          break;
        }
      if (fixed) ++count;
    }
    return count;
  }

  std::vector<long> partial(static_cast<size_t>(threads), 0);
  std::vector<std::thread> pool;
  int64_t chunk = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    int64_t begin = t * chunk;
    int64_t end = std::min(n, begin + chunk);
    pool.emplace_back([&, t, begin, end] {
      long count = 0;
      for (int64_t i = begin; i < end; ++i) {
        bool fixed = true;
        for (const Perm& gen : h.generators())
          if (action.apply(gen, static_cast<int>(i)) != i) {
            fixed = false;
            break;
          }
        if (fixed) ++count;
      }
      partial[static_cast<size_t>(t)] = count;
    });
  }
  for (std::thread& th : pool) th.join();
  long total = 0;
  for (long c : partial) total += c;
  return total;
}

}  // namespace hopfact
