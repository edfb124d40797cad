#include "latcoh/homology.hpp"

#include <stdexcept>

#include "latcoh/error.hpp"

namespace latcoh {

namespace {
const std::vector<SparseVec> kNoRepresentatives;
}

Homology::Homology(const GradedGF2Complex& complex) : complex_(&complex), top_(complex.top_grading()) {
  const int n = complex.rank();
  // indices of each degree grouped by grading
  std::vector<std::map<Int, std::vector<std::uint32_t>>> by_grading(n + 1);
  for (int s = 0; s <= n; ++s)
    for (std::uint32_t j = 0; j < complex.basis[s].size(); ++j)
      by_grading[s][complex.basis[s][j].grading].push_back(j);

  for (int s = 0; s <= n; ++s) {
    for (const auto& [g, members] : by_grading[s]) {
      Block block;
      if (s > 0) {
        auto it = by_grading[s - 1].find(g);
        if (it != by_grading[s - 1].end())
          for (auto j : it->second) block.echelon.insert(complex.delta[s - 1][j]);
      }
      Echelon kernel_search;
      for (auto j : members) {
        SparseVec tag{j};
        if (kernel_search.insert(complex.delta[s][j], tag)) continue;
        SparseVec rep_tag{static_cast<std::uint32_t>(block.representatives.size())};
        if (block.echelon.insert(tag, rep_tag)) block.representatives.push_back(std::move(tag));
      }
      blocks_.emplace(std::make_pair(s, g), std::move(block));
    }
  }
}

const Homology::Block* Homology::block(int s, Int g) const {
  auto it = blocks_.find({s, g});
  return it == blocks_.end() ? nullptr : &it->second;
}

std::size_t Homology::dim(int s, Int g) const {
  const Block* b = block(s, g);
  return b ? b->representatives.size() : 0;
}

std::size_t Homology::total_dim(int s) const {
  std::size_t total = 0;
  for (const auto& [key, b] : blocks_)
    if (key.first == s) total += b.representatives.size();
  return total;
}

const std::vector<SparseVec>& Homology::representatives(int s, Int g) const {
  const Block* b = block(s, g);
  return b ? b->representatives : kNoRepresentatives;
}

SparseVec Homology::coordinates(int s, Int g, const SparseVec& cocycle) const {
  SparseVec tag;
  if (cocycle.empty()) return tag;
  const Block* b = block(s, g);
  if (!b) throw std::logic_error("coordinates requested in an empty block");
  if (!b->echelon.reduce(cocycle, &tag).empty()) throw std::logic_error("vector is not a cocycle");
  return tag;
}

SparseVec Homology::u_power(int s, const SparseVec& v, Int k) const {
  SparseVec out = v;
  for (Int step = 0; step < k; ++step) {
    SparseVec next;
    next.reserve(out.size());
    for (auto j : out) {
      const auto target = complex_->u[s][j];
      if (target >= 0) next.push_back(static_cast<std::uint32_t>(target));
    }
    out = normalized(std::move(next));
  }
  return out;
}

std::size_t Homology::u_rank(int s, Int top, Int bottom) const {
  if (bottom > top) throw std::invalid_argument("u_rank needs bottom <= top");
  if (bottom == top) return dim(s, top);
  Echelon images;
  for (const auto& z : representatives(s, top)) images.insert(coordinates(s, bottom, u_power(s, z, top - bottom)));
  return images.rank();
}

Homology homology_ranks(const GradedGF2Complex& complex) { return Homology(complex); }

UModule UModule::from_homology(const Homology& h, int s, Int top) {
  UModule m;
  m.top = top;
  m.rank.resize(top + 1);
  for (Int t = 0; t <= top; ++t) {
    m.rank[t].resize(t + 1);
    for (Int b = 0; b <= t; ++b) m.rank[t][b] = h.u_rank(s, t, b);
  }
  return m;
}

DegreePresentation decompose(const UModule& module, int degree) {
  auto r = [&](Int t, Int b) -> long long {
    if (b < 0 || t > module.top || b > t) return 0;
    return static_cast<long long>(module.rank[t][b]);
  };
  DegreePresentation p;
  p.degree = degree;
  for (Int b = 0; b <= module.top; ++b) {
    for (Int t = b; t <= module.top; ++t) {
      const long long count = r(t, b) - r(t, b - 1) - r(t + 1, b) + r(t + 1, b - 1);
      if (count < 0) throw std::logic_error("inconsistent U-ranks");
      for (long long i = 0; i < count; ++i) {
        if (t == module.top)
          p.towers.push_back(2 * b);
        else
          p.torsions.push_back({2 * b, t - b + 1});
      }
    }
  }
  return p;
}

UModule expand(const DegreePresentation& p, Int top) {
  UModule m;
  m.top = top;
  m.rank.resize(top + 1);
  for (Int t = 0; t <= top; ++t) m.rank[t].assign(t + 1, 0);
  auto add = [&](Int lo, Int hi) {
    for (Int t = lo; t <= hi && t <= top; ++t)
      for (Int b = lo; b <= t; ++b) ++m.rank[t][b];
  };
  for (Int bottom : p.towers) add(bottom / 2, top);
  for (const auto& tor : p.torsions) add(tor.bottom / 2, tor.bottom / 2 + tor.length - 1);
  return m;
}

ModulePresentation module_presentation(const Homology& h, Int top) {
  ModulePresentation p;
  p.top = top;
  for (int s = 0; s <= h.max_degree(); ++s) p.degrees.push_back(decompose(UModule::from_homology(h, s, top), s));
  return p;
}

ModulePresentation presentation_at(const Lattice& lattice, const Region& region, std::size_t basis_cap,
                                   std::size_t* escaped_terms) {
  BuildOptions options;
  options.gcap = region.mcap;
  options.basis_cap = basis_cap;
  const GradedGF2Complex c = build_complex(lattice, region, options);
  if (escaped_terms) *escaped_terms = c.escaped_terms;
  return module_presentation(homology_ranks(c), region.mcap);
}

ClassResult stabilize(const Lattice& lattice, const Coords& base, int class_index, Int mcap,
                      const StabilizeOptions& options) {
  const bool definite = is_form_negative_definite(lattice.form());
  ClassResult result;
  result.class_index = class_index;
  Region current = options.region ? *options.region : truncation_region(lattice, base, mcap, class_index);
  current.mcap = mcap;
  current.class_index = class_index;
  std::size_t escaped = 0;
  ModulePresentation previous = presentation_at(lattice, current, options.basis_cap, &escaped);
  const int rounds = definite ? options.max_rounds : 1;
  for (int round = 1; round <= rounds; ++round) {
    Region next = enlarged(lattice, current, 2);
    std::size_t next_escaped = 0;
    ModulePresentation p = presentation_at(lattice, next, options.basis_cap, &next_escaped);
    result.rounds = round;
    result.previous = previous;
    result.previous_region = current;
    result.region = next;
    result.presentation = p;
    result.escaped_terms = next_escaped;
    const bool agree = p == previous && escaped == 0 && next_escaped == 0;
    if (agree && definite) {
      result.stabilized = true;
      break;
    }
    current = next;
    previous = p;
    escaped = next_escaped;
  }
  return result;
}

}  // namespace latcoh
