#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "latcoh/complex.hpp"
#include "latcoh/gf2.hpp"

namespace latcoh {

/// Cohomology of a truncated complex, one block per (degree, grading).
class Homology {
 public:
  explicit Homology(const GradedGF2Complex& complex);

  const GradedGF2Complex& complex() const { return *complex_; }
  int max_degree() const { return complex_->rank(); }
  Int top_grading() const { return top_; }

  std::size_t dim(int s, Int g) const;
  std::size_t total_dim(int s) const;
  /// Cocycles (as index sets in basis[s]) whose classes form a basis.
  const std::vector<SparseVec>& representatives(int s, Int g) const;
  /// Coordinates of a cocycle over the representatives; throws when the
  /// vector is not a cocycle of the block.
  SparseVec coordinates(int s, Int g, const SparseVec& cocycle) const;
  /// Rank of U^{top - bottom} from grading `top` to grading `bottom`.
  std::size_t u_rank(int s, Int top, Int bottom) const;
  /// U^k applied to a vector of basis[s] indices.
  SparseVec u_power(int s, const SparseVec& v, Int k) const;

 private:
  struct Block {
    Echelon echelon;  // coboundaries (empty tags) plus representatives
    std::vector<SparseVec> representatives;
  };
  const Block* block(int s, Int g) const;

  const GradedGF2Complex* complex_;
  Int top_ = -1;
  std::map<std::pair<int, Int>, Block> blocks_;
};

Homology homology_ranks(const GradedGF2Complex& complex);

/// Finite graded F[U]-module over gradings 0..top: ranks of U^{t-b} from
/// grading t to grading b (rank[t][b] with b <= t; rank[t][t] = dimension).
struct UModule {
  Int top = 0;
  std::vector<std::vector<std::size_t>> rank;
  static UModule from_homology(const Homology& h, int s, Int top);
  bool operator==(const UModule&) const = default;
};

struct Torsion {
  Int bottom;  // grading of the bottom element, 2 per U-power
  Int length;  // killed by U^length
  auto operator<=>(const Torsion&) const = default;
};

struct DegreePresentation {
  int degree = 0;
  std::vector<Int> towers;  // bottom gradings
  std::vector<Torsion> torsions;
  bool empty() const { return towers.empty() && torsions.empty(); }
  bool operator==(const DegreePresentation&) const = default;
};

struct ModulePresentation {
  Int top = 0;  // gradings 0..top (reported as 0..2 top)
  std::vector<DegreePresentation> degrees;
  bool operator==(const ModulePresentation&) const = default;
};

/// Interval decomposition; a summand that reaches `top` is a tower.
DegreePresentation decompose(const UModule& module, int degree);
/// Inverse of decompose.
UModule expand(const DegreePresentation& p, Int top);

ModulePresentation module_presentation(const Homology& h, Int top);

struct StabilizeOptions {
  std::optional<Region> region;  // explicit starting region
  std::size_t basis_cap = 5'000'000;
  int max_rounds = 3;
};

struct ClassResult {
  int class_index = -1;
  Region region;
  ModulePresentation presentation;
  bool stabilized = false;
  std::optional<ModulePresentation> previous;
  std::optional<Region> previous_region;
  int rounds = 0;
  std::size_t escaped_terms = 0;
};

/// Presentation at a region, with gradings 0..M relative to the class minimum.
ModulePresentation presentation_at(const Lattice& lattice, const Region& region, std::size_t basis_cap,
                                   std::size_t* escaped_terms = nullptr);

/// Computes at the region and at the region enlarged by 2 per coordinate,
/// repeating up to max_rounds times until the two agree. Only negative
/// definite forms without truncation leaks are marked stabilized.
ClassResult stabilize(const Lattice& lattice, const Coords& base, int class_index, Int mcap,
                      const StabilizeOptions& options = {});

}  // namespace latcoh
