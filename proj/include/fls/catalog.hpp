#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fls/coloring.hpp"
#include "fls/field.hpp"
#include "fls/incidence.hpp"

namespace fls {

class CatalogError : public std::runtime_error {
 public:
  enum class Kind { unsupported_order, unknown_name, out_of_range, no_distinct_ab };

  CatalogError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Desarguesian projective plane of order q in {2, 3, 4, 5}, built from
/// homogeneous coordinates. Labels are the normalized coordinates, e.g. "[a,b,1]"
/// (over GF(4), b stands for a+1). Point order follows projective_points<F>().
FiniteLinearSpace pg2(int q);

/// PG(2,4) on the points i_j (i in Z7, j in Z3) with lines
/// {i_j, (i+1)_j, (i+3)_j, f(i)_{j+1}, f(i)_{j+2}}. Point i_j has index 7j + i,
/// so {i_0} is points 0..6.
FiniteLinearSpace pg24_z7z3();

/// The label "i_j".
std::string z7z3_label(int i, int j);

struct CatalogEntry {
  std::string name;
  MRGeometry geometry;
  std::string provenance;
};

/// MR12, MR13, MR14_1, MR14_2, MR15_1, MR15_2, MR15_3r, MR15_3g, MR15_4, MR15_5.
const std::vector<std::string>& catalog_names();

/// Throws CatalogError(unknown_name).
CatalogEntry named(const std::string& name);

std::vector<CatalogEntry> full_catalog();

/// MR14_2 in the relabelled form with points G, G_1..G_3, H_1..H_3 (green) and
/// R, R_1..R_3, S_1..S_3 (red).
MRGeometry mr14_2_relabelled();

/// MR15_1 reached from MR14_2 by adding 6_2, which is then forced red.
MRGeometry mr15_1_via_mr14_2();

/// MR14_1 plus 6_2 coloured red instead of green.
MRGeometry mr15_1_red_variant();

/// Complete-quadrilateral construction in PG(2,q): a properly coloured 4q-point
/// core in which every plane line already meets both colours, topped up with
/// v - 4q further plane points coloured alternately green, red, ... in index order.
MRGeometry quadrilateral_mr(int q, int v);

/// Coordinates of the points of pg24_z7z3() over GF(4) as forced by the
/// embedding argument, plus one Check per verified step.
struct EmbeddingReport {
  std::vector<Check> checks;
  std::vector<ProjPoint<GF4>> coordinates;  // indexed like pg24_z7z3()
  bool all_pass() const;
};

EmbeddingReport verify_gf4_embedding();

}  // namespace fls
