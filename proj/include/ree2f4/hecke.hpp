#ifndef REE2F4_HECKE_HPP
#define REE2F4_HECKE_HPP

#include <map>
#include <string>
#include <vector>

#include "ree2f4/catalog.hpp"
#include "ree2f4/poly.hpp"

namespace ree2f4 {

/// An irreducible representation of the Hecke algebra H = End(1_B^G) for the
/// dihedral Weyl group of order 16, with unequal parameters p_a = q^2,
/// p_b = q^4. Matrices are over QPoly.
struct HeckeRep {
  std::string name;  // ind, sgn, sigma1, sigma2, S1, S-1, S0
  int dim = 1;
  std::vector<std::vector<QPoly>> Ta, Tb;
};

/// The seven representation names in the fixed row order used throughout:
/// ind, sigma1, S1, S-1, S0, sigma2, sgn.
const std::vector<std::string>& hecke_row_order();

HeckeRep build_rep(const std::string& name);

/// Checks (T - p)(T + 1) = 0 for both generators and the length-8 braid
/// relation, as exact matrix identities.
bool check_hecke_relations(const HeckeRep& rep);

/// Decomposition matrix of the ell-modular reduction of the seven reps.
/// Columns are modular composition-factor classes in order of first
/// appearance scanning rows in hecke_row_order().
struct HeckeDecompMatrix {
  std::vector<std::string> rows;  // the seven rep names
  std::vector<std::string> cols;  // class labels (see below)
  std::vector<std::vector<int>> entries;

  bool operator==(const HeckeDecompMatrix& o) const = default;
};

/// Computes the modular decomposition at concrete (n, ell) by reducing all
/// matrix entries (integers at q = 2^n sqrt2) mod ell and splitting the
/// 2-dimensional reps along common eigenvectors. Classes of 1-dim factors
/// are labeled by the first 1-dim rep (in row order) with that reduction;
/// irreducible 2-dim reductions are labeled "d2(<rep>)". Works for any odd
/// prime ell; the shape only depends on classify_prime(n, ell).cs.
HeckeDecompMatrix hecke_decomposition(int n, const Int& ell);

/// The Fitting correspondence rep -> unipotent character label.
const std::map<std::string, std::string>& fitting_labels();

}  // namespace ree2f4

#endif  // REE2F4_HECKE_HPP
