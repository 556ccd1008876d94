#pragma once

#include "linalg.hpp"
#include "numeric.hpp"

#include <string>
#include <utility>
#include <vector>

namespace traceform {

// Explicit integral matrix model of sl_n on a Chevalley basis: the Cartan
// elements h_1, ..., h_{n-1} (diagonal unit differences) followed by one
// root vector x_{(i,j)} per ordered pair i != j (the elementary matrix
// E_{ij} in the natural model), pairs in lexicographic order.
struct MatrixRep {
  int n = 0;            // which sl_n
  size_t dim = 0;       // size of each image matrix
  int cartan_count = 0; // n - 1
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> root_of;  // 1-based (i, j) per root vector
  std::vector<IMat> images;

  size_t basis_size() const { return images.size(); }
};

// Natural n-dimensional representation, 2 <= n <= 5.
MatrixRep chevalley_sl(int n);

// Adjoint representation derived from `rep` by bracketing and exact
// decomposition in the same basis.
MatrixRep adjoint_of(const MatrixRep& rep);

// Gram matrix of the trace form (x, y) -> trace(xy) on the basis; exact
// integers.
IMat trace_gram(const MatrixRep& rep);

// Same Gram with entries reduced into [0, p).
IMat trace_gram_mod(const MatrixRep& rep, int64_t p);

bool is_zero_mod(const IMat& m, int64_t p);

// Gram matrix of the normalized even form on the same basis, built from
// root-system data only (tridiagonal Cartan block, unit pairing between
// opposite root vectors): the independent comparison target for trace
// Grams.  Every root of sl_n is long, so no short-root scaling appears.
IMat normalized_form_gram(int n);

// Quadratic refinement: s(x) = (trace(M^2) - trace(M)^2) / 2 for
// M = sum coeffs * images, computed in exact integers (the division by two
// is exact).  Its polarization s(x+y) - s(x) - s(y) is the trace form.
Int s_rho(const MatrixRep& rep, const std::vector<Int>& coeffs);

// Sum of (a - 2i)^2 for i = 0..p-1, reduced mod p: the weight-square sum
// of a p-dimensional induced module in characteristic p.  Evaluates to 0
// for every prime p >= 5 and to 2 for p = 3, independent of a.
int64_t baby_verma_trace(int64_t p, int64_t a);

}  // namespace traceform
