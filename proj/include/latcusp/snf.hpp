#pragma once

// Smith normal form, integer linear solving and symmetric congruence
// diagonalization. These three kernels carry every lattice computation in
// the library.

#include <optional>
#include <utility>

#include "latcusp/matrix.hpp"

namespace latcusp {

// left * a * right = diagonal embedding of diag, with diag[i] | diag[i+1]
// and diag[i] >= 0. left and right are unimodular.
struct SnfDecomposition {
  IntMat left;
  IntMat right;
  IntVec diag;  // length min(rows, cols)

  IntMat diag_matrix(size_t rows, size_t cols) const {
    IntMat d(rows, cols);
    for (size_t i = 0; i < diag.size(); ++i) d(i, i) = diag[i];
    return d;
  }
};

// Deterministic SNF: pivot is the smallest-absolute-value nonzero entry of
// the working block, ties broken by (row, col) index.
SnfDecomposition snf(const IntMat& a);

// Some x with a*x = b over the integers, if one exists.
std::optional<IntVec> solve_in_lattice(const IntMat& a, const IntVec& b);

// Basis of the integer kernel {x : a*x = 0}, as matrix columns. The kernel
// of an integer-linear map is automatically saturated.
IntMat integer_kernel(const IntMat& a);

// p^T * g * p = diag(entries), g symmetric nondegenerate; throws SpecError
// on a degenerate form. Zero-diagonal pivots are handled by the standard
// two-step symmetric pivot trick.
struct CongruentDiagonalization {
  RatVec entries;
  RatMat transform;
};
CongruentDiagonalization congruent_diagonalize(const RatMat& g);

// (positive count, negative count) by Sylvester's law of inertia.
std::pair<int, int> signature(const RatMat& g);

}  // namespace latcusp
