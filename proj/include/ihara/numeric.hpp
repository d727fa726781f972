#ifndef IHARA_NUMERIC_HPP
#define IHARA_NUMERIC_HPP

#include "ihara/matrix.hpp"
#include "ihara/poly.hpp"

#include <complex>
#include <vector>

namespace ihara {

/// Floating-point cross-checks for the exact machinery.

RealMatrix to_real(const IntMatrix& m);

/// Cyclic Jacobi rotations on a real symmetric matrix (n <= 200) until the
/// off-diagonal Frobenius norm drops below 1e-12. Eigenvalues are returned
/// in descending order. Throws NotSymmetric when |a_ij - a_ji| > 1e-12 and
/// NoConvergence after 100 sweeps.
std::vector<double> jacobi_eigen(const RealMatrix& m);

/// Roots of an integer polynomial split into the real ones and a flag
/// telling whether any root is genuinely complex.
struct RootSet {
    std::vector<double> real; ///< descending, with multiplicity
    bool has_complex = false;
};

/// All complex roots of a square-free polynomial by Durand-Kerner
/// iteration (relative step tolerance 1e-12, at most 1000 iterations).
std::vector<std::complex<double>> durand_kerner(const IntPoly& p);

/// Numerical roots of p with multiplicity. The polynomial is first split
/// into square-free factors exactly; each factor goes through Durand-Kerner
/// and roots with |imag| < 1e-8 are reported as real.
RootSet real_roots(const IntPoly& p);

} // namespace ihara

#endif // IHARA_NUMERIC_HPP
