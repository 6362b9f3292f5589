/*
   Copyright 2026 The halfline authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef HLA_HOMOTOPY_HPP
#define HLA_HOMOTOPY_HPP

#include <string>
#include <vector>

#include "hla/factor.hpp"
#include "hla/matrix.hpp"

namespace hla {

// Discretized map [0,1] -> SL_n(A). Full paths run from the input matrix
// at t=0 to the identity at t=1; approximation segments carry their own
// endpoint descriptors.
struct HomotopyPath {
    struct Sample {
        double t;
        MeasureMatrix matrix;
        double det_residual;  // || det - dirac ||
    };
    std::vector<Sample> samples;
    std::string start_desc, end_desc;
    double max_det_residual = 0.0;
    // Discrete Lipschitz witness: max ||H(t_{k+1}) - H(t_k)|| / dt.
    double lipschitz = 0.0;
};

inline constexpr std::size_t kDefaultPathSamples = 129;  // 65 per half, shared midpoint

// C with C_ij = mu_ij({0}); the t=1 limit of entrywise deformation.
ComplexMatrix constant_part(const MeasureMatrix& m);

// Path in SL_n(C) from c to I_n: factor c into shears and shrink every
// shear parameter linearly. det == 1 identically along the path.
std::vector<std::pair<double, ComplexMatrix>> sl_path_complex(const ComplexMatrix& c,
                                                              std::size_t samples);

// Embed a constant matrix into the measure algebra (entry -> entry * dirac).
MeasureMatrix embed_constant(const ComplexMatrix& c);

// The two-stage null-homotopy: entrywise deformation for t in [0,1/2],
// then the constant SL_n(C) path scaled by dirac for t in [1/2,1].
// H(0) = m exactly, H(1) = I_n exactly.
HomotopyPath null_homotopy(const MeasureMatrix& m, std::size_t samples = kDefaultPathSamples,
                           double det_tol = 1e-6, const ConvolveOptions& opts = {});

// Approximation segment between g (endpoint t=0, first column scaled by
// det(g)^{-1}) and f (endpoint t=1), valid under the certified bound
// ||g - f|| * ||f^{-1}|| < 1 in the Frobenius-type norm bound.
HomotopyPath approx_path(const MeasureMatrix& f, const MeasureMatrix& g,
                         std::size_t samples = kDefaultPathSamples,
                         const NeumannOptions& opts = {});

}  // namespace hla

#endif
