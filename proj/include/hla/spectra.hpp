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

#ifndef HLA_SPECTRA_HPP
#define HLA_SPECTRA_HPP

#include <functional>
#include <vector>

#include "hla/measure.hpp"

namespace hla {

// dirac + density (2x-3) e^{-x}. Its transform is s(s-1)/(s+1)^2.
HalfLineMeasure nonexample_measure(double h = kDefaultH, double horizon = kDefaultHorizon);
Complex nonexample_transform(Complex s);  // the closed form

struct SpectrumRegion {
    struct CurveSample {
        double theta;
        Complex w;  // (e^{i theta} + e^{2 i theta}) / 2
    };
    std::vector<CurveSample> curve;
    double box_min = -1.25, box_max = 1.25;  // raster bounding box, both axes
};

SpectrumRegion spectrum_curve(std::size_t samples);

// w is in { (z+z^2)/2 : |z| <= 1 } iff a root of z^2 + z - 2w has modulus
// <= 1 (plus a small slack for the closed boundary).
bool region_membership(Complex w);

// Bounded components of the complement of a membership region inside the
// box, by flood fill from the raster border. Pixels within half a pixel
// of a supplied boundary curve count as in-region (the region is closed).
struct RasterOptions {
    std::size_t resolution = 512;
    double box_min = -1.25, box_max = 1.25;
};
int complement_components(const std::function<bool(Complex)>& membership,
                          const RasterOptions& opts,
                          const std::vector<Complex>& boundary = {});

// The property-(P) failure certificate at t = 1 - 1/e: with hat values
// taken from the closed form, residual_0 = |c_0| and
// residual_1 = |2/9 - c_0|, so their sum is at least 2/9.
struct PropertyPResult {
    double residual0;
    double residual1;
    bool certificate;  // residual0 + residual1 >= 2/9 - 1e-12
};
PropertyPResult property_p_failure(const std::vector<Complex>& coeffs);

// s = (1+z)/(1-z) and its inverse z = (s-1)/(s+1); z = 1 maps to the
// point at infinity (returned as an infinite complex).
Complex mobius_disc_to_halfplane(Complex z);
Complex mobius_halfplane_to_disc(Complex s);

}  // namespace hla

#endif
