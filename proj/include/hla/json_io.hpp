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

#ifndef HLA_JSON_IO_HPP
#define HLA_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "hla/factor.hpp"
#include "hla/homotopy.hpp"
#include "hla/matrix.hpp"
#include "hla/measure.hpp"

namespace hla {

// Measure: {"atoms":[{"loc":f,"re":f,"im":f},...],
//           "density":{"h":f,"values":[[re,im],...]} | null}
// Matrix:  {"n":int,"entries":[measure,...]} (row-major)
// Shear factors are emitted with 1-based indices.
nlohmann::json measure_to_json(const HalfLineMeasure& mu);
HalfLineMeasure measure_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const MeasureMatrix& m);
MeasureMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json complex_matrix_to_json(const ComplexMatrix& m);
ComplexMatrix complex_matrix_from_json(const nlohmann::json& j);

nlohmann::json poly_matrix_to_json(const PolyMatrix& m);
PolyMatrix poly_matrix_from_json(const nlohmann::json& j);

nlohmann::json factors_to_json(const std::vector<ElementaryFactor>& fs);

nlohmann::json path_to_json(const HomotopyPath& p, bool full);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

}  // namespace hla

#endif
