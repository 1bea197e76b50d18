/*
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

#ifndef FROBLIE_IO_HPP
#define FROBLIE_IO_HPP

#include <optional>
#include <string>

#include "frobact.hpp"

namespace froblie {

/// One parsed algebra document: structure constants plus the optional
/// acting matrices and group data.
///
/// Format (JSON, 1-based indices, scalars as strings):
///   {"dim": 3,
///    "field": {"kind": "cyclotomic", "n": 3},
///    "brackets": [[1, 2, [[3, "1"]]]],
///    "phi": [["w","0","0"],["0","w^2","0"],["0","0","1"]],
///    "h":   [["0","1","0"],["1","0","0"],["0","0","-1"]],
///    "frobenius": {"n": 3, "q": 2, "r": 2}}
/// Matrices may be nested rows or a flat row-major list. A bracket entry
/// [i, j, v] sets [e_i, e_j] = v; the mirror entry is filled in only when
/// absent, so deliberately inconsistent tensors survive for `validate`.
struct AlgebraFile {
    StructAlgebra algebra;
    std::optional<Mat> phi;
    std::optional<Mat> h;
    std::optional<FrobeniusDescriptor> frobenius;
};

AlgebraFile parse_algebra_text(const std::string& text, const std::string& origin);
AlgebraFile parse_algebra_file(const std::string& path);
std::string write_algebra_text(const AlgebraFile& file);

}  // namespace froblie

#endif
