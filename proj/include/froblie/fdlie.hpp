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

#ifndef FROBLIE_FDLIE_HPP
#define FROBLIE_FDLIE_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linalg.hpp"

namespace froblie {

/// Sparse coordinate vector: sorted (basis index, coefficient) pairs.
struct SparseVec {
    std::vector<std::pair<int, Scalar>> entries;
};

struct Violation {
    enum class Kind { Antisymmetry, Diagonal, Jacobi };
    Kind kind;
    int i, j, k;  // offending basis triple (k = -1 for pair checks)
    std::string describe() const;
};

/// Finite-dimensional algebra given by structure constants [e_i, e_j].
/// The table may deliberately hold a non-antisymmetric tensor so that
/// check() can report the violation; set_bracket keeps both mirror
/// entries consistent.
class StructAlgebra {
  public:
    StructAlgebra(const FieldPtr& field, int dim);

    const FieldPtr& field() const { return field_; }
    int dim() const { return dim_; }

    void set_bracket(int i, int j, const SparseVec& v);      // fills (i,j) and (j,i)
    void set_bracket_raw(int i, int j, const SparseVec& v);  // exactly one entry
    bool has_entry(int i, int j) const;
    void mirror_missing_entries();  // complete one-sided entries antisymmetrically

    Vec basis_bracket(int i, int j) const;  // [e_i, e_j] as a dense vector
    Vec bracket(const Vec& x, const Vec& y) const;
    /// Matrix of z -> [z, x].
    Mat ad_right(const Vec& x) const;
    Vec basis_vector(int i) const { return unit_vec(field_, dim_, i); }

    std::vector<Violation> check() const;

  private:
    FieldPtr field_;
    int dim_;
    std::map<std::pair<int, int>, SparseVec> table_;
};

struct SeriesReport {
    std::vector<Subspace> terms;               // gamma_1, gamma_2, ... until stable
    std::optional<int> nilpotency_class;       // nullopt = not nilpotent within cap
};

bool is_subalgebra(const Subspace& sub, const StructAlgebra& alg);

/// Smallest bracket-closed subspace containing the inputs.
Subspace subalgebra_closure(const std::vector<Vec>& vectors, const StructAlgebra& alg);

/// Lower central series of `sub` as an algebra; throws NotClosed when the
/// input is not bracket-closed. Cap 0 means the default 2*dim.
SeriesReport lower_central_series(const Subspace& sub, const StructAlgebra& alg, int cap = 0);

/// Intersection of the kernels of all maps with all given subspaces.
Subspace kernel_and_meet(const std::vector<Mat>& maps, const std::vector<Subspace>& subs,
                         const FieldPtr& field, int ambient);

}  // namespace froblie

#endif
