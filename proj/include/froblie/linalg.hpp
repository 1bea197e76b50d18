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

#ifndef FROBLIE_LINALG_HPP
#define FROBLIE_LINALG_HPP

#include <map>
#include <optional>
#include <vector>

#include "scalar.hpp"

namespace froblie {

using Vec = std::vector<Scalar>;

Vec zero_vec(const FieldPtr& field, int n);
Vec unit_vec(const FieldPtr& field, int n, int i);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Scalar& c);
Scalar dot(const Vec& a, const Vec& b);

/// Dense matrix acting on column vectors: (M x)_i = sum_j M(i,j) x_j.
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(const FieldPtr& field, int rows, int cols);

    static Mat identity(const FieldPtr& field, int n);
    static Mat from_rows(const FieldPtr& field, const std::vector<Vec>& rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    Vec row(int i) const;
    Vec apply(const Vec& x) const;  // M x
    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scaled(const Scalar& c) const;
    bool operator==(const Mat& o) const;
    Mat pow(unsigned e) const;
    Mat transpose() const;
    bool is_identity() const;

    /// Inverse via Gauss-Jordan; DivisionByZero wrapped as Error if singular.
    Mat inverse() const;

  private:
    FieldPtr field_;
    int rows_, cols_;
    std::vector<Scalar> a_;
};

/// Basis rows of {x : M x = 0}, in reduced echelon form.
std::vector<Vec> nullspace(const Mat& m);

/// Row space in reduced echelon form with deterministic pivoting
/// (leftmost pivot, first-row preference). Canonical: equal subspaces
/// have identical basis matrices.
class Subspace {
  public:
    Subspace() : ambient_(0) {}

    static Subspace zero(const FieldPtr& field, int ambient);
    static Subspace full(const FieldPtr& field, int ambient);
    static Subspace span(const FieldPtr& field, int ambient, const std::vector<Vec>& vectors);

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const FieldPtr& field() const { return field_; }
    const std::vector<Vec>& basis() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /// Residual of v after eliminating against the basis rows.
    Vec reduce(const Vec& v) const;
    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    Subspace sum(const Subspace& o) const;
    Subspace meet(const Subspace& o) const;
    /// Span of {g b : b basis row} (g applied to rows as column vectors).
    Subspace image(const Mat& g) const;
    /// Rows v with b . v = 0 for every basis row b; x lies in the subspace
    /// iff it is annihilated by all of them.
    std::vector<Vec> annihilator() const;

  private:
    FieldPtr field_;
    int ambient_;
    std::vector<Vec> rows_;
    std::vector<int> pivots_;
    void insert(Vec v);
    friend class SpanBuilder;
};

/// Incremental echelon span with provenance: each accepted vector is
/// remembered, and any member of the span can be expressed exactly over
/// the accepted generators (first-come pivot preference, so certificates
/// are reproducible).
class SpanBuilder {
  public:
    SpanBuilder(const FieldPtr& field, int ambient, bool track = true);

    /// Returns true when v enlarged the span; gen_id tags the generator.
    bool add(const Vec& v, int gen_id);
    int rank() const { return static_cast<int>(rows_.size()); }
    int ambient() const { return ambient_; }
    bool contains(const Vec& v) const;

    /// Coefficients c with v = sum c[g] * generator_g, or nullopt.
    std::optional<std::map<int, Scalar>> express(const Vec& v) const;

    Subspace to_subspace() const;

  private:
    FieldPtr field_;
    int ambient_;
    bool track_;
    std::vector<Vec> rows_;           // pivot-normalized, partially reduced
    std::vector<int> pivot_col_;
    std::vector<std::map<int, Scalar>> hist_;
};

}  // namespace froblie

#endif
