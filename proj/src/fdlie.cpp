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

#include "froblie/fdlie.hpp"

#include <sstream>

namespace froblie {

std::string Violation::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Antisymmetry: os << "antisymmetry violation at (" << i + 1 << "," << j + 1 << ")"; break;
        case Kind::Diagonal: os << "nonzero diagonal bracket at (" << i + 1 << "," << i + 1 << ")"; break;
        case Kind::Jacobi: os << "Jacobi violation at (" << i + 1 << "," << j + 1 << "," << k + 1 << ")"; break;
    }
    return os.str();
}

StructAlgebra::StructAlgebra(const FieldPtr& field, int dim) : field_(field), dim_(dim) {}

static SparseVec negate_sparse(const SparseVec& v) {
    SparseVec out;
    out.entries.reserve(v.entries.size());
    for (const auto& [k, c] : v.entries) out.entries.emplace_back(k, -c);
    return out;
}

void StructAlgebra::set_bracket(int i, int j, const SparseVec& v) {
    if (i == j) throw DimensionMismatch("set_bracket on the diagonal");
    table_[{i, j}] = v;
    table_[{j, i}] = negate_sparse(v);
}

void StructAlgebra::set_bracket_raw(int i, int j, const SparseVec& v) { table_[{i, j}] = v; }

bool StructAlgebra::has_entry(int i, int j) const { return table_.count({i, j}) != 0; }

void StructAlgebra::mirror_missing_entries() {
    std::vector<std::pair<std::pair<int, int>, SparseVec>> to_add;
    for (const auto& [key, v] : table_) {
        auto mirror = std::make_pair(key.second, key.first);
        if (key.first != key.second && table_.find(mirror) == table_.end())
            to_add.emplace_back(mirror, negate_sparse(v));
    }
    for (auto& [key, v] : to_add) table_[key] = std::move(v);
}

Vec StructAlgebra::basis_bracket(int i, int j) const {
    Vec out = zero_vec(field_, dim_);
    auto it = table_.find({i, j});
    if (it != table_.end())
        for (const auto& [k, c] : it->second.entries) out[k] += c;
    return out;
}

Vec StructAlgebra::bracket(const Vec& x, const Vec& y) const {
    if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
        throw DimensionMismatch("bracket operand has wrong dimension");
    Vec out = zero_vec(field_, dim_);
    for (const auto& [key, v] : table_) {
        const Scalar& xi = x[key.first];
        const Scalar& yj = y[key.second];
        if (xi.is_zero() || yj.is_zero()) continue;
        Scalar f = xi * yj;
        for (const auto& [k, c] : v.entries) out[k] += f * c;
    }
    return out;
}

Mat StructAlgebra::ad_right(const Vec& x) const {
    Mat m(field_, dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
        Vec col = bracket(basis_vector(j), x);
        for (int i = 0; i < dim_; ++i) m.at(i, j) = col[i];
    }
    return m;
}

std::vector<Violation> StructAlgebra::check() const {
    std::vector<Violation> out;
    for (int i = 0; i < dim_; ++i) {
        if (!is_zero_vec(basis_bracket(i, i))) out.push_back({Violation::Kind::Diagonal, i, i, -1});
        for (int j = i + 1; j < dim_; ++j) {
            Vec ab = basis_bracket(i, j);
            Vec ba = basis_bracket(j, i);
            if (!is_zero_vec(add(ab, ba))) out.push_back({Violation::Kind::Antisymmetry, i, j, -1});
        }
    }
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            for (int k = j + 1; k < dim_; ++k) {
                Vec s = bracket(basis_bracket(i, j), basis_vector(k));
                s = add(s, bracket(basis_bracket(j, k), basis_vector(i)));
                s = add(s, bracket(basis_bracket(k, i), basis_vector(j)));
                if (!is_zero_vec(s)) out.push_back({Violation::Kind::Jacobi, i, j, k});
            }
    return out;
}

bool is_subalgebra(const Subspace& sub, const StructAlgebra& alg) {
    const auto& basis = sub.basis();
    for (size_t a = 0; a < basis.size(); ++a)
        for (size_t b = a + 1; b < basis.size(); ++b)
            if (!sub.contains(alg.bracket(basis[a], basis[b]))) return false;
    return true;
}

Subspace subalgebra_closure(const std::vector<Vec>& vectors, const StructAlgebra& alg) {
    Subspace s = Subspace::span(alg.field(), alg.dim(), vectors);
    for (;;) {
        const auto basis = s.basis();
        Subspace next = s;
        for (size_t a = 0; a < basis.size(); ++a)
            for (size_t b = a + 1; b < basis.size(); ++b) next = next.sum(Subspace::span(alg.field(), alg.dim(), {alg.bracket(basis[a], basis[b])}));
        if (next.dim() == s.dim()) return s;
        s = next;
    }
}

SeriesReport lower_central_series(const Subspace& sub, const StructAlgebra& alg, int cap) {
    if (!is_subalgebra(sub, alg)) throw NotClosed("lower_central_series: input is not bracket-closed");
    if (cap <= 0) cap = 2 * alg.dim();
    SeriesReport rep;
    rep.terms.push_back(sub);
    for (int step = 1; step <= cap; ++step) {
        const Subspace& cur = rep.terms.back();
        if (cur.dim() == 0) {
            rep.nilpotency_class = step - 1;
            return rep;
        }
        std::vector<Vec> brackets;
        for (const Vec& a : cur.basis())
            for (const Vec& b : sub.basis()) brackets.push_back(alg.bracket(a, b));
        Subspace next = Subspace::span(alg.field(), alg.dim(), brackets);
        if (next.dim() == cur.dim()) {
            // stabilized above zero: not nilpotent
            rep.terms.push_back(next);
            return rep;
        }
        rep.terms.push_back(next);
    }
    if (rep.terms.back().dim() == 0) rep.nilpotency_class = static_cast<int>(rep.terms.size()) - 1;
    return rep;
}

Subspace kernel_and_meet(const std::vector<Mat>& maps, const std::vector<Subspace>& subs,
                         const FieldPtr& field, int ambient) {
    std::vector<Vec> constraints;
    for (const Mat& m : maps) {
        if (m.cols() != ambient) throw DimensionMismatch("kernel_and_meet: map domain mismatch");
        for (int i = 0; i < m.rows(); ++i) {
            Vec r = m.row(i);
            if (!is_zero_vec(r)) constraints.push_back(std::move(r));
        }
    }
    for (const Subspace& s : subs) {
        if (s.ambient() != ambient) throw DimensionMismatch("kernel_and_meet: subspace ambient mismatch");
        for (Vec& v : s.annihilator()) constraints.push_back(std::move(v));
    }
    if (constraints.empty()) return Subspace::full(field, ambient);
    return Subspace::span(field, ambient, nullspace(Mat::from_rows(field, constraints, ambient)));
}

}  // namespace froblie
