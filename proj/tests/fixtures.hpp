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

#ifndef FROBLIE_TESTS_FIXTURES_HPP
#define FROBLIE_TESTS_FIXTURES_HPP

#include <vector>

#include "froblie/frobact.hpp"
#include "froblie/rng.hpp"

namespace froblie::testing {

// dim 3, [e1,e2] = e3
inline StructAlgebra make_heisenberg(const FieldPtr& field) {
    StructAlgebra alg(field, 3);
    SparseVec v;
    v.entries.emplace_back(2, field->one());
    alg.set_bracket(0, 1, v);
    return alg;
}

// phi = diag(w, w^2, 1), h: e1<->e2, e3 -> -e3, descriptor (3, 2, 2)
inline AlgebraAction heisenberg_action(const FieldPtr& field) {
    Scalar w = field->primitive_root(3);
    Mat phi(field, 3, 3);
    phi.at(0, 0) = w;
    phi.at(1, 1) = w * w;
    phi.at(2, 2) = field->one();
    Mat h(field, 3, 3);
    h.at(0, 1) = field->one();
    h.at(1, 0) = field->one();
    h.at(2, 2) = field->integer(-1);
    return {phi, h, FrobeniusDescriptor{3, 2, 2}};
}

// m = 0 variant: phi = diag(w, w, w^2)
inline Mat heisenberg_m0_phi(const FieldPtr& field) {
    Scalar w = field->primitive_root(3);
    Mat phi(field, 3, 3);
    phi.at(0, 0) = w;
    phi.at(1, 1) = w;
    phi.at(2, 2) = w * w;
    return phi;
}

// e, f, t with [t,e] = 2e, [t,f] = -2f, [e,f] = t (not nilpotent)
inline StructAlgebra make_sl2(const FieldPtr& field) {
    StructAlgebra alg(field, 3);
    SparseVec ef, te, tf;
    ef.entries.emplace_back(2, field->one());
    alg.set_bracket(0, 1, ef);
    te.entries.emplace_back(0, field->integer(2));
    alg.set_bracket(2, 0, te);
    tf.entries.emplace_back(1, field->integer(-2));
    alg.set_bracket(2, 1, tf);
    return alg;
}

// [e1, e_i] = e_{i+1} for 2 <= i < dim; nilpotent of class dim - 1
inline StructAlgebra make_filiform(const FieldPtr& field, int dim) {
    StructAlgebra alg(field, dim);
    for (int i = 1; i + 1 < dim; ++i) {
        SparseVec v;
        v.entries.emplace_back(i + 1, field->one());
        alg.set_bracket(0, i, v);
    }
    return alg;
}

// Heisenberg plus a graded abelian plane: dim 5, [e1,e2] = e3,
// a1 = e4 (index 1), a2 = e5 (index 2). m = 1 and L_1(1) = span(a1).
inline StructAlgebra make_heis_plus_abelian(const FieldPtr& field) {
    StructAlgebra alg(field, 5);
    SparseVec v;
    v.entries.emplace_back(2, field->one());
    alg.set_bracket(0, 1, v);
    return alg;
}

inline AlgebraAction heis_plus_action(const FieldPtr& field) {
    Scalar w = field->primitive_root(3);
    Mat phi(field, 5, 5);
    phi.at(0, 0) = w;
    phi.at(1, 1) = w * w;
    phi.at(2, 2) = field->one();
    phi.at(3, 3) = w;
    phi.at(4, 4) = w * w;
    Mat h(field, 5, 5);
    h.at(0, 1) = field->one();
    h.at(1, 0) = field->one();
    h.at(2, 2) = field->integer(-1);
    h.at(3, 4) = field->one();
    h.at(4, 3) = field->one();
    return {phi, h, FrobeniusDescriptor{3, 2, 2}};
}

// strictly upper triangular d x d matrices as a nilpotent algebra; basis
// = units E_{ij}, i < j, ordered row-major
inline StructAlgebra make_strictly_upper(const FieldPtr& field, int d) {
    std::vector<std::pair<int, int>> basis;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) basis.emplace_back(i, j);
    auto find = [&](int i, int j) {
        for (size_t k = 0; k < basis.size(); ++k)
            if (basis[k] == std::make_pair(i, j)) return static_cast<int>(k);
        return -1;
    };
    StructAlgebra alg(field, static_cast<int>(basis.size()));
    for (size_t a = 0; a < basis.size(); ++a)
        for (size_t b = a + 1; b < basis.size(); ++b) {
            auto [i, j] = basis[a];
            auto [k, l] = basis[b];
            SparseVec v;
            if (j == k) v.entries.emplace_back(find(i, l), field->one());
            if (l == i) v.entries.emplace_back(find(k, j), field->integer(-1));
            std::sort(v.entries.begin(), v.entries.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            if (!v.entries.empty()) alg.set_bracket(static_cast<int>(a), static_cast<int>(b), v);
        }
    return alg;
}

inline Scalar random_scalar(const FieldPtr& field, SplitMix64& rng) {
    switch (field->spec().kind) {
        case FieldKind::Prime:
            return field->integer(static_cast<long>(rng.below(64)));
        case FieldKind::Rational: {
            mpq_class q(rng.range(-9, 9), rng.range(1, 7));
            q.canonicalize();
            return field->rational(q);
        }
        case FieldKind::Cyclotomic: {
            Scalar w = field->parse("w");
            Scalar acc = field->integer(rng.range(-4, 4));
            Scalar p = field->one();
            for (unsigned i = 1; i < field->degree(); ++i) {
                p = p * w;
                acc = acc + p * field->integer(rng.range(-4, 4));
            }
            return acc;
        }
    }
    return field->zero();
}

// random invertible matrix as unit-lower times unit-upper with small entries
inline Mat random_invertible(const FieldPtr& field, int d, SplitMix64& rng) {
    Mat lower = Mat::identity(field, d);
    Mat upper = Mat::identity(field, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (i > j) lower.at(i, j) = field->integer(rng.range(-2, 2));
            if (i < j) upper.at(i, j) = field->integer(rng.range(-2, 2));
        }
    return lower * upper;
}

inline Vec random_vector(const FieldPtr& field, int d, SplitMix64& rng) {
    Vec v = zero_vec(field, d);
    for (int i = 0; i < d; ++i) v[i] = field->integer(rng.range(-5, 5));
    return v;
}

// necklace count: (1/w) sum_{d | w} mu(d) g^(w/d)
inline long witt_dimension(long g, long w) {
    auto mobius = [](long n) {
        long result = 1;
        for (long p = 2; p * p <= n; ++p) {
            if (n % p != 0) continue;
            n /= p;
            if (n % p == 0) return 0L;
            result = -result;
        }
        if (n > 1) result = -result;
        return result;
    };
    long total = 0;
    for (long d = 1; d <= w; ++d) {
        if (w % d != 0) continue;
        long term = mobius(d);
        long power = 1;
        for (long i = 0; i < w / d; ++i) power *= g;
        total += term * power;
    }
    return total / w;
}

}  // namespace froblie::testing

#endif
