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

#include <doctest.h>

#include <map>

#include "fixtures.hpp"
#include "froblie/freelie.hpp"
#include "froblie/malcev.hpp"

using namespace froblie;
using namespace froblie::testing;

namespace {

// free associative polynomials over Q in two letters, truncated by weight;
// an independent oracle for the group-law series via exp(x) exp(y) = exp(z)
using Poly = std::map<std::vector<int>, mpq_class>;

Poly truncate(const Poly& p, int cap) {
    Poly out;
    for (const auto& [w, c] : p)
        if (static_cast<int>(w.size()) <= cap && c != 0) out[w] = c;
    return out;
}

Poly mul(const Poly& a, const Poly& b, int cap) {
    Poly out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            if (static_cast<int>(wa.size() + wb.size()) > cap) continue;
            std::vector<int> w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out[w] += ca * cb;
        }
    return truncate(out, cap);
}

Poly add(const Poly& a, const Poly& b) {
    Poly out = a;
    for (const auto& [w, c] : b) out[w] += c;
    return truncate(out, 1 << 20);
}

Poly scale(const Poly& a, const mpq_class& c) {
    Poly out;
    for (const auto& [w, x] : a) out[w] = x * c;
    return out;
}

Poly exp_poly(const Poly& a, int cap) {
    Poly out{{{}, mpq_class(1)}};
    Poly powv{{{}, mpq_class(1)}};
    mpz_class fact = 1;
    for (int k = 1; k <= cap; ++k) {
        powv = mul(powv, a, cap);
        fact *= k;
        out = add(out, scale(powv, mpq_class(1, fact)));
    }
    return truncate(out, cap);
}

Poly bracket_poly(const std::vector<int>& word, int cap) {
    if (word.size() == 1) return {{word, mpq_class(1)}};
    auto [u, v] = FreeLie::std_factorization(word);
    Poly a = bracket_poly(u, cap), b = bracket_poly(v, cap);
    return add(mul(a, b, cap), scale(mul(b, a, cap), mpq_class(-1)));
}

}  // namespace

TEST_CASE("the series starts with x + y + (1/2)[x,y]") {
    BchSeries series(2);
    REQUIRE(series.terms().size() == 3);
    std::map<std::vector<int>, mpq_class> got;
    for (const auto& [c, w] : series.terms()) got[w] = c;
    CHECK(got[{0}] == 1);
    CHECK(got[{1}] == 1);
    CHECK(got[{0, 1}] == mpq_class(1, 2));
}

TEST_CASE("exp of the series multiplies exponentials in the free algebra") {
    for (int cap = 1; cap <= 5; ++cap) {
        BchSeries series(cap);
        Poly z;
        for (const auto& [c, w] : series.terms()) z = add(z, scale(bracket_poly(w, cap), c));
        Poly x{{{0}, mpq_class(1)}};
        Poly y{{{1}, mpq_class(1)}};
        Poly lhs = mul(exp_poly(x, cap), exp_poly(y, cap), cap);
        Poly rhs = exp_poly(z, cap);
        Poly diff = add(lhs, scale(rhs, mpq_class(-1)));
        for (const auto& [w, c] : diff) CHECK(c == 0);
    }
}

TEST_CASE("group law on the worked fixtures") {
    FieldPtr q = make_field(FieldSpec::rational());

    StructAlgebra ab(q, 2);
    NilGroup gab(ab, 2);
    Vec a = {q->one(), q->zero()};
    Vec b = {q->zero(), q->one()};
    CHECK(gab.mul(a, b) == add(a, b));

    StructAlgebra heis = make_heisenberg(q);
    NilGroup g(heis, 2);
    Vec e1 = heis.basis_vector(0), e2 = heis.basis_vector(1);
    Vec prod = g.mul(e1, e2);
    Vec expected = add(add(e1, e2), scale(heis.basis_vector(2), q->rational(mpq_class(1, 2))));
    CHECK(prod == expected);
    CHECK(is_zero_vec(g.mul(e1, g.inv(e1))));

    // the group commutator of the generators is the central element
    CHECK(g.commutator(e1, e2) == heis.basis_vector(2));

    // rational powers act by scalar multiplication
    CHECK(g.power(e1, mpq_class(1, 2)) == scale(e1, q->rational(mpq_class(1, 2))));

    CHECK_THROWS_AS(NilGroup(make_sl2(q), 4), ClassCapExceeded);
    CHECK_THROWS_AS(NilGroup(make_filiform(q, 5), 3), ClassCapExceeded);  // class 4 > cap 3
}

TEST_CASE("group axioms hold exactly on sampled triples") {
    FieldPtr q = make_field(FieldSpec::rational());
    StructAlgebra heis = make_heisenberg(q);
    GroupCheck res = group_check(heis, 100, 2024, 4);
    CHECK(res.ok);
    CHECK(res.samples == 100);

    StructAlgebra zero(q, 0);
    CHECK(group_check(zero, 5, 1, 2).ok);

    for (int d : {4, 5}) {
        StructAlgebra fil = make_filiform(q, d);
        CHECK(group_check(fil, 25, 7, 4).ok);
    }
}

TEST_CASE("group and algebra classes coincide") {
    FieldPtr q = make_field(FieldSpec::rational());
    StructAlgebra heis = make_heisenberg(q);
    auto cc = class_correspondence(Subspace::full(q, 3), heis, 4);
    CHECK(cc.lie_class == 2);
    CHECK(cc.group_class == 2);
    CHECK(cc.equal);

    StructAlgebra ab(q, 3);
    auto cab = class_correspondence(Subspace::full(q, 3), ab, 4);
    CHECK(cab.lie_class == 1);
    CHECK(cab.equal);

    auto c1 = class_correspondence(Subspace::span(q, 3, {heis.basis_vector(2)}), heis, 4);
    CHECK(c1.lie_class == 1);
    CHECK(c1.equal);

    for (int d : {3, 4, 5}) {
        StructAlgebra fil = make_filiform(q, d);
        auto cf = class_correspondence(Subspace::full(q, d), fil, 4);
        CHECK(cf.lie_class == d - 1);
        CHECK(cf.equal);
    }
}

TEST_CASE("the group law is equivariant under automorphisms") {
    // over the cyclotomic field both phi and h act; over Q only h does
    FieldPtr c3 = make_field(FieldSpec::cyclotomic(3));
    StructAlgebra heis = make_heisenberg(c3);
    AlgebraAction action = heisenberg_action(c3);
    CHECK(bch_equivariant(heis, action.phi, 50, 5, 4));
    CHECK(bch_equivariant(heis, action.h, 50, 5, 4));

    FieldPtr q = make_field(FieldSpec::rational());
    StructAlgebra heis_q = make_heisenberg(q);
    Mat h(q, 3, 3);
    h.at(0, 1) = q->one();
    h.at(1, 0) = q->one();
    h.at(2, 2) = q->integer(-1);
    CHECK(bch_equivariant(heis_q, h, 50, 5, 4));

    // non-automorphisms break equivariance
    Mat bad = Mat::identity(q, 3);
    bad.at(2, 2) = q->integer(3);
    CHECK(!bch_equivariant(heis_q, bad, 50, 5, 4));
}

TEST_CASE("group series and Lie series stabilize together") {
    FieldPtr q = make_field(FieldSpec::rational());
    StructAlgebra upper = make_strictly_upper(q, 4);  // class 3
    auto cc = class_correspondence(Subspace::full(q, upper.dim()), upper, 4);
    CHECK(cc.lie_class == 3);
    CHECK(cc.equal);
}
