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

#ifndef FROBLIE_MALCEV_HPP
#define FROBLIE_MALCEV_HPP

#include <string>
#include <vector>

#include "fdlie.hpp"

namespace froblie {

/// Truncated group-law series z(x,y) with exact rational coefficients,
/// built from the Dynkin expansion at construction time and stored over
/// the Lyndon basis in two letters. Weight-1 part is x + y; weight-2 part
/// is (1/2)[x,y].
class BchSeries {
  public:
    explicit BchSeries(int class_cap);

    int class_cap() const { return cap_; }
    /// (coefficient, bracket word in letters 0 = x, 1 = y); the word is
    /// bracketed by its standard factorization.
    const std::vector<std::pair<mpq_class, std::vector<int>>>& terms() const { return terms_; }

    /// Evaluates the series on vectors of a nilpotent algebra over a
    /// characteristic-zero field.
    Vec evaluate(const StructAlgebra& alg, const Vec& x, const Vec& y) const;

  private:
    int cap_;
    std::vector<std::pair<mpq_class, std::vector<int>>> terms_;
};

/// Group structure on the underlying set of a nilpotent algebra over a
/// characteristic-zero field, with multiplication given by the truncated
/// series. Construction verifies the nilpotency class fits the cap
/// (throws ClassCapExceeded).
class NilGroup {
  public:
    NilGroup(const StructAlgebra& alg, int class_cap);

    const StructAlgebra& algebra() const { return *alg_; }
    int class_cap() const { return series_.class_cap(); }

    Vec mul(const Vec& x, const Vec& y) const;
    Vec inv(const Vec& x) const { return scale(x, minus_one_); }
    /// x^-1 y^-1 x y.
    Vec commutator(const Vec& x, const Vec& y) const;
    /// Rational power x^(p/q) = (p/q) x under the correspondence.
    Vec power(const Vec& x, const mpq_class& e) const;

  private:
    const StructAlgebra* alg_;
    BchSeries series_;
    Scalar minus_one_;
};

struct GroupCheck {
    bool ok = true;
    long samples = 0;
    std::string violation;
};

/// Associativity, identity and inverse laws on seeded random triples.
GroupCheck group_check(const StructAlgebra& alg, int sample_count, uint64_t seed, int class_cap);

struct ClassCorrespondence {
    int lie_class = 0;
    int group_class = 0;
    bool equal = false;
};

/// Lie class via the lower central series; group class via iterated group
/// commutators of the same subalgebra.
ClassCorrespondence class_correspondence(const Subspace& subalg, const StructAlgebra& alg, int class_cap);

/// Exact equivariance of the group law under an algebra automorphism g:
/// g(x * y) = g(x) * g(y) on seeded random pairs.
bool bch_equivariant(const StructAlgebra& alg, const Mat& g, int sample_count, uint64_t seed, int class_cap);

}  // namespace froblie

#endif
