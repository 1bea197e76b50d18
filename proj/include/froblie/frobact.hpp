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

#ifndef FROBLIE_FROBACT_HPP
#define FROBLIE_FROBACT_HPP

#include <optional>
#include <string>
#include <vector>

#include "fdlie.hpp"

namespace froblie {

/// Arithmetic data of the acting group: cyclic kernel of order n generated
/// by phi, cyclic complement of order q generated by h, conjugation
/// exponent r (h^{-1} phi h = phi^r on column vectors).
struct FrobeniusDescriptor {
    unsigned n = 0;
    unsigned q = 0;
    unsigned r = 0;
};

struct DescriptorCheck {
    bool ok = false;
    unsigned failing_divisor = 0;  // divisor of n where the order of r is not q
    std::string reason;
};

/// Frobenius arithmetic: gcd(n,q) = 1, and r has exact multiplicative
/// order q modulo every divisor d > 1 of n.
DescriptorCheck validate_descriptor(unsigned n, unsigned q, unsigned r);

/// (i, ri, r^2 i, ..., r^{q-1} i) mod n.
std::vector<unsigned> orbit(unsigned i, const FrobeniusDescriptor& d);

unsigned order_mod(unsigned r, unsigned d, unsigned cap);

struct AlgebraAction {
    Mat phi;
    Mat h;
    FrobeniusDescriptor descriptor;
};

struct ActionCheck {
    bool ok = true;
    std::string violation;
};

/// phi and h have exact orders n and q, satisfy the conjugation law, and
/// are automorphisms (checked exactly on all basis pairs).
ActionCheck validate_action(const StructAlgebra& alg, const AlgebraAction& action);

struct GradedDecomposition {
    std::vector<Subspace> components;  // L_0 .. L_{n-1}
    Scalar omega;
    unsigned n = 0;
};

/// Eigenspace decomposition L_i = ker(phi - omega^i). Verifies that the
/// components form a direct sum and obey the grading law; the projection
/// identity (1/n) sum_s omega^{-is} phi^s is applied as a cross-check.
/// Throws MissingRoot (field has no omega) or NotDirectSum (characteristic
/// divides n; reduce or extend scalars first).
GradedDecomposition decompose(const StructAlgebra& alg, const Mat& phi, unsigned n);
GradedDecomposition decompose(const StructAlgebra& alg, const AlgebraAction& action);

struct FixedSubalgebra {
    Subspace space;
    SeriesReport series;  // lower central series of the fixed subalgebra
    int dim() const { return space.dim(); }
};

/// Exact fixed space of an automorphism, with its nilpotency profile.
/// Fixed spaces of automorphisms are always subalgebras; asserted.
FixedSubalgebra fixed_subalgebra(const StructAlgebra& alg, const Mat& g);

struct ActionProfile {
    int m;  // dim C_L(F)
    std::optional<int> c;  // class of C_L(H), nullopt if not nilpotent
    Subspace kernel_fixed, complement_fixed;
};

ActionProfile measure_profile(const StructAlgebra& alg, const AlgebraAction& action);

struct SylowReductionResult {
    Mat chi, psi;            // kernel generators: |psi| = p^k, |chi| = n / p^k
    unsigned k = 0;          // p-adic valuation of n
    unsigned long pk = 1;    // p^k
    FrobeniusDescriptor reduced;  // descriptor of the <chi>H action
    Subspace fixed_of_chi;        // A = C_L(chi)
    int fixed_of_psi_in_A = 0;    // dim C_A(psi)
    bool bound_ok = false;        // dim A <= (dim C_A(psi)) * p^k
    bool psi_fixed_in_kernel_fixed = false;  // C_A(psi) sits inside C_L(phi)
};

/// Splits the kernel as <psi> x <chi> along the p-part when the field
/// characteristic is p | n, and certifies the dimension bound on C_L(chi).
/// Throws NotApplicable otherwise.
SylowReductionResult sylow_reduction(const StructAlgebra& alg, const AlgebraAction& action, const mpz_class& p);

struct PpBoundCheck {
    mpz_class p;
    unsigned k = 0;
    int fixed_dim = 0;  // m
    int ambient = 0;
    bool ok = false;  // ambient <= m * p^k
};

/// Fixed-space dimension bound for a transformation of order dividing p^k
/// over a characteristic-p field. Throws OrderMismatch when
/// transform^(p^k) != identity.
PpBoundCheck bound_check_pp(const Mat& transform, const mpz_class& p, unsigned k);

/// Reinterprets a rational algebra (and optional action) over cyclotomic(n).
std::pair<StructAlgebra, std::optional<AlgebraAction>> extend_scalars(
    const StructAlgebra& alg, unsigned n, const std::optional<AlgebraAction>& action);

}  // namespace froblie

#endif
