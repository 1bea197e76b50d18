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

#ifndef FROBLIE_FREEQUOT_HPP
#define FROBLIE_FREEQUOT_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "freelie.hpp"
#include "frobact.hpp"

namespace froblie {

/// Free Lie algebra on q*T generators grouped into T orbits: the letter of
/// slot s at power k carries index r^k * i_s mod n, and h advances the
/// power cyclically. phi scales each graded component by omega^index.
class OrbitGeneratorSet {
  public:
    /// Throws ZeroIndexSlot if a slot residue is 0 mod n.
    OrbitGeneratorSet(const FieldPtr& field, const FrobeniusDescriptor& descriptor,
                      std::vector<unsigned> slots, int truncation_weight);

    const FreeLie& algebra() const { return *algebra_; }
    const FrobeniusDescriptor& descriptor() const { return desc_; }
    const std::vector<unsigned>& slots() const { return slots_; }
    int num_slots() const { return static_cast<int>(slots_.size()); }
    const Scalar& omega() const { return omega_; }

    int letter(int slot, int power) const;  // slot 1-based
    FreeElement h_image(const FreeElement& x) const;
    FreeElement phi_image(const FreeElement& x) const;
    /// x + x^h + ... + x^(h^(q-1)).
    FreeElement orbit_sum(const FreeElement& x) const;
    /// Structural image under the substitution killing one orbit.
    FreeElement orbit_annihilation(const FreeElement& x, int slot) const;

    /// Evaluation homomorphism: letter (s,k) -> h^k(slot_values[s-1]).
    Vec evaluate(const FreeElement& x, const StructAlgebra& alg, const std::vector<Vec>& slot_values,
                 const Mat& h_matrix) const;
    Vec evaluate_letters(const std::vector<int>& letters, const StructAlgebra& alg,
                         const std::vector<Vec>& slot_values, const Mat& h_matrix) const;

  private:
    FieldPtr field_;
    FrobeniusDescriptor desc_;
    std::vector<unsigned> slots_;
    Scalar omega_;
    std::shared_ptr<FreeLie> algebra_;
    std::vector<Vec> letter_values(const std::vector<Vec>& slot_values, const Mat& h_matrix) const;
};

/// One graded piece of the free algebra: fixed weight, per-orbit letter
/// counts, and index-sum residue. Coordinates are the Lyndon words of the
/// piece in lex order.
struct SliceSpace {
    int weight = 0;
    std::vector<int> counts;
    int sigma = 0;
    std::vector<Word> words;
    std::optional<Vec> coordinates(const FreeElement& x, const FieldPtr& field) const;
};

SliceSpace make_slice_space(const OrbitGeneratorSet& ogs, int weight, const std::vector<int>& counts, int sigma);

struct IdealBasisSlice {
    SliceSpace space;
    Subspace span;  // echelonized inside the slice coordinates
};

/// Slice of the ideal generated by the zero-index-sum component.
IdealBasisSlice ideal_slice_J(const OrbitGeneratorSet& ogs, int weight, const Multidegree& deg);
/// Slice of the smallest phi-stable ideal containing all left-normed
/// brackets of c+1 orbit sums.
IdealBasisSlice ideal_slice_I(const OrbitGeneratorSet& ogs, int weight, int c, const Multidegree& deg);

/// How one spanning generator of the combined ideal slice was produced.
struct SliceGenShape {
    enum class Kind { ZeroSumWord, OrbitBracket, Extension };
    Kind kind = Kind::ZeroSumWord;
    Word head;                 // ZeroSumWord: the zero-sum Lyndon word
    std::vector<Word> blocks;  // OrbitBracket: the c+1 orbit-sum block words
    int parent = -1;           // Extension: kept-generator ordinal in the parent slice
    int letter = -1;           // Extension: appended letter
    bool from_zero_sum_root = true;  // root of the extension chain
};

struct MembershipCertificate {
    bool member = false;
    /// (coefficient, Lyndon head word, appended letters) for the zero-sum part.
    struct JTerm {
        Scalar coeff;
        Word head;
        std::vector<int> tail;
    };
    std::vector<JTerm> j_terms;
    /// Opaque labels for the orbit-bracket part (the rewrite stays modulo it).
    struct ITerm {
        Scalar coeff;
        std::string label;
    };
    std::vector<ITerm> i_terms;
};

/// Decides membership of x in the sum of the two ideals by exact linear
/// algebra in x's graded piece; x must be graded-homogeneous.
MembershipCertificate ideal_membership(const OrbitGeneratorSet& ogs, const FreeElement& x, int c);

struct RewriteTerm {
    Scalar coeff;
    std::vector<int> letters;     // simple left-normed commutator
    int zero_sum_prefix = 0;      // initial segment with index sum 0 mod n
};

struct TransformationResult {
    std::vector<RewriteTerm> terms;
};

/// Rewrites the simple commutator with the given letters (one per entry)
/// as a combination, modulo the orbit-sum ideal, of simple commutators of
/// the same weight whose marked initial segment has zero index sum and
/// which preserve per-orbit letter counts. Throws NotAMember.
TransformationResult zero_sum_rewrite(const OrbitGeneratorSet& ogs, const std::vector<int>& letters, int c);

struct ScanReport {
    bool ok = true;
    std::string failure;
};

/// Structural scan of a rewrite: weight preserved, per-orbit letter counts
/// preserved, marked prefix sums to zero.
ScanReport scan_transformation(const OrbitGeneratorSet& ogs, const std::vector<int>& input_letters,
                               const TransformationResult& result);

struct ClassBoundReport {
    int nilpotency_class = 0;
    int cap = 0;
    std::vector<int> quotient_dims;  // dim of the weight-w piece of the quotient, w = 1..
};

/// Nilpotency class of the truncated quotient of the free algebra by the
/// two ideals; a lower bound for the class bound of the acting parameters.
/// Throws CapTooSmall when the class is not resolved below weight_cap.
ClassBoundReport empirical_class_bound(const FieldPtr& field, const FrobeniusDescriptor& descriptor, int c,
                                       const std::vector<unsigned>& slots, int weight_cap);

/// Exact value of sum_{i=1..t1} ((f+1)^2 t2)^i + 1.
mpz_class segment_weight_bound(long t1, long t2, long q, long c, long f);

}  // namespace froblie

#endif
