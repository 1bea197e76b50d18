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

#ifndef FROBLIE_FREELIE_HPP
#define FROBLIE_FREELIE_HPP

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "fdlie.hpp"
#include "linalg.hpp"

namespace froblie {

/// Free generator with its orbit bookkeeping: `index` is the residue the
/// letter contributes to index sums, `orbit_slot`/`power` locate it inside
/// its orbit. Generators are totally ordered by (orbit_slot, power), which
/// is the order of their ids.
struct GeneratorSymbol {
    int orbit_slot;  // 1-based
    int power;       // 0..q-1
    int index;       // residue mod n
};

using Word = std::vector<int>;  // letter ids; Lyndon words key the basis

struct Multidegree {
    std::vector<int> counts;  // letters per orbit slot (index 0 = slot 1)
    int index_sum;            // mod n
    bool operator==(const Multidegree& o) const { return counts == o.counts && index_sum == o.index_sum; }
    bool operator<(const Multidegree& o) const {
        if (counts != o.counts) return counts < o.counts;
        return index_sum < o.index_sum;
    }
};

/// Nested commutator tree over generators: either a leaf letter or a
/// bracket of two subtrees.
struct BracketExpr {
    int leaf_id = -1;
    std::vector<BracketExpr> kids;  // empty or exactly two

    static BracketExpr leaf(int id) {
        BracketExpr e;
        e.leaf_id = id;
        return e;
    }
    static BracketExpr node(BracketExpr l, BracketExpr r) {
        BracketExpr e;
        e.kids.push_back(std::move(l));
        e.kids.push_back(std::move(r));
        return e;
    }
    bool is_leaf() const { return kids.empty(); }
    int weight() const;
    void leaves(std::vector<int>& out) const;
};

/// One summand of a left-normed expansion: coeff * [letters[0], letters[1], ...].
struct SimpleTerm {
    mpz_class coeff;
    std::vector<int> letters;
};

class FreeLie;

/// Sparse linear combination over the Lyndon basis of the weight-truncated
/// free Lie algebra. Words above the truncation weight are discarded by
/// every operation.
class FreeElement {
  public:
    FreeElement() : ctx_(nullptr) {}
    explicit FreeElement(const FreeLie* ctx) : ctx_(ctx) {}

    const FreeLie* context() const { return ctx_; }
    const std::map<Word, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    FreeElement operator+(const FreeElement& o) const;
    FreeElement operator-(const FreeElement& o) const;
    FreeElement scaled(const Scalar& c) const;
    bool operator==(const FreeElement& o) const;

    void add_term(const Word& w, const Scalar& c);
    int max_weight() const;

  private:
    friend class FreeLie;
    const FreeLie* ctx_;
    std::map<Word, Scalar> terms_;
};

/// Weight-truncated free Lie algebra on a finite ordered alphabet, with
/// the Lyndon-word basis. Brackets are expanded in the free associative
/// algebra and pulled back via the triangularity of Lyndon bracketings;
/// all products are memoized. Thread-safe (single coarse lock on the memo
/// tables). Instances must outlive their FreeElements.
class FreeLie {
  public:
    FreeLie(const FieldPtr& field, std::vector<GeneratorSymbol> gens, unsigned index_modulus, int truncation_weight);

    const FieldPtr& field() const { return field_; }
    int num_generators() const { return static_cast<int>(gens_.size()); }
    const GeneratorSymbol& generator_symbol(int id) const { return gens_[id]; }
    unsigned index_modulus() const { return n_; }
    int truncation_weight() const { return cap_; }
    int num_slots() const { return num_slots_; }

    FreeElement zero() const { return FreeElement(this); }
    FreeElement generator(int id) const;
    FreeElement basis_element(const Word& w) const;

    FreeElement bracket(const FreeElement& x, const FreeElement& y) const;
    /// Product of two basis elements as (word, integer coefficient) pairs.
    const std::vector<std::pair<Word, mpz_class>>& bracket_words(const Word& u, const Word& v, bool& negate) const;

    /// All Lyndon words of weight <= max_weight over the full alphabet, in
    /// (weight, lex) order.
    std::vector<Word> lyndon_words(int max_weight) const;

    static bool is_lyndon(const Word& w);
    /// Standard factorization w = u v, v the lexicographically least
    /// proper suffix.
    static std::pair<Word, Word> std_factorization(const Word& w);
    /// Lyndon words that use exactly the given letter multiset.
    static std::vector<Word> lyndon_words_of_multiset(std::vector<int> letters);
    /// Standard bracketing of a Lyndon word as a tree.
    static BracketExpr bracketing(const Word& w);

    Multidegree multidegree(const Word& w) const;
    bool same_signature(const FreeLie& o) const;

    /// Structural image of an element under a letter substitution
    /// (letter_image[id] = new letter id, or -1 to send the letter to 0).
    FreeElement apply_letter_map(const FreeElement& x, const std::vector<int>& letter_image) const;

    /// Evaluation homomorphism into a structure-constant algebra.
    Vec evaluate(const FreeElement& x, const std::vector<Vec>& letter_values, const StructAlgebra& alg) const;
    Vec evaluate_simple(const std::vector<int>& letters, const std::vector<Vec>& letter_values,
                        const StructAlgebra& alg) const;

  private:
    FieldPtr field_;
    std::vector<GeneratorSymbol> gens_;
    unsigned n_;
    int cap_;
    int num_slots_;

    using AssocPoly = std::map<Word, mpz_class>;
    mutable std::recursive_mutex memo_mutex_;
    mutable std::map<Word, AssocPoly> expand_memo_;
    mutable std::map<std::pair<Word, Word>, std::vector<std::pair<Word, mpz_class>>> product_memo_;

    const AssocPoly& assoc_expand(const Word& w) const;  // caller holds lock
    std::vector<std::pair<Word, mpz_class>> lie_from_assoc(AssocPoly p) const;
};

/// Rewrites a nested commutator as an integer combination of simple
/// left-normed commutators in the same leaf multiset; if `first_leaf` is
/// set, every term begins with (one occurrence of) that letter.
std::vector<SimpleTerm> left_normalize(const BracketExpr& expr, std::optional<int> first_leaf = std::nullopt);

/// [u-as-simple-commutator, v-as-simple-commutator] as simple terms, each
/// beginning with the letters of u.
std::vector<SimpleTerm> simple_product(const std::vector<int>& u, const std::vector<int>& v);

FreeElement to_free_element(const std::vector<SimpleTerm>& terms, const FreeLie& ctx);
FreeElement tree_to_free_element(const BracketExpr& expr, const FreeLie& ctx);

/// Projection onto a graded piece; the projections over all residues
/// (or all multidegrees) sum back to x.
FreeElement component(const FreeElement& x, const Multidegree& selector);
FreeElement component(const FreeElement& x, int index_sum_residue);

}  // namespace froblie

#endif
