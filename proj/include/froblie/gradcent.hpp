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

#ifndef FROBLIE_GRADCENT_HPP
#define FROBLIE_GRADCENT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frobact.hpp"

namespace froblie {

struct BoundsConfig {
    int f = 1;
    int T = 2;
    int U = 3;
};

/// Index arrangement of a simple commutator: nonzero residues mod n with
/// zero sum. The bracket structure is left-normed by convention.
struct CommutatorPattern {
    std::vector<int> indices;
    int weight() const { return static_cast<int>(indices.size()); }
    bool operator<(const CommutatorPattern& o) const {
        if (indices.size() != o.indices.size()) return indices.size() < o.indices.size();
        return indices < o.indices;
    }
};

/// All index tuples of length 2..max_weight with nonzero entries and zero
/// mod-n sum, ordered by (weight, lex).
std::vector<CommutatorPattern> enumerate_patterns(unsigned n, int max_weight);

struct Representative {
    Vec vector;
    int index = 0;   // residue j != 0
    int level = 0;   // 0..T
    int orbit_id = 0;
    int power = 0;   // position in the h-orbit
};

struct CentralizerEntry {
    Vec vector;
    int index = 0;
    int level = 0;
};

/// The level-by-level construction: per-index subspaces L_j(t) cut out as
/// intersections of kernels of bracketing maps against representatives of
/// lower levels, and per-level representatives chosen as echelon pivots of
/// pattern value spans and closed under the h-orbit.
class LevelTower {
  public:
    LevelTower(const StructAlgebra& alg, GradedDecomposition decomposition, FrobeniusDescriptor descriptor,
               std::optional<Mat> h, BoundsConfig bounds);

    const StructAlgebra& algebra() const { return *alg_; }
    const BoundsConfig& bounds() const { return bounds_; }
    const FrobeniusDescriptor& descriptor() const { return desc_; }
    int levels_built() const { return sealed_; }
    int m() const { return decomp_.components[0].dim(); }

    void build_all();
    /// Kernels L_j(t) for every j != 0; requires representatives of all
    /// levels < t (throws LevelsIncomplete).
    void build_level(int t);
    void fix_representatives(int t);

    const Subspace& centralizer(int j, int t) const;  // L_j(t)
    const std::vector<Representative>& representatives() const { return reps_; }
    std::vector<int> representatives_of_level(int t) const;

    /// The map y -> [y, x_{i_1}, ..., x_{i_k}] for a tuple of
    /// representatives, as a matrix; throws IndexSumViolation unless
    /// j + sum of tuple indices = 0 mod n.
    Mat theta(const std::vector<int>& rep_ids, int j) const;

    struct PropertyCheck {
        bool ok = true;
        long checked = 0;
        std::string counterexample;
    };
    /// Equation-style check: every bracket of a basis element of L_j(t)
    /// with a tuple of lower-level representatives (k <= U, index sums
    /// matching) is exactly zero. Exhaustive below sample_cap.
    PropertyCheck check_centralizer_property(int t, long sample_cap = 200000, uint64_t seed = 1) const;

    bool check_nesting() const;       // L_j(t+1) <= L_j(t)
    bool check_h_stability() const;   // L_j(t)^h == L_{rj}(t)

    /// Brackets of one level-t centralizer basis element with
    /// quasirepresentatives of lower levels (zero total index sum, total
    /// weight <= U + 1) evaluate to zero.
    PropertyCheck check_quasirep_property(int t, int quasi_max_weight = 2, long sample_cap = 200000) const;

    struct FrozenTerm {
        Scalar coeff;
        std::vector<int> rep_ids;
    };
    struct FrozenCombination {
        std::vector<FrozenTerm> terms;
        Vec value;  // common value of input and output
    };
    /// Rewrites a zero-index-sum commutator in centralizers as an equal
    /// combination of same-pattern commutators in level-s representatives.
    FrozenCombination freeze(const std::vector<CentralizerEntry>& commutator, int target_level) const;

    struct ZReport {
        Subspace Z;
        int codim = 0;
        SeriesReport series;
        bool graded = false;
        std::optional<bool> h_invariant;  // unset when no h was supplied
        std::vector<int> graded_dims;     // dim (Z meet L_k)
    };
    /// Subalgebra generated by all L_j(T), j != 0 (throws TowerIncomplete).
    ZReport build_Z() const;

    struct VanishingCheck {
        bool ok = true;
        long checked = 0;
        std::string counterexample;
    };
    /// Every simple commutator of weight U_effective in basis elements of
    /// the level-T carriers evaluates to zero; sampled above the cap.
    VanishingCheck verify_vanishing(int U_effective, long sample_cap = 200000, uint64_t seed = 1) const;

    struct LevelRow {
        int j = 0;
        int dim = 0;
        int codim = 0;
        int rep_count = 0;
        long tuples_used = 0;
    };
    std::vector<LevelRow> level_table(int t) const;

  private:
    const StructAlgebra* alg_;
    GradedDecomposition decomp_;
    FrobeniusDescriptor desc_;
    std::optional<Mat> h_;
    BoundsConfig bounds_;
    int sealed_ = -1;  // highest level with representatives fixed

    struct LevelData {
        std::map<int, Subspace> L;          // j -> L_j(t)
        std::map<int, long> tuples_used;
        std::vector<int> rep_ids;
        bool kernels_built = false;
        bool reps_fixed = false;
    };
    std::vector<LevelData> levels_;
    std::vector<Representative> reps_;
    std::map<std::string, int> rep_lookup_;  // dedup key: level|index|vector

    struct PatternRecord {
        std::vector<std::vector<int>> pivot_tuples;  // rep ids per slot
        SpanBuilder span;
        PatternRecord(const FieldPtr& f, int ambient) : span(f, ambient, true) {}
    };
    std::map<std::pair<int, CommutatorPattern>, PatternRecord> records_;

    int register_representative(const Vec& v, int index, int level, int orbit_id, int power);
    std::vector<std::vector<int>> enumerate_rep_tuples(int max_level_exclusive, int target_residue) const;
    Vec fold_bracket(const Vec& start, const std::vector<int>& rep_ids) const;
};

/// One summand of a collected commutator.
struct CollectEntry {
    Vec vector;
    int index = 0;
    int level = 0;
    int weight = 1;
    bool quasi = false;
};

struct CollectTerm {
    Scalar coeff;
    std::vector<CollectEntry> entries;
};

/// Reorders a left-normed commutator so the initial segment carries one
/// (quasi)representative per level in increasing level order; Jacobi
/// corrections turn into merged quasirepresentative entries. The sum of
/// the output evaluates exactly to the input.
std::vector<CollectTerm> collect(const StructAlgebra& alg, const std::vector<CollectEntry>& entries,
                                 bool first_is_head, unsigned index_modulus);

Vec evaluate_collect_term(const StructAlgebra& alg, const CollectTerm& term);

}  // namespace froblie

#endif
