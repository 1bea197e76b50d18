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

#include "froblie/freequot.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace froblie {

OrbitGeneratorSet::OrbitGeneratorSet(const FieldPtr& field, const FrobeniusDescriptor& descriptor,
                                     std::vector<unsigned> slots, int truncation_weight)
    : field_(field), desc_(descriptor), slots_(std::move(slots)) {
    if (desc_.n < 1 || desc_.q < 1) throw InvalidSpec("orbit generators need n >= 1 and q >= 1");
    if (slots_.empty()) throw InvalidSpec("at least one orbit slot required");
    // power q must wrap every index back to itself
    unsigned long rq = 1;
    for (unsigned i = 0; i < desc_.q; ++i) rq = (rq * desc_.r) % desc_.n;
    std::vector<GeneratorSymbol> gens;
    for (size_t s = 0; s < slots_.size(); ++s) {
        unsigned i = slots_[s] % desc_.n;
        if (i == 0) throw ZeroIndexSlot("slot " + std::to_string(s + 1) + " has index 0 mod n");
        if ((rq * i) % desc_.n != i % desc_.n)
            throw InvalidSpec("r^q does not fix slot index " + std::to_string(i) + " mod n");
        unsigned long idx = i;
        for (unsigned k = 0; k < desc_.q; ++k) {
            gens.push_back({static_cast<int>(s + 1), static_cast<int>(k), static_cast<int>(idx)});
            idx = (idx * desc_.r) % desc_.n;
        }
    }
    omega_ = field_->primitive_root(desc_.n);
    algebra_ = std::make_shared<FreeLie>(field_, std::move(gens), desc_.n, truncation_weight);
}

int OrbitGeneratorSet::letter(int slot, int power) const {
    if (slot < 1 || slot > num_slots() || power < 0 || power >= static_cast<int>(desc_.q))
        throw Error("letter (slot,power) out of range");
    return (slot - 1) * static_cast<int>(desc_.q) + power;
}

FreeElement OrbitGeneratorSet::h_image(const FreeElement& x) const {
    std::vector<int> image(algebra_->num_generators());
    for (int id = 0; id < algebra_->num_generators(); ++id) {
        const GeneratorSymbol& g = algebra_->generator_symbol(id);
        image[id] = letter(g.orbit_slot, (g.power + 1) % static_cast<int>(desc_.q));
    }
    return algebra_->apply_letter_map(x, image);
}

FreeElement OrbitGeneratorSet::phi_image(const FreeElement& x) const {
    FreeElement out = algebra_->zero();
    for (const auto& [w, c] : x.terms()) {
        int sigma = algebra_->multidegree(w).index_sum;
        out.add_term(w, c * omega_.pow(sigma));
    }
    return out;
}

FreeElement OrbitGeneratorSet::orbit_sum(const FreeElement& x) const {
    FreeElement acc = x;
    FreeElement img = x;
    for (unsigned k = 1; k < desc_.q; ++k) {
        img = h_image(img);
        acc = acc + img;
    }
    return acc;
}

FreeElement OrbitGeneratorSet::orbit_annihilation(const FreeElement& x, int slot) const {
    std::vector<int> image(algebra_->num_generators());
    for (int id = 0; id < algebra_->num_generators(); ++id) {
        const GeneratorSymbol& g = algebra_->generator_symbol(id);
        image[id] = g.orbit_slot == slot ? -1 : id;
    }
    return algebra_->apply_letter_map(x, image);
}

std::vector<Vec> OrbitGeneratorSet::letter_values(const std::vector<Vec>& slot_values, const Mat& h_matrix) const {
    if (static_cast<int>(slot_values.size()) != num_slots())
        throw DimensionMismatch("one image vector per slot required");
    std::vector<Vec> values(algebra_->num_generators());
    for (int s = 1; s <= num_slots(); ++s) {
        Vec cur = slot_values[s - 1];
        for (unsigned k = 0; k < desc_.q; ++k) {
            values[letter(s, static_cast<int>(k))] = cur;
            cur = h_matrix.apply(cur);
        }
    }
    return values;
}

Vec OrbitGeneratorSet::evaluate(const FreeElement& x, const StructAlgebra& alg, const std::vector<Vec>& slot_values,
                                const Mat& h_matrix) const {
    return algebra_->evaluate(x, letter_values(slot_values, h_matrix), alg);
}

Vec OrbitGeneratorSet::evaluate_letters(const std::vector<int>& letters, const StructAlgebra& alg,
                                        const std::vector<Vec>& slot_values, const Mat& h_matrix) const {
    return algebra_->evaluate_simple(letters, letter_values(slot_values, h_matrix), alg);
}

std::optional<Vec> SliceSpace::coordinates(const FreeElement& x, const FieldPtr& field) const {
    Vec out = zero_vec(field, static_cast<int>(words.size()));
    for (const auto& [w, c] : x.terms()) {
        auto it = std::lower_bound(words.begin(), words.end(), w);
        if (it == words.end() || *it != w) return std::nullopt;
        out[it - words.begin()] = c;
    }
    return out;
}

namespace {

// All letter multisets (sorted) with counts[s] letters from each orbit slot.
void enumerate_multisets(const OrbitGeneratorSet& ogs, const std::vector<int>& counts, size_t slot,
                         std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (slot == counts.size()) {
        out.push_back(cur);
        return;
    }
    int need = counts[slot];
    unsigned q = ogs.descriptor().q;
    // multiset of `need` letters from the q letters of this slot
    std::vector<int> pick(need, 0);
    std::function<void(int, int)> rec = [&](int pos, int min_power) {
        if (pos == need) {
            size_t before = cur.size();
            for (int k : pick) cur.push_back(ogs.letter(static_cast<int>(slot + 1), k));
            enumerate_multisets(ogs, counts, slot + 1, cur, out);
            cur.resize(before);
            return;
        }
        for (int k = min_power; k < static_cast<int>(q); ++k) {
            pick[pos] = k;
            rec(pos + 1, k);
        }
    };
    if (need == 0) {
        enumerate_multisets(ogs, counts, slot + 1, cur, out);
    } else {
        rec(0, 0);
    }
}

int multiset_index_sum(const OrbitGeneratorSet& ogs, const std::vector<int>& letters) {
    long sum = 0;
    for (int id : letters) sum += ogs.algebra().generator_symbol(id).index;
    unsigned n = ogs.descriptor().n;
    return static_cast<int>(((sum % n) + n) % n);
}

}  // namespace

SliceSpace make_slice_space(const OrbitGeneratorSet& ogs, int weight, const std::vector<int>& counts, int sigma) {
    if (static_cast<int>(counts.size()) != ogs.num_slots()) throw DimensionMismatch("counts per slot required");
    int total = 0;
    for (int c : counts) total += c;
    if (total != weight) throw DimensionMismatch("multidegree counts do not sum to the weight");
    SliceSpace out;
    out.weight = weight;
    out.counts = counts;
    out.sigma = sigma;
    std::vector<std::vector<int>> multisets;
    std::vector<int> cur;
    enumerate_multisets(ogs, counts, 0, cur, multisets);
    for (const auto& ms : multisets) {
        if (multiset_index_sum(ogs, ms) != sigma) continue;
        for (Word& w : FreeLie::lyndon_words_of_multiset(ms)) out.words.push_back(std::move(w));
    }
    std::sort(out.words.begin(), out.words.end());
    return out;
}

namespace {

struct SliceKey {
    int weight;
    std::vector<int> counts;
    int sigma;
    bool operator<(const SliceKey& o) const {
        if (weight != o.weight) return weight < o.weight;
        if (counts != o.counts) return counts < o.counts;
        return sigma < o.sigma;
    }
};

// Builds the graded slices of the two ideals bottom-up: a slice is seeded
// by its own generators (zero-index-sum basis words / brackets of c+1
// orbit sums) and extended by bracketing the kept generators of the
// weight-(w-1) slices with single letters. Kept generators are the
// rank-increasing ones; they are a spanning subset, so extending only them
// is lossless.
class IdealSliceEngine {
  public:
    IdealSliceEngine(const OrbitGeneratorSet& ogs, int c, bool with_zero_sum, bool with_orbit_brackets)
        : ogs_(ogs), c_(c), with_zero_sum_(with_zero_sum), with_orbit_brackets_(with_orbit_brackets) {}

    struct KeptGen {
        SliceGenShape shape;
        FreeElement element;
    };

    struct Slice {
        SliceSpace space;
        std::vector<KeptGen> kept;
        SpanBuilder span;
        Slice(SliceSpace sp, const FieldPtr& field)
            : space(std::move(sp)), span(field, static_cast<int>(space.words.size()), true) {}
    };

    const Slice& slice(const SliceKey& key) {
        auto it = memo_.find(key);
        if (it != memo_.end()) return *it->second;
        auto s = std::make_unique<Slice>(make_slice_space(ogs_, key.weight, key.counts, key.sigma),
                                         ogs_.algebra().field());
        build(key, *s);
        auto [pos, inserted] = memo_.emplace(key, std::move(s));
        return *pos->second;
    }

    /// Express x (with coordinates in its slice) over the kept generators.
    std::optional<std::map<int, Scalar>> express(const SliceKey& key, const Vec& coords) {
        return slice(key).span.express(coords);
    }

    /// Walk an extension chain back to its root; returns appended letters.
    std::pair<const SliceGenShape*, std::vector<int>> resolve(const SliceKey& key, int kept_idx) {
        SliceKey cur = key;
        std::vector<int> tail;
        const Slice* sl = &slice(cur);
        const SliceGenShape* shape = &sl->kept[kept_idx].shape;
        while (shape->kind == SliceGenShape::Kind::Extension) {
            tail.push_back(shape->letter);
            cur = parent_key(cur, shape->letter);
            sl = &slice(cur);
            shape = &sl->kept[shape->parent].shape;
        }
        std::reverse(tail.begin(), tail.end());
        return {shape, tail};
    }

    SliceKey parent_key(const SliceKey& key, int letter) const {
        const GeneratorSymbol& g = ogs_.algebra().generator_symbol(letter);
        SliceKey p;
        p.weight = key.weight - 1;
        p.counts = key.counts;
        p.counts[g.orbit_slot - 1] -= 1;
        int n = static_cast<int>(ogs_.descriptor().n);
        p.sigma = ((key.sigma - g.index) % n + n) % n;
        return p;
    }

  private:
    const OrbitGeneratorSet& ogs_;
    int c_;
    bool with_zero_sum_, with_orbit_brackets_;
    std::map<SliceKey, std::unique_ptr<Slice>> memo_;

    void add_candidate(Slice& s, const FreeElement& elem, SliceGenShape shape) {
        if (elem.is_zero()) return;
        auto coords = s.space.coordinates(elem, ogs_.algebra().field());
        if (!coords) throw Error("internal: ideal generator leaves its graded slice");
        int prospective = static_cast<int>(s.kept.size());
        if (s.span.add(*coords, prospective)) s.kept.push_back({std::move(shape), elem});
    }

    // Ordered tuples of c+1 nonempty Lyndon block words with the given
    // total multidegree; for pairs, the antisymmetric half is skipped.
    void enumerate_blocks(const SliceKey& key, std::vector<Word>& blocks, std::vector<int> remaining,
                          int remaining_weight, Slice& s) {
        size_t depth = blocks.size();
        size_t want = static_cast<size_t>(c_) + 1;
        if (depth == want) {
            if (remaining_weight != 0) return;
            FreeElement acc = ogs_.orbit_sum(ogs_.algebra().basis_element(blocks[0]));
            for (size_t i = 1; i < blocks.size(); ++i)
                acc = ogs_.algebra().bracket(acc, ogs_.orbit_sum(ogs_.algebra().basis_element(blocks[i])));
            FreeElement comp = component(acc, key.sigma);
            SliceGenShape shape;
            shape.kind = SliceGenShape::Kind::OrbitBracket;
            shape.blocks = blocks;
            shape.from_zero_sum_root = false;
            add_candidate(s, comp, std::move(shape));
            return;
        }
        int slots_left = static_cast<int>(want - depth);
        int max_w = remaining_weight - (slots_left - 1);
        for (int w = 1; w <= max_w; ++w) {
            // every sub-multidegree of `remaining` with weight w
            std::vector<std::vector<int>> subcounts;
            std::vector<int> cc(remaining.size(), 0);
            std::function<void(size_t, int)> rec = [&](size_t slot, int left) {
                if (slot == remaining.size()) {
                    if (left == 0) subcounts.push_back(cc);
                    return;
                }
                for (int k = 0; k <= std::min(remaining[slot], left); ++k) {
                    cc[slot] = k;
                    rec(slot + 1, left - k);
                }
                cc[slot] = 0;
            };
            rec(0, w);
            for (const auto& sc : subcounts) {
                std::vector<std::vector<int>> multisets;
                std::vector<int> cur;
                enumerate_multisets(ogs_, sc, 0, cur, multisets);
                for (const auto& ms : multisets) {
                    for (Word& bw : FreeLie::lyndon_words_of_multiset(ms)) {
                        // [S(a), S(b)] = -[S(b), S(a)]: keep one order for pairs
                        if (want == 2 && depth == 1 && bw <= blocks[0]) continue;
                        std::vector<int> rem2 = remaining;
                        for (size_t i = 0; i < rem2.size(); ++i) rem2[i] -= sc[i];
                        blocks.push_back(std::move(bw));
                        enumerate_blocks(key, blocks, rem2, remaining_weight - w, s);
                        blocks.pop_back();
                    }
                }
            }
        }
    }

    void build(const SliceKey& key, Slice& s) {
        if (s.space.words.empty()) return;
        const FreeLie& L = ogs_.algebra();
        if (with_zero_sum_ && key.sigma == 0) {
            // the zero-index-sum component lies in the ideal wholesale
            for (const Word& w : s.space.words) {
                SliceGenShape shape;
                shape.kind = SliceGenShape::Kind::ZeroSumWord;
                shape.head = w;
                add_candidate(s, L.basis_element(w), std::move(shape));
            }
            return;  // slice is full; nothing else can add rank
        }
        if (with_orbit_brackets_ && key.weight >= c_ + 1) {
            std::vector<Word> blocks;
            enumerate_blocks(key, blocks, key.counts, key.weight, s);
        }
        if (key.weight >= 2) {
            for (int y = 0; y < L.num_generators(); ++y) {
                const GeneratorSymbol& g = L.generator_symbol(y);
                if (key.counts[g.orbit_slot - 1] == 0) continue;
                const Slice& par = slice(parent_key(key, y));
                for (int gi = 0; gi < static_cast<int>(par.kept.size()); ++gi) {
                    FreeElement ext = L.bracket(par.kept[gi].element, L.generator(y));
                    SliceGenShape shape;
                    shape.kind = SliceGenShape::Kind::Extension;
                    shape.parent = gi;
                    shape.letter = y;
                    shape.from_zero_sum_root = par.kept[gi].shape.from_zero_sum_root;
                    add_candidate(s, ext, std::move(shape));
                }
            }
        }
    }
};

SliceKey key_of(const OrbitGeneratorSet& ogs, const FreeElement& x) {
    if (x.is_zero()) throw Error("graded slice of the zero element is undefined");
    const FreeLie& L = ogs.algebra();
    Multidegree d = L.multidegree(x.terms().begin()->first);
    for (const auto& [w, c] : x.terms())
        if (!(L.multidegree(w) == d)) throw Error("element is not graded-homogeneous");
    SliceKey key;
    key.weight = static_cast<int>(x.terms().begin()->first.size());
    key.counts = d.counts;
    key.sigma = d.index_sum;
    return key;
}

std::string describe_blocks(const OrbitGeneratorSet& ogs, const std::vector<Word>& blocks,
                            const std::vector<int>& tail, int sigma) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (i) os << ",";
        os << "S(";
        for (size_t j = 0; j < blocks[i].size(); ++j) {
            if (j) os << ".";
            const GeneratorSymbol& g = ogs.algebra().generator_symbol(blocks[i][j]);
            os << "y" << g.orbit_slot << "p" << g.power;
        }
        os << ")";
    }
    for (int t : tail) {
        const GeneratorSymbol& g = ogs.algebra().generator_symbol(t);
        os << ",y" << g.orbit_slot << "p" << g.power;
    }
    os << "]@" << sigma;
    return os.str();
}

}  // namespace

IdealBasisSlice ideal_slice_J(const OrbitGeneratorSet& ogs, int weight, const Multidegree& deg) {
    IdealSliceEngine engine(ogs, 0, true, false);
    SliceKey key{weight, deg.counts, deg.index_sum};
    const auto& s = engine.slice(key);
    return {s.space, s.span.to_subspace()};
}

IdealBasisSlice ideal_slice_I(const OrbitGeneratorSet& ogs, int weight, int c, const Multidegree& deg) {
    IdealSliceEngine engine(ogs, c, false, true);
    SliceKey key{weight, deg.counts, deg.index_sum};
    const auto& s = engine.slice(key);
    return {s.space, s.span.to_subspace()};
}

MembershipCertificate ideal_membership(const OrbitGeneratorSet& ogs, const FreeElement& x, int c) {
    MembershipCertificate out;
    if (x.is_zero()) {
        out.member = true;
        return out;
    }
    IdealSliceEngine engine(ogs, c, true, true);
    SliceKey key = key_of(ogs, x);
    const auto& s = engine.slice(key);
    auto coords = s.space.coordinates(x, ogs.algebra().field());
    if (!coords) throw Error("internal: element does not match its slice");
    auto expr = engine.express(key, *coords);
    if (!expr) {
        out.member = false;
        return out;
    }
    out.member = true;
    for (const auto& [gid, coeff] : *expr) {
        auto [shape, tail] = engine.resolve(key, gid);
        if (shape->kind == SliceGenShape::Kind::ZeroSumWord) {
            out.j_terms.push_back({coeff, shape->head, tail});
        } else {
            out.i_terms.push_back({coeff, describe_blocks(ogs, shape->blocks, tail, key.sigma)});
        }
    }
    return out;
}

TransformationResult zero_sum_rewrite(const OrbitGeneratorSet& ogs, const std::vector<int>& letters, int c) {
    const FreeLie& L = ogs.algebra();
    FreeElement x = to_free_element({SimpleTerm{mpz_class(1), letters}}, L);
    MembershipCertificate cert = ideal_membership(ogs, x, c);
    if (!cert.member) throw NotAMember("commutator is not in the combined ideal at this truncation");

    TransformationResult out;
    std::map<std::pair<std::vector<int>, int>, Scalar> combined;
    for (const auto& jt : cert.j_terms) {
        // expand the Lyndon head into simple commutators; the head letters
        // carry index sum 0, so each becomes the marked initial segment
        for (const SimpleTerm& st : left_normalize(FreeLie::bracketing(jt.head))) {
            Scalar coeff = jt.coeff * L.field()->integer(st.coeff);
            std::vector<int> letters = st.letters;
            letters.insert(letters.end(), jt.tail.begin(), jt.tail.end());
            auto key = std::make_pair(std::move(letters), static_cast<int>(st.letters.size()));
            auto it = combined.find(key);
            if (it == combined.end()) combined.emplace(std::move(key), coeff);
            else it->second += coeff;
        }
    }
    for (const auto& [key, coeff] : combined)
        if (!coeff.is_zero()) out.terms.push_back({coeff, key.first, key.second});

    // orbit elimination pass: terms missing some input orbit must sum to
    // an element of the orbit-sum ideal and are dropped
    std::vector<int> input_counts = L.multidegree(Word(letters.begin(), letters.end())).counts;
    for (int slot = 1; slot <= ogs.num_slots(); ++slot) {
        if (input_counts[slot - 1] == 0) continue;
        std::vector<RewriteTerm> keep;
        FreeElement dropped = L.zero();
        for (RewriteTerm& t : out.terms) {
            bool has = false;
            for (int id : t.letters)
                if (L.generator_symbol(id).orbit_slot == slot) has = true;
            if (has) {
                keep.push_back(std::move(t));
            } else {
                dropped = dropped + to_free_element({SimpleTerm{mpz_class(1), t.letters}}, L).scaled(t.coeff);
            }
        }
        if (!dropped.is_zero()) {
            MembershipCertificate drop_cert = ideal_membership(ogs, dropped, c);
            bool pure_i = drop_cert.member && drop_cert.j_terms.empty();
            if (!pure_i) throw Error("internal: eliminated terms are not absorbed by the orbit-sum ideal");
        }
        out.terms = std::move(keep);
    }

    // exact check: x minus the rewrite must lie in the orbit-sum ideal
    FreeElement rewritten = L.zero();
    for (const RewriteTerm& t : out.terms)
        rewritten = rewritten + to_free_element({SimpleTerm{mpz_class(1), t.letters}}, L).scaled(t.coeff);
    FreeElement residual = x - rewritten;
    if (!residual.is_zero()) {
        IdealSliceEngine ionly(ogs, c, false, true);
        SliceKey key = key_of(ogs, residual);
        const auto& s = ionly.slice(key);
        auto coords = s.space.coordinates(residual, L.field());
        if (!coords || !s.span.contains(*coords))
            throw Error("internal: rewrite does not agree with the input modulo the orbit-sum ideal");
    }
    return out;
}

ScanReport scan_transformation(const OrbitGeneratorSet& ogs, const std::vector<int>& input_letters,
                               const TransformationResult& result) {
    const FreeLie& L = ogs.algebra();
    ScanReport rep;
    Multidegree want = L.multidegree(Word(input_letters.begin(), input_letters.end()));
    unsigned n = ogs.descriptor().n;
    for (size_t t = 0; t < result.terms.size(); ++t) {
        const RewriteTerm& term = result.terms[t];
        auto fail = [&](const std::string& msg) {
            rep.ok = false;
            rep.failure = "term " + std::to_string(t + 1) + ": " + msg;
            return rep;
        };
        if (term.letters.size() != input_letters.size()) return fail("weight differs from the input");
        Multidegree got = L.multidegree(Word(term.letters.begin(), term.letters.end()));
        if (got.counts != want.counts) return fail("per-orbit letter counts differ from the input");
        if (term.zero_sum_prefix < 2 || term.zero_sum_prefix > static_cast<int>(term.letters.size()))
            return fail("marked segment length out of range");
        long sum = 0;
        for (int i = 0; i < term.zero_sum_prefix; ++i) sum += L.generator_symbol(term.letters[i]).index;
        if (sum % static_cast<long>(n) != 0) return fail("marked segment has nonzero index sum");
    }
    return rep;
}

ClassBoundReport empirical_class_bound(const FieldPtr& field, const FrobeniusDescriptor& descriptor, int c,
                                       const std::vector<unsigned>& slots, int weight_cap) {
    OrbitGeneratorSet ogs(field, descriptor, slots, weight_cap);
    IdealSliceEngine engine(ogs, c, true, true);
    ClassBoundReport rep;
    rep.cap = weight_cap;
    int T = ogs.num_slots();
    unsigned n = descriptor.n;
    for (int w = 1; w <= weight_cap; ++w) {
        // all multidegrees of total weight w over T slots
        long deficiency = 0;
        std::vector<int> counts(T, 0);
        std::function<void(int, int)> rec = [&](int slot, int left) {
            if (slot == T) {
                if (left != 0) return;
                for (unsigned sigma = 0; sigma < n; ++sigma) {
                    const auto& s = engine.slice(SliceKey{w, counts, static_cast<int>(sigma)});
                    deficiency += static_cast<long>(s.space.words.size()) - s.span.rank();
                }
                return;
            }
            for (int k = 0; k <= left; ++k) {
                counts[slot] = k;
                rec(slot + 1, left - k);
            }
            counts[slot] = 0;
        };
        rec(0, w);
        rep.quotient_dims.push_back(static_cast<int>(deficiency));
        if (deficiency == 0) {
            rep.nilpotency_class = w - 1;
            return rep;
        }
    }
    throw CapTooSmall("quotient class not resolved below weight cap " + std::to_string(weight_cap));
}

mpz_class segment_weight_bound(long t1, long t2, long q, long c, long f) {
    if (t1 < 1 || t2 < 1 || q < 1 || c < 0 || f < 0) throw InvalidSpec("segment_weight_bound needs positive arguments");
    mpz_class base = mpz_class(f + 1) * (f + 1) * t2;
    mpz_class acc = 0;
    mpz_class powv = 1;
    for (long i = 1; i <= t1; ++i) {
        powv *= base;
        acc += powv;
    }
    return acc + 1;
}

}  // namespace froblie
