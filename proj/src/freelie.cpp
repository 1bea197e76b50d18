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

#include "froblie/freelie.hpp"

#include <algorithm>
#include <functional>

namespace froblie {

int BracketExpr::weight() const {
    if (is_leaf()) return 1;
    return kids[0].weight() + kids[1].weight();
}

void BracketExpr::leaves(std::vector<int>& out) const {
    if (is_leaf()) {
        out.push_back(leaf_id);
        return;
    }
    kids[0].leaves(out);
    kids[1].leaves(out);
}

FreeElement FreeElement::operator+(const FreeElement& o) const {
    if (ctx_ && o.ctx_ && !ctx_->same_signature(*o.ctx_)) throw GeneratorSetMismatch("adding elements of different free algebras");
    FreeElement out = *this;
    for (const auto& [w, c] : o.terms_) out.add_term(w, c);
    return out;
}

FreeElement FreeElement::operator-(const FreeElement& o) const {
    if (ctx_ && o.ctx_ && !ctx_->same_signature(*o.ctx_)) throw GeneratorSetMismatch("subtracting elements of different free algebras");
    FreeElement out = *this;
    for (const auto& [w, c] : o.terms_) out.add_term(w, -c);
    return out;
}

FreeElement FreeElement::scaled(const Scalar& c) const {
    FreeElement out(ctx_);
    if (c.is_zero()) return out;
    for (const auto& [w, x] : terms_) out.terms_.emplace(w, x * c);
    return out;
}

bool FreeElement::operator==(const FreeElement& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (it->first != jt->first || !(it->second == jt->second)) return false;
    return true;
}

void FreeElement::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int FreeElement::max_weight() const {
    int w = 0;
    for (const auto& [word, c] : terms_) w = std::max(w, static_cast<int>(word.size()));
    return w;
}

FreeLie::FreeLie(const FieldPtr& field, std::vector<GeneratorSymbol> gens, unsigned index_modulus, int truncation_weight)
    : field_(field), gens_(std::move(gens)), n_(index_modulus), cap_(truncation_weight) {
    if (gens_.empty()) throw InvalidSpec("free Lie algebra needs at least one generator");
    if (cap_ < 1) throw InvalidSpec("truncation weight must be >= 1");
    if (n_ < 1) throw InvalidSpec("index modulus must be >= 1");
    num_slots_ = 0;
    for (size_t i = 0; i < gens_.size(); ++i) {
        num_slots_ = std::max(num_slots_, gens_[i].orbit_slot);
        if (i > 0) {
            auto key = [](const GeneratorSymbol& g) { return std::make_pair(g.orbit_slot, g.power); };
            if (!(key(gens_[i - 1]) < key(gens_[i])))
                throw InvalidSpec("generators must be strictly ordered by (orbit_slot, power)");
        }
    }
}

bool FreeLie::same_signature(const FreeLie& o) const {
    if (this == &o) return true;
    if (field_->spec() != o.field_->spec() || n_ != o.n_ || cap_ != o.cap_ || gens_.size() != o.gens_.size()) return false;
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].orbit_slot != o.gens_[i].orbit_slot || gens_[i].power != o.gens_[i].power ||
            gens_[i].index != o.gens_[i].index)
            return false;
    return true;
}

FreeElement FreeLie::generator(int id) const {
    if (id < 0 || id >= num_generators()) throw Error("generator id out of range");
    FreeElement e(this);
    e.add_term(Word{id}, field_->one());
    return e;
}

FreeElement FreeLie::basis_element(const Word& w) const {
    if (!is_lyndon(w)) throw Error("basis_element: word is not Lyndon");
    FreeElement e(this);
    e.add_term(w, field_->one());
    return e;
}

bool FreeLie::is_lyndon(const Word& w) {
    if (w.empty()) return false;
    size_t n = w.size();
    for (size_t r = 1; r < n; ++r) {
        // compare w with its rotation by r
        for (size_t i = 0; i < n; ++i) {
            int a = w[i];
            int b = w[(i + r) % n];
            if (a < b) break;
            if (a > b) return false;
            if (i + 1 == n) return false;  // rotation equal: periodic word
        }
    }
    return true;
}

std::pair<Word, Word> FreeLie::std_factorization(const Word& w) {
    if (w.size() < 2) throw Error("std_factorization needs weight >= 2");
    size_t best = 1;
    for (size_t s = 2; s < w.size(); ++s) {
        // is suffix at s smaller than suffix at best?
        if (std::lexicographical_compare(w.begin() + s, w.end(), w.begin() + best, w.end())) best = s;
    }
    return {Word(w.begin(), w.begin() + best), Word(w.begin() + best, w.end())};
}

BracketExpr FreeLie::bracketing(const Word& w) {
    if (w.size() == 1) return BracketExpr::leaf(w[0]);
    auto [u, v] = std_factorization(w);
    return BracketExpr::node(bracketing(u), bracketing(v));
}

std::vector<Word> FreeLie::lyndon_words(int max_weight) const {
    // Duval's generation, then reorder by (weight, lex).
    std::vector<Word> out;
    int k = num_generators();
    Word w{0};
    for (;;) {
        if (static_cast<int>(w.size()) <= max_weight) out.push_back(w);
        // extend periodically to max_weight, then increment
        Word t = w;
        while (static_cast<int>(t.size()) < max_weight) t.push_back(t[t.size() % w.size()]);
        while (!t.empty() && t.back() == k - 1) t.pop_back();
        if (t.empty()) break;
        ++t.back();
        w = t;
    }
    std::stable_sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::vector<Word> FreeLie::lyndon_words_of_multiset(std::vector<int> letters) {
    std::sort(letters.begin(), letters.end());
    std::vector<Word> out;
    do {
        if (is_lyndon(letters)) out.push_back(letters);
    } while (std::next_permutation(letters.begin(), letters.end()));
    return out;
}

Multidegree FreeLie::multidegree(const Word& w) const {
    Multidegree d;
    d.counts.assign(num_slots_, 0);
    long sum = 0;
    for (int id : w) {
        const GeneratorSymbol& g = gens_[id];
        d.counts[g.orbit_slot - 1] += 1;
        sum += g.index;
    }
    d.index_sum = static_cast<int>(((sum % n_) + n_) % n_);
    return d;
}

const FreeLie::AssocPoly& FreeLie::assoc_expand(const Word& w) const {
    auto it = expand_memo_.find(w);
    if (it != expand_memo_.end()) return it->second;
    AssocPoly p;
    if (w.size() == 1) {
        p[w] = 1;
    } else {
        auto [u, v] = std_factorization(w);
        const AssocPoly& a = assoc_expand(u);
        const AssocPoly& b = assoc_expand(v);
        auto accumulate = [&p](const AssocPoly& x, const AssocPoly& y, int sign) {
            for (const auto& [wx, cx] : x)
                for (const auto& [wy, cy] : y) {
                    Word cat = wx;
                    cat.insert(cat.end(), wy.begin(), wy.end());
                    mpz_class& slot = p[cat];
                    slot += sign * cx * cy;
                    if (slot == 0) p.erase(cat);
                }
        };
        accumulate(a, b, 1);
        accumulate(b, a, -1);
    }
    return expand_memo_.emplace(w, std::move(p)).first->second;
}

std::vector<std::pair<Word, mpz_class>> FreeLie::lie_from_assoc(AssocPoly p) const {
    std::vector<std::pair<Word, mpz_class>> out;
    while (!p.empty()) {
        auto it = p.begin();  // lexicographically least word
        Word w = it->first;
        mpz_class c = it->second;
        if (!is_lyndon(w)) throw Error("internal: non-Lyndon leading word in a Lie polynomial");
        out.emplace_back(w, c);
        for (const auto& [ww, cc] : assoc_expand(w)) {
            mpz_class& slot = p[ww];
            slot -= c * cc;
            if (slot == 0) p.erase(ww);
        }
    }
    return out;
}

const std::vector<std::pair<Word, mpz_class>>& FreeLie::bracket_words(const Word& u, const Word& v, bool& negate) const {
    std::lock_guard<std::recursive_mutex> lock(memo_mutex_);
    static const std::vector<std::pair<Word, mpz_class>> empty;
    negate = false;
    if (u == v) return empty;
    const Word* a = &u;
    const Word* b = &v;
    if (v < u) {
        std::swap(a, b);
        negate = true;
    }
    if (static_cast<int>(a->size() + b->size()) > cap_) return empty;
    auto key = std::make_pair(*a, *b);
    auto it = product_memo_.find(key);
    if (it != product_memo_.end()) return it->second;
    AssocPoly p;
    const AssocPoly& A = assoc_expand(*a);
    const AssocPoly& B = assoc_expand(*b);
    auto accumulate = [&p](const AssocPoly& x, const AssocPoly& y, int sign) {
        for (const auto& [wx, cx] : x)
            for (const auto& [wy, cy] : y) {
                Word cat = wx;
                cat.insert(cat.end(), wy.begin(), wy.end());
                mpz_class& slot = p[cat];
                slot += sign * cx * cy;
                if (slot == 0) p.erase(cat);
            }
    };
    accumulate(A, B, 1);
    accumulate(B, A, -1);
    return product_memo_.emplace(std::move(key), lie_from_assoc(std::move(p))).first->second;
}

FreeElement FreeLie::bracket(const FreeElement& x, const FreeElement& y) const {
    if ((x.context() && !same_signature(*x.context())) || (y.context() && !same_signature(*y.context())))
        throw GeneratorSetMismatch("bracket of elements over a different generator set");
    FreeElement out(this);
    for (const auto& [u, cu] : x.terms())
        for (const auto& [v, cv] : y.terms()) {
            if (static_cast<int>(u.size() + v.size()) > cap_) continue;
            bool neg = false;
            const auto& prod = bracket_words(u, v, neg);
            Scalar f = cu * cv;
            if (neg) f = -f;
            if (f.is_zero()) continue;
            for (const auto& [w, c] : prod) out.add_term(w, f * field_->integer(c));
        }
    return out;
}

FreeElement FreeLie::apply_letter_map(const FreeElement& x, const std::vector<int>& letter_image) const {
    std::map<Word, FreeElement> memo;
    // image of a basis word = same bracketing pattern on substituted letters
    std::function<FreeElement(const Word&)> img = [&](const Word& w) -> FreeElement {
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;
        FreeElement r(this);
        if (w.size() == 1) {
            int target = letter_image[w[0]];
            if (target >= 0) r = generator(target);
        } else {
            auto [u, v] = std_factorization(w);
            r = bracket(img(u), img(v));
        }
        memo.emplace(w, r);
        return r;
    };
    FreeElement out(this);
    for (const auto& [w, c] : x.terms()) out = out + img(w).scaled(c);
    return out;
}

Vec FreeLie::evaluate(const FreeElement& x, const std::vector<Vec>& letter_values, const StructAlgebra& alg) const {
    if (static_cast<int>(letter_values.size()) != num_generators())
        throw DimensionMismatch("evaluate: one value per generator required");
    std::map<Word, Vec> memo;
    std::function<const Vec&(const Word&)> ev = [&](const Word& w) -> const Vec& {
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;
        Vec v;
        if (w.size() == 1) {
            v = letter_values[w[0]];
        } else {
            auto [a, b] = std_factorization(w);
            v = alg.bracket(ev(a), ev(b));
        }
        return memo.emplace(w, std::move(v)).first->second;
    };
    Vec out = zero_vec(alg.field(), alg.dim());
    for (const auto& [w, c] : x.terms()) out = add(out, scale(ev(w), c));
    return out;
}

Vec FreeLie::evaluate_simple(const std::vector<int>& letters, const std::vector<Vec>& letter_values,
                             const StructAlgebra& alg) const {
    if (letters.empty()) throw Error("evaluate_simple: empty commutator");
    Vec acc = letter_values[letters[0]];
    for (size_t i = 1; i < letters.size(); ++i) acc = alg.bracket(acc, letter_values[letters[i]]);
    return acc;
}

std::vector<SimpleTerm> simple_product(const std::vector<int>& u, const std::vector<int>& v) {
    std::vector<SimpleTerm> out;
    if (v.size() == 1) {
        std::vector<int> w = u;
        w.push_back(v[0]);
        out.push_back({mpz_class(1), std::move(w)});
        return out;
    }
    std::vector<int> head(v.begin(), v.end() - 1);
    int last = v.back();
    // [u,[A,b]] = [[u,A],b] - [[u,b],A]
    for (SimpleTerm& t : simple_product(u, head)) {
        t.letters.push_back(last);
        out.push_back(std::move(t));
    }
    std::vector<int> ub = u;
    ub.push_back(last);
    for (SimpleTerm& t : simple_product(ub, head)) {
        t.coeff = -t.coeff;
        out.push_back(std::move(t));
    }
    return out;
}

namespace {

void combine_terms(std::vector<SimpleTerm>& terms) {
    std::map<std::vector<int>, mpz_class> acc;
    for (const SimpleTerm& t : terms) acc[t.letters] += t.coeff;
    terms.clear();
    for (auto& [w, c] : acc)
        if (c != 0) terms.push_back({c, w});
}

// Rewrite coeff*[seq] so every summand starts with seq[pos].
std::vector<SimpleTerm> rotate_to_front(const std::vector<int>& seq, size_t pos) {
    if (pos == 0) return {{mpz_class(1), seq}};
    std::vector<int> prefix(seq.begin(), seq.begin() + pos);
    // [prefix, x] = -[x, prefix]; then append the tail letters
    std::vector<SimpleTerm> fronts = simple_product({seq[pos]}, prefix);
    std::vector<SimpleTerm> out;
    for (SimpleTerm& t : fronts) {
        t.coeff = -t.coeff;
        t.letters.insert(t.letters.end(), seq.begin() + pos + 1, seq.end());
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<SimpleTerm> normalize_tree(const BracketExpr& e) {
    if (e.is_leaf()) return {{mpz_class(1), {e.leaf_id}}};
    std::vector<SimpleTerm> left = normalize_tree(e.kids[0]);
    std::vector<SimpleTerm> right = normalize_tree(e.kids[1]);
    std::vector<SimpleTerm> out;
    for (const SimpleTerm& a : left)
        for (const SimpleTerm& b : right) {
            mpz_class c = a.coeff * b.coeff;
            for (SimpleTerm& t : simple_product(a.letters, b.letters)) {
                t.coeff *= c;
                out.push_back(std::move(t));
            }
        }
    combine_terms(out);
    return out;
}

}  // namespace

std::vector<SimpleTerm> left_normalize(const BracketExpr& expr, std::optional<int> first_leaf) {
    std::vector<SimpleTerm> terms = normalize_tree(expr);
    if (first_leaf) {
        std::vector<SimpleTerm> rotated;
        for (const SimpleTerm& t : terms) {
            auto it = std::find(t.letters.begin(), t.letters.end(), *first_leaf);
            if (it == t.letters.end()) throw Error("designated leaf does not occur in the commutator");
            for (SimpleTerm& r : rotate_to_front(t.letters, static_cast<size_t>(it - t.letters.begin()))) {
                r.coeff *= t.coeff;
                rotated.push_back(std::move(r));
            }
        }
        combine_terms(rotated);
        return rotated;
    }
    return terms;
}

FreeElement to_free_element(const std::vector<SimpleTerm>& terms, const FreeLie& ctx) {
    FreeElement out = ctx.zero();
    for (const SimpleTerm& t : terms) {
        FreeElement acc = ctx.generator(t.letters[0]);
        for (size_t i = 1; i < t.letters.size(); ++i) acc = ctx.bracket(acc, ctx.generator(t.letters[i]));
        out = out + acc.scaled(ctx.field()->integer(t.coeff));
    }
    return out;
}

FreeElement tree_to_free_element(const BracketExpr& expr, const FreeLie& ctx) {
    if (expr.is_leaf()) return ctx.generator(expr.leaf_id);
    return ctx.bracket(tree_to_free_element(expr.kids[0], ctx), tree_to_free_element(expr.kids[1], ctx));
}

FreeElement component(const FreeElement& x, const Multidegree& selector) {
    const FreeLie* ctx = x.context();
    FreeElement out(ctx);
    for (const auto& [w, c] : x.terms())
        if (ctx->multidegree(w) == selector) out.add_term(w, c);
    return out;
}

FreeElement component(const FreeElement& x, int index_sum_residue) {
    const FreeLie* ctx = x.context();
    FreeElement out(ctx);
    for (const auto& [w, c] : x.terms())
        if (ctx->multidegree(w).index_sum == index_sum_residue) out.add_term(w, c);
    return out;
}

}  // namespace froblie
