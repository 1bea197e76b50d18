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

#include "froblie/malcev.hpp"

#include <functional>
#include <map>

#include "froblie/freelie.hpp"
#include "froblie/rng.hpp"

namespace froblie {

namespace {

mpz_class factorial(int n) {
    mpz_class f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

void require_char_zero(const StructAlgebra& alg) {
    if (alg.field()->characteristic() != 0)
        throw HypothesisError("the group-law series needs a field of characteristic zero");
}

}  // namespace

BchSeries::BchSeries(int class_cap) : cap_(class_cap) {
    if (cap_ < 1) throw InvalidSpec("class cap must be >= 1");
    // Dynkin expansion: sum over block sequences ((p_1,q_1),...,(p_k,q_k)),
    // p_i + q_i >= 1, of (-1)^(k-1)/(k N prod p_i! q_i!) times the
    // right-nested bracket monomial of the letter sequence, N = total length.
    FieldPtr rat = Field::make(FieldSpec::rational());
    FreeLie two_letters(rat, {{1, 0, 0}, {2, 0, 0}}, 1, cap_);
    FreeElement total = two_letters.zero();
    std::vector<std::pair<int, int>> blocks;
    std::function<void(int)> rec = [&](int used) {
        if (!blocks.empty()) {
            // contribute this block sequence
            std::vector<int> seq;
            mpz_class denom_fact = 1;
            for (const auto& [p, q] : blocks) {
                for (int i = 0; i < p; ++i) seq.push_back(0);
                for (int i = 0; i < q; ++i) seq.push_back(1);
                denom_fact *= factorial(p) * factorial(q);
            }
            int k = static_cast<int>(blocks.size());
            int N = static_cast<int>(seq.size());
            // right-nested monomial [l_1,[l_2,[...,l_N]]]
            FreeElement mono = two_letters.generator(seq[N - 1]);
            for (int i = N - 2; i >= 0; --i) mono = two_letters.bracket(two_letters.generator(seq[i]), mono);
            if (!mono.is_zero()) {
                mpq_class coeff(k % 2 == 1 ? 1 : -1, mpz_class(k) * N * denom_fact);
                coeff.canonicalize();
                total = total + mono.scaled(rat->rational(coeff));
            }
        }
        if (used == cap_) return;
        for (int p = 0; p <= cap_ - used; ++p)
            for (int q = 0; p + q <= cap_ - used; ++q) {
                if (p + q == 0) continue;
                blocks.emplace_back(p, q);
                rec(used + p + q);
                blocks.pop_back();
            }
    };
    rec(0);
    for (const auto& [w, c] : total.terms()) {
        // coefficients are rational scalars over the rationals; recover mpq
        mpq_class q(c.str());
        q.canonicalize();
        terms_.emplace_back(q, w);
    }
}

Vec BchSeries::evaluate(const StructAlgebra& alg, const Vec& x, const Vec& y) const {
    require_char_zero(alg);
    std::map<std::vector<int>, Vec> memo;
    std::function<const Vec&(const std::vector<int>&)> ev = [&](const std::vector<int>& w) -> const Vec& {
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;
        Vec v;
        if (w.size() == 1) {
            v = w[0] == 0 ? x : y;
        } else {
            auto [a, b] = FreeLie::std_factorization(w);
            v = alg.bracket(ev(a), ev(b));
        }
        return memo.emplace(w, std::move(v)).first->second;
    };
    Vec out = zero_vec(alg.field(), alg.dim());
    for (const auto& [coeff, word] : terms_) out = add(out, scale(ev(word), alg.field()->rational(coeff)));
    return out;
}

NilGroup::NilGroup(const StructAlgebra& alg, int class_cap)
    : alg_(&alg), series_(class_cap), minus_one_(alg.field()->integer(-1)) {
    require_char_zero(alg);
    SeriesReport full = lower_central_series(Subspace::full(alg.field(), alg.dim()), alg);
    if (!full.nilpotency_class)
        throw ClassCapExceeded("the algebra is not nilpotent");
    if (*full.nilpotency_class > class_cap)
        throw ClassCapExceeded("algebra class " + std::to_string(*full.nilpotency_class) +
                               " exceeds the series cap " + std::to_string(class_cap));
}

Vec NilGroup::mul(const Vec& x, const Vec& y) const { return series_.evaluate(*alg_, x, y); }

Vec NilGroup::commutator(const Vec& x, const Vec& y) const {
    return mul(mul(mul(inv(x), inv(y)), x), y);
}

Vec NilGroup::power(const Vec& x, const mpq_class& e) const { return scale(x, alg_->field()->rational(e)); }

namespace {

Vec random_vec(const StructAlgebra& alg, SplitMix64& rng) {
    Vec v = zero_vec(alg.field(), alg.dim());
    for (int i = 0; i < alg.dim(); ++i) {
        long num = rng.range(-9, 9);
        long den = rng.range(1, 7);
        mpq_class q(num, den);
        q.canonicalize();
        v[i] = alg.field()->rational(q);
    }
    return v;
}

}  // namespace

GroupCheck group_check(const StructAlgebra& alg, int sample_count, uint64_t seed, int class_cap) {
    NilGroup g(alg, class_cap);
    GroupCheck out;
    SplitMix64 rng(seed);
    Vec zero = zero_vec(alg.field(), alg.dim());
    for (int s = 0; s < sample_count; ++s) {
        Vec a = random_vec(alg, rng);
        Vec b = random_vec(alg, rng);
        Vec c = random_vec(alg, rng);
        ++out.samples;
        if (!is_zero_vec(sub(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c))))) {
            out.ok = false;
            out.violation = "associativity fails at sample " + std::to_string(s);
            return out;
        }
        if (!is_zero_vec(sub(g.mul(a, zero), a)) || !is_zero_vec(sub(g.mul(zero, a), a))) {
            out.ok = false;
            out.violation = "identity law fails at sample " + std::to_string(s);
            return out;
        }
        if (!is_zero_vec(g.mul(a, g.inv(a)))) {
            out.ok = false;
            out.violation = "inverse law fails at sample " + std::to_string(s);
            return out;
        }
    }
    return out;
}

ClassCorrespondence class_correspondence(const Subspace& subalg, const StructAlgebra& alg, int class_cap) {
    ClassCorrespondence out;
    SeriesReport lie = lower_central_series(subalg, alg);
    if (!lie.nilpotency_class) throw ClassCapExceeded("subalgebra is not nilpotent");
    out.lie_class = *lie.nilpotency_class;
    NilGroup g(alg, class_cap);
    // group lower central series: close commutators of the previous term
    // against the whole subalgebra (divisible subgroups = subalgebras)
    Subspace cur = subalg;
    int cls = -1;
    for (int step = 1; step <= 2 * alg.dim() + 1; ++step) {
        if (cur.dim() == 0) {
            cls = step - 1;
            break;
        }
        std::vector<Vec> comms;
        for (const Vec& a : cur.basis())
            for (const Vec& b : subalg.basis()) comms.push_back(g.commutator(a, b));
        Subspace next = subalgebra_closure(comms, alg);
        cur = next;
    }
    if (cls < 0) throw ClassCapExceeded("group commutator series did not terminate");
    out.group_class = cls;
    out.equal = out.lie_class == out.group_class;
    return out;
}

bool bch_equivariant(const StructAlgebra& alg, const Mat& g, int sample_count, uint64_t seed, int class_cap) {
    NilGroup grp(alg, class_cap);
    SplitMix64 rng(seed);
    for (int s = 0; s < sample_count; ++s) {
        Vec a = random_vec(alg, rng);
        Vec b = random_vec(alg, rng);
        Vec lhs = g.apply(grp.mul(a, b));
        Vec rhs = grp.mul(g.apply(a), g.apply(b));
        if (!is_zero_vec(sub(lhs, rhs))) return false;
    }
    return true;
}

}  // namespace froblie
