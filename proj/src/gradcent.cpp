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

#include "froblie/gradcent.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "froblie/rng.hpp"

namespace froblie {

std::vector<CommutatorPattern> enumerate_patterns(unsigned n, int max_weight) {
    if (max_weight < 2) throw InvalidSpec("patterns need max_weight >= 2");
    std::vector<CommutatorPattern> out;
    for (int w = 2; w <= max_weight; ++w) {
        std::vector<int> idx(w, 1);
        std::function<void(int, long)> rec = [&](int pos, long sum) {
            if (pos == w) {
                if (sum % n == 0) out.push_back({idx});
                return;
            }
            for (int v = 1; v < static_cast<int>(n); ++v) {
                idx[pos] = v;
                rec(pos + 1, sum + v);
            }
        };
        rec(0, 0);
    }
    return out;
}

namespace {

std::string vec_key(const Vec& v) {
    std::ostringstream os;
    for (const Scalar& s : v) os << s.str() << "|";
    return os.str();
}

}  // namespace

LevelTower::LevelTower(const StructAlgebra& alg, GradedDecomposition decomposition, FrobeniusDescriptor descriptor,
                       std::optional<Mat> h, BoundsConfig bounds)
    : alg_(&alg), decomp_(std::move(decomposition)), desc_(descriptor), h_(std::move(h)), bounds_(bounds) {
    if (decomp_.n != desc_.n) throw DimensionMismatch("decomposition and descriptor disagree on n");
    if (bounds_.T < 0 || bounds_.U < 2) throw InvalidSpec("bounds need T >= 0 and U >= 2");
    levels_.resize(bounds_.T + 1);
    for (unsigned j = 1; j < desc_.n; ++j) levels_[0].L[static_cast<int>(j)] = decomp_.components[j];
    levels_[0].kernels_built = true;
}

const Subspace& LevelTower::centralizer(int j, int t) const {
    if (t < 0 || t > bounds_.T || !levels_[t].kernels_built) throw LevelsIncomplete("level not built");
    auto it = levels_[t].L.find(j);
    if (it == levels_[t].L.end()) throw Error("centralizer index out of range");
    return it->second;
}

std::vector<int> LevelTower::representatives_of_level(int t) const {
    if (t < 0 || t > bounds_.T) throw Error("level out of range");
    return levels_[t].rep_ids;
}

int LevelTower::register_representative(const Vec& v, int index, int level, int orbit_id, int power) {
    std::string key = std::to_string(level) + "#" + std::to_string(index) + "#" + vec_key(v);
    auto it = rep_lookup_.find(key);
    if (it != rep_lookup_.end()) return it->second;
    int id = static_cast<int>(reps_.size());
    reps_.push_back({v, index, level, orbit_id, power});
    levels_[level].rep_ids.push_back(id);
    rep_lookup_.emplace(std::move(key), id);
    return id;
}

Vec LevelTower::fold_bracket(const Vec& start, const std::vector<int>& rep_ids) const {
    Vec acc = start;
    for (int id : rep_ids) acc = alg_->bracket(acc, reps_[id].vector);
    return acc;
}

void LevelTower::fix_representatives(int t) {
    if (t < 0 || t > bounds_.T) throw Error("level out of range");
    LevelData& ld = levels_[t];
    if (!ld.kernels_built) throw LevelsIncomplete("kernels of level " + std::to_string(t) + " not built");
    if (ld.reps_fixed) return;
    int n = static_cast<int>(desc_.n);
    if (m() > 0) {
        for (const CommutatorPattern& pat : enumerate_patterns(desc_.n, bounds_.U)) {
            auto rec_key = std::make_pair(t, pat);
            PatternRecord record(alg_->field(), alg_->dim());
            // iterate basis tuples of the carriers in lex order
            std::vector<const Subspace*> carriers;
            bool empty = false;
            for (int idx : pat.indices) {
                const Subspace& c = ld.L.at(idx);
                if (c.dim() == 0) empty = true;
                carriers.push_back(&c);
            }
            if (empty) {
                records_.emplace(rec_key, std::move(record));
                continue;
            }
            std::vector<int> choice(pat.indices.size(), 0);
            std::function<void(size_t, const Vec&)> rec = [&](size_t pos, const Vec& acc) {
                if (pos == carriers.size()) {
                    int prospective = static_cast<int>(record.pivot_tuples.size());
                    if (record.span.add(acc, prospective)) {
                        std::vector<int> tuple_ids;
                        for (size_t s = 0; s < carriers.size(); ++s) {
                            const Vec& entry = carriers[s]->basis()[choice[s]];
                            // h-orbit closure turns every occurring element
                            // into a representative of this level
                            int orbit = -1;
                            Vec cur = entry;
                            long idx = pat.indices[s];
                            int first_id = -1;
                            for (unsigned p = 0; p < (h_ ? desc_.q : 1); ++p) {
                                int id = register_representative(cur, static_cast<int>(idx), t,
                                                                 orbit < 0 ? static_cast<int>(reps_.size()) : orbit, p);
                                if (p == 0) first_id = id;
                                if (orbit < 0) orbit = reps_[id].orbit_id;
                                if (h_) {
                                    cur = h_->apply(cur);
                                    idx = (idx * desc_.r) % n;
                                }
                            }
                            tuple_ids.push_back(first_id);
                        }
                        record.pivot_tuples.push_back(std::move(tuple_ids));
                    }
                    return;
                }
                for (int b = 0; b < carriers[pos]->dim(); ++b) {
                    choice[pos] = b;
                    Vec next = pos == 0 ? carriers[pos]->basis()[b] : alg_->bracket(acc, carriers[pos]->basis()[b]);
                    rec(pos + 1, next);
                }
            };
            rec(0, Vec{});
            records_.emplace(rec_key, std::move(record));
        }
    } else {
        // dim L_0 = 0: every pattern value lies in the zero space,
        // so there are no pivots and no representatives at any level
        for (const CommutatorPattern& pat : enumerate_patterns(desc_.n, bounds_.U))
            records_.emplace(std::make_pair(t, pat), PatternRecord(alg_->field(), alg_->dim()));
    }
    ld.reps_fixed = true;
    sealed_ = std::max(sealed_, t);
}

std::vector<std::vector<int>> LevelTower::enumerate_rep_tuples(int max_level_exclusive, int target_residue) const {
    std::vector<int> pool;
    for (int t = 0; t < max_level_exclusive; ++t)
        for (int id : levels_[t].rep_ids) pool.push_back(id);
    std::sort(pool.begin(), pool.end());
    int n = static_cast<int>(desc_.n);
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(long)> rec = [&](long sum) {
        if (!cur.empty() && static_cast<int>(((sum % n) + n) % n) == target_residue) out.push_back(cur);
        if (static_cast<int>(cur.size()) == bounds_.U) return;
        for (int id : pool) {
            cur.push_back(id);
            rec(sum + reps_[id].index);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

void LevelTower::build_level(int t) {
    if (t < 1 || t > bounds_.T) throw Error("build_level: level out of range");
    for (int s = 0; s < t; ++s)
        if (!levels_[s].reps_fixed) throw LevelsIncomplete("representatives of level " + std::to_string(s) + " not fixed");
    LevelData& ld = levels_[t];
    int n = static_cast<int>(desc_.n);
    for (int j = 1; j < n; ++j) {
        const Subspace& carrier = decomp_.components[j];
        if (m() == 0) {
            // all bracketing maps land in the zero space
            ld.L[j] = carrier;
            ld.tuples_used[j] = 0;
            continue;
        }
        std::vector<std::vector<int>> tuples = enumerate_rep_tuples(t, ((n - j) % n));
        ld.tuples_used[j] = static_cast<long>(tuples.size());
        std::vector<Mat> maps;
        maps.reserve(tuples.size());
        for (const auto& tup : tuples) maps.push_back(theta(tup, j));
        ld.L[j] = kernel_and_meet(maps, {carrier}, alg_->field(), alg_->dim());
    }
    ld.kernels_built = true;
}

void LevelTower::build_all() {
    fix_representatives(0);
    for (int t = 1; t <= bounds_.T; ++t) {
        build_level(t);
        fix_representatives(t);
    }
}

Mat LevelTower::theta(const std::vector<int>& rep_ids, int j) const {
    if (rep_ids.empty() || static_cast<int>(rep_ids.size()) > bounds_.U)
        throw IndexSumViolation("tuple length must be 1..U");
    long sum = j;
    for (int id : rep_ids) sum += reps_[id].index;
    if (sum % static_cast<long>(desc_.n) != 0)
        throw IndexSumViolation("j + tuple index sum is not 0 mod n");
    Mat acc = alg_->ad_right(reps_[rep_ids[0]].vector);
    for (size_t i = 1; i < rep_ids.size(); ++i) acc = alg_->ad_right(reps_[rep_ids[i]].vector) * acc;
    return acc;
}

LevelTower::PropertyCheck LevelTower::check_centralizer_property(int t, long sample_cap, uint64_t seed) const {
    PropertyCheck out;
    if (t < 1) return out;
    int n = static_cast<int>(desc_.n);
    for (int j = 1; j < n; ++j) {
        const Subspace& Lj = centralizer(j, t);
        if (Lj.dim() == 0) continue;
        std::vector<std::vector<int>> tuples = enumerate_rep_tuples(t, (n - j) % n);
        long total = static_cast<long>(tuples.size()) * Lj.dim();
        SplitMix64 rng(seed + static_cast<uint64_t>(j));
        bool exhaustive = total <= sample_cap;
        long budget = exhaustive ? total : sample_cap;
        for (long step = 0; step < budget; ++step) {
            size_t ti;
            int bi;
            if (exhaustive) {
                ti = static_cast<size_t>(step) / Lj.dim();
                bi = static_cast<int>(step % Lj.dim());
            } else {
                ti = static_cast<size_t>(rng.below(tuples.size()));
                bi = static_cast<int>(rng.below(static_cast<uint64_t>(Lj.dim())));
            }
            Vec val = fold_bracket(Lj.basis()[bi], tuples[ti]);
            ++out.checked;
            if (!is_zero_vec(val)) {
                out.ok = false;
                std::ostringstream os;
                os << "nonzero bracket for j=" << j << " basis#" << bi << " tuple#(";
                for (size_t q = 0; q < tuples[ti].size(); ++q) os << (q ? "," : "") << tuples[ti][q];
                os << ")";
                out.counterexample = os.str();
                return out;
            }
        }
    }
    return out;
}

bool LevelTower::check_nesting() const {
    for (int t = 1; t <= sealed_; ++t) {
        if (!levels_[t].kernels_built) break;
        for (const auto& [j, sub] : levels_[t].L)
            if (!centralizer(j, t - 1).contains(sub)) return false;
    }
    return true;
}

bool LevelTower::check_h_stability() const {
    if (!h_) return true;
    int n = static_cast<int>(desc_.n);
    for (int t = 0; t <= sealed_; ++t) {
        if (!levels_[t].kernels_built) break;
        for (const auto& [j, sub] : levels_[t].L) {
            int rj = static_cast<int>((static_cast<long>(j) * desc_.r) % n);
            if (!(sub.image(*h_) == centralizer(rj, t))) return false;
        }
    }
    return true;
}

LevelTower::PropertyCheck LevelTower::check_quasirep_property(int t, int quasi_max_weight, long sample_cap) const {
    PropertyCheck out;
    if (t < 1) return out;
    int n = static_cast<int>(desc_.n);
    // quasirepresentatives of level < t: one representative of that level
    // bracketed with representatives of strictly lower levels
    struct Quasi {
        Vec vector;
        int index;
        int weight;
    };
    std::vector<Quasi> pool;
    for (int level = 0; level < t; ++level)
        for (int id : levels_[level].rep_ids) {
            const Representative& top = reps_[id];
            pool.push_back({top.vector, top.index, 1});
            if (quasi_max_weight < 2 || level == 0) continue;
            std::vector<int> lower;
            for (int s = 0; s < level; ++s)
                for (int lid : levels_[s].rep_ids) lower.push_back(lid);
            std::function<void(const Vec&, long, int)> extend = [&](const Vec& acc, long idx_sum, int weight) {
                if (weight >= 2 && !is_zero_vec(acc))
                    pool.push_back({acc, static_cast<int>(((idx_sum % n) + n) % n), weight});
                if (weight >= quasi_max_weight) return;
                for (int lid : lower)
                    extend(alg_->bracket(acc, reps_[lid].vector), idx_sum + reps_[lid].index, weight + 1);
            };
            extend(top.vector, top.index, 1);
        }
    for (int j = 1; j < n; ++j) {
        const Subspace& Lj = centralizer(j, t);
        for (const Vec& y : Lj.basis()) {
            // tuples of quasirepresentatives, total weight <= U, index sum -j
            std::function<void(const Vec&, long, int)> rec = [&](const Vec& acc, long idx_sum, int weight) {
                if (out.checked >= sample_cap || !out.ok) return;
                if (weight >= 1 && ((idx_sum + j) % n + n) % n == 0) {
                    ++out.checked;
                    if (!is_zero_vec(acc)) {
                        out.ok = false;
                        out.counterexample = "nonzero quasirepresentative bracket at j=" + std::to_string(j);
                        return;
                    }
                }
                if (weight >= bounds_.U) return;
                for (const Quasi& qr : pool) {
                    if (weight + qr.weight > bounds_.U) continue;
                    rec(alg_->bracket(acc, qr.vector), idx_sum + qr.index, weight + qr.weight);
                }
            };
            rec(y, 0, 0);
            if (!out.ok) return out;
        }
    }
    return out;
}

LevelTower::FrozenCombination LevelTower::freeze(const std::vector<CentralizerEntry>& commutator,
                                                 int target_level) const {
    if (commutator.size() < 2 || static_cast<int>(commutator.size()) > bounds_.U)
        throw PreconditionViolation("freeze: weight must be 2..U");
    int n = static_cast<int>(desc_.n);
    long sum = 0;
    int min_level = bounds_.T;
    CommutatorPattern pat;
    for (const CentralizerEntry& e : commutator) {
        int idx = ((e.index % n) + n) % n;
        if (idx == 0) throw PreconditionViolation("freeze: entries need nonzero indices");
        sum += idx;
        min_level = std::min(min_level, e.level);
        if (!centralizer(idx, e.level).contains(e.vector))
            throw PreconditionViolation("freeze: entry does not lie in its stated centralizer");
        pat.indices.push_back(idx);
    }
    if (sum % n != 0) throw PreconditionViolation("freeze: index sum must be 0 mod n");
    if (target_level < 0 || target_level > min_level)
        throw PreconditionViolation("freeze: target level must be 0..min(entry levels)");
    Vec value = commutator[0].vector;
    for (size_t i = 1; i < commutator.size(); ++i) value = alg_->bracket(value, commutator[i].vector);
    FrozenCombination out;
    out.value = value;
    auto it = records_.find(std::make_pair(target_level, pat));
    if (it == records_.end()) {
        if (!is_zero_vec(value)) throw PreconditionViolation("freeze: pattern record missing at target level");
        return out;
    }
    auto coeffs = it->second.span.express(value);
    if (!coeffs) throw Error("internal: pattern value not in the recorded span");
    for (const auto& [ordinal, c] : *coeffs) out.terms.push_back({c, it->second.pivot_tuples[ordinal]});
    // exact verification
    Vec check = zero_vec(alg_->field(), alg_->dim());
    for (const FrozenTerm& term : out.terms) {
        Vec v = reps_[term.rep_ids[0]].vector;
        for (size_t i = 1; i < term.rep_ids.size(); ++i) v = alg_->bracket(v, reps_[term.rep_ids[i]].vector);
        check = add(check, scale(v, term.coeff));
    }
    if (!is_zero_vec(sub(check, value))) throw Error("internal: frozen combination does not evaluate to the input");
    return out;
}

LevelTower::ZReport LevelTower::build_Z() const {
    for (int t = 0; t <= bounds_.T; ++t)
        if (!levels_[t].kernels_built) throw TowerIncomplete("levels up to T must be built");
    std::vector<Vec> gens;
    for (const auto& [j, sub] : levels_[bounds_.T].L)
        for (const Vec& v : sub.basis()) gens.push_back(v);
    ZReport rep;
    rep.Z = subalgebra_closure(gens, *alg_);
    rep.codim = alg_->dim() - rep.Z.dim();
    rep.series = lower_central_series(rep.Z, *alg_);
    int total = 0;
    for (unsigned k = 0; k < desc_.n; ++k) {
        Subspace zk = rep.Z.meet(decomp_.components[k]);
        rep.graded_dims.push_back(zk.dim());
        total += zk.dim();
    }
    rep.graded = total == rep.Z.dim();
    if (h_) {
        bool inv = rep.Z.image(*h_) == rep.Z;
        if (inv) {
            int n = static_cast<int>(desc_.n);
            for (int k = 0; k < n && inv; ++k) {
                Subspace zk = rep.Z.meet(decomp_.components[k]);
                Subspace zrk = rep.Z.meet(decomp_.components[(k * static_cast<long>(desc_.r)) % n]);
                inv = zk.image(*h_) == zrk;
            }
        }
        rep.h_invariant = inv;
    }
    return rep;
}

LevelTower::VanishingCheck LevelTower::verify_vanishing(int U_effective, long sample_cap, uint64_t seed) const {
    VanishingCheck out;
    if (U_effective < 2) throw InvalidSpec("verify_vanishing needs weight >= 2");
    std::vector<Vec> pool;
    for (const auto& [j, sub] : levels_[bounds_.T].L)
        for (const Vec& v : sub.basis()) pool.push_back(v);
    if (pool.empty()) return out;
    // |pool|^U sequences; exhaustive below the cap, sampled otherwise
    double total_d = 1;
    for (int i = 0; i < U_effective; ++i) total_d *= static_cast<double>(pool.size());
    bool exhaustive = total_d <= static_cast<double>(sample_cap);
    SplitMix64 rng(seed);
    long budget = exhaustive ? static_cast<long>(total_d) : sample_cap;
    std::vector<size_t> pick(U_effective, 0);
    for (long step = 0; step < budget; ++step) {
        if (exhaustive) {
            long rest = step;
            for (int i = 0; i < U_effective; ++i) {
                pick[i] = static_cast<size_t>(rest % pool.size());
                rest /= static_cast<long>(pool.size());
            }
        } else {
            for (int i = 0; i < U_effective; ++i) pick[i] = static_cast<size_t>(rng.below(pool.size()));
        }
        Vec acc = pool[pick[0]];
        for (int i = 1; i < U_effective; ++i) acc = alg_->bracket(acc, pool[pick[i]]);
        ++out.checked;
        if (!is_zero_vec(acc)) {
            out.ok = false;
            std::ostringstream os;
            os << "nonzero commutator of weight " << U_effective << " at picks (";
            for (int i = 0; i < U_effective; ++i) os << (i ? "," : "") << pick[i];
            os << ")";
            out.counterexample = os.str();
            return out;
        }
    }
    return out;
}

std::vector<LevelTower::LevelRow> LevelTower::level_table(int t) const {
    std::vector<LevelRow> rows;
    int n = static_cast<int>(desc_.n);
    for (int j = 1; j < n; ++j) {
        LevelRow r;
        r.j = j;
        r.dim = centralizer(j, t).dim();
        r.codim = decomp_.components[j].dim() - r.dim;
        auto it = levels_[t].tuples_used.find(j);
        r.tuples_used = it == levels_[t].tuples_used.end() ? 0 : it->second;
        rows.push_back(r);
    }
    int reps_at_t = static_cast<int>(levels_[t].rep_ids.size());
    for (LevelRow& r : rows) r.rep_count = reps_at_t;
    return rows;
}

Vec evaluate_collect_term(const StructAlgebra& alg, const CollectTerm& term) {
    Vec acc = term.entries[0].vector;
    for (size_t i = 1; i < term.entries.size(); ++i) acc = alg.bracket(acc, term.entries[i].vector);
    return scale(acc, term.coeff);
}

std::vector<CollectTerm> collect(const StructAlgebra& alg, const std::vector<CollectEntry>& entries,
                                 bool first_is_head, unsigned index_modulus) {
    if (entries.empty()) throw InvalidSpec("collect: empty commutator");
    std::vector<CollectTerm> done;
    struct WorkItem {
        CollectTerm term;
        size_t prefix;
        int last_level;
    };
    std::vector<WorkItem> work;
    work.push_back({{alg.field()->one(), entries}, first_is_head ? size_t{1} : size_t{0}, -1});
    while (!work.empty()) {
        WorkItem item = std::move(work.back());
        work.pop_back();
        auto& es = item.term.entries;
        // next level to bring into the prefix
        int next_level = -1;
        for (size_t i = item.prefix; i < es.size(); ++i)
            if (es[i].level > item.last_level && (next_level < 0 || es[i].level < next_level)) next_level = es[i].level;
        if (next_level < 0) {
            done.push_back(std::move(item.term));
            continue;
        }
        size_t pos = item.prefix;
        while (es[pos].level != next_level) ++pos;
        // bubble the entry left; merged Jacobi corrections take its place
        while (pos > item.prefix) {
            if (pos == 1) {
                // swapping the leading pair only negates the commutator
                std::swap(es[0], es[1]);
                item.term.coeff = -item.term.coeff;
                pos = 0;
                break;
            }
            CollectEntry& d = es[pos - 1];
            CollectEntry& e = es[pos];
            CollectEntry merged;
            merged.vector = alg.bracket(d.vector, e.vector);
            merged.index = static_cast<int>((static_cast<long>(d.index) + e.index) % index_modulus);
            merged.level = std::max(d.level, e.level);
            merged.weight = d.weight + e.weight;
            merged.quasi = true;
            if (!is_zero_vec(merged.vector)) {
                CollectTerm extra = item.term;
                extra.entries.erase(extra.entries.begin() + pos);
                extra.entries[pos - 1] = merged;
                work.push_back({std::move(extra), item.prefix, item.last_level});
            }
            std::swap(es[pos - 1], es[pos]);
            --pos;
        }
        item.prefix += 1;
        item.last_level = next_level;
        work.push_back(std::move(item));
    }
    return done;
}

}  // namespace froblie
