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

// Batch front-end. One subcommand per phase:
//   validate    hypotheses and measured profile (m, c)
//   decompose   eigenspace grading and the grading law
//   orbits      index orbits of the descriptor
//   mkhsh       membership / transform / empirical-f in the free algebra
//   tower       generalized centralizers, representatives, Z
//   verify-z    tower plus the vanishing and stability checks
//   bch-check   group law, class correspondence, equivariance
//
// Exit codes: 0 ok, 1 verification counterexample, 2 hypothesis error,
// 3 parse error.

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "froblie/freequot.hpp"
#include "froblie/gradcent.hpp"
#include "froblie/io.hpp"
#include "froblie/malcev.hpp"

using namespace froblie;

namespace {

struct RunConfig {
    std::string input;
    std::string format = "text";
    uint64_t seed = 1;
    long f = -1, T = -1, U = -1;
    int weight_cap = 6;
    int vanishing_weight = -1;
    int c = 1;
    int class_cap = 4;
    int samples = 100;
    unsigned n = 0, q = 0, r = 0;
    std::vector<unsigned> slots;
    std::string action;  // mkhsh subaction
};

// Reports are assembled in full and printed once; identical configs and
// seeds must produce byte-identical output.
struct Report {
    std::ostringstream text;
    std::ostringstream rows;
    void kv(const std::string& key, const std::string& value) {
        text << key << ": " << value << "\n";
        rows << key << "\t" << value << "\n";
    }
    void kv(const std::string& key, long value) { kv(key, std::to_string(value)); }
    void line(const std::string& s) {
        text << s << "\n";
        rows << s << "\n";
    }
    // aligned columns in text mode, tab-separated in rows mode
    void table(const std::string& tag, const std::vector<std::pair<std::string, std::string>>& cells) {
        text << tag;
        for (size_t i = 0; i < cells.size(); ++i) {
            std::string field = cells[i].first + "=" + cells[i].second;
            text << "  " << field;
            if (i + 1 < cells.size() && field.size() < 12) text << std::string(12 - field.size(), ' ');
        }
        text << "\n";
        rows << tag;
        for (const auto& [k, v] : cells) rows << "\t" << k << "=" << v;
        rows << "\n";
    }
    void print(const std::string& format) const {
        std::cout << (format == "rows" ? rows.str() : text.str());
    }
};

void echo_config(Report& rep, const RunConfig& cfg, const std::string& command) {
    rep.kv("command", command);
    if (!cfg.input.empty()) rep.kv("input", cfg.input);
    rep.kv("seed", static_cast<long>(cfg.seed));
    if (cfg.f >= 0) rep.kv("override.f", cfg.f);
    if (cfg.T >= 0) rep.kv("override.T", cfg.T);
    if (cfg.U >= 0) rep.kv("override.U", cfg.U);
}

AlgebraAction require_action(const AlgebraFile& file) {
    if (!file.phi || !file.h || !file.frobenius)
        throw HypothesisError("this command needs phi, h and frobenius in the input file");
    return AlgebraAction{*file.phi, *file.h, *file.frobenius};
}

void check_char_q(const StructAlgebra& alg, unsigned q) {
    mpz_class ch = alg.field()->characteristic();
    if (ch != 0 && mpz_class(q) % ch == 0)
        throw HypothesisError("field characteristic divides the complement order q = " + std::to_string(q) +
                              "; the acting-group hypotheses require characteristic coprime to q");
}

int cmd_validate(const RunConfig& cfg) {
    Report rep;
    echo_config(rep, cfg, "validate");
    AlgebraFile file = parse_algebra_file(cfg.input);
    auto violations = file.algebra.check();
    rep.kv("dim", file.algebra.dim());
    rep.kv("field", file.algebra.field()->spec().str());
    rep.kv("algebra.violations", static_cast<long>(violations.size()));
    for (const auto& v : violations) rep.line("  " + v.describe());
    bool ok = violations.empty();
    if (file.frobenius) {
        DescriptorCheck dc = validate_descriptor(file.frobenius->n, file.frobenius->q, file.frobenius->r);
        rep.kv("descriptor", dc.ok ? "ok" : "violation: " + dc.reason);
        ok = ok && dc.ok;
        if (dc.ok && file.phi && file.h) {
            check_char_q(file.algebra, file.frobenius->q);
            AlgebraAction action = require_action(file);
            ActionCheck ac = validate_action(file.algebra, action);
            rep.kv("action", ac.ok ? "ok" : "violation: " + ac.violation);
            ok = ok && ac.ok;
            if (ac.ok) {
                ActionProfile profile = measure_profile(file.algebra, action);
                rep.kv("m", profile.m);
                rep.kv("c", profile.c ? std::to_string(*profile.c) : "not nilpotent");
            }
        }
    }
    rep.kv("result", ok ? "ok" : "violations found");
    rep.print(cfg.format);
    return ok ? 0 : 1;
}

int cmd_decompose(const RunConfig& cfg) {
    Report rep;
    echo_config(rep, cfg, "decompose");
    AlgebraFile file = parse_algebra_file(cfg.input);
    if (!file.phi || !file.frobenius) throw HypothesisError("decompose needs phi and frobenius in the input file");
    check_char_q(file.algebra, file.frobenius->q);
    GradedDecomposition dec = decompose(file.algebra, *file.phi, file.frobenius->n);
    long total = 0;
    for (unsigned i = 0; i < dec.n; ++i) {
        rep.kv("dim.L" + std::to_string(i), dec.components[i].dim());
        total += dec.components[i].dim();
    }
    rep.kv("dim.total", total);
    rep.kv("omega", dec.omega.str());
    rep.kv("grading_law", "ok");  // decompose verifies it exactly
    rep.print(cfg.format);
    return 0;
}

int cmd_orbits(const RunConfig& cfg) {
    Report rep;
    echo_config(rep, cfg, "orbits");
    FrobeniusDescriptor d{cfg.n, cfg.q, cfg.r};
    if (!cfg.input.empty()) {
        AlgebraFile file = parse_algebra_file(cfg.input);
        if (file.frobenius) d = *file.frobenius;
    }
    DescriptorCheck dc = validate_descriptor(d.n, d.q, d.r);
    rep.kv("descriptor", dc.ok ? "ok" : "violation: " + dc.reason);
    if (!dc.ok) {
        rep.print(cfg.format);
        return 2;
    }
    for (unsigned i = 0; i < d.n; ++i) {
        std::ostringstream os;
        for (unsigned v : orbit(i, d)) os << v << " ";
        rep.kv("orbit." + std::to_string(i), os.str());
    }
    rep.print(cfg.format);
    return 0;
}

FieldPtr mkhsh_field(const FrobeniusDescriptor& d) {
    // smallest prime p with n | p-1 and p dividing neither q nor n
    for (mpz_class p = 2;; mpz_nextprime(p.get_mpz_t(), p.get_mpz_t())) {
        if ((p - 1) % d.n != 0) continue;
        if (mpz_class(d.q) % p == 0 || mpz_class(d.n) % p == 0) continue;
        return Field::make(FieldSpec::prime(p, d.n));
    }
}

int cmd_mkhsh(const RunConfig& cfg) {
    Report rep;
    echo_config(rep, cfg, "mkhsh." + cfg.action);
    FrobeniusDescriptor d{cfg.n, cfg.q, cfg.r};
    DescriptorCheck dc = validate_descriptor(d.n, d.q, d.r);
    if (!dc.ok) throw HypothesisError("descriptor: " + dc.reason);
    std::vector<unsigned> slots = cfg.slots;
    if (slots.empty()) slots = {1, 1};
    FieldPtr field = mkhsh_field(d);
    rep.kv("field", field->spec().str());
    rep.kv("c", cfg.c);
    {
        std::ostringstream os;
        for (unsigned s : slots) os << s << " ";
        rep.kv("slots", os.str());
    }
    rep.kv("weight_cap", cfg.weight_cap);
    if (cfg.action == "empirical-f") {
        ClassBoundReport r = empirical_class_bound(field, d, cfg.c, slots, cfg.weight_cap);
        rep.kv("empirical_class", r.nilpotency_class);
        for (size_t w = 0; w < r.quotient_dims.size(); ++w)
            rep.kv("quotient_dim.w" + std::to_string(w + 1), r.quotient_dims[w]);
        mpz_class V = segment_weight_bound(r.nilpotency_class + 1, r.nilpotency_class, cfg.q, cfg.c, r.nilpotency_class);
        rep.kv("suggested.T", r.nilpotency_class + 1);
        rep.kv("suggested.U", V.get_str());
        rep.print(cfg.format);
        return 0;
    }
    // the truncation must at least cover the multilinear commutator
    int cap = std::max(cfg.weight_cap, static_cast<int>(slots.size()));
    OrbitGeneratorSet ogs(field, d, slots, cap);
    std::vector<int> letters;
    for (int s = 1; s <= ogs.num_slots(); ++s) letters.push_back(ogs.letter(s, 0));
    if (cfg.action == "membership") {
        FreeElement x = to_free_element({SimpleTerm{mpz_class(1), letters}}, ogs.algebra());
        MembershipCertificate cert = ideal_membership(ogs, x, cfg.c);
        rep.kv("member", cert.member ? "true" : "false");
        rep.kv("certificate.zero_sum_terms", static_cast<long>(cert.j_terms.size()));
        rep.kv("certificate.orbit_sum_terms", static_cast<long>(cert.i_terms.size()));
        auto letter_name = [&ogs](int id) {
            const GeneratorSymbol& g = ogs.algebra().generator_symbol(id);
            return "y" + std::to_string(g.orbit_slot) + "p" + std::to_string(g.power);
        };
        int tnum = 0;
        for (const auto& jt : cert.j_terms) {
            std::ostringstream os;
            os << jt.coeff.str() << " * [";
            for (size_t i = 0; i < jt.head.size(); ++i) os << (i ? "." : "") << letter_name(jt.head[i]);
            os << "]";
            for (int tail : jt.tail) os << "," << letter_name(tail);
            rep.kv("certificate.zero_sum." + std::to_string(++tnum), os.str());
        }
        tnum = 0;
        for (const auto& it : cert.i_terms)
            rep.kv("certificate.orbit_sum." + std::to_string(++tnum), it.coeff.str() + " * " + it.label);
        rep.print(cfg.format);
        return cert.member ? 0 : 1;
    }
    if (cfg.action == "transform") {
        TransformationResult tr = zero_sum_rewrite(ogs, letters, cfg.c);
        ScanReport scan = scan_transformation(ogs, letters, tr);
        rep.kv("terms", static_cast<long>(tr.terms.size()));
        for (size_t t = 0; t < tr.terms.size(); ++t) {
            std::ostringstream os;
            os << tr.terms[t].coeff.str() << " * [";
            for (size_t i = 0; i < tr.terms[t].letters.size(); ++i) {
                const GeneratorSymbol& g = ogs.algebra().generator_symbol(tr.terms[t].letters[i]);
                os << (i ? "," : "") << "y" << g.orbit_slot << "p" << g.power;
                if (static_cast<int>(i) + 1 == tr.terms[t].zero_sum_prefix) os << " |";
            }
            os << "]";
            rep.kv("term." + std::to_string(t + 1), os.str());
        }
        rep.kv("structural_scan", scan.ok ? "ok" : "failed: " + scan.failure);
        rep.print(cfg.format);
        return scan.ok ? 0 : 1;
    }
    throw ParseError("mkhsh needs an action: membership, transform or empirical-f");
}

int cmd_tower(const RunConfig& cfg, bool verify) {
    Report rep;
    echo_config(rep, cfg, verify ? "verify-z" : "tower");
    AlgebraFile file = parse_algebra_file(cfg.input);
    if (!file.phi || !file.frobenius) throw HypothesisError("tower needs phi and frobenius in the input file");
    check_char_q(file.algebra, file.frobenius->q);
    GradedDecomposition dec = decompose(file.algebra, *file.phi, file.frobenius->n);
    int m = dec.components[0].dim();
    std::optional<int> c;
    if (file.h) {
        AlgebraAction action = require_action(file);
        ActionCheck ac = validate_action(file.algebra, action);
        if (!ac.ok) throw HypothesisError("action: " + ac.violation);
        c = fixed_subalgebra(file.algebra, *file.h).series.nilpotency_class;
        if (!c) throw HypothesisError("the fixed subalgebra of h is not nilpotent");
    }
    long f = cfg.f >= 0 ? cfg.f : 1;
    BoundsConfig bounds;
    bounds.f = static_cast<int>(f);
    bounds.T = cfg.T >= 0 ? static_cast<int>(cfg.T) : bounds.f + 1;
    if (cfg.U >= 0) {
        bounds.U = static_cast<int>(cfg.U);
    } else {
        mpz_class V = segment_weight_bound(bounds.T, std::max(1, bounds.T - 1), file.frobenius->q,
                                           c.value_or(1), bounds.f);
        if (V > 8) throw HypothesisError("default weight bound U = " + V.get_str() +
                                         " is too large for direct computation; pass --U");
        bounds.U = static_cast<int>(V.get_si());
    }
    rep.kv("m", m);
    rep.kv("c", c ? std::to_string(*c) : "n/a");
    rep.kv("bounds.f", bounds.f);
    rep.kv("bounds.T", bounds.T);
    rep.kv("bounds.U", bounds.U);
    LevelTower tower(file.algebra, dec, *file.frobenius, file.h, bounds);
    tower.build_all();
    for (int t = 0; t <= bounds.T; ++t) {
        for (const auto& row : tower.level_table(t)) {
            rep.table("level " + std::to_string(t),
                      {{"j", std::to_string(row.j)},
                       {"dim", std::to_string(row.dim)},
                       {"codim", std::to_string(row.codim)},
                       {"reps", std::to_string(row.rep_count)},
                       {"tuples", std::to_string(row.tuples_used)}});
        }
    }
    bool ok = tower.check_nesting();
    rep.kv("nesting", ok ? "ok" : "violated");
    bool hstab = tower.check_h_stability();
    rep.kv("h_stability", hstab ? "ok" : "violated");
    ok = ok && hstab;
    auto prop = tower.check_centralizer_property(bounds.T, 200000, cfg.seed);
    rep.kv("centralizer_property", prop.ok ? "ok" : "counterexample: " + prop.counterexample);
    ok = ok && prop.ok;
    auto z = tower.build_Z();
    rep.kv("Z.dim", z.Z.dim());
    rep.kv("Z.codim", z.codim);
    rep.kv("Z.class", z.series.nilpotency_class ? std::to_string(*z.series.nilpotency_class) : "not nilpotent");
    rep.kv("Z.graded", z.graded ? "ok" : "violated");
    ok = ok && z.graded;
    if (z.h_invariant) {
        rep.kv("Z.h_invariant", *z.h_invariant ? "ok" : "violated");
        ok = ok && *z.h_invariant;
    }
    if (verify) {
        auto quasi = tower.check_quasirep_property(bounds.T, 2, 200000);
        rep.kv("quasirep_property", quasi.ok ? "ok" : "counterexample: " + quasi.counterexample);
        ok = ok && quasi.ok;
        int vanishing_weight = cfg.vanishing_weight > 0 ? cfg.vanishing_weight : bounds.U;
        auto van = tower.verify_vanishing(vanishing_weight, 200000, cfg.seed);
        rep.kv("vanishing.weight", vanishing_weight);
        rep.kv("vanishing.checked", van.checked);
        rep.kv("vanishing", van.ok ? "ok" : "counterexample: " + van.counterexample);
        ok = ok && van.ok;
    }
    rep.kv("result", ok ? "ok" : "counterexample found");
    rep.print(cfg.format);
    return ok ? 0 : 1;
}

int cmd_bch_check(const RunConfig& cfg) {
    Report rep;
    echo_config(rep, cfg, "bch-check");
    AlgebraFile file = parse_algebra_file(cfg.input);
    if (file.algebra.field()->characteristic() != 0)
        throw HypothesisError("bch-check needs characteristic zero");
    GroupCheck gc = group_check(file.algebra, cfg.samples, cfg.seed, cfg.class_cap);
    rep.kv("group_check.samples", gc.samples);
    rep.kv("group_check", gc.ok ? "ok" : "violation: " + gc.violation);
    bool ok = gc.ok;
    ClassCorrespondence cc =
        class_correspondence(Subspace::full(file.algebra.field(), file.algebra.dim()), file.algebra, cfg.class_cap);
    rep.kv("class.lie", cc.lie_class);
    rep.kv("class.group", cc.group_class);
    rep.kv("class.equal", cc.equal ? "yes" : "no");
    ok = ok && cc.equal;
    if (file.phi) {
        bool eq = bch_equivariant(file.algebra, *file.phi, cfg.samples, cfg.seed, cfg.class_cap);
        rep.kv("equivariance.phi", eq ? "ok" : "violated");
        ok = ok && eq;
    }
    if (file.h) {
        bool eq = bch_equivariant(file.algebra, *file.h, cfg.samples, cfg.seed, cfg.class_cap);
        rep.kv("equivariance.h", eq ? "ok" : "violated");
        ok = ok && eq;
    }
    rep.kv("result", ok ? "ok" : "violations found");
    rep.print(cfg.format);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for graded Lie algebras with a metacyclic Frobenius action"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&cfg](CLI::App* sub, bool with_input) {
        if (with_input) sub->add_option("input", cfg.input, "algebra file")->required();
        sub->add_option("--format", cfg.format, "text or rows")->check(CLI::IsMember({"text", "rows"}));
        sub->add_option("--seed", cfg.seed, "seed for sampled checks");
    };

    CLI::App* validate = app.add_subcommand("validate", "check the algebra, descriptor and action");
    add_common(validate, true);

    CLI::App* decompose_cmd = app.add_subcommand("decompose", "eigenspace decomposition and grading law");
    add_common(decompose_cmd, true);

    CLI::App* orbits_cmd = app.add_subcommand("orbits", "index orbits of the descriptor");
    add_common(orbits_cmd, false);
    orbits_cmd->add_option("input", cfg.input, "algebra file (optional)");
    orbits_cmd->add_option("--n", cfg.n, "kernel order");
    orbits_cmd->add_option("--q", cfg.q, "complement order");
    orbits_cmd->add_option("--r", cfg.r, "conjugation exponent");

    CLI::App* mkhsh = app.add_subcommand("mkhsh", "free-algebra membership, transform, empirical class");
    add_common(mkhsh, false);
    mkhsh->add_option("action", cfg.action, "membership | transform | empirical-f")->required();
    mkhsh->add_option("--n", cfg.n, "kernel order")->required();
    mkhsh->add_option("--q", cfg.q, "complement order")->required();
    mkhsh->add_option("--r", cfg.r, "conjugation exponent")->required();
    mkhsh->add_option("--c", cfg.c, "class of the complement fixed points");
    mkhsh->add_option("--slots", cfg.slots, "orbit slot indices")->delimiter(',');
    mkhsh->add_option("--weight-cap", cfg.weight_cap, "truncation weight");

    CLI::App* tower = app.add_subcommand("tower", "build the centralizer tower and Z");
    add_common(tower, true);
    tower->add_option("--f", cfg.f, "class bound override");
    tower->add_option("--T", cfg.T, "top level override");
    tower->add_option("--U", cfg.U, "weight bound override");

    CLI::App* verifyz = app.add_subcommand("verify-z", "tower plus vanishing verification");
    add_common(verifyz, true);
    verifyz->add_option("--f", cfg.f, "class bound override");
    verifyz->add_option("--T", cfg.T, "top level override");
    verifyz->add_option("--U", cfg.U, "weight bound override");
    verifyz->add_option("--weight-cap", cfg.vanishing_weight, "effective vanishing weight (defaults to U)");

    CLI::App* bch = app.add_subcommand("bch-check", "group law and class correspondence");
    add_common(bch, true);
    bch->add_option("--class-cap", cfg.class_cap, "series truncation class");
    bch->add_option("--samples", cfg.samples, "sampled triples");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(cfg);
        if (decompose_cmd->parsed()) return cmd_decompose(cfg);
        if (orbits_cmd->parsed()) return cmd_orbits(cfg);
        if (mkhsh->parsed()) return cmd_mkhsh(cfg);
        if (tower->parsed()) return cmd_tower(cfg, false);
        if (verifyz->parsed()) return cmd_tower(cfg, true);
        if (bch->parsed()) return cmd_bch_check(cfg);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const HypothesisError& e) {
        std::cerr << "hypothesis error: " << e.what() << "\n";
        return 2;
    } catch (const NotDirectSum& e) {
        std::cerr << "hypothesis error: " << e.what() << "\n";
        return 2;
    } catch (const MissingRoot& e) {
        std::cerr << "hypothesis error: " << e.what() << "\n";
        return 2;
    } catch (const NoRoot& e) {
        std::cerr << "hypothesis error: " << e.what() << "\n";
        return 2;
    } catch (const CapTooSmall& e) {
        std::cerr << "hypothesis error: " << e.what() << " (raise --weight-cap)\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
