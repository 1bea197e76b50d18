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

#include "froblie/frobact.hpp"

#include <numeric>
#include <sstream>

namespace froblie {

unsigned order_mod(unsigned r, unsigned d, unsigned cap) {
    if (d <= 1) return 1;
    if (std::gcd(r % d, d) != 1) return 0;  // not a unit, no order
    unsigned long acc = r % d;
    for (unsigned k = 1; k <= cap; ++k) {
        if (acc == 1) return k;
        acc = (acc * (r % d)) % d;
    }
    return 0;
}

DescriptorCheck validate_descriptor(unsigned n, unsigned q, unsigned r) {
    DescriptorCheck out;
    if (n < 2 || q < 2 || r < 1 || r > n - 1) {
        out.reason = "require n, q >= 2 and 1 <= r <= n-1";
        return out;
    }
    if (std::gcd(n, q) != 1) {
        out.reason = "kernel and complement orders must be coprime";
        return out;
    }
    for (unsigned d = 2; d <= n; ++d) {
        if (n % d != 0) continue;
        unsigned ord = order_mod(r, d, q + 1);
        if (ord != q) {
            out.failing_divisor = d;
            std::ostringstream os;
            os << "r = " << r << " has order " << ord << " (need " << q << ") modulo the divisor " << d;
            out.reason = os.str();
            return out;
        }
    }
    out.ok = true;
    return out;
}

std::vector<unsigned> orbit(unsigned i, const FrobeniusDescriptor& d) {
    std::vector<unsigned> out;
    out.reserve(d.q);
    unsigned long cur = i % d.n;
    for (unsigned s = 0; s < d.q; ++s) {
        out.push_back(static_cast<unsigned>(cur));
        cur = (cur * d.r) % d.n;
    }
    return out;
}

namespace {

unsigned exact_matrix_order(const Mat& g, unsigned claimed) {
    // order divides `claimed`: check the power at every divisor
    for (unsigned d = 1; d <= claimed; ++d) {
        if (claimed % d != 0) continue;
        if (g.pow(d).is_identity()) return d;
    }
    return 0;
}

bool is_automorphism(const StructAlgebra& alg, const Mat& g, int& bad_i, int& bad_j) {
    for (int i = 0; i < alg.dim(); ++i)
        for (int j = i + 1; j < alg.dim(); ++j) {
            Vec lhs = g.apply(alg.basis_bracket(i, j));
            Vec rhs = alg.bracket(g.apply(alg.basis_vector(i)), g.apply(alg.basis_vector(j)));
            if (!is_zero_vec(sub(lhs, rhs))) {
                bad_i = i;
                bad_j = j;
                return false;
            }
        }
    return true;
}

}  // namespace

ActionCheck validate_action(const StructAlgebra& alg, const AlgebraAction& action) {
    ActionCheck out;
    const FrobeniusDescriptor& d = action.descriptor;
    auto fail = [&out](const std::string& msg) {
        out.ok = false;
        out.violation = msg;
        return out;
    };
    if (action.phi.rows() != alg.dim() || action.h.rows() != alg.dim()) return fail("matrix dimension mismatch");
    unsigned ophi = exact_matrix_order(action.phi, d.n);
    if (ophi != d.n)
        return fail("phi has order " + std::to_string(ophi) + ", descriptor requires " + std::to_string(d.n));
    unsigned oh = exact_matrix_order(action.h, d.q);
    if (oh != d.q) return fail("h has order " + std::to_string(oh) + ", descriptor requires " + std::to_string(d.q));
    Mat lhs = action.h.inverse() * action.phi * action.h;
    if (!(lhs == action.phi.pow(d.r))) return fail("conjugation law h^-1 phi h = phi^r fails");
    int i = -1, j = -1;
    if (!is_automorphism(alg, action.phi, i, j))
        return fail("phi is not an automorphism on pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    if (!is_automorphism(alg, action.h, i, j))
        return fail("h is not an automorphism on pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    return out;
}

GradedDecomposition decompose(const StructAlgebra& alg, const Mat& phi, unsigned n) {
    const FieldPtr& field = alg.field();
    mpz_class ch = field->characteristic();
    if (ch != 0 && mpz_class(n) % ch == 0)
        throw NotDirectSum("field characteristic divides n = " + std::to_string(n) +
                           "; apply a Sylow reduction or extend scalars first");
    Scalar omega = field->zero();
    try {
        omega = field->primitive_root(n);
    } catch (const NoRoot& e) {
        throw MissingRoot(std::string("decompose needs a primitive root: ") + e.what());
    }
    GradedDecomposition out;
    out.n = n;
    out.omega = omega;
    int dim = alg.dim();
    Mat id = Mat::identity(field, dim);
    int total = 0;
    Scalar omega_i = field->one();
    for (unsigned i = 0; i < n; ++i) {
        Mat shifted = phi - id.scaled(omega_i);
        Subspace li = Subspace::span(field, dim, nullspace(shifted));
        total += li.dim();
        out.components.push_back(std::move(li));
        omega_i *= omega;
    }
    if (total != dim)
        throw NotDirectSum("eigenspace dimensions sum to " + std::to_string(total) + " of " + std::to_string(dim));
    // grading law on all homogeneous basis pairs
    for (unsigned s = 0; s < n; ++s)
        for (unsigned t = 0; t < n; ++t)
            for (const Vec& a : out.components[s].basis())
                for (const Vec& b : out.components[t].basis())
                    if (!out.components[(s + t) % n].contains(alg.bracket(a, b)))
                        throw Error("grading law violated; phi is not an automorphism");
    // cross-check with the projection formula (1/n) sum omega^{-is} phi^s
    Scalar inv_n = field->integer(static_cast<long>(n)).inverse();
    std::vector<Mat> powers;
    powers.push_back(id);
    for (unsigned s = 1; s < n; ++s) powers.push_back(powers.back() * phi);
    Mat sum_check(field, dim, dim);
    for (unsigned i = 0; i < n; ++i) {
        Mat proj(field, dim, dim);
        Scalar w_mi = omega.pow(static_cast<long>(i)).inverse();
        Scalar f = field->one();
        for (unsigned s = 0; s < n; ++s) {
            proj = proj + powers[s].scaled(f * inv_n);
            f *= w_mi;
        }
        sum_check = sum_check + proj;
        for (int col = 0; col < dim; ++col) {
            Vec image = proj.apply(unit_vec(field, dim, col));
            if (!out.components[i].contains(image)) throw Error("projection cross-check failed for component " + std::to_string(i));
        }
    }
    if (!sum_check.is_identity()) throw Error("projection cross-check: projections do not sum to the identity");
    return out;
}

GradedDecomposition decompose(const StructAlgebra& alg, const AlgebraAction& action) {
    return decompose(alg, action.phi, action.descriptor.n);
}

FixedSubalgebra fixed_subalgebra(const StructAlgebra& alg, const Mat& g) {
    const FieldPtr& field = alg.field();
    Mat shifted = g - Mat::identity(field, alg.dim());
    Subspace fixed = Subspace::span(field, alg.dim(), nullspace(shifted));
    if (!is_subalgebra(fixed, alg)) throw Error("fixed space of an automorphism must be a subalgebra");
    FixedSubalgebra out;
    out.series = lower_central_series(fixed, alg);
    out.space = std::move(fixed);
    return out;
}

ActionProfile measure_profile(const StructAlgebra& alg, const AlgebraAction& action) {
    FixedSubalgebra cf = fixed_subalgebra(alg, action.phi);
    FixedSubalgebra ch = fixed_subalgebra(alg, action.h);
    ActionProfile out;
    out.m = cf.dim();
    out.c = ch.series.nilpotency_class;
    out.kernel_fixed = std::move(cf.space);
    out.complement_fixed = std::move(ch.space);
    return out;
}

SylowReductionResult sylow_reduction(const StructAlgebra& alg, const AlgebraAction& action, const mpz_class& p) {
    mpz_class ch = alg.field()->characteristic();
    unsigned n = action.descriptor.n;
    if (ch != p) throw NotApplicable("sylow reduction requires field characteristic p = " + p.get_str());
    if (p <= 0 || mpz_class(n) % p != 0) throw NotApplicable("p must divide the kernel order n");
    unsigned k = 0;
    unsigned long pk = 1;
    unsigned rest = n;
    unsigned long pl = p.get_ui();
    while (rest % pl == 0) {
        rest /= pl;
        pk *= pl;
        ++k;
    }
    SylowReductionResult out;
    out.k = k;
    out.pk = pk;
    // <phi> = <psi> x <chi>, psi = phi^(n/p^k) of order p^k, chi = phi^(p^k) of order n/p^k
    out.psi = action.phi.pow(rest);
    out.chi = action.phi.pow(static_cast<unsigned>(pk));
    out.reduced.n = rest;
    out.reduced.q = action.descriptor.q;
    out.reduced.r = rest > 1 ? action.descriptor.r % rest : 0;
    // A = C_L(chi); psi acts on A; C_A(psi) sits inside C_L(phi)
    Mat id = Mat::identity(alg.field(), alg.dim());
    out.fixed_of_chi = Subspace::span(alg.field(), alg.dim(), nullspace(out.chi - id));
    Subspace psi_fixed = Subspace::span(alg.field(), alg.dim(), nullspace(out.psi - id));
    Subspace in_A = out.fixed_of_chi.meet(psi_fixed);
    out.fixed_of_psi_in_A = in_A.dim();
    out.bound_ok = out.fixed_of_chi.dim() <= out.fixed_of_psi_in_A * static_cast<long>(pk);
    Subspace phi_fixed = Subspace::span(alg.field(), alg.dim(), nullspace(action.phi - id));
    out.psi_fixed_in_kernel_fixed = phi_fixed.contains(in_A);
    return out;
}

PpBoundCheck bound_check_pp(const Mat& transform, const mpz_class& p, unsigned k) {
    mpz_class ch = transform.field()->characteristic();
    if (ch != p) throw OrderMismatch("transform must live over a field of characteristic p = " + p.get_str());
    unsigned long pk = 1;
    for (unsigned i = 0; i < k; ++i) pk *= p.get_ui();
    if (!transform.pow(static_cast<unsigned>(pk)).is_identity())
        throw OrderMismatch("transform^(p^k) is not the identity");
    PpBoundCheck out;
    out.p = p;
    out.k = k;
    out.ambient = transform.rows();
    Mat id = Mat::identity(transform.field(), transform.rows());
    out.fixed_dim = static_cast<int>(nullspace(transform - id).size());
    out.ok = out.ambient <= out.fixed_dim * static_cast<long>(pk);
    return out;
}

namespace {

Scalar convert_scalar(const Scalar& s, const FieldPtr& target) {
    // rational -> cyclotomic constant embedding
    return target->parse(s.str());
}

Mat convert_matrix(const Mat& m, const FieldPtr& target) {
    Mat out(target, m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = convert_scalar(m.at(i, j), target);
    return out;
}

}  // namespace

std::pair<StructAlgebra, std::optional<AlgebraAction>> extend_scalars(
    const StructAlgebra& alg, unsigned n, const std::optional<AlgebraAction>& action) {
    if (alg.field()->spec().kind != FieldKind::Rational)
        throw NotApplicable("extend_scalars starts from a rational algebra");
    FieldPtr target = Field::make(FieldSpec::cyclotomic(n));
    StructAlgebra out(target, alg.dim());
    for (int i = 0; i < alg.dim(); ++i)
        for (int j = 0; j < alg.dim(); ++j) {
            if (i == j) continue;
            Vec b = alg.basis_bracket(i, j);
            if (is_zero_vec(b)) continue;
            SparseVec sv;
            for (int t = 0; t < alg.dim(); ++t)
                if (!b[t].is_zero()) sv.entries.emplace_back(t, convert_scalar(b[t], target));
            out.set_bracket_raw(i, j, sv);
        }
    std::optional<AlgebraAction> mapped;
    if (action) mapped = AlgebraAction{convert_matrix(action->phi, target), convert_matrix(action->h, target), action->descriptor};
    return {std::move(out), std::move(mapped)};
}

}  // namespace froblie
