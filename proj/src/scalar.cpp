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

#include "froblie/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace froblie {

namespace {

bool is_probable_prime(const mpz_class& p) {
    return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

// Exact division of integer polynomials, used to build cyclotomic moduli.
std::vector<mpz_class> poly_div_exact(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
    std::vector<mpz_class> quot(num.size() - den.size() + 1, mpz_class(0));
    for (int d = static_cast<int>(num.size()) - 1; d >= static_cast<int>(den.size()) - 1; --d) {
        if (num[d] == 0) continue;
        mpz_class c = num[d] / den.back();
        int shift = d - static_cast<int>(den.size()) + 1;
        quot[shift] = c;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    }
    for (const auto& c : num)
        if (c != 0) throw Error("internal: inexact polynomial division");
    return quot;
}

std::vector<unsigned> divisors_of(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

void trim_poly(std::vector<mpq_class>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a modulo the monic polynomial m.
std::vector<mpq_class> poly_mod(std::vector<mpq_class> a, const std::vector<mpq_class>& m) {
    int deg_m = static_cast<int>(m.size()) - 1;
    for (int d = static_cast<int>(a.size()) - 1; d >= deg_m; --d) {
        if (a[d] == 0) continue;
        mpq_class c = a[d];
        int shift = d - deg_m;
        for (int i = 0; i <= deg_m; ++i) a[shift + i] -= c * m[i];
    }
    trim_poly(a);
    return a;
}

std::vector<mpq_class> poly_mul(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<mpq_class> out(a.size() + b.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim_poly(out);
    return out;
}

std::vector<mpq_class> poly_sub(std::vector<mpq_class> a, const std::vector<mpq_class>& b) {
    if (a.size() < b.size()) a.resize(b.size(), mpq_class(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim_poly(a);
    return a;
}

std::vector<mpq_class> poly_scale(std::vector<mpq_class> a, const mpq_class& c) {
    for (auto& x : a) x *= c;
    trim_poly(a);
    return a;
}

// Extended Euclid in Q[x]: returns s with s*a == gcd (mod m), gcd normalized
// monic; for irreducible m and a nonzero mod m the gcd is 1 and s = a^{-1}.
std::vector<mpq_class> poly_invert_mod(const std::vector<mpq_class>& a, const std::vector<mpq_class>& m) {
    std::vector<mpq_class> r0 = m, r1 = a;
    std::vector<mpq_class> s0 = {}, s1 = {mpq_class(1)};
    while (!r1.empty()) {
        // divide r0 by r1
        std::vector<mpq_class> q;
        std::vector<mpq_class> rem = r0;
        int deg1 = static_cast<int>(r1.size()) - 1;
        if (static_cast<int>(rem.size()) - 1 >= deg1) {
            q.assign(rem.size() - r1.size() + 1, mpq_class(0));
            for (int d = static_cast<int>(rem.size()) - 1; d >= deg1; --d) {
                if (rem[d] == 0) continue;
                mpq_class c = rem[d] / r1[deg1];
                q[d - deg1] = c;
                for (int i = 0; i <= deg1; ++i) rem[d - deg1 + i] -= c * r1[i];
            }
            trim_poly(rem);
        }
        std::vector<mpq_class> s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    if (r0.size() != 1) throw DivisionByZero("element has no inverse modulo the field polynomial");
    return poly_scale(s0, mpq_class(1) / r0[0]);
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw InvalidSpec("cyclotomic order must be positive");
    // Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d
    std::vector<mpz_class> num(n + 1, mpz_class(0));
    num[0] = -1;
    num[n] = 1;
    for (unsigned d : divisors_of(n)) {
        if (d == n) continue;
        num = poly_div_exact(std::move(num), cyclotomic_polynomial(d));
    }
    return num;
}

std::string FieldSpec::str() const {
    std::ostringstream os;
    switch (kind) {
        case FieldKind::Rational: os << "rational"; break;
        case FieldKind::Cyclotomic: os << "cyclotomic(" << n << ")"; break;
        case FieldKind::Prime: os << "prime(" << p.get_str() << "," << n << ")"; break;
    }
    return os.str();
}

FieldPtr Field::make(const FieldSpec& spec) {
    auto f = std::shared_ptr<Field>(new Field());
    f->spec_ = spec;
    switch (spec.kind) {
        case FieldKind::Rational: break;
        case FieldKind::Cyclotomic: {
            if (spec.n < 1) throw InvalidSpec("cyclotomic(n) needs n >= 1");
            for (const auto& c : cyclotomic_polynomial(spec.n)) f->cyclo_.emplace_back(c);
            break;
        }
        case FieldKind::Prime: {
            if (spec.p < 2 || !is_probable_prime(spec.p)) throw InvalidSpec("prime(p,n): p must be prime, got " + spec.p.get_str());
            if (spec.n < 1) throw InvalidSpec("prime(p,n) needs n >= 1");
            if (mpz_class(spec.n) % spec.p == 0) throw InvalidSpec("prime(p,n): p divides n");
            if ((spec.p - 1) % spec.n != 0) throw InvalidSpec("prime(p,n): n does not divide p-1, no primitive n-th root exists");
            break;
        }
    }
    return f;
}

FieldPtr make_field(const FieldSpec& spec) { return Field::make(spec); }

mpz_class Field::characteristic() const { return spec_.kind == FieldKind::Prime ? spec_.p : mpz_class(0); }

unsigned Field::degree() const {
    return spec_.kind == FieldKind::Cyclotomic ? static_cast<unsigned>(cyclo_.size()) - 1 : 1;
}

Scalar Field::make_rational(mpq_class v) const {
    Scalar s;
    s.field_ = shared_from_this();
    s.rat_ = std::move(v);
    s.normalize();
    return s;
}

Scalar Field::make_poly(std::vector<mpq_class> v) const {
    Scalar s;
    s.field_ = shared_from_this();
    s.poly_ = std::move(v);
    s.normalize();
    return s;
}

Scalar Field::zero() const { return integer(0); }
Scalar Field::one() const { return integer(1); }

Scalar Field::integer(long v) const { return integer(mpz_class(v)); }

Scalar Field::integer(const mpz_class& v) const {
    if (spec_.kind == FieldKind::Cyclotomic) {
        if (v == 0) return make_poly({});
        return make_poly({mpq_class(v)});
    }
    return make_rational(mpq_class(v));
}

Scalar Field::rational(const mpq_class& v) const {
    if (spec_.kind == FieldKind::Cyclotomic) {
        if (v == 0) return make_poly({});
        return make_poly({v});
    }
    if (spec_.kind == FieldKind::Prime) {
        Scalar num = integer(v.get_num());
        Scalar den = integer(v.get_den());
        return num / den;
    }
    return make_rational(v);
}

void Scalar::normalize() {
    switch (field_->spec().kind) {
        case FieldKind::Rational:
            rat_.canonicalize();
            break;
        case FieldKind::Prime: {
            mpz_class r = rat_.get_num() % field_->spec().p;
            if (r < 0) r += field_->spec().p;
            rat_ = mpq_class(r);
            break;
        }
        case FieldKind::Cyclotomic: {
            for (auto& c : poly_) c.canonicalize();
            poly_ = poly_mod(std::move(poly_), field_->cyclo_);
            break;
        }
    }
}

Scalar::Scalar() : field_(Field::make(FieldSpec::rational())), rat_(0) {}

void Scalar::require_same_field(const Scalar& a, const Scalar& b) {
    if (a.field_->spec() != b.field_->spec())
        throw FieldMismatch("operands from different fields: " + a.field_->spec().str() + " vs " + b.field_->spec().str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(*this, o);
    if (field_->spec().kind == FieldKind::Cyclotomic) {
        std::vector<mpq_class> out = poly_;
        if (out.size() < o.poly_.size()) out.resize(o.poly_.size(), mpq_class(0));
        for (size_t i = 0; i < o.poly_.size(); ++i) out[i] += o.poly_[i];
        return field_->make_poly(std::move(out));
    }
    return field_->make_rational(rat_ + o.rat_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
    if (field_->spec().kind == FieldKind::Cyclotomic) {
        std::vector<mpq_class> out = poly_;
        for (auto& c : out) c = -c;
        return field_->make_poly(std::move(out));
    }
    return field_->make_rational(-rat_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(*this, o);
    if (field_->spec().kind == FieldKind::Cyclotomic) return field_->make_poly(poly_mul(poly_, o.poly_));
    return field_->make_rational(rat_ * o.rat_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in " + field_->spec().str());
    switch (field_->spec().kind) {
        case FieldKind::Rational:
            return field_->make_rational(1 / rat_);
        case FieldKind::Prime: {
            mpz_class inv;
            if (mpz_invert(inv.get_mpz_t(), rat_.get_num().get_mpz_t(), field_->spec().p.get_mpz_t()) == 0)
                throw DivisionByZero("residue not invertible");
            return field_->make_rational(mpq_class(inv));
        }
        case FieldKind::Cyclotomic:
            return field_->make_poly(poly_invert_mod(poly_, field_->cyclo_));
    }
    throw Error("unreachable");
}

Scalar Scalar::operator/(const Scalar& o) const {
    require_same_field(*this, o);
    if (o.is_zero()) throw DivisionByZero("division by zero in " + field_->spec().str());
    return *this * o.inverse();
}

Scalar& Scalar::operator+=(const Scalar& o) { return *this = *this + o; }
Scalar& Scalar::operator-=(const Scalar& o) { return *this = *this - o; }
Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

bool Scalar::operator==(const Scalar& o) const {
    require_same_field(*this, o);
    if (field_->spec().kind == FieldKind::Cyclotomic) return poly_ == o.poly_;
    return rat_ == o.rat_;
}

bool Scalar::operator<(const Scalar& o) const {
    require_same_field(*this, o);
    if (field_->spec().kind == FieldKind::Cyclotomic) {
        if (poly_.size() != o.poly_.size()) return poly_.size() < o.poly_.size();
        for (size_t i = poly_.size(); i-- > 0;)
            if (poly_[i] != o.poly_[i]) return poly_[i] < o.poly_[i];
        return false;
    }
    return rat_ < o.rat_;
}

bool Scalar::is_zero() const {
    if (field_->spec().kind == FieldKind::Cyclotomic) return poly_.empty();
    return rat_ == 0;
}

bool Scalar::is_one() const {
    if (field_->spec().kind == FieldKind::Cyclotomic) return poly_.size() == 1 && poly_[0] == 1;
    return rat_ == 1;
}

Scalar Scalar::pow(const mpz_class& e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar acc = field_->one();
    Scalar base = *this;
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

unsigned Scalar::multiplicative_order(unsigned cap) const {
    if (is_zero()) return 0;
    Scalar acc = *this;
    for (unsigned k = 1; k <= cap; ++k) {
        if (acc.is_one()) return k;
        acc = acc * *this;
    }
    return 0;
}

Scalar Field::primitive_root(unsigned n) const {
    if (n == 0) throw NoRoot("root order must be positive");
    switch (spec_.kind) {
        case FieldKind::Rational: {
            if (n == 1) return one();
            if (n == 2) return integer(-1);
            throw NoRoot("the rationals contain no primitive root of order " + std::to_string(n));
        }
        case FieldKind::Cyclotomic: {
            if (n == 1) return one();
            if (spec_.n % n == 0) {
                std::vector<mpq_class> x = {mpq_class(0), mpq_class(1)};
                return make_poly(std::move(x)).pow(spec_.n / n);
            }
            if (n == 2) return integer(-1);
            throw NoRoot("cyclotomic(" + std::to_string(spec_.n) + ") has no root of order " + std::to_string(n));
        }
        case FieldKind::Prime: {
            if ((spec_.p - 1) % n != 0) throw NoRoot("no element of order " + std::to_string(n) + " in F_" + spec_.p.get_str());
            // smallest residue of exact order n
            for (mpz_class c = 1; c < spec_.p; ++c) {
                Scalar s = integer(c);
                if (s.multiplicative_order(n) == n) return s;
            }
            throw NoRoot("no element of order " + std::to_string(n) + " found");
        }
    }
    throw Error("unreachable");
}

Scalar primitive_root(const FieldPtr& field, unsigned n) { return field->primitive_root(n); }

Scalar field_arithmetic(const Scalar& a, const Scalar& b, FieldOp op) {
    switch (op) {
        case FieldOp::Add: return a + b;
        case FieldOp::Mul: return a * b;
        case FieldOp::Div: return a / b;
    }
    throw Error("unreachable");
}

namespace {

// Scalar grammar: sum of terms; term = rational coefficient, optionally
// "*w" or "*w^k"; also bare "w"/"w^k" and leading sign.
struct ScalarParser {
    const std::string& s;
    size_t pos = 0;

    explicit ScalarParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError("scalar \"" + s + "\": " + msg + " at position " + std::to_string(pos));
    }
    mpz_class read_uint() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return mpz_class(s.substr(start, pos - start));
    }

    // coefficient [sign] int [/ uint]
    mpq_class read_rational(int sign) {
        mpz_class num = read_uint();
        if (peek() == '/') {
            ++pos;
            mpz_class den = read_uint();
            if (den == 0) fail("zero denominator");
            mpq_class q(num, den);
            q.canonicalize();
            return sign < 0 ? mpq_class(-q) : q;
        }
        return mpq_class(sign < 0 ? mpz_class(-num) : num);
    }

    // Returns (coefficient, power of w).
    std::pair<mpq_class, unsigned> read_term(int sign) {
        mpq_class coeff(1);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = read_rational(1);
            have_coeff = true;
        }
        unsigned power = 0;
        if (peek() == '*' || peek() == 'w') {
            if (peek() == '*') {
                ++pos;
                if (peek() != 'w') fail("expected w after *");
            }
            ++pos;  // consume 'w'
            power = 1;
            if (peek() == '^') {
                ++pos;
                power = static_cast<unsigned>(read_uint().get_ui());
            }
        } else if (!have_coeff) {
            fail("expected coefficient or w");
        }
        if (sign < 0) coeff = -coeff;
        return {coeff, power};
    }
};

}  // namespace

Scalar Field::parse(const std::string& text) const {
    ScalarParser p(text);
    std::vector<std::pair<mpq_class, unsigned>> terms;
    int sign = 1;
    if (p.peek() == '-') {
        sign = -1;
        ++p.pos;
    } else if (p.peek() == '+') {
        ++p.pos;
    }
    terms.push_back(p.read_term(sign));
    while (!p.eof()) {
        char c = p.peek();
        if (c == '+') sign = 1;
        else if (c == '-') sign = -1;
        else p.fail("expected + or -");
        ++p.pos;
        terms.push_back(p.read_term(sign));
    }
    unsigned max_pow = 0;
    for (auto& [c, k] : terms) max_pow = std::max(max_pow, k);
    if (max_pow > 0 && spec_.kind != FieldKind::Cyclotomic)
        throw ParseError("scalar \"" + text + "\": w is only valid in a cyclotomic field");
    if (spec_.kind == FieldKind::Cyclotomic) {
        std::vector<mpq_class> poly(max_pow + 1, mpq_class(0));
        for (auto& [c, k] : terms) poly[k] += c;
        return make_poly(std::move(poly));
    }
    mpq_class total(0);
    for (auto& [c, k] : terms) total += c;
    if (spec_.kind == FieldKind::Prime && total.get_den() != 1) {
        return rational(total);
    }
    if (spec_.kind == FieldKind::Prime) return integer(total.get_num());
    return make_rational(total);
}

std::string Scalar::str() const {
    switch (field_->spec().kind) {
        case FieldKind::Rational:
            return rat_.get_str();
        case FieldKind::Prime:
            return rat_.get_num().get_str();
        case FieldKind::Cyclotomic: {
            if (poly_.empty()) return "0";
            std::ostringstream os;
            bool first = true;
            for (size_t i = poly_.size(); i-- > 0;) {
                const mpq_class& c = poly_[i];
                if (c == 0) continue;
                mpq_class a = c;
                if (first) {
                    if (a < 0) {
                        os << "-";
                        a = -a;
                    }
                } else {
                    os << (a < 0 ? "-" : "+");
                    if (a < 0) a = -a;
                }
                first = false;
                if (i == 0) {
                    os << a.get_str();
                } else {
                    if (a != 1) os << a.get_str() << "*";
                    os << "w";
                    if (i > 1) os << "^" << i;
                }
            }
            return os.str();
        }
    }
    throw Error("unreachable");
}

}  // namespace froblie
