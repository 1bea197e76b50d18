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

#ifndef FROBLIE_SCALAR_HPP
#define FROBLIE_SCALAR_HPP

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "errors.hpp"

namespace froblie {

enum class FieldKind { Rational, Cyclotomic, Prime };

/// Names one of the supported exact coefficient domains: the rationals,
/// the cyclotomic field obtained by adjoining a primitive n-th root of
/// unity, or a prime field F_p that contains an n-th root (n | p-1).
struct FieldSpec {
    FieldKind kind = FieldKind::Rational;
    unsigned n = 0;   // root order (cyclotomic / prime)
    mpz_class p = 0;  // modulus (prime only)

    static FieldSpec rational() { return {FieldKind::Rational, 0, 0}; }
    static FieldSpec cyclotomic(unsigned n) { return {FieldKind::Cyclotomic, n, 0}; }
    static FieldSpec prime(const mpz_class& p, unsigned n) { return {FieldKind::Prime, n, p}; }

    bool operator==(const FieldSpec& o) const { return kind == o.kind && n == o.n && p == o.p; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }
    std::string str() const;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A canonical-form element of some field. Equality is representation
/// equality: rationals are reduced fractions, cyclotomic elements are
/// residues reduced modulo the n-th cyclotomic polynomial, prime-field
/// elements are least nonnegative residues.
class Scalar {
  public:
    Scalar();  // rational zero

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // DivisionByZero
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const;  // representation order, for map keys

    bool is_zero() const;
    bool is_one() const;
    Scalar inverse() const;  // DivisionByZero on zero
    Scalar pow(const mpz_class& e) const;

    const FieldPtr& field() const { return field_; }
    std::string str() const;

    /// Multiplicative order, or 0 if it exceeds `cap` (or the element is 0).
    unsigned multiplicative_order(unsigned cap) const;

  private:
    friend class Field;
    FieldPtr field_;
    mpq_class rat_;                // rational value, or prime residue in the numerator
    std::vector<mpq_class> poly_;  // cyclotomic residue, poly_[i] = coefficient of w^i

    void normalize();
    static void require_same_field(const Scalar& a, const Scalar& b);
};

/// Arithmetic context for one FieldSpec. Immutable; all operations pure.
class Field : public std::enable_shared_from_this<Field> {
  public:
    /// Validates the field description (primality, p not dividing n, n | p-1) and
    /// returns a handle. Throws InvalidSpec.
    static FieldPtr make(const FieldSpec& spec);

    const FieldSpec& spec() const { return spec_; }
    mpz_class characteristic() const;
    /// Degree of the residue representation over the prime field / Q.
    unsigned degree() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar integer(long v) const;
    Scalar integer(const mpz_class& v) const;
    Scalar rational(const mpq_class& v) const;  // in F_p: numerator * den^{-1}

    /// Parses "p/q", polynomials in w like "w^2-1/2*w+3", or residues "5".
    /// Throws ParseError.
    Scalar parse(const std::string& text) const;

    /// The deterministic primitive n-th root of unity: smallest nonnegative
    /// residue of exact order n in a prime field; w^(m/n) in cyclotomic(m)
    /// when n | m; +-1 over the rationals. Throws NoRoot.
    Scalar primitive_root(unsigned n) const;

    /// Monic modulus polynomial of the cyclotomic representation.
    const std::vector<mpq_class>& modulus_poly() const { return cyclo_; }

  private:
    Field() = default;
    FieldSpec spec_;
    std::vector<mpq_class> cyclo_;  // cyclotomic polynomial, monic, index = power

    friend class Scalar;
    Scalar make_rational(mpq_class v) const;
    Scalar make_poly(std::vector<mpq_class> v) const;
};

/// Free-function entry points (thin wrappers over Field/Scalar).
FieldPtr make_field(const FieldSpec& spec);
Scalar primitive_root(const FieldPtr& field, unsigned n);

enum class FieldOp { Add, Mul, Div };
Scalar field_arithmetic(const Scalar& a, const Scalar& b, FieldOp op);

/// The n-th cyclotomic polynomial with integer coefficients, index = power.
std::vector<mpz_class> cyclotomic_polynomial(unsigned n);

}  // namespace froblie

#endif
