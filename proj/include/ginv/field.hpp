#pragma once

// Exact arithmetic over Q, cyclotomic fields Q(zeta_N) and finite fields
// F_{p^m}, plus the multiplicative lift from finite-field roots of unity
// into cyclotomic numbers.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace ginv {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

enum class FieldKind { Rational, Cyclotomic, Finite };

class FieldDescriptor;
using FieldPtr = std::shared_ptr<const FieldDescriptor>;

/// Euler phi of the N-th cyclotomic polynomial's index, i.e. deg Phi_N.
unsigned euler_phi(unsigned n);

/// Phi_N as a monic integer polynomial, coefficients low-to-high.
std::vector<BigInt> cyclotomic_polynomial(unsigned n);

bool is_prime(unsigned long n);

/// Trial-division factorization; returns (prime, exponent) pairs.
std::vector<std::pair<unsigned long, unsigned>> factorize(unsigned long n);

class FieldDescriptor {
public:
    static FieldPtr rational();
    static FieldPtr cyclotomic(unsigned n);
    // modulus: monic irreducible over F_p, coefficients low-to-high, degree m >= 1
    static FieldPtr finite(unsigned p, std::vector<unsigned> modulus);
    static FieldPtr prime_field(unsigned p);

    FieldKind kind() const { return kind_; }
    bool is_rational() const { return kind_ == FieldKind::Rational; }
    bool is_cyclotomic() const { return kind_ == FieldKind::Cyclotomic; }
    bool is_finite() const { return kind_ == FieldKind::Finite; }

    unsigned characteristic() const { return kind_ == FieldKind::Finite ? p_ : 0; }
    unsigned cyclo_n() const;             // N for Q(zeta_N)
    unsigned degree() const { return degree_; }  // deg over Q resp. F_p; 1 for Q
    unsigned long field_order() const;    // p^m, finite only
    unsigned long root_capacity() const;  // order of the group of roots of unity
    const std::vector<BigRat>& cyclo_modulus() const { return cyclo_modulus_; }
    const std::vector<unsigned>& modulus() const { return modulus_; }

    bool same(const FieldDescriptor& o) const { return key_ == o.key_; }
    const std::string& key() const { return key_; }
    std::string describe() const;

private:
    FieldDescriptor() = default;
    FieldKind kind_ = FieldKind::Rational;
    unsigned n_ = 0;                      // cyclotomic index
    unsigned p_ = 0;                      // characteristic
    unsigned degree_ = 1;
    std::vector<BigRat> cyclo_modulus_;   // Phi_N, monic, low-to-high
    std::vector<unsigned> modulus_;       // finite-field modulus, low-to-high
    std::string key_;
};

class Scalar {
public:
    Scalar();  // rational zero

    static Scalar zero(const FieldPtr& f);
    static Scalar one(const FieldPtr& f);
    static Scalar from_int(const FieldPtr& f, long v);
    static Scalar from_rat(const FieldPtr& f, const BigRat& v);
    /// zeta_N in Q(zeta_N); x in F_p[x]/(modulus). Errors for Q and prime fields of degree 1 use from_int instead.
    static Scalar gen(const FieldPtr& f);
    static Scalar from_cyclo_coeffs(const FieldPtr& f, std::vector<BigRat> c);
    static Scalar from_ff_coeffs(const FieldPtr& f, std::vector<unsigned> c);

    const FieldPtr& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;
    Scalar pow(long e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    /// Total order used for deterministic pivoting and "lexicographically least" choices.
    bool lex_less(const Scalar& o) const;

    const BigRat& rat() const { return rat_; }
    const std::vector<BigRat>& cyclo_coeffs() const { return cy_; }
    const std::vector<unsigned>& ff_coeffs() const { return ff_; }

    std::string str() const;
    std::string key() const;

private:
    friend class ScalarOps;
    FieldPtr field_;
    BigRat rat_;
    std::vector<BigRat> cy_;    // length deg Phi_N
    std::vector<unsigned> ff_;  // length m
    void check_same_field(const Scalar& o) const;
};

bool is_root_of_unity(const Scalar& a);
/// Least r >= 1 with a^r = 1. Errors on 0 and on characteristic-0 elements of infinite order.
unsigned long mult_order(const Scalar& a);

/// A generator of the (cyclic) group of roots of unity of k, of order root_capacity.
Scalar primitive_root_of_unity(const FieldPtr& f);

/// zeta_order^power inside f; requires order | root_capacity(f).
Scalar root_of_unity(const FieldPtr& f, unsigned long order, long power);

/// Canonical field embedding: identity, Q -> anything, Q(zeta_N) -> Q(zeta_L) for N | L,
/// or finite base -> finite extension via the lexicographically least root of the base modulus.
class FieldEmbedding {
public:
    static FieldEmbedding identity(const FieldPtr& f);
    static FieldEmbedding make(const FieldPtr& from, const FieldPtr& to);
    Scalar operator()(const Scalar& a) const;
    const FieldPtr& from() const { return from_; }
    const FieldPtr& to() const { return to_; }

private:
    FieldEmbedding() = default;
    FieldPtr from_, to_;
    Scalar gen_image_;  // image of the generator of `from`
    bool trivial_ = true;
};

/// If a lies in the prime subfield / in Q (degree-0 representative), convert; else error.
Scalar to_rational_scalar(const Scalar& a);
/// Embed a rational scalar value into f.
Scalar rational_to(const FieldPtr& f, const BigRat& v);

/// Canonical extension F_{p^{m d}} of a finite base field, with embedding.
/// The extension modulus is the lexicographically least monic irreducible of its degree over F_p.
struct ExtensionField {
    FieldPtr ext;
    FieldEmbedding embed;  // base -> ext
};
ExtensionField canonical_extension(const FieldPtr& base, unsigned d);

/// Fixed multiplicative generator of a finite field: the generator of F_q^* whose
/// coefficient vector is lexicographically least. Deterministic and cached.
class BrauerEmbedding {
public:
    explicit BrauerEmbedding(FieldPtr finite_field);
    const FieldPtr& ext() const { return ext_; }
    const Scalar& generator() const { return gamma_; }
    unsigned long M() const { return m_; }  // q - 1
    /// e with gamma^e = a; a != 0.
    unsigned long discrete_log(const Scalar& a) const;
    /// order of a and the reduced root-of-unity data: a = zeta_r^u with r = order, gcd(u, r) = 1.
    std::pair<unsigned long, unsigned long> root_data(const Scalar& a) const;

private:
    FieldPtr ext_;
    Scalar gamma_;
    unsigned long m_ = 0;
    std::map<std::string, unsigned long> dlog_;
};

/// Brauer lift of a p-regular finite-field element: gamma^e maps to zeta_M^e,
/// returned in reduced form as an element of Q(zeta_{order(a)}).
Scalar brauer_lift(const Scalar& a, const BrauerEmbedding& emb);

/// Same lift expressed inside Q(zeta_target); requires order(a) | target.
Scalar brauer_lift_into(const Scalar& a, const BrauerEmbedding& emb, const FieldPtr& cyclo_target);

}  // namespace ginv
