#pragma once

#include "vnum/bigint.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace vnum {

// Monomial in K[t1..ts]: one exponent per ambient variable, 1-based indexing.
class Monomial {
public:
    explicit Monomial(std::vector<BigInt> exps);
    static Monomial unit(int num_vars);
    static Monomial variable(int num_vars, int var);
    static Monomial from_ints(const std::vector<long long>& exps);

    int num_vars() const { return static_cast<int>(exps_.size()); }
    const BigInt& exp(int var) const; // 1-based
    const std::vector<BigInt>& exponents() const { return exps_; }

    BigInt degree() const;
    bool is_unit() const;
    bool is_squarefree() const;
    bool is_pure_power() const; // exactly one variable with positive exponent
    std::vector<int> support() const;

    bool divides(const Monomial& m) const;
    Monomial lcm(const Monomial& m) const;
    Monomial gcd(const Monomial& m) const;
    Monomial operator*(const Monomial& m) const;
    // this / gcd(this, m): the generator map of the colon by a monomial.
    Monomial colon(const Monomial& m) const;

    // Lexicographic order on exponent vectors.
    std::strong_ordering operator<=>(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

    std::string to_string() const; // "t1^4*t2^4", "1" for the unit

private:
    std::vector<BigInt> exps_;
    void check_same_ring(const Monomial& o) const;
};

// Support of a monomial prime: the prime generated by {t_i : i in vars}.
struct PrimeSupport {
    std::vector<int> vars; // sorted ascending, 1-based

    static PrimeSupport of(std::vector<int> vars);
    bool contains(const PrimeSupport& other) const; // superset as sets
    int size() const { return static_cast<int>(vars.size()); }
    auto operator<=>(const PrimeSupport&) const = default;
    std::string to_string() const; // "(t1,t2)"
};

// Monomial ideal given by its minimal generating set (constructor minimalizes).
// The zero ideal has no generators; the unit ideal is generated by 1 alone.
class MonomialIdeal {
public:
    MonomialIdeal(int num_vars, std::vector<Monomial> gens);
    static MonomialIdeal zero(int num_vars);
    static MonomialIdeal unit_ideal(int num_vars);
    static MonomialIdeal from_ints(int num_vars, const std::vector<std::vector<long long>>& rows);
    static MonomialIdeal prime(int num_vars, const PrimeSupport& p);

    int num_vars() const { return num_vars_; }
    const std::vector<Monomial>& generators() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit_ideal() const;
    bool is_proper() const { return !is_unit_ideal(); }
    bool is_squarefree() const;
    // Generated by distinct single variables, i.e. a monomial prime.
    bool is_monomial_prime() const;
    PrimeSupport prime_support() const; // pre: is_monomial_prime

    bool contains(const Monomial& m) const;
    bool contains_ideal(const MonomialIdeal& other) const;

    bool operator==(const MonomialIdeal& o) const {
        return num_vars_ == o.num_vars_ && gens_ == o.gens_;
    }

    std::string to_string() const;
    std::string key() const; // compact canonical form, used for memo tables

private:
    int num_vars_;
    std::vector<Monomial> gens_;
};

// Minimal generators of the ideal generated by `monomials`: drops duplicates
// and anything divisible by another element, sorts lexicographically. A unit
// among them collapses everything to the unit ideal.
std::vector<Monomial> minimalize(std::vector<Monomial> monomials);

// Irreducible monomial ideal (t_i^{e_i} : i in support).
struct IrreducibleComponent {
    std::vector<std::pair<int, BigInt>> pure_powers; // sorted by variable

    PrimeSupport support() const;
    MonomialIdeal to_ideal(int num_vars) const;
    auto operator<=>(const IrreducibleComponent&) const = default;
};

void check_same_ring(const MonomialIdeal& a, const MonomialIdeal& b);

} // namespace vnum
