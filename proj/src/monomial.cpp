#include "vnum/monomial.hpp"

#include "vnum/errors.hpp"

#include <algorithm>
#include <set>

namespace vnum {

Monomial::Monomial(std::vector<BigInt> exps) : exps_(std::move(exps)) {
    for (const auto& e : exps_) {
        if (e.sign() < 0) throw validation_error("negative exponent in monomial");
    }
}

Monomial Monomial::unit(int num_vars) {
    return Monomial(std::vector<BigInt>(static_cast<std::size_t>(num_vars)));
}

Monomial Monomial::variable(int num_vars, int var) {
    if (var < 1 || var > num_vars) throw validation_error("variable index out of range");
    std::vector<BigInt> e(static_cast<std::size_t>(num_vars));
    e[static_cast<std::size_t>(var - 1)] = 1;
    return Monomial(std::move(e));
}

Monomial Monomial::from_ints(const std::vector<long long>& exps) {
    std::vector<BigInt> e;
    e.reserve(exps.size());
    for (long long v : exps) e.emplace_back(v);
    return Monomial(std::move(e));
}

const BigInt& Monomial::exp(int var) const {
    return exps_.at(static_cast<std::size_t>(var - 1));
}

BigInt Monomial::degree() const {
    BigInt d;
    for (const auto& e : exps_) d += e;
    return d;
}

bool Monomial::is_unit() const {
    return std::all_of(exps_.begin(), exps_.end(), [](const BigInt& e) { return e.is_zero(); });
}

bool Monomial::is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(),
                       [](const BigInt& e) { return e <= BigInt(1); });
}

bool Monomial::is_pure_power() const {
    int positive = 0;
    for (const auto& e : exps_)
        if (!e.is_zero()) ++positive;
    return positive == 1;
}

std::vector<int> Monomial::support() const {
    std::vector<int> s;
    for (int i = 0; i < num_vars(); ++i)
        if (!exps_[static_cast<std::size_t>(i)].is_zero()) s.push_back(i + 1);
    return s;
}

void Monomial::check_same_ring(const Monomial& o) const {
    if (num_vars() != o.num_vars())
        throw dimension_mismatch("monomials live in different ambient rings");
}

bool Monomial::divides(const Monomial& m) const {
    check_same_ring(m);
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > m.exps_[i]) return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& m) const {
    check_same_ring(m);
    std::vector<BigInt> e(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        e[i] = std::max(exps_[i], m.exps_[i]);
    return Monomial(std::move(e));
}

Monomial Monomial::gcd(const Monomial& m) const {
    check_same_ring(m);
    std::vector<BigInt> e(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        e[i] = std::min(exps_[i], m.exps_[i]);
    return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& m) const {
    check_same_ring(m);
    std::vector<BigInt> e(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) e[i] = exps_[i] + m.exps_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::colon(const Monomial& m) const {
    check_same_ring(m);
    std::vector<BigInt> e(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > m.exps_[i]) e[i] = exps_[i] - m.exps_[i];
    }
    return Monomial(std::move(e));
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
    std::size_t n = std::min(exps_.size(), o.exps_.size());
    for (std::size_t i = 0; i < n; ++i) {
        auto c = exps_[i] <=> o.exps_[i];
        if (c != std::strong_ordering::equal) return c;
    }
    return exps_.size() <=> o.exps_.size();
}

std::string Monomial::to_string() const {
    std::string out;
    for (int i = 1; i <= num_vars(); ++i) {
        const BigInt& e = exp(i);
        if (e.is_zero()) continue;
        if (!out.empty()) out += "*";
        out += "t" + std::to_string(i);
        if (e != BigInt(1)) out += "^" + e.to_string();
    }
    return out.empty() ? "1" : out;
}

PrimeSupport PrimeSupport::of(std::vector<int> vars) {
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return PrimeSupport{std::move(vars)};
}

bool PrimeSupport::contains(const PrimeSupport& other) const {
    return std::includes(vars.begin(), vars.end(), other.vars.begin(), other.vars.end());
}

std::string PrimeSupport::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (i) out += ",";
        out += "t" + std::to_string(vars[i]);
    }
    return out + ")";
}

std::vector<Monomial> minimalize(std::vector<Monomial> monomials) {
    std::sort(monomials.begin(), monomials.end());
    monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
    for (const auto& m : monomials) {
        if (m.is_unit()) return {m};
    }
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < monomials.size() && !dominated; ++j) {
            if (i != j && monomials[j].divides(monomials[i])) dominated = true;
        }
        // Equal monomials were deduplicated, so divisibility here is strict.
        if (!dominated) out.push_back(monomials[i]);
    }
    return out;
}

MonomialIdeal::MonomialIdeal(int num_vars, std::vector<Monomial> gens)
    : num_vars_(num_vars), gens_(minimalize(std::move(gens))) {
    if (num_vars_ < 0) throw validation_error("negative variable count");
    for (const auto& g : gens_) {
        if (g.num_vars() != num_vars_)
            throw dimension_mismatch("generator does not match ambient variable count");
    }
}

MonomialIdeal MonomialIdeal::zero(int num_vars) { return MonomialIdeal(num_vars, {}); }

MonomialIdeal MonomialIdeal::unit_ideal(int num_vars) {
    return MonomialIdeal(num_vars, {Monomial::unit(num_vars)});
}

MonomialIdeal MonomialIdeal::from_ints(int num_vars,
                                       const std::vector<std::vector<long long>>& rows) {
    std::vector<Monomial> gens;
    gens.reserve(rows.size());
    for (const auto& r : rows) gens.push_back(Monomial::from_ints(r));
    return MonomialIdeal(num_vars, std::move(gens));
}

MonomialIdeal MonomialIdeal::prime(int num_vars, const PrimeSupport& p) {
    std::vector<Monomial> gens;
    for (int v : p.vars) gens.push_back(Monomial::variable(num_vars, v));
    return MonomialIdeal(num_vars, std::move(gens));
}

bool MonomialIdeal::is_unit_ideal() const {
    return gens_.size() == 1 && gens_[0].is_unit();
}

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::is_monomial_prime() const {
    if (gens_.empty()) return false;
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) {
        return g.degree() == BigInt(1);
    });
}

PrimeSupport MonomialIdeal::prime_support() const {
    if (!is_monomial_prime()) throw precondition_error("ideal is not a monomial prime");
    std::vector<int> vars;
    for (const auto& g : gens_) vars.push_back(g.support().front());
    return PrimeSupport::of(std::move(vars));
}

bool MonomialIdeal::contains(const Monomial& m) const {
    if (m.num_vars() != num_vars_)
        throw dimension_mismatch("monomial does not match the ideal's ambient ring");
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains_ideal(const MonomialIdeal& other) const {
    check_same_ring(*this, other);
    return std::all_of(other.gens_.begin(), other.gens_.end(),
                       [&](const Monomial& g) { return contains(g); });
}

std::string MonomialIdeal::to_string() const {
    if (is_zero()) return "(0)";
    std::string out = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) out += ", ";
        out += gens_[i].to_string();
    }
    return out + ")";
}

std::string MonomialIdeal::key() const {
    std::string out = std::to_string(num_vars_) + "|";
    for (const auto& g : gens_) {
        for (int i = 1; i <= num_vars_; ++i) {
            out += g.exp(i).to_string();
            out += ",";
        }
        out += ";";
    }
    return out;
}

PrimeSupport IrreducibleComponent::support() const {
    std::vector<int> vars;
    vars.reserve(pure_powers.size());
    for (const auto& [v, e] : pure_powers) vars.push_back(v);
    return PrimeSupport::of(std::move(vars));
}

MonomialIdeal IrreducibleComponent::to_ideal(int num_vars) const {
    std::vector<Monomial> gens;
    for (const auto& [v, e] : pure_powers) {
        std::vector<BigInt> exps(static_cast<std::size_t>(num_vars));
        exps[static_cast<std::size_t>(v - 1)] = e;
        gens.emplace_back(std::move(exps));
    }
    return MonomialIdeal(num_vars, std::move(gens));
}

void check_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.num_vars() != b.num_vars())
        throw dimension_mismatch("ideals live in different ambient rings");
}

} // namespace vnum
