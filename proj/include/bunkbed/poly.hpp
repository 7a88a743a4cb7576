#ifndef BUNKBED_POLY_HPP
#define BUNKBED_POLY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "bunkbed/bunkbed_graph.hpp"
#include "bunkbed/cuts.hpp"
#include "bunkbed/rational.hpp"

namespace bunkbed {

// Monomial in the closure variables. Every monomial in this toolkit comes
// from a set of bunkbed edges collapsed through the symmetry H(x_-y_-) =
// H(x_+y_+), so H exponents are 0, 1 or 2 and V exponents are 0 or 1. The
// exponents are stored as bitmasks: bit i of h1 means H(i) has exponent >= 1,
// bit i of h2 means exponent 2 (h2 is always a subset of h1), bit x of v
// means V(x) appears. Multiplication checks the caps and throws if exceeded.
struct Monomial {
    std::uint64_t h1 = 0;
    std::uint64_t h2 = 0;
    std::uint64_t v = 0;

    bool operator==(const Monomial&) const = default;

    bool is_one() const { return h1 == 0 && v == 0; }
    int degree() const;
    int exponent(VariableId w) const;

    // true iff this divides m componentwise
    bool divides(const Monomial& m) const;
    Monomial times(const Monomial& m) const;     // throws on exponent overflow
    Monomial quotient(const Monomial& d) const;  // requires d.divides(*this)

    // monomial of a bunkbed edge set: per variable, the number of edges in
    // the mask mapping to it
    static Monomial from_edge_mask(const BunkbedGraph& bb, std::uint64_t edge_mask);
};

bool strictly_divides(const Monomial& m1, const Monomial& m2);

// canonical variable order (V ascending, then H ascending), ascending
// exponent at the first difference; total order used for all serialization
bool canonical_less(const Monomial& a, const Monomial& b);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::uint64_t x = m.h1 * 0x9e3779b97f4a7c15ULL;
        x ^= m.h2 + 0xbf58476d1ce4e5b9ULL + (x << 6) + (x >> 2);
        x ^= m.v + 0x94d049bb133111ebULL + (x << 6) + (x >> 2);
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        return static_cast<std::size_t>(x ^ (x >> 31));
    }
};

// Sparse polynomial with arbitrary-precision integer coefficients; zero
// coefficients are never stored.
class Polynomial {
public:
    using TermMap = std::unordered_map<Monomial, Int, MonomialHash>;

    Polynomial() = default;
    static Polynomial constant(Int c);
    static Polynomial term(Monomial m, Int c);

    void add_term(const Monomial& m, const Int& c);
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Int coefficient(const Monomial& m) const;
    int total_degree() const; // 0 for the zero polynomial

    bool operator==(const Polynomial& other) const;

    // terms in canonical order, for serialization and deterministic iteration
    std::vector<std::pair<Monomial, Int>> canonical_terms() const;

private:
    TermMap terms_;
};

Polynomial add(const Polynomial& p1, const Polynomial& p2);
Polynomial subtract(const Polynomial& p1, const Polynomial& p2);
Polynomial negate(const Polynomial& p);
Polynomial multiply_monomial(const Polynomial& p, const Monomial& m, const Int& c);

// Monomial of the event that every edge of the union of the cuts' boundaries
// is closed. An H variable gets exponent 2 exactly when both horizontal
// copies of its base edge lie in the union.
Monomial event_monomial(const BunkbedGraph& bb, std::span<const Cut> cuts);

// Exact evaluation at the q-values of a symmetric assignment.
Rat evaluate(const Polynomial& p, const SymmetricAssignment& a);

// Canonical text, e.g. "+1*V(0)*V(1)*H(0,1)^2 -2*H(0,1)"; "0" when zero.
std::string canonical_text(const Polynomial& p, const BunkbedGraph& bb);
std::string monomial_text(const Monomial& m, const BunkbedGraph& bb);

// Dense univariate polynomial over the integers, coefficient of q^k at
// index k. Used for restrictions of the multivariate polynomials to a
// single uniform variable.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Int> coeffs);

    const std::vector<Int>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 when zero
    Int coefficient(int k) const;
    // lowest exponent with a nonzero coefficient; -1 when zero
    int low_degree() const;

    Rat operator()(const Rat& x) const;

    bool operator==(const UniPoly&) const = default;

    UniPoly& operator+=(const UniPoly& other);
    UniPoly& operator-=(const UniPoly& other);
    // add other shifted up by q^shift, scaled
    void add_shifted(const UniPoly& other, int shift, const Int& scale);

    std::string text() const; // "q^3 - 2q^4 + q^5", ascending degree

private:
    void trim();
    std::vector<Int> c_;
};

// restriction of p to all variables equal to one q
UniPoly diagonal_restriction(const Polynomial& p);

// (1-q)^k * q^shift, handy for frozen expected values in tests and for the
// path-graph closed form
UniPoly one_minus_q_power(int k, int shift);

} // namespace bunkbed

#endif
