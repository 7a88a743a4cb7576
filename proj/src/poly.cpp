#include "bunkbed/poly.hpp"

#include <algorithm>
#include <bit>

#include "bunkbed/errors.hpp"

namespace bunkbed {

int Monomial::degree() const {
    return std::popcount(h1) + std::popcount(h2) + std::popcount(v);
}

int Monomial::exponent(VariableId w) const {
    if (w.kind == VariableId::Kind::vertex) return static_cast<int>((v >> w.index) & 1ULL);
    return static_cast<int>((h1 >> w.index) & 1ULL) + static_cast<int>((h2 >> w.index) & 1ULL);
}

bool Monomial::divides(const Monomial& m) const {
    return (h1 & ~m.h1) == 0 && (h2 & ~m.h2) == 0 && (v & ~m.v) == 0;
}

Monomial Monomial::times(const Monomial& m) const {
    if ((h2 & m.h1) || (h1 & m.h2) || (v & m.v))
        throw ValidationError("monomial product exceeds representable exponents");
    return Monomial{h1 | m.h1, (h1 & m.h1) | h2 | m.h2, v | m.v};
}

Monomial Monomial::quotient(const Monomial& d) const {
    if (!d.divides(*this)) throw ValidationError("monomial quotient requested for a non-divisor");
    // exponent 2 survives only where the divisor has exponent 0
    std::uint64_t r2 = h2 & ~d.h1;
    std::uint64_t r1 = r2 | (h1 & ~h2 & ~d.h1) | (h2 & d.h1 & ~d.h2);
    return Monomial{r1, r2, v & ~d.v};
}

Monomial Monomial::from_edge_mask(const BunkbedGraph& bb, std::uint64_t edge_mask) {
    const int e = bb.base_edge_count();
    const std::uint64_t emask = e == 0 ? 0 : (1ULL << e) - 1;
    std::uint64_t minus = edge_mask & emask;
    std::uint64_t plus = (edge_mask >> e) & emask;
    return Monomial{minus | plus, minus & plus, edge_mask >> (2 * e)};
}

bool strictly_divides(const Monomial& m1, const Monomial& m2) {
    return m1.divides(m2) && !(m1 == m2);
}

bool canonical_less(const Monomial& a, const Monomial& b) {
    if (a.v != b.v) {
        int i = std::countr_zero(a.v ^ b.v);
        return ((b.v >> i) & 1ULL) != 0; // b has the variable, a does not: a first
    }
    std::uint64_t diff = (a.h1 ^ b.h1) | (a.h2 ^ b.h2);
    if (diff) {
        int i = std::countr_zero(diff);
        int ea = static_cast<int>((a.h1 >> i) & 1ULL) + static_cast<int>((a.h2 >> i) & 1ULL);
        int eb = static_cast<int>((b.h1 >> i) & 1ULL) + static_cast<int>((b.h2 >> i) & 1ULL);
        return ea < eb;
    }
    return false;
}

Polynomial Polynomial::constant(Int c) {
    Polynomial p;
    p.add_term(Monomial{}, c);
    return p;
}

Polynomial Polynomial::term(Monomial m, Int c) {
    Polynomial p;
    p.add_term(m, c);
    return p;
}

void Polynomial::add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Int Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

int Polynomial::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool Polynomial::operator==(const Polynomial& other) const {
    if (terms_.size() != other.terms_.size()) return false;
    for (const auto& [m, c] : terms_) {
        auto it = other.terms_.find(m);
        if (it == other.terms_.end() || it->second != c) return false;
    }
    return true;
}

std::vector<std::pair<Monomial, Int>> Polynomial::canonical_terms() const {
    std::vector<std::pair<Monomial, Int>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
    return out;
}

Polynomial add(const Polynomial& p1, const Polynomial& p2) {
    Polynomial out = p1;
    for (const auto& [m, c] : p2.terms()) out.add_term(m, c);
    return out;
}

Polynomial subtract(const Polynomial& p1, const Polynomial& p2) {
    Polynomial out = p1;
    for (const auto& [m, c] : p2.terms()) out.add_term(m, -c);
    return out;
}

Polynomial negate(const Polynomial& p) {
    Polynomial out;
    for (const auto& [m, c] : p.terms()) out.add_term(m, -c);
    return out;
}

Polynomial multiply_monomial(const Polynomial& p, const Monomial& m, const Int& c) {
    Polynomial out;
    for (const auto& [pm, pc] : p.terms()) out.add_term(pm.times(m), pc * c);
    return out;
}

Monomial event_monomial(const BunkbedGraph& bb, std::span<const Cut> cuts) {
    if (cuts.empty()) throw ValidationError("event monomial of an empty cut collection is undefined");
    std::uint64_t u = 0;
    for (Cut a : cuts) u |= boundary_mask(bb, a);
    return Monomial::from_edge_mask(bb, u);
}

Rat evaluate(const Polynomial& p, const SymmetricAssignment& a) {
    const int ne = a.edge_variable_count();
    const int nv = a.vertex_variable_count();
    const std::uint64_t he = ne == 0 ? 0 : (1ULL << ne) - 1;
    const std::uint64_t vv = nv == 0 ? 0 : (1ULL << nv) - 1;
    for (const auto& [m, c] : p.terms())
        if ((m.h1 & ~he) || (m.v & ~vv))
            throw ValidationError("assignment does not cover all variables of the polynomial");
    if (p.is_zero()) return Rat(0);

    // Work over a common denominator so no per-term gcd happens: with
    // q_w = n_w / D, the value is sum_M c_M prod n^e D^(maxdeg-deg) / D^maxdeg.
    Int den(1);
    auto fold = [&den](const Rat& q) { den = boost::multiprecision::lcm(den, rat_den(q)); };
    for (const Rat& q : a.edge_values()) fold(q);
    for (const Rat& q : a.vertex_values()) fold(q);

    std::vector<Int> hn(static_cast<std::size_t>(ne)), hn2(static_cast<std::size_t>(ne));
    std::vector<Int> vn(static_cast<std::size_t>(nv));
    for (int i = 0; i < ne; ++i) {
        const Rat& q = a.edge_values()[static_cast<std::size_t>(i)];
        hn[static_cast<std::size_t>(i)] = rat_num(q) * (den / rat_den(q));
        hn2[static_cast<std::size_t>(i)] = hn[static_cast<std::size_t>(i)] * hn[static_cast<std::size_t>(i)];
    }
    for (int x = 0; x < nv; ++x) {
        const Rat& q = a.vertex_values()[static_cast<std::size_t>(x)];
        vn[static_cast<std::size_t>(x)] = rat_num(q) * (den / rat_den(q));
    }

    const int maxdeg = p.total_degree();
    std::vector<Int> dpow(static_cast<std::size_t>(maxdeg) + 1);
    dpow[0] = 1;
    for (int k = 1; k <= maxdeg; ++k) dpow[static_cast<std::size_t>(k)] = dpow[static_cast<std::size_t>(k - 1)] * den;

    Int total(0);
    for (const auto& [m, c] : p.terms()) {
        Int t = c;
        std::uint64_t ones = m.h1 & ~m.h2;
        while (ones) {
            int i = std::countr_zero(ones);
            ones &= ones - 1;
            t *= hn[static_cast<std::size_t>(i)];
        }
        std::uint64_t twos = m.h2;
        while (twos) {
            int i = std::countr_zero(twos);
            twos &= twos - 1;
            t *= hn2[static_cast<std::size_t>(i)];
        }
        std::uint64_t vs = m.v;
        while (vs) {
            int x = std::countr_zero(vs);
            vs &= vs - 1;
            t *= vn[static_cast<std::size_t>(x)];
        }
        t *= dpow[static_cast<std::size_t>(maxdeg - m.degree())];
        total += t;
    }
    return Rat(total, dpow[static_cast<std::size_t>(maxdeg)]);
}

std::string monomial_text(const Monomial& m, const BunkbedGraph& bb) {
    std::string out;
    std::uint64_t vs = m.v;
    while (vs) {
        int x = std::countr_zero(vs);
        vs &= vs - 1;
        if (!out.empty()) out += "*";
        out += bb.variable_name(VariableId{VariableId::Kind::vertex, x});
    }
    std::uint64_t hs = m.h1;
    while (hs) {
        int i = std::countr_zero(hs);
        hs &= hs - 1;
        if (!out.empty()) out += "*";
        out += bb.variable_name(VariableId{VariableId::Kind::edge, i});
        if ((m.h2 >> i) & 1ULL) out += "^2";
    }
    return out.empty() ? "1" : out;
}

std::string canonical_text(const Polynomial& p, const BunkbedGraph& bb) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : p.canonical_terms()) {
        if (!out.empty()) out += " ";
        out += (c >= 0 ? "+" : "-") + Int(boost::multiprecision::abs(c)).str();
        if (!m.is_one()) out += "*" + monomial_text(m, bb);
    }
    return out;
}

UniPoly::UniPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Int UniPoly::coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Int(0);
    return c_[static_cast<std::size_t>(k)];
}

int UniPoly::low_degree() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != 0) return static_cast<int>(k);
    return -1;
}

Rat UniPoly::operator()(const Rat& x) const {
    Rat acc(0);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
    add_shifted(other, 0, Int(1));
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
    add_shifted(other, 0, Int(-1));
    return *this;
}

void UniPoly::add_shifted(const UniPoly& other, int shift, const Int& scale) {
    if (other.c_.empty() || scale == 0) return;
    std::size_t need = other.c_.size() + static_cast<std::size_t>(shift);
    if (c_.size() < need) c_.resize(need);
    for (std::size_t k = 0; k < other.c_.size(); ++k)
        c_[k + static_cast<std::size_t>(shift)] += scale * other.c_[k];
    trim();
}

std::string UniPoly::text() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const Int& c = c_[k];
        if (c == 0) continue;
        Int mag(boost::multiprecision::abs(c));
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        bool unit = (mag == 1) && k > 0;
        if (!unit) out += mag.str();
        if (k == 1) out += "q";
        if (k > 1) out += "q^" + std::to_string(k);
    }
    return out;
}

UniPoly diagonal_restriction(const Polynomial& p) {
    std::vector<Int> c(static_cast<std::size_t>(p.total_degree()) + 1);
    for (const auto& [m, coef] : p.terms()) c[static_cast<std::size_t>(m.degree())] += coef;
    return UniPoly(std::move(c));
}

UniPoly one_minus_q_power(int k, int shift) {
    std::vector<Int> c(static_cast<std::size_t>(k + shift) + 1);
    Int binom(1);
    for (int i = 0; i <= k; ++i) {
        c[static_cast<std::size_t>(i + shift)] = (i % 2 == 0) ? binom : -binom;
        binom = binom * (k - i) / (i + 1);
    }
    return UniPoly(std::move(c));
}

} // namespace bunkbed
