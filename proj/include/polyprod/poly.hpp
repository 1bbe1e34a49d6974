// Exact polynomial machinery for the f-, hhat- and h-polynomials.
//
// MultilinearPoly is an integer polynomial in t_1..t_m with every exponent
// <= 1, keyed by vertex sets. Multiplication is defined only when no two
// monomials of the factors share a variable; the formulas built here never
// need t_i^2, and forbidding it prevents silent semantic drift.
//
// UniPoly is a plain dense univariate integer polynomial with trailing
// zeros stripped.
#pragma once

#include <map>
#include <span>
#include <vector>

#include "polyprod/complex.hpp"
#include "polyprod/rational.hpp"
#include "polyprod/subsets.hpp"

namespace polyprod {

class MultilinearPoly {
public:
    using TermMap = std::map<VertexSet, Int, CardLexLess>;

    explicit MultilinearPoly(int m) : m_(check_m(m)) {}

    static MultilinearPoly constant(int m, Int c) {
        MultilinearPoly p(m);
        p.add_term(0, std::move(c));
        return p;
    }

    static MultilinearPoly monomial(int m, VertexSet vars, Int c) {
        if (vars & ~full_set(m)) fail(errc::invalid_vertex, "monomial variables outside [1,", m, "]");
        MultilinearPoly p(m);
        p.add_term(vars, std::move(c));
        return p;
    }

    int variable_count() const { return m_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int coefficient(VertexSet vars) const {
        auto it = terms_.find(vars);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(VertexSet vars, Int c) {
        if (c.is_zero()) return;
        auto it = terms_.find(vars);
        if (it == terms_.end()) {
            terms_.emplace(vars, std::move(c));
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    MultilinearPoly& operator+=(const MultilinearPoly& rhs) {
        require_same_m(rhs);
        for (const auto& [vars, c] : rhs.terms_) add_term(vars, c);
        return *this;
    }

    MultilinearPoly& operator-=(const MultilinearPoly& rhs) {
        require_same_m(rhs);
        for (const auto& [vars, c] : rhs.terms_) add_term(vars, -c);
        return *this;
    }

    friend MultilinearPoly operator+(MultilinearPoly a, const MultilinearPoly& b) { return a += b; }
    friend MultilinearPoly operator-(MultilinearPoly a, const MultilinearPoly& b) { return a -= b; }

    // Product over disjoint monomial supports only; a shared variable would
    // need t_i^2 = t_i reduction, which this library deliberately rejects.
    friend MultilinearPoly operator*(const MultilinearPoly& a, const MultilinearPoly& b) {
        a.require_same_m(b);
        MultilinearPoly out(a.m_);
        for (const auto& [va, ca] : a.terms_)
            for (const auto& [vb, cb] : b.terms_) {
                if (va & vb)
                    fail(errc::overlapping_support, "monomials share variable ",
                         vertices_of(va & vb).front());
                out.add_term(va | vb, ca * cb);
            }
        return out;
    }

    friend bool operator==(const MultilinearPoly& a, const MultilinearPoly& b) {
        return a.m_ == b.m_ && a.terms_ == b.terms_;
    }

private:
    static int check_m(int m) {
        if (m < 0 || m > kMaxVertices)
            fail(errc::invalid_argument, "variable count ", m, " outside [0,", kMaxVertices, "]");
        return m;
    }

    void require_same_m(const MultilinearPoly& rhs) const {
        if (m_ != rhs.m_)
            fail(errc::dimension_mismatch, "polynomials on ", m_, " vs ", rhs.m_, " variables");
    }

    int m_;
    TermMap terms_;
};

// Re-home p onto new_m variables with every variable index shifted by
// offset. Used to put join factors on a common variable set.
inline MultilinearPoly shift_variables(const MultilinearPoly& p, int offset, int new_m) {
    MultilinearPoly out(new_m);
    for (const auto& [vars, c] : p.terms()) {
        const VertexSet shifted = vars << offset;
        if (shifted & ~full_set(new_m))
            fail(errc::invalid_vertex, "shift pushes variables outside [1,", new_m, "]");
        out.add_term(shifted, c);
    }
    return out;
}

class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { strip(); }

    static UniPoly constant(Int c) { return UniPoly({std::move(c)}); }

    // 1 - t, the workhorse factor of the h-polynomial identities.
    static UniPoly one_minus_t() { return UniPoly({Int(1), Int(-1)}); }

    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    Int coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Int(0); }

    UniPoly& operator+=(const UniPoly& rhs) {
        if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
        for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
        strip();
        return *this;
    }

    UniPoly& operator-=(const UniPoly& rhs) {
        if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
        for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
        strip();
        return *this;
    }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<Int> out(a.c_.size() + b.c_.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(out));
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

private:
    void strip() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Int> c_;
};

inline UniPoly pow(const UniPoly& base, int exponent) {
    internal_check(exponent >= 0, "UniPoly pow with negative exponent");
    UniPoly out = UniPoly::constant(1);
    for (int i = 0; i < exponent; ++i) out = out * base;
    return out;
}

// s_J: the product of the entries of s indexed by J; the empty product is 1.
template <typename T>
T monomial_product(std::span<const T> s, VertexSet J) {
    if (J & ~full_set(static_cast<int>(s.size())))
        fail(errc::invalid_vertex, "index set reaches past the tuple length ", s.size());
    T out(1);
    for (int v : vertices_of(J)) out *= s[static_cast<std::size_t>(v) - 1];
    return out;
}

template <typename T>
T monomial_product(const std::vector<T>& s, VertexSet J) {
    return monomial_product(std::span<const T>(s), J);
}

// f_L(t) = sum over J in S(L) of t_J. Coefficient 1 exactly on simplices.
inline MultilinearPoly f_polynomial(const SimplicialComplex& L) {
    MultilinearPoly f(L.vertex_count());
    for (VertexSet J : L.simplices()) f.add_term(J, 1);
    return f;
}

// hhat_L(t) = sum over J in S(L) of t_J * prod_{i not in J} (1 - t_i), the
// cleared-denominator form of (1-t)_[m] f_L(t/(1-t)). Expanding each term
// spreads J over all of its supersets M with sign (-1)^{|M|-|J|}, which is
// exactly the superset Moebius transform of the indicator of S(L).
inline MultilinearPoly hhat_polynomial(const SimplicialComplex& L) {
    const int m = L.vertex_count();
    std::vector<long long> a(std::size_t{1} << m, 0);
    for (VertexSet J : L.simplices()) a[J] = 1;
    for (int bit = 0; bit < m; ++bit)
        for (VertexSet mask = 0; mask < (VertexSet{1} << m); ++mask)
            if (mask & (VertexSet{1} << bit)) a[mask] -= a[mask ^ (VertexSet{1} << bit)];
    MultilinearPoly out(m);
    for (VertexSet mask = 0; mask < (VertexSet{1} << m); ++mask)
        if (a[mask] != 0) out.add_term(mask, a[mask]);
    return out;
}

// Constant-indeterminate specialization t_i = t: coefficient of t^k collects
// every monomial on k variables.
inline UniPoly specialize(const MultilinearPoly& p) {
    std::vector<Int> c(static_cast<std::size_t>(p.variable_count()) + 1, Int(0));
    for (const auto& [vars, coef] : p.terms()) c[static_cast<std::size_t>(set_size(vars))] += coef;
    return UniPoly(std::move(c));
}

// h_L(t) = (1-t)^d f_L(t/(1-t)) computed without any rational-function
// detour as sum_k f_k t^k (1-t)^{d-k}, f_k = #{J in S(L) : |J| = k}.
// The identity specialize(hhat_L) = (1-t)^{m-d} h_L is a mandatory
// internal cross-check, not a caller-visible option.
inline UniPoly h_polynomial(const SimplicialComplex& L) {
    const int d = L.top_degree();
    std::vector<long long> face_count(static_cast<std::size_t>(d) + 1, 0);
    for (VertexSet J : L.simplices()) ++face_count[static_cast<std::size_t>(set_size(J))];
    const UniPoly one_minus_t = UniPoly::one_minus_t();
    UniPoly h;
    for (int k = 0; k <= d; ++k) {
        if (face_count[static_cast<std::size_t>(k)] == 0) continue;
        std::vector<Int> tk(static_cast<std::size_t>(k) + 1, Int(0));
        tk.back() = face_count[static_cast<std::size_t>(k)];
        h += UniPoly(std::move(tk)) * pow(one_minus_t, d - k);
    }
    internal_check(h.degree() <= d, "h-polynomial degree exceeds d");
    internal_check(specialize(hhat_polynomial(L)) == pow(one_minus_t, L.vertex_count() - d) * h,
                   "specialized hhat disagrees with (1-t)^(m-d) h");
    return h;
}

template <typename T>
T eval(const MultilinearPoly& p, std::span<const T> point) {
    if (static_cast<int>(point.size()) != p.variable_count())
        fail(errc::dimension_mismatch, "evaluation point has ", point.size(), " coordinates, expected ",
             p.variable_count());
    T out(0);
    for (const auto& [vars, coef] : p.terms()) out += T(coef) * monomial_product(point, vars);
    return out;
}

inline Int eval_int(const MultilinearPoly& p, const std::vector<Int>& point) {
    return eval(p, std::span<const Int>(point));
}

inline Rational eval(const MultilinearPoly& p, const std::vector<Rational>& point) {
    return eval(p, std::span<const Rational>(point));
}

template <typename T>
T eval_uni(const UniPoly& p, const T& x) {
    T out(0);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) out = out * x + T(*it);
    return out;
}

inline Int eval_uni_int(const UniPoly& p, const Int& x) { return eval_uni(p, x); }

}  // namespace polyprod
