#pragma once

#include <string>
#include <vector>

#include "blockforest/rational.hpp"
#include "blockforest/weight_poly.hpp"

namespace blockforest {

// Coefficient-ring hooks for Rat; WeightPoly's live in weight_poly.hpp and
// the cluster ring's in mayer.hpp. Series<C> resolves them unqualified.
inline Rat scale(const Rat& v, const Rat& s) { return v * s; }
inline Rat markers_pow(const Rat& v, int) { return v; }
inline bool is_zero(const Rat& v) { return v == 0; }

inline constexpr int kDefaultSeriesOrder = 12;

// Truncated power series in x with coefficients in an exact ring C.
// Every operation stays within the truncation order; operations on
// mismatched orders throw rather than truncating silently.
template <typename C>
class Series {
public:
    explicit Series(int order = kDefaultSeriesOrder) {
        if (order < 1) throw domain_error("series order must be >= 1");
        coeffs_.resize(static_cast<size_t>(order) + 1);
    }

    static Series identity(int order = kDefaultSeriesOrder) {
        Series s(order);
        s.coeffs_[1] = C(1);
        return s;
    }

    static Series constant(const C& value, int order = kDefaultSeriesOrder) {
        Series s(order);
        s.coeffs_[0] = value;
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const C& operator[](int i) const { return coeffs_.at(static_cast<size_t>(i)); }
    void set(int i, C v) { coeffs_.at(static_cast<size_t>(i)) = std::move(v); }

    Series& operator+=(const Series& other) {
        check_order(other);
        for (int i = 0; i <= order(); ++i) coeffs_[i] += other.coeffs_[i];
        return *this;
    }

    Series& operator-=(const Series& other) {
        check_order(other);
        for (int i = 0; i <= order(); ++i)
            coeffs_[i] = coeffs_[i] - other.coeffs_[i];
        return *this;
    }

    bool operator==(const Series& other) const {
        return coeffs_ == other.coeffs_;
    }

    void check_order(const Series& other) const {
        if (order() != other.order())
            throw domain_error("series truncation orders differ: " +
                               std::to_string(order()) + " vs " +
                               std::to_string(other.order()));
    }

private:
    std::vector<C> coeffs_;
};

template <typename C>
Series<C> operator+(const Series<C>& a, const Series<C>& b) {
    Series<C> r = a;
    r += b;
    return r;
}

template <typename C>
Series<C> operator-(const Series<C>& a, const Series<C>& b) {
    Series<C> r = a;
    r -= b;
    return r;
}

// Cauchy product truncated at the common order.
template <typename C>
Series<C> operator*(const Series<C>& a, const Series<C>& b) {
    a.check_order(b);
    const int n = a.order();
    Series<C> r(n);
    for (int i = 0; i <= n; ++i) {
        if (is_zero(a[i])) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (is_zero(b[j])) continue;
            r.set(i + j, r[i + j] + a[i] * b[j]);
        }
    }
    return r;
}

template <typename C>
Series<C> scale_series(const Series<C>& a, const Rat& s) {
    Series<C> r(a.order());
    for (int i = 0; i <= a.order(); ++i) r.set(i, scale(a[i], s));
    return r;
}

// x d/dx: multiplies coefficient i by i.
template <typename C>
Series<C> x_derivative(const Series<C>& a) {
    Series<C> r(a.order());
    for (int i = 1; i <= a.order(); ++i) r.set(i, scale(a[i], rat(i)));
    return r;
}

// exp(a) for a with zero constant term, via f' = a'·f.
template <typename C>
Series<C> exp(const Series<C>& a) {
    if (!is_zero(a[0]))
        throw domain_error("series exp requires zero constant term");
    const int n = a.order();
    Series<C> f(n);
    f.set(0, C(1));
    for (int i = 1; i <= n; ++i) {
        C acc{};
        for (int m = 1; m <= i; ++m) {
            if (is_zero(a[m])) continue;
            acc += scale(a[m] * f[i - m], rat(m, i));
        }
        f.set(i, std::move(acc));
    }
    return f;
}

// log(f) for f with constant term 1, via g' = f'/f.
template <typename C>
Series<C> log(const Series<C>& f) {
    if (!(f[0] == C(1)))
        throw domain_error("series log requires constant term 1");
    const int n = f.order();
    Series<C> g(n);
    for (int i = 1; i <= n; ++i) {
        C acc = f[i];
        for (int m = 1; m < i; ++m) {
            if (is_zero(g[m]) || is_zero(f[i - m])) continue;
            acc = acc - scale(g[m] * f[i - m], rat(m, i));
        }
        g.set(i, std::move(acc));
    }
    return g;
}

// f(g) by Horner over truncated series; g must have zero constant term.
template <typename C>
Series<C> compose(const Series<C>& f, const Series<C>& g) {
    f.check_order(g);
    if (!is_zero(g[0]))
        throw domain_error("series composition requires zero constant term");
    const int n = f.order();
    Series<C> r = Series<C>::constant(f[n], n);
    for (int i = n - 1; i >= 0; --i) {
        r = r * g;
        r.set(0, r[0] + f[i]);
    }
    return r;
}

// a(x^k) with marker variables simultaneously raised, y_i -> y_i^k.
template <typename C>
Series<C> substitute_power(const Series<C>& a, int k) {
    if (k < 1) throw domain_error("substitution power must be >= 1");
    const int n = a.order();
    Series<C> r(n);
    for (int m = 0; m * k <= n; ++m) {
        if (is_zero(a[m])) continue;
        r.set(m * k, markers_pow(a[m], k));
    }
    return r;
}

template <typename C>
Series<C> pow_trunc(const Series<C>& a, int e) {
    if (e < 0) throw domain_error("series power must be >= 0");
    Series<C> r = Series<C>::constant(C(1), a.order());
    Series<C> base = a;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return r;
}

// Compositional inverse of f = t + ... (f_0 = 0, f_1 = 1): the unique g
// with f(g(t)) = t, solved coefficient by coefficient.
template <typename C>
Series<C> revert(const Series<C>& f) {
    if (!is_zero(f[0]) || !(f[1] == C(1)))
        throw domain_error("series reversion requires f = t + higher terms");
    const int n = f.order();
    Series<C> g = Series<C>::identity(n);
    for (int m = 2; m <= n; ++m) {
        // [t^m] sum_{k>=2} f_k g^k depends only on g_1..g_{m-1}.
        Series<C> gpow = g;
        C acc{};
        for (int k = 2; k <= m; ++k) {
            gpow = gpow * g;
            if (!is_zero(f[k])) acc += f[k] * gpow[m];
        }
        g.set(m, C{} - acc);
    }
    return g;
}

// [x^n] of the unique A with A = x·R(A), via (1/n)[t^{n-1}] R(t)^n.
// R must have a nonzero constant term and order >= n-1.
inline Rat lagrange_invert(const Series<Rat>& r, int n) {
    if (n < 1) throw domain_error("lagrange inversion needs n >= 1");
    if (is_zero(r[0]))
        throw domain_error("lagrange inversion requires nonzero constant term");
    if (n > r.order() + 1)
        throw domain_error("lagrange inversion order exceeds series truncation");
    Series<Rat> p = Series<Rat>::constant(rat(1), r.order());
    for (int i = 0; i < n; ++i) p = p * r;
    return p[n - 1] / rat(n);
}

// Fixed point of A = x·R(A) to the truncation order of R. Coefficient n
// stabilizes after n iterations (contraction in the x-adic metric); we
// iterate until two consecutive iterates agree.
inline Series<Rat> rooted_fixed_point(const Series<Rat>& r) {
    Series<Rat> a = Series<Rat>::identity(r.order());
    for (int iter = 0; iter <= r.order() + 1; ++iter) {
        Series<Rat> next = Series<Rat>::identity(r.order()) * compose(r, a);
        if (next == a) return a;
        a = next;
    }
    return a;
}

} // namespace blockforest
