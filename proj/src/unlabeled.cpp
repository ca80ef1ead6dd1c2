#include "blockforest/unlabeled.hpp"

#include <algorithm>

namespace blockforest {

long euler_totient(long m) {
    if (m < 1) throw domain_error("totient needs m >= 1");
    long result = m;
    long x = m;
    for (long p = 2; p * p <= x; ++p) {
        if (x % p) continue;
        while (x % p == 0) x /= p;
        result -= result / p;
    }
    if (x > 1) result -= result / x;
    return result;
}

namespace {

// Generic driver for A = x exp(S(A)): start from A = x and iterate until
// two consecutive iterates agree; coefficient n is stable after n rounds.
template <typename C, typename Exponent>
Series<C> tilde_fixed_point(int order, Exponent&& exponent) {
    Series<C> a = Series<C>::identity(order);
    for (int iter = 0; iter <= order + 1; ++iter) {
        Series<C> next = Series<C>::identity(order) * exp(exponent(a));
        if (next == a) return a;
        a = next;
    }
    throw internal_consistency_error("tilde fixed point failed to stabilize");
}

Int series_coeff_int(const Rat& q) { return to_int(q); }

} // namespace

// ---- triangular cacti ------------------------------------------------------

Series<Rat> triangular_rooted_recurrence(int order) {
    // D_1 = 1; b_m from divisor sums of earlier D; D_{n+1} by convolution.
    std::vector<Rat> d(static_cast<size_t>(order) + 1, rat(0));
    std::vector<Rat> b(static_cast<size_t>(order) + 1, rat(0));
    if (order >= 1) d[1] = rat(1);
    for (int n = 1; n < order; ++n) {
        Rat bn = rat(0);
        for (int div = 2; div <= n; ++div) {
            if (n % div) continue;
            for (int j = 1; j <= div; ++j)
                if (div - j >= 1) bn += rat(j) * d[div - j] * d[j];
        }
        for (int div = 2; div <= n; div += 2)
            if (n % div == 0) bn += rat(div, 2) * d[div / 2];
        b[n] = bn;
        Rat next = rat(0);
        for (int m = 1; m <= n; ++m) next += d[n - m + 1] * b[m];
        d[n + 1] = next / rat(n);
    }
    Series<Rat> out(order);
    for (int i = 1; i <= order; ++i) {
        series_coeff_int(d[i]); // counts must be integers
        out.set(i, d[i]);
    }
    return out;
}

Series<Rat> triangular_rooted_fixed_point(int order) {
    return tilde_fixed_point<Rat>(order, [order](const Series<Rat>& a) {
        Series<Rat> s(order);
        for (int k = 1; k <= order; ++k) {
            Series<Rat> ak = substitute_power(a, k);
            Series<Rat> term = ak * ak;
            if (2 * k <= order) term += substitute_power(a, 2 * k);
            s += scale_series(term, rat(1, 2 * k));
        }
        return s;
    });
}

Series<Rat> triangular_unrooted_recurrence(const Series<Rat>& rooted) {
    const int order = rooted.order();
    Series<Rat> out(order);
    for (int n = 1; n <= order; ++n) {
        Rat value = rooted[n];
        Rat triple = rat(0);
        for (int i = 1; i <= n - 2; ++i)
            for (int j = 1; n - i - j >= 1; ++j)
                triple += rooted[i] * rooted[j] * rooted[n - i - j];
        Rat chi = (n % 3 == 0) ? rooted[n / 3] : rat(0);
        value += (chi - triple) / rat(3);
        out.set(n, value);
    }
    return out;
}

Series<Rat> triangular_unrooted_series_form(const Series<Rat>& rooted) {
    const Series<Rat> cubed = rooted * rooted * rooted;
    Series<Rat> out = rooted;
    out += scale_series(substitute_power(rooted, 3) - cubed, rat(1, 3));
    return out;
}

UnlabeledSeriesBundle triangular_cactus_series(int order) {
    Series<Rat> rooted = triangular_rooted_recurrence(order);
    Series<Rat> fixed = triangular_rooted_fixed_point(order);
    require_series_equal(rooted, fixed,
                         "triangular rooted recurrence vs functional equation");
    Series<Rat> unrooted = triangular_unrooted_recurrence(rooted);
    require_series_equal(unrooted, triangular_unrooted_series_form(rooted),
                         "triangular unrooted recurrence vs dissymmetry series");
    UnlabeledSeriesBundle bundle{rooted, unrooted, {}};
    return bundle;
}

// ---- Husimi graphs ---------------------------------------------------------

HusimiRecurrence husimi_rooted_recurrence(int order) {
    std::vector<Rat> H(static_cast<size_t>(order) + 1, rat(0));
    std::vector<Rat> phi(static_cast<size_t>(order) + 1, rat(0));
    std::vector<Rat> b(static_cast<size_t>(order) + 1, rat(0));
    if (order >= 1) {
        H[1] = rat(1);
        phi[1] = rat(1);
    }
    // sigma(m) = sum_{d|m} d H_d, reused by both inner recurrences.
    auto sigma = [&](int m) {
        Rat s = rat(0);
        for (int d = 1; d <= m; ++d)
            if (m % d == 0) s += rat(d) * H[d];
        return s;
    };
    for (int n = 1; n < order; ++n) {
        Rat bn = rat(0);
        for (int d = 1; d <= n; ++d) {
            if (n % d) continue;
            for (int h = 1; h <= d; ++h) bn += phi[h] * sigma(d - h + 1);
        }
        b[n] = bn;
        Rat hn = rat(0);
        for (int k = 1; k <= n; ++k) hn += H[n - k + 1] * b[k];
        H[n + 1] = hn / rat(n);
        Rat pn = rat(0);
        for (int m = 1; m <= n; ++m) pn += phi[n - m + 1] * sigma(m);
        phi[n + 1] = pn / rat(n);
    }
    HusimiRecurrence rec{Series<Rat>(order), Series<Rat>(order), Series<Rat>(order)};
    for (int i = 1; i <= order; ++i) {
        series_coeff_int(H[i]);
        series_coeff_int(phi[i]);
        rec.rooted.set(i, H[i]);
        rec.phi.set(i, phi[i]);
        rec.b.set(i, b[i]);
    }
    return rec;
}

Series<Rat> husimi_rooted_fixed_point(int order) {
    return tilde_fixed_point<Rat>(order, [order](const Series<Rat>& a) {
        Series<Rat> s(order);
        for (int k = 1; k <= order; ++k) {
            Series<Rat> inner(order);
            for (int m = 1; m * k <= order; ++m)
                inner += scale_series(substitute_power(a, m * k), rat(1, m));
            Series<Rat> e = exp(inner);
            e.set(0, rat(0)); // exp(...) - 1
            s += scale_series(e, rat(1, k));
        }
        return s;
    });
}

Series<Rat> husimi_phi_from_rooted(const Series<Rat>& rooted) {
    const int order = rooted.order();
    Series<Rat> inner(order);
    for (int j = 1; j <= order; ++j)
        inner += scale_series(substitute_power(rooted, j), rat(1, j));
    // phi = x exp(...); truncated to the same order.
    return Series<Rat>::identity(order) * exp(inner);
}

Series<Rat> husimi_unrooted_recurrence(const HusimiRecurrence& rec, int order) {
    if (rec.rooted.order() < order + 1)
        throw domain_error("husimi unrooted recurrence needs phi to order+1");
    Series<Rat> out(order);
    for (int n = 1; n <= order; ++n) {
        Rat value = rec.phi[n + 1];
        for (int k = 1; k <= n - 1; ++k) value -= rec.phi[k + 1] * rec.rooted[n - k];
        out.set(n, value);
    }
    return out;
}

Series<Rat> husimi_unrooted_series_form(const HusimiRecurrence& rec, int order) {
    // h = (phi/x - 1)(1 - H), with phi known one index past `order`.
    Series<Rat> shifted(order);
    shifted.set(0, rat(0));
    for (int i = 0; i <= order; ++i) {
        Rat c = rec.phi[i + 1];
        if (i == 0) c -= 1; // phi_1 = 1 cancels the subtracted 1
        shifted.set(i, c);
    }
    Series<Rat> one_minus_rooted(order);
    one_minus_rooted.set(0, rat(1));
    for (int i = 1; i <= order; ++i) one_minus_rooted.set(i, -rec.rooted[i]);
    return shifted * one_minus_rooted;
}

UnlabeledSeriesBundle husimi_series(int order) {
    // Run everything one order higher: h_n needs phi_{n+1}.
    HusimiRecurrence rec = husimi_rooted_recurrence(order + 1);
    Series<Rat> fixed = husimi_rooted_fixed_point(order + 1);
    require_series_equal(rec.rooted, fixed,
                         "husimi rooted recurrence vs functional equation");
    require_series_equal(rec.phi, husimi_phi_from_rooted(rec.rooted),
                         "husimi phi recurrence vs series definition");
    Series<Rat> unrooted = husimi_unrooted_recurrence(rec, order);
    require_series_equal(unrooted, husimi_unrooted_series_form(rec, order),
                         "husimi unrooted recurrence vs dissymmetry series");

    UnlabeledSeriesBundle bundle{Series<Rat>(order), unrooted, {}};
    for (int i = 1; i <= order; ++i) bundle.rooted.set(i, rec.rooted[i]);
    Series<Rat> phi(order), b(order);
    for (int i = 1; i <= order; ++i) {
        phi.set(i, rec.phi[i]);
        b.set(i, rec.b[i]);
    }
    bundle.auxiliaries.emplace("phi", phi);
    bundle.auxiliaries.emplace("b", b);
    return bundle;
}

// ---- oriented cacti (weighted by cycle sizes) -------------------------------

namespace {

// pows[j][a] = coefficient of x^a in rooted^j, for the prefix of rooted
// currently known. pows[0] = 1.
std::vector<std::vector<WeightPoly>> rooted_powers_table(const std::vector<WeightPoly>& o,
                                                         int order) {
    std::vector<std::vector<WeightPoly>> pows(
        static_cast<size_t>(order) + 1,
        std::vector<WeightPoly>(static_cast<size_t>(order) + 1));
    pows[0][0] = WeightPoly(1);
    for (int j = 1; j <= order; ++j)
        for (int a = j; a <= order; ++a) {
            WeightPoly acc;
            for (int i = 1; i <= a - j + 1; ++i)
                if (!o[static_cast<size_t>(i)].is_zero())
                    acc += o[static_cast<size_t>(i)] * pows[j - 1][a - i];
            pows[j][a] = std::move(acc);
        }
    return pows;
}

WeightPoly marker_power(int index, int exponent) {
    return WeightPoly::marker(index, exponent);
}

} // namespace

OrientedRecurrence oriented_rooted_recurrence(int order) {
    std::vector<WeightPoly> o(static_cast<size_t>(order) + 1);
    std::vector<WeightPoly> b(static_cast<size_t>(order) + 1);
    if (order >= 1) o[1] = WeightPoly(1);
    for (int n = 1; n < order; ++n) {
        auto pows = rooted_powers_table(o, n);
        WeightPoly bn;
        for (int d = 1; d <= n; ++d) {
            if (n % d) continue;
            const int scalek = n / d;
            for (int i = 1; i <= d; ++i) {
                if (o[static_cast<size_t>(i)].is_zero()) continue;
                const WeightPoly oi = o[static_cast<size_t>(i)].markers_pow(scalek);
                for (int j = 1; j <= d - i + 1; ++j) {
                    const WeightPoly& opow = pows[j - 1][d - i];
                    if (opow.is_zero()) continue;
                    WeightPoly term = marker_power(j + 1, scalek) * oi * opow.markers_pow(scalek);
                    bn += scale(term, rat(static_cast<long>(i) * j));
                }
            }
        }
        b[n] = bn;
        WeightPoly next;
        for (int m = 1; m <= n; ++m)
            if (!b[m].is_zero()) next += o[n - m + 1] * b[m];
        o[n + 1] = scale(next, rat(1, n));
    }
    OrientedRecurrence rec{Series<WeightPoly>(order), Series<WeightPoly>(order)};
    for (int i = 1; i <= order; ++i) {
        rec.rooted.set(i, o[i]);
        rec.b.set(i, b[i]);
    }
    return rec;
}

Series<WeightPoly> oriented_rooted_fixed_point(int order) {
    return tilde_fixed_point<WeightPoly>(order, [order](const Series<WeightPoly>& a) {
        Series<WeightPoly> s(order);
        for (int k = 1; k <= order; ++k) {
            Series<WeightPoly> inner(order);
            Series<WeightPoly> apow = Series<WeightPoly>::constant(WeightPoly(1), order);
            for (int j = 1; j * k <= order; ++j) {
                apow = apow * a; // a^j
                Series<WeightPoly> term = substitute_power(apow, k);
                term = Series<WeightPoly>::constant(marker_power(j + 1, k), order) * term;
                inner += term;
            }
            s += scale_series(inner, rat(1, k));
        }
        return s;
    });
}

Series<WeightPoly> oriented_unrooted_recurrence(const Series<WeightPoly>& rooted) {
    const int order = rooted.order();
    std::vector<WeightPoly> o(static_cast<size_t>(order) + 1);
    for (int i = 0; i <= order; ++i) o[static_cast<size_t>(i)] = rooted[i];
    auto pows = rooted_powers_table(o, order);
    Series<WeightPoly> out(order);
    for (int n = 1; n <= order; ++n) {
        WeightPoly value;
        for (int d = 1; d <= n; ++d) {
            if (n % d) continue;
            const long phi = euler_totient(d);
            for (int h = 1; h <= n / d; ++h) {
                const WeightPoly& opow = pows[h][n / d];
                if (opow.is_zero()) continue;
                WeightPoly term = opow.markers_pow(d);
                if (d * h > 1) term = marker_power(d * h, 1) * term;
                value += scale(term, rat(phi, static_cast<long>(d) * h));
            }
        }
        for (int m = 2; m <= n; ++m) {
            const WeightPoly& opow = pows[m][n];
            if (opow.is_zero()) continue;
            value -= marker_power(m, 1) * opow;
        }
        out.set(n, value);
    }
    return out;
}

Series<WeightPoly> oriented_unrooted_series_form(const Series<WeightPoly>& rooted) {
    const int order = rooted.order();
    Series<WeightPoly> out(order);
    Series<WeightPoly> apow = Series<WeightPoly>::constant(WeightPoly(1), order);
    std::vector<Series<WeightPoly>> powers{apow};
    for (int j = 1; j <= order; ++j) {
        apow = apow * rooted;
        powers.push_back(apow);
    }
    for (int d = 1; d <= order; ++d) {
        const long phi = euler_totient(d);
        for (int h = 1; d * h <= order; ++h) {
            Series<WeightPoly> term = substitute_power(powers[static_cast<size_t>(h)], d);
            if (d * h > 1)
                term = Series<WeightPoly>::constant(marker_power(d * h, 1), order) * term;
            out += scale_series(term, rat(phi, static_cast<long>(d) * h));
        }
    }
    for (int m = 2; m <= order; ++m)
        out -= Series<WeightPoly>::constant(marker_power(m, 1), order) *
               powers[static_cast<size_t>(m)];
    return out;
}

WeightedUnlabeledBundle oriented_cactus_series(int order) {
    OrientedRecurrence rec = oriented_rooted_recurrence(order);
    Series<WeightPoly> fixed = oriented_rooted_fixed_point(order);
    require_series_equal(rec.rooted, fixed,
                         "oriented rooted recurrence vs functional equation");
    Series<WeightPoly> unrooted = oriented_unrooted_recurrence(rec.rooted);
    require_series_equal(unrooted, oriented_unrooted_series_form(rec.rooted),
                         "oriented unrooted recurrence vs dissymmetry series");

    WeightedUnlabeledBundle bundle{rec.rooted, unrooted, {}, {}};
    std::vector<WeightPoly> o(static_cast<size_t>(order) + 1);
    for (int i = 0; i <= order; ++i) o[static_cast<size_t>(i)] = rec.rooted[i];
    auto pows = rooted_powers_table(o, order);
    for (int j = 0; j <= order; ++j) {
        Series<WeightPoly> pj(order);
        for (int a = 0; a <= order; ++a) pj.set(a, pows[j][a]);
        bundle.rooted_powers.push_back(std::move(pj));
    }
    bundle.auxiliaries.emplace("b", rec.b);
    return bundle;
}

} // namespace blockforest
