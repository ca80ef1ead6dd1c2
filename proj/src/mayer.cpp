#include "blockforest/mayer.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace blockforest {

Int spanning_tree_count(const LabeledGraph& g) {
    if (g.n < 1) throw domain_error("spanning trees: graph must have vertices");
    if (g.n == 1) return 1;
    const int m = g.n - 1;
    std::vector<std::vector<Int>> a(m, std::vector<Int>(m, 0));
    for (int i = 0; i < m; ++i) {
        a[i][i] = g.degree(i);
        for (int j = 0; j < m; ++j)
            if (j != i && g.has_edge(i, j)) a[i][j] = -1;
    }
    // Bareiss fraction-free elimination; divisions are exact.
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < m; ++k) {
        if (a[k][k] == 0) {
            int pivot = -1;
            for (int r = k + 1; r < m; ++r)
                if (a[r][k] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot == -1) return 0;
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < m; ++i)
            for (int j = k + 1; j < m; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    Int det = a[m - 1][m - 1];
    if (sign < 0) det = -det;
    if (det < 0)
        throw internal_consistency_error("negative determinant for a Laplacian minor");
    return det;
}

GaussianWeight GaussianWeight::of_connected(const LabeledGraph& g) {
    if (!is_connected(g)) throw domain_error("weight is defined on connected graphs");
    GaussianWeight w;
    w.sign = g.edge_count() % 2 == 0 ? 1 : -1;
    w.volume_power = g.n - 1;
    w.complexity = spanning_tree_count(g);
    return w;
}

// ---- ClusterValue ------------------------------------------------------------

ClusterValue::ClusterValue(int constant) {
    if (constant != 0) terms_[{Int(1), 0}] = rat(constant);
}

ClusterValue ClusterValue::term(Int gamma, int u_power, Rat coeff) {
    if (gamma < 1) throw domain_error("cluster term needs complexity >= 1");
    ClusterValue v;
    if (coeff != 0) v.terms_[{std::move(gamma), u_power}] = std::move(coeff);
    return v;
}

void ClusterValue::add_term(const Key& key, const Rat& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

ClusterValue& ClusterValue::operator+=(const ClusterValue& other) {
    for (const auto& [key, coeff] : other.terms_) add_term(key, coeff);
    return *this;
}

ClusterValue ClusterValue::operator-() const {
    ClusterValue v;
    for (const auto& [key, coeff] : terms_) v.terms_[key] = -coeff;
    return v;
}

ClusterValue operator+(const ClusterValue& a, const ClusterValue& b) {
    ClusterValue r = a;
    r += b;
    return r;
}

ClusterValue operator-(const ClusterValue& a, const ClusterValue& b) {
    ClusterValue r = a;
    r += -b;
    return r;
}

ClusterValue operator*(const ClusterValue& a, const ClusterValue& b) {
    ClusterValue r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            r.add_term({ka.first * kb.first, ka.second + kb.second}, ca * cb);
    return r;
}

ClusterValue scale(const ClusterValue& v, const Rat& s) {
    ClusterValue r;
    if (s == 0) return r;
    for (const auto& [key, coeff] : v.terms_) r.terms_[key] = coeff * s;
    return r;
}

std::string ClusterValue::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, coeff] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << coeff.get_str();
        if (key.second != 0) out << "*u^" << key.second;
        if (key.first != 1) out << "*" << key.first.get_str() << "^(-3/2)";
    }
    return out.str();
}

ClusterValue ClusterSum::value() const {
    ClusterValue v;
    for (const auto& [gamma, coeff] : by_gamma)
        v += ClusterValue::term(gamma, n - 1, coeff);
    return v;
}

// ---- graph sweeps ------------------------------------------------------------

ClusterSum two_connected_weight_sum(int n, int oracle_limit) {
    if (n < 2) throw domain_error("2-connected sums start at n = 2");
    ClusterSum sum;
    sum.n = n;
    enumerate_graphs(n, oracle_limit, [&](const LabeledGraph& g) {
        if (!is_connected(g)) return;
        if (!block_decompose(g).cutpoints.empty()) return;
        GaussianWeight w = GaussianWeight::of_connected(g);
        sum.by_gamma[w.complexity] += rat(w.sign);
        if (sum.by_gamma[w.complexity] == 0) sum.by_gamma.erase(w.complexity);
    });
    return sum;
}

ClusterSum connected_weight_sum(int n, int oracle_limit) {
    ClusterSum sum;
    sum.n = n;
    enumerate_graphs(n, oracle_limit, [&](const LabeledGraph& g) {
        if (!is_connected(g)) return;
        GaussianWeight w = GaussianWeight::of_connected(g);
        sum.by_gamma[w.complexity] += rat(w.sign);
        if (sum.by_gamma[w.complexity] == 0) sum.by_gamma.erase(w.complexity);
    });
    return sum;
}

ClusterValue all_graphs_weight_sum(int n, int oracle_limit) {
    ClusterValue total;
    enumerate_graphs(n, oracle_limit, [&](const LabeledGraph& g) {
        // Components: weight multiplies, so complexity is the product of
        // component complexities (spanning forests) and the u power is
        // n - #components.
        std::vector<int> comp(g.n, -1);
        int comps = 0;
        for (int v = 0; v < g.n; ++v) {
            if (comp[v] != -1) continue;
            uint16_t seen = static_cast<uint16_t>(1u << v);
            uint16_t frontier = seen;
            while (frontier) {
                uint16_t next = 0;
                for (int u = 0; u < g.n; ++u)
                    if ((frontier >> u) & 1u) next |= g.adj[u];
                frontier = next & static_cast<uint16_t>(~seen);
                seen |= next;
            }
            for (int u = 0; u < g.n; ++u)
                if ((seen >> u) & 1u) comp[u] = comps;
            ++comps;
        }
        Int forest_complexity = 1;
        for (int c = 0; c < comps; ++c) {
            std::vector<int> verts;
            for (int v = 0; v < g.n; ++v)
                if (comp[v] == c) verts.push_back(v);
            LabeledGraph sub(static_cast<int>(verts.size()));
            for (size_t i = 0; i < verts.size(); ++i)
                for (size_t j = i + 1; j < verts.size(); ++j)
                    if (g.has_edge(verts[i], verts[j]))
                        sub.add_edge(static_cast<int>(i), static_cast<int>(j));
            forest_complexity *= spanning_tree_count(sub);
        }
        const int sign = g.edge_count() % 2 == 0 ? 1 : -1;
        total += ClusterValue::term(forest_complexity, n - comps, rat(sign));
    });
    return total;
}

// ---- numeric evaluation --------------------------------------------------------

mp_bitcnt_t bits_for_digits(int digits) {
    if (digits < 1 || digits > 10000) throw domain_error("precision digits must be in 1..10000");
    return static_cast<mp_bitcnt_t>(digits * 3.3219280948873626) + 64;
}

namespace {

Rat parse_decimal_to_rat(const std::string& text) {
    if (text.empty()) throw parse_error("empty number");
    size_t pos = 0;
    std::string digits;
    long frac_digits = 0;
    bool seen_dot = false, seen_digit = false;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c == '.') {
            if (seen_dot) throw parse_error("two decimal points in " + text);
            seen_dot = true;
        } else if (c >= '0' && c <= '9') {
            digits += c;
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        } else {
            throw parse_error("unexpected character '" + std::string(1, c) + "' in number " + text);
        }
    }
    if (!seen_digit) throw parse_error("no digits in " + text);
    Int num(digits, 10);
    Int den = pow_int(Int(10), static_cast<unsigned long>(frac_digits));
    return rat(num, den);
}

mpf_class rat_to_mpf(const Rat& q, mp_bitcnt_t prec) {
    mpf_class num(q.get_num(), prec);
    mpf_class den(q.get_den(), prec);
    mpf_class r(0, prec);
    r = num / den;
    return r;
}

// atan(1/x) as an exact rational partial sum with error below 10^-budget.
Rat atan_inverse(long x, int budget_digits) {
    Rat sum = rat(0);
    Int x_pow(x);
    Int limit = pow_int(Int(10), static_cast<unsigned long>(budget_digits));
    const Int x2 = Int(x) * Int(x);
    long k = 0;
    while (true) {
        Rat term = rat(Int(1), Int(2 * k + 1) * x_pow);
        if (k % 2) sum -= term;
        else sum += term;
        x_pow *= x2;
        ++k;
        if (Int(2 * k + 1) * x_pow > limit) break;
    }
    return sum;
}

} // namespace

mpf_class compute_pi(mp_bitcnt_t prec) {
    const int budget = static_cast<int>(prec / 3.32) + 10;
    Rat pi_rat = rat(16) * atan_inverse(5, budget) - rat(4) * atan_inverse(239, budget);
    return rat_to_mpf(pi_rat, prec + 16);
}

Alpha Alpha::parse(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw parse_error("empty alpha");
    Alpha a;
    if (t.size() >= 2 && t.substr(t.size() - 2) == "pi") {
        a.pi_multiple = true;
        std::string head = t.substr(0, t.size() - 2);
        a.multiple = head.empty() ? rat(1) : parse_decimal_to_rat(head);
        if (a.multiple <= 0) throw parse_error("alpha must be positive");
        return a;
    }
    a.pi_multiple = false;
    a.decimal = t;
    if (parse_decimal_to_rat(t) <= 0) throw parse_error("alpha must be positive");
    return a;
}

std::string Alpha::str() const {
    if (!pi_multiple) return decimal;
    if (multiple == 1) return "pi";
    return multiple.get_str() + "*pi";
}

mpf_class u_from_alpha(const Alpha& alpha, mp_bitcnt_t prec) {
    mpf_class ratio(0, prec + 16);
    if (alpha.pi_multiple) {
        // pi/alpha is exactly 1/multiple.
        ratio = rat_to_mpf(rat(1) / alpha.multiple, prec + 16);
    } else {
        ratio = compute_pi(prec + 16) / rat_to_mpf(parse_decimal_to_rat(alpha.decimal), prec + 16);
    }
    mpf_class root(0, prec + 16);
    root = sqrt(ratio);
    mpf_class u(0, prec + 16);
    u = ratio * root; // (pi/alpha)^(3/2)
    return u;
}

Evaluation eval_cluster(const ClusterValue& v, const mpf_class& u, mp_bitcnt_t prec) {
    mpf_class value(0, prec);
    mpf_class abs_sum(0, prec);
    for (const auto& [key, coeff] : v.terms()) {
        const auto& [gamma, upow] = key;
        if (upow < 0) throw domain_error("negative u power");
        mpf_class g(gamma, prec);
        mpf_class root(0, prec);
        root = sqrt(g);
        mpf_class upart(0, prec);
        mpf_pow_ui(upart.get_mpf_t(), u.get_mpf_t(), static_cast<unsigned long>(upow));
        mpf_class term(0, prec);
        term = rat_to_mpf(coeff, prec) * upart / (g * root);
        value += term;
        abs_sum += abs(term);
    }
    // Each term costs a handful of correctly-rounded mpf operations.
    mpf_class bound(0, prec);
    const long terms = static_cast<long>(v.terms().size());
    if (terms > 0) {
        bound = abs_sum * (terms * 8);
        mpf_div_2exp(bound.get_mpf_t(), bound.get_mpf_t(), prec - 4);
    }
    return {value, bound};
}

std::string to_decimal_string(const mpf_class& x, int digits) {
    if (sgn(x) == 0) return "0";
    mp_exp_t exp;
    std::string mant = x.get_str(exp, 10, static_cast<size_t>(digits));
    bool neg = !mant.empty() && mant[0] == '-';
    if (neg) mant = mant.substr(1);
    while (mant.size() > 1 && mant.back() == '0') mant.pop_back();
    std::string out;
    if (exp < -4 || exp > digits + 8) {
        out = mant.substr(0, 1);
        if (mant.size() > 1) out += "." + mant.substr(1);
        out += "e" + std::to_string(exp - 1);
    } else if (exp <= 0) {
        out = "0." + std::string(static_cast<size_t>(-exp), '0') + mant;
    } else if (static_cast<size_t>(exp) >= mant.size()) {
        out = mant + std::string(static_cast<size_t>(exp) - mant.size(), '0');
    } else {
        out = mant.substr(0, static_cast<size_t>(exp)) + "." + mant.substr(static_cast<size_t>(exp));
    }
    return neg ? "-" + out : out;
}

Evaluation virial_coefficient(int n, const Alpha& alpha, int digits, int oracle_limit) {
    if (n < 2) throw domain_error("virial coefficients start at n = 2");
    const mp_bitcnt_t prec = bits_for_digits(digits);
    ClusterValue beta = two_connected_weight_sum(n, oracle_limit).value();
    ClusterValue coefficient = scale(beta, -rat(n - 1) / Rat(factorial(n)));
    return eval_cluster(coefficient, u_from_alpha(alpha, prec), prec);
}

// ---- dual-route verification ----------------------------------------------------

bool DualRouteReport::agree(double tolerance) const {
    auto ok = [&](const std::string& s) {
        mpf_class v(s, 128);
        return v <= mpf_class(tolerance, 128);
    };
    return ok(max_residual_fixed_point) && ok(max_residual_virial);
}

DualRouteReport verify_density_fixed_point(int order, int digits, int oracle_limit) {
    if (order < 1) throw domain_error("verification order must be >= 1");
    const mp_bitcnt_t prec = bits_for_digits(digits);

    Series<ClusterValue> log_pressure(order); // Gamma_w(z), graphs by vertex count
    for (int n = 1; n <= order; ++n)
        log_pressure.set(n, scale(connected_weight_sum(n, oracle_limit).value(),
                                  Rat(1) / Rat(factorial(n))));
    Series<ClusterValue> density = x_derivative(log_pressure); // rho(z)

    std::vector<ClusterValue> beta(static_cast<size_t>(order) + 1);
    for (int n = 2; n <= order; ++n)
        beta[static_cast<size_t>(n)] = two_connected_weight_sum(n, oracle_limit).value();
    Series<ClusterValue> bprime(order);
    for (int m = 1; m + 1 <= order; ++m)
        bprime.set(m, scale(beta[static_cast<size_t>(m) + 1], Rat(1) / Rat(factorial(m))));

    Series<ClusterValue> rhs =
        Series<ClusterValue>::identity(order) * exp(compose(bprime, density));

    DualRouteReport report;
    report.order = order;
    report.digits = digits;
    report.fixed_point_exact = density == rhs;

    const mpf_class one(1, prec);
    mpf_class max_fp(0, prec);
    for (int n = 0; n <= order; ++n) {
        Evaluation e = eval_cluster(density[n] - rhs[n], one, prec);
        mpf_class r = abs(e.value);
        if (r > max_fp) max_fp = r;
    }
    report.max_residual_fixed_point = to_decimal_string(max_fp, digits);

    // Virial route A: rho - sum (n-1) beta_n rho^n/n!; route B: re-expand
    // Gamma_w(z) in powers of rho by series reversion.
    Series<ClusterValue> route_a(order);
    route_a.set(1, ClusterValue(1));
    for (int n = 2; n <= order; ++n)
        route_a.set(n, scale(beta[static_cast<size_t>(n)], -Rat(n - 1) / Rat(factorial(n))));
    Series<ClusterValue> route_b = compose(log_pressure, revert(density));
    report.virial_exact = route_a == route_b;

    mpf_class max_virial(0, prec);
    for (int n = 0; n <= order; ++n) {
        Evaluation e = eval_cluster(route_a[n] - route_b[n], one, prec);
        mpf_class r = abs(e.value);
        if (r > max_virial) max_virial = r;
    }
    report.max_residual_virial = to_decimal_string(max_virial, digits);
    return report;
}

BlockMultReport block_multiplicativity_check(int n, int oracle_limit) {
    BlockMultReport report;
    report.n = n;
    enumerate_graphs(n, oracle_limit, [&](const LabeledGraph& g) {
        if (!is_connected(g)) return;
        ++report.graphs_checked;
        BlockDecomposition dec = block_decompose(g);
        Int complexity_product = 1;
        int edge_sum = 0;
        int upow_sum = 0;
        for (const Block& b : dec.blocks) {
            LabeledGraph sub(b.size());
            for (size_t i = 0; i < b.vertices.size(); ++i)
                for (size_t j = i + 1; j < b.vertices.size(); ++j)
                    if (g.has_edge(b.vertices[i], b.vertices[j]))
                        sub.add_edge(static_cast<int>(i), static_cast<int>(j));
            complexity_product *= spanning_tree_count(sub);
            edge_sum += static_cast<int>(b.edges.size());
            upow_sum += b.size() - 1;
        }
        const bool ok = complexity_product == spanning_tree_count(g) &&
                        edge_sum == g.edge_count() && upow_sum == g.n - 1;
        if (!ok && report.all_exact) {
            report.all_exact = false;
            std::ostringstream msg;
            msg << "block multiplicativity fails on a graph with " << g.edge_count()
                << " edges on " << g.n << " vertices";
            report.first_failure = msg.str();
        }
    });
    return report;
}

} // namespace blockforest
