#include "blockforest/weight_poly.hpp"

#include <sstream>

namespace blockforest {

namespace {

void trim(WeightPoly::Key& key) {
    while (!key.empty() && key.back() == 0) key.pop_back();
}

} // namespace

WeightPoly::WeightPoly(int constant) {
    if (constant != 0) terms_[{}] = rat(constant);
}

WeightPoly::WeightPoly(const Rat& constant) {
    if (constant != 0) terms_[{}] = constant;
}

WeightPoly WeightPoly::marker(int index, int exponent) {
    if (index < 2) throw domain_error("marker index must be >= 2");
    WeightPoly p;
    if (exponent < 0) throw domain_error("marker exponent must be >= 0");
    if (exponent == 0) return WeightPoly(1);
    Key key(static_cast<size_t>(index - 1), 0);
    key[static_cast<size_t>(index - 2)] = exponent;
    p.terms_[key] = rat(1);
    return p;
}

bool WeightPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rat WeightPoly::constant_value() const {
    if (terms_.empty()) return rat(0);
    if (!is_constant()) throw domain_error("weight polynomial is not constant: " + str());
    return terms_.begin()->second;
}

Rat WeightPoly::coefficient(const Key& key) const {
    Key k = key;
    trim(k);
    auto it = terms_.find(k);
    return it == terms_.end() ? rat(0) : it->second;
}

void WeightPoly::add_term(const Key& key, const Rat& coeff) {
    if (coeff == 0) return;
    Key k = key;
    trim(k);
    auto [it, inserted] = terms_.emplace(std::move(k), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

WeightPoly& WeightPoly::operator+=(const WeightPoly& other) {
    for (const auto& [key, coeff] : other.terms_) add_term(key, coeff);
    return *this;
}

WeightPoly& WeightPoly::operator-=(const WeightPoly& other) {
    for (const auto& [key, coeff] : other.terms_) add_term(key, -coeff);
    return *this;
}

WeightPoly WeightPoly::operator-() const {
    WeightPoly r;
    for (const auto& [key, coeff] : terms_) r.terms_[key] = -coeff;
    return r;
}

WeightPoly operator+(const WeightPoly& a, const WeightPoly& b) {
    WeightPoly r = a;
    r += b;
    return r;
}

WeightPoly operator-(const WeightPoly& a, const WeightPoly& b) {
    WeightPoly r = a;
    r -= b;
    return r;
}

WeightPoly operator*(const WeightPoly& a, const WeightPoly& b) {
    WeightPoly r;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            WeightPoly::Key key(std::max(ka.size(), kb.size()), 0);
            for (size_t i = 0; i < ka.size(); ++i) key[i] += ka[i];
            for (size_t i = 0; i < kb.size(); ++i) key[i] += kb[i];
            r.add_term(key, ca * cb);
        }
    }
    return r;
}

WeightPoly scale(const WeightPoly& p, const Rat& s) {
    WeightPoly r;
    if (s == 0) return r;
    for (const auto& [key, coeff] : p.terms_) r.terms_[key] = coeff * s;
    return r;
}

WeightPoly WeightPoly::markers_pow(int k) const {
    if (k < 1) throw domain_error("marker power must be >= 1");
    if (k == 1) return *this;
    WeightPoly r;
    for (const auto& [key, coeff] : terms_) {
        Key scaled = key;
        for (int& e : scaled) e *= k;
        r.terms_[scaled] = coeff;
    }
    return r;
}

Rat WeightPoly::eval_ones() const {
    Rat sum = rat(0);
    for (const auto& [key, coeff] : terms_) sum += coeff;
    return sum;
}

int WeightPoly::max_marker() const {
    int m = 0;
    for (const auto& [key, coeff] : terms_)
        if (!key.empty()) m = std::max(m, static_cast<int>(key.size()) + 1);
    return m;
}

std::string WeightPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, coeff] : terms_) {
        Rat c = coeff;
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        std::string monomial;
        for (size_t i = 0; i < key.size(); ++i) {
            if (key[i] == 0) continue;
            if (!monomial.empty()) monomial += "*";
            monomial += "y" + std::to_string(i + 2);
            if (key[i] > 1) monomial += "^" + std::to_string(key[i]);
        }
        if (monomial.empty()) {
            out << c.get_str();
        } else if (c == 1) {
            out << monomial;
        } else {
            out << c.get_str() << "*" << monomial;
        }
    }
    return out.str();
}

} // namespace blockforest
