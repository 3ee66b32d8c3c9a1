#include "chern/unipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace chern {

const char* param_name(Param p) { return p == Param::Y ? "y" : "z"; }

int UniPoly::check_cap(int cap) {
    if (cap < 0) throw std::invalid_argument("UniPoly: negative cap");
    return cap;
}

UniPoly::UniPoly(Param var, int cap, std::vector<Rational> coeffs)
    : var_(var), cap_(check_cap(cap)), c_(std::move(coeffs)) {
    truncate_and_trim();
}

UniPoly UniPoly::constant(const Rational& value) {
    UniPoly p;
    if (!value.is_zero()) p.c_.push_back(value);
    return p;
}

UniPoly UniPoly::monomial(Param var, int cap, int exponent, const Rational& value) {
    if (exponent < 0) throw std::invalid_argument("UniPoly: negative exponent");
    UniPoly p(var, cap);
    if (exponent <= cap && !value.is_zero()) {
        p.c_.assign(static_cast<std::size_t>(exponent) + 1, Rational(0));
        p.c_.back() = value;
    }
    return p;
}

Rational UniPoly::coeff(int k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= c_.size()) return Rational(0);
    return c_[static_cast<std::size_t>(k)];
}

void UniPoly::truncate_and_trim() {
    if (cap_ != kNoCap && c_.size() > static_cast<std::size_t>(cap_) + 1) {
        c_.resize(static_cast<std::size_t>(cap_) + 1);
    }
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Param UniPoly::merge_var(const UniPoly& a, const UniPoly& b) {
    if (a.is_constant()) return b.var_;
    if (b.is_constant()) return a.var_;
    if (a.var_ != b.var_) throw std::logic_error("UniPoly: parameter tag mismatch");
    return a.var_;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) { return *this = *this + o; }
UniPoly& UniPoly::operator-=(const UniPoly& o) { return *this = *this - o; }
UniPoly& UniPoly::operator*=(const UniPoly& o) { return *this = *this * o; }

UniPoly& UniPoly::scale(const Rational& s) {
    if (s.is_zero()) {
        c_.clear();
    } else {
        for (auto& c : c_) c *= s;
    }
    return *this;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    UniPoly r(UniPoly::merge_var(a, b), 0);
    r.cap_ = std::min(a.cap_, b.cap_);
    r.c_.assign(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.truncate_and_trim();
    return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator-(const UniPoly& a) {
    UniPoly r = a;
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly r(UniPoly::merge_var(a, b), 0);
    r.cap_ = std::min(a.cap_, b.cap_);
    if (a.is_zero() || b.is_zero()) return r;
    std::size_t len = a.c_.size() + b.c_.size() - 1;
    if (r.cap_ != UniPoly::kNoCap) len = std::min(len, static_cast<std::size_t>(r.cap_) + 1);
    r.c_.assign(len, Rational(0));
    for (std::size_t i = 0; i < a.c_.size() && i < len; ++i) {
        if (a.c_[i].is_zero()) continue;
        const std::size_t jmax = std::min(b.c_.size(), len - i);
        for (std::size_t j = 0; j < jmax; ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.truncate_and_trim();
    return r;
}

bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.c_ != b.c_) return false;
    return a.is_constant() || b.is_constant() || a.var_ == b.var_;
}

std::string UniPoly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += c_[k].str();
        if (k > 0) {
            out += "*";
            out += param_name(var_);
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace chern
