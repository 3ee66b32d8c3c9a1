#include "chern/factor_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace chern {

std::string_view kind_name(GenusKind kind) {
    switch (kind) {
        case GenusKind::ChiY: return "chi-y";
        case GenusKind::AY: return "a-y";
        case GenusKind::LY: return "l-y";
    }
    throw std::invalid_argument("unknown genus kind tag");
}

GenusKind kind_from_name(std::string_view name) {
    if (name == "chi-y") return GenusKind::ChiY;
    if (name == "a-y") return GenusKind::AY;
    if (name == "l-y") return GenusKind::LY;
    throw std::invalid_argument("unknown genus kind '" + std::string(name) + "'");
}

FactorSeries::FactorSeries(Param var, int xcap, int pcap) : var_(var), xcap_(xcap), pcap_(pcap) {
    if (xcap < 0 || pcap < 0) throw std::invalid_argument("FactorSeries: negative cap");
    a_.assign(static_cast<std::size_t>(xcap + 1) * static_cast<std::size_t>(pcap + 1), Rational(0));
}

std::size_t FactorSeries::index(int j, int k) const {
    if (j < 0 || j > xcap_ || k < 0 || k > pcap_) {
        throw std::out_of_range("FactorSeries: index outside truncation window");
    }
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(pcap_ + 1) +
           static_cast<std::size_t>(k);
}

bool FactorSeries::parameter_free() const {
    for (int j = 0; j <= xcap_; ++j) {
        for (int k = 1; k <= pcap_; ++k) {
            if (!at(j, k).is_zero()) return false;
        }
    }
    return true;
}

UniPoly FactorSeries::x_coefficient(int j) const {
    std::vector<Rational> row(static_cast<std::size_t>(pcap_) + 1);
    for (int k = 0; k <= pcap_; ++k) row[static_cast<std::size_t>(k)] = at(j, k);
    return UniPoly(var_, pcap_, std::move(row));
}

FactorSeries FactorSeries::embedded(int xcap, int pcap) const {
    FactorSeries out(var_, xcap, pcap);
    for (int j = 0; j <= std::min(xcap, xcap_); ++j) {
        for (int k = 0; k <= std::min(pcap, pcap_); ++k) out.set(j, k, at(j, k));
    }
    return out;
}

namespace {

Param merge_series_var(const FactorSeries& a, const FactorSeries& b) {
    if (a.var() == b.var()) return a.var();
    if (a.parameter_free()) return b.var();
    if (b.parameter_free()) return a.var();
    throw std::logic_error("FactorSeries: parameter tag mismatch");
}

}  // namespace

FactorSeries& FactorSeries::operator+=(const FactorSeries& o) {
    if (xcap_ != o.xcap_ || pcap_ != o.pcap_) {
        throw std::invalid_argument("FactorSeries: cap mismatch in addition");
    }
    var_ = merge_series_var(*this, o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

FactorSeries operator+(const FactorSeries& a, const FactorSeries& b) {
    FactorSeries r = a;
    r += b;
    return r;
}

FactorSeries operator*(const FactorSeries& a, const FactorSeries& b) {
    const int xc = std::min(a.xcap_, b.xcap_);
    const int pc = std::min(a.pcap_, b.pcap_);
    FactorSeries out(merge_series_var(a, b), xc, pc);
    for (int ja = 0; ja <= std::min(a.xcap_, xc); ++ja) {
        for (int ka = 0; ka <= std::min(a.pcap_, pc); ++ka) {
            const Rational& ca = a.at(ja, ka);
            if (ca.is_zero()) continue;
            for (int jb = 0; jb + ja <= xc && jb <= b.xcap_; ++jb) {
                for (int kb = 0; kb + ka <= pc && kb <= b.pcap_; ++kb) {
                    const Rational& cb = b.at(jb, kb);
                    if (cb.is_zero()) continue;
                    out.add_at(ja + jb, ka + kb, ca * cb);
                }
            }
        }
    }
    return out;
}

FactorSeries& FactorSeries::scale(const Rational& s) {
    for (auto& c : a_) c *= s;
    return *this;
}

bool operator==(const FactorSeries& a, const FactorSeries& b) {
    if (a.xcap_ != b.xcap_ || a.pcap_ != b.pcap_) return false;
    if (a.a_ != b.a_) return false;
    return a.var_ == b.var_ || a.parameter_free() || b.parameter_free();
}

FactorSeries series_todd(int xcap) {
    if (xcap < 0) throw std::invalid_argument("series_todd: negative cap");
    // g[k] = (-1)^k / (k+1)! are the coefficients of (1 - e^{-u}) / u.
    std::vector<Rational> g(static_cast<std::size_t>(xcap) + 1);
    Integer factorial(1);
    for (int k = 0; k <= xcap; ++k) {
        factorial *= (k + 1);
        g[static_cast<std::size_t>(k)] = Rational(Integer(k % 2 == 0 ? 1 : -1), factorial);
    }
    // Solve t * g = 1 term by term; g[0] = 1.
    std::vector<Rational> t(static_cast<std::size_t>(xcap) + 1);
    t[0] = Rational(1);
    for (int m = 1; m <= xcap; ++m) {
        Rational acc(0);
        for (int j = 0; j < m; ++j) {
            acc += t[static_cast<std::size_t>(j)] * g[static_cast<std::size_t>(m - j)];
        }
        t[static_cast<std::size_t>(m)] = -acc;
    }
    FactorSeries s(Param::Y, xcap, 0);
    for (int j = 0; j <= xcap; ++j) s.set(j, 0, t[static_cast<std::size_t>(j)]);
    return s;
}

FactorSeries series_exp_scaled(const Rational& scale, int xcap) {
    if (xcap < 0) throw std::invalid_argument("series_exp_scaled: negative cap");
    FactorSeries s(Param::Y, xcap, 0);
    Rational term(1);
    s.set(0, 0, term);
    for (int j = 1; j <= xcap; ++j) {
        term = term * scale / Rational(j);
        s.set(j, 0, term);
    }
    return s;
}

namespace {

// Places a single-variable series on the (xcap, pcap) window, constant in t.
FactorSeries embed_x(const FactorSeries& s, Param var, int xcap, int pcap) {
    FactorSeries out(var, xcap, pcap);
    for (int j = 0; j <= std::min(xcap, s.xcap()); ++j) out.set(j, 0, s.at(j, 0));
    return out;
}

// Substitutes u = x * t into a single-variable series: s_j lands at (j, j).
FactorSeries embed_diagonal(const FactorSeries& s, Param var, int xcap, int pcap) {
    FactorSeries out(var, xcap, pcap);
    for (int j = 0; j <= std::min({xcap, pcap, s.xcap()}); ++j) out.set(j, j, s.at(j, 0));
    return out;
}

FactorSeries series_one_plus_exp_neg(int xcap) {
    FactorSeries s = series_exp_scaled(Rational(-1), xcap);
    s.add_at(0, 0, Rational(1));
    return s;
}

}  // namespace

FactorSeries genus_factor(GenusKind kind, Param param, int xcap, int pcap) {
    if (xcap < 0 || pcap < 0) throw std::invalid_argument("genus_factor: negative cap");
    if (kind != GenusKind::ChiY && kind != GenusKind::AY && kind != GenusKind::LY) {
        throw std::invalid_argument("genus_factor: unknown kind tag");
    }
    if (param != Param::Y && param != Param::Z) {
        throw std::invalid_argument("genus_factor: unknown parameter tag");
    }
    const FactorSeries todd = series_todd(xcap);
    FactorSeries core(param, xcap, pcap);
    if (param == Param::Y) {
        // (1 + y e^{-x}) * todd(x)
        FactorSeries one_plus_y_exp(Param::Y, xcap, pcap);
        one_plus_y_exp.set(0, 0, Rational(1));
        if (pcap >= 1) {
            const FactorSeries e = series_exp_scaled(Rational(-1), xcap);
            for (int j = 0; j <= xcap; ++j) one_plus_y_exp.set(j, 1, e.at(j, 0));
        }
        core = one_plus_y_exp * embed_x(todd, Param::Y, xcap, pcap);
        switch (kind) {
            case GenusKind::ChiY:
                break;
            case GenusKind::AY:
                core = core * embed_x(series_exp_scaled(Rational(-1, 2), xcap), Param::Y, xcap, pcap);
                break;
            case GenusKind::LY:
                core = core * embed_x(series_one_plus_exp_neg(xcap), Param::Y, xcap, pcap);
                break;
        }
    } else {
        // x(1 - z) + todd(x*z)
        core = embed_diagonal(todd, Param::Z, xcap, pcap);
        if (xcap >= 1) {
            core.add_at(1, 0, Rational(1));
            if (pcap >= 1) core.add_at(1, 1, Rational(-1));
        }
        switch (kind) {
            case GenusKind::ChiY:
                break;
            case GenusKind::AY:
                core = core *
                       embed_diagonal(series_exp_scaled(Rational(-1, 2), xcap), Param::Z, xcap, pcap);
                break;
            case GenusKind::LY:
                core = core * embed_diagonal(series_one_plus_exp_neg(xcap), Param::Z, xcap, pcap);
                break;
        }
    }
    return core;
}

}  // namespace chern
