#include "chern/chern_combo.hpp"

#include <algorithm>
#include <stdexcept>

#include "chern/errors.hpp"

namespace chern {

ChernCombo::ChernCombo(int weight) : weight_(weight) {
    if (weight < 0) throw std::invalid_argument("ChernCombo: negative weight");
}

void ChernCombo::add(const Partition& key, const Rational& coeff) {
    if (key.weight() != weight_) {
        throw weight_mismatch_error("ChernCombo: partition " + key.str() + " has weight " +
                                    std::to_string(key.weight()) + ", expected " +
                                    std::to_string(weight_));
    }
    if (coeff.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational ChernCombo::coeff(const Partition& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

ChernCombo& ChernCombo::operator+=(const ChernCombo& o) {
    if (weight_ != o.weight_) throw weight_mismatch_error("ChernCombo: weight mismatch");
    for (const auto& [key, coeff] : o.terms_) add(key, coeff);
    return *this;
}

ChernCombo& ChernCombo::operator-=(const ChernCombo& o) {
    if (weight_ != o.weight_) throw weight_mismatch_error("ChernCombo: weight mismatch");
    for (const auto& [key, coeff] : o.terms_) add(key, -coeff);
    return *this;
}

ChernCombo& ChernCombo::scale(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
    } else {
        for (auto& [key, coeff] : terms_) coeff *= s;
    }
    return *this;
}

namespace {

std::string monomial_str(const Partition& p) {
    std::string out;
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (!out.empty()) out += "·";
        out += "c" + std::to_string(parts[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

}  // namespace

std::string ChernCombo::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, coeff] : terms_) {
        const bool negative = coeff.sign() < 0;
        const Rational magnitude = negative ? -coeff : coeff;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        const std::string mono = monomial_str(key);
        if (mono.empty()) {
            out += magnitude.str();
        } else if (magnitude == Rational(1)) {
            out += mono;
        } else {
            out += magnitude.str() + "·" + mono;
        }
    }
    return out;
}

void add_chern_monomial(ChernCombo& combo, std::vector<int> parts, const Rational& coeff) {
    if (coeff.is_zero()) return;
    for (int p : parts) {
        if (p < 0) return;  // c_k = 0 for k < 0
    }
    parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());  // c_0 = 1
    combo.add(Partition(std::move(parts)), coeff);
}

njson combo_to_json(const ChernCombo& combo) {
    njson terms = njson::array();
    for (const auto& [key, coeff] : combo.terms()) {
        terms.push_back(njson{{"partition", key.parts()}, {"coeff", coeff.str()}});
    }
    return njson{{"weight", combo.weight()}, {"terms", std::move(terms)}};
}

ChernCombo combo_from_json(const njson& j) {
    if (!j.is_object() || !j.contains("weight") || !j.contains("terms")) {
        throw std::invalid_argument("combo_from_json: expected {weight, terms}");
    }
    ChernCombo combo(j.at("weight").get<int>());
    for (const auto& term : j.at("terms")) {
        std::vector<int> parts = term.at("partition").get<std::vector<int>>();
        const auto& coeff = term.at("coeff");
        Rational value = coeff.is_string() ? Rational::from_string(coeff.get<std::string>())
                                           : Rational(Integer(coeff.get<long>()));
        combo.add(Partition(std::move(parts)), value);
    }
    return combo;
}

}  // namespace chern
