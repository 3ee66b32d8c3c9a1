#include "chern/manifolds.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "chern/errors.hpp"

namespace chern {

namespace {

void check_projective(const ProjectiveSpace& m) {
    if (m.dim < 1) throw std::invalid_argument("ProjectiveSpace: dimension must be at least 1");
}

void check_product(const ProductOfProjectiveSpaces& m) {
    if (m.dims.empty()) throw std::invalid_argument("product model needs at least one factor");
    for (int d : m.dims) {
        if (d < 1) throw std::invalid_argument("product factor dimension must be at least 1");
    }
}

}  // namespace

int complex_dimension(const ManifoldModel& m) {
    return std::visit(
        [](const auto& model) -> int {
            using T = std::decay_t<decltype(model)>;
            if constexpr (std::is_same_v<T, ProjectiveSpace>) {
                check_projective(model);
                return model.dim;
            } else if constexpr (std::is_same_v<T, ProductOfProjectiveSpaces>) {
                check_product(model);
                return std::accumulate(model.dims.begin(), model.dims.end(), 0);
            } else {
                return model.weight;
            }
        },
        m);
}

namespace {

// Multiplication in Z[g_1..g_k] / (g_f^{dims_f + 1}): sparse exponent maps,
// entries clipped against the per-factor caps.
using RingTerms = std::map<std::vector<int>, Integer>;

RingTerms ring_mul(const RingTerms& a, const RingTerms& b, const std::vector<int>& caps) {
    RingTerms out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            bool alive = true;
            for (std::size_t f = 0; f < e.size(); ++f) {
                e[f] = ea[f] + eb[f];
                if (e[f] > caps[f]) {
                    alive = false;
                    break;
                }
            }
            if (!alive) continue;
            out[e] += ca * cb;
        }
    }
    return out;
}

// Degree-i slice of prod_f (1 + g_f)^{dims_f + 1}: the i-th Chern class of
// the product, with coefficient prod_f binom(dims_f + 1, e_f).
RingTerms chern_class_slice(const std::vector<int>& dims, int i) {
    RingTerms out;
    std::vector<int> e(dims.size(), 0);
    while (true) {
        if (std::accumulate(e.begin(), e.end(), 0) == i) {
            Integer c(1);
            for (std::size_t f = 0; f < dims.size(); ++f) c *= binomial(dims[f] + 1, e[f]);
            if (c != 0) out.emplace(e, std::move(c));
        }
        // mixed-radix increment over 0..dims[f]
        std::size_t f = 0;
        while (f < e.size() && e[f] == dims[f]) {
            e[f] = 0;
            ++f;
        }
        if (f == e.size()) break;
        ++e[f];
    }
    return out;
}

std::map<Partition, Integer> product_chern_numbers(const std::vector<int>& dims) {
    const int n = std::accumulate(dims.begin(), dims.end(), 0);
    std::vector<RingTerms> classes(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) classes[static_cast<std::size_t>(i)] = chern_class_slice(dims, i);
    const std::vector<int> top(dims.begin(), dims.end());

    std::map<Partition, Integer> out;
    for (const Partition& lambda : partitions_of(n)) {
        RingTerms acc{{std::vector<int>(dims.size(), 0), Integer(1)}};
        for (int part : lambda.parts()) {
            acc = ring_mul(acc, classes[static_cast<std::size_t>(part)], dims);
        }
        auto it = acc.find(top);
        out.emplace(lambda, it == acc.end() ? Integer(0) : it->second);
    }
    return out;
}

}  // namespace

std::map<Partition, Integer> chern_numbers(const ManifoldModel& m) {
    return std::visit(
        [](const auto& model) -> std::map<Partition, Integer> {
            using T = std::decay_t<decltype(model)>;
            if constexpr (std::is_same_v<T, ProjectiveSpace>) {
                check_projective(model);
                std::map<Partition, Integer> out;
                for (const Partition& lambda : partitions_of(model.dim)) {
                    Integer value(1);
                    for (int part : lambda.parts()) value *= binomial(model.dim + 1, part);
                    out.emplace(lambda, std::move(value));
                }
                return out;
            } else if constexpr (std::is_same_v<T, ProductOfProjectiveSpaces>) {
                check_product(model);
                return product_chern_numbers(model.dims);
            } else {
                for (const auto& [key, value] : model.numbers) {
                    if (key.weight() != model.weight) {
                        throw weight_mismatch_error("RawChernData: partition " + key.str() +
                                                    " does not have weight " +
                                                    std::to_string(model.weight));
                    }
                }
                return model.numbers;
            }
        },
        m);
}

Rational evaluate(const ChernCombo& combo, const ManifoldModel& m) {
    const int n = complex_dimension(m);
    if (combo.weight() != n) {
        throw weight_mismatch_error("evaluate: combo weight " + std::to_string(combo.weight()) +
                                    " vs manifold dimension " + std::to_string(n));
    }
    const auto numbers = chern_numbers(m);
    Rational acc(0);
    for (const auto& [key, coeff] : combo.terms()) {
        auto it = numbers.find(key);
        if (it == numbers.end()) continue;
        acc += coeff * Rational(it->second);
    }
    return acc;
}

bool is_spin(const ManifoldModel& m) {
    return std::visit(
        [](const auto& model) -> bool {
            using T = std::decay_t<decltype(model)>;
            if constexpr (std::is_same_v<T, ProjectiveSpace>) {
                check_projective(model);
                return model.dim % 2 == 1;
            } else if constexpr (std::is_same_v<T, ProductOfProjectiveSpaces>) {
                check_product(model);
                return std::all_of(model.dims.begin(), model.dims.end(),
                                   [](int d) { return d % 2 == 1; });
            } else {
                throw not_decidable_error(
                    "is_spin: spin-ness is not determined by Chern numbers alone");
            }
        },
        m);
}

DivisibilityResult divisibility_check(const ManifoldModel& m) {
    const int n = complex_dimension(m);
    ChernCombo combo(n);
    add_chern_monomial(combo, {n - 1, 1}, Rational(2 * (n - 1)));
    add_chern_monomial(combo, {n - 2, 1, 1}, Rational(1));
    const Integer value = evaluate(combo, m).to_integer();
    Integer quotient, remainder;
    mpz_fdiv_qr_ui(quotient.get_mpz_t(), remainder.get_mpz_t(), value.get_mpz_t(), 8);
    const bool divisible = remainder == 0;
    return DivisibilityResult{value, divisible, divisible ? quotient : remainder};
}

std::vector<Rational> index_table(GenusKind kind, const ManifoldModel& m, int max_n) {
    const int n = complex_dimension(m);
    const GenusTable table = genus_table(kind, n, max_n);
    std::vector<Rational> out;
    out.reserve(table.rows.size());
    for (const auto& row : table.rows) out.push_back(evaluate(row, m));
    return out;
}

namespace {

int parse_positive_int(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("model spec: bad " + what + " '" + text + "'");
    }
    if (used != text.size() || value < 1) {
        throw std::invalid_argument("model spec: bad " + what + " '" + text + "'");
    }
    return value;
}

}  // namespace

ManifoldModel parse_model_spec(const std::string& spec) {
    if (spec.rfind("cp:", 0) == 0) {
        return ProjectiveSpace{parse_positive_int(spec.substr(3), "projective dimension")};
    }
    if (spec.rfind("prod:", 0) == 0) {
        std::vector<int> dims;
        std::stringstream ss(spec.substr(5));
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.rfind("cp", 0) != 0) {
                throw std::invalid_argument("model spec: product factors look like 'cp3'");
            }
            dims.push_back(parse_positive_int(item.substr(2), "factor dimension"));
        }
        if (dims.empty()) throw std::invalid_argument("model spec: empty product");
        return ProductOfProjectiveSpaces{std::move(dims)};
    }
    std::string text = spec;
    if (spec.empty() || spec[0] != '{') {
        std::ifstream file(spec);
        if (!file) {
            throw std::invalid_argument("model spec: expected cp:N, prod:cpA,cpB,..., inline "
                                        "JSON, or a JSON file path; got '" + spec + "'");
        }
        std::ostringstream buffer;
        buffer << file.rdbuf();
        text = buffer.str();
    }
    njson j;
    try {
        j = njson::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("model spec: JSON parse failure: ") + e.what());
    }
    return raw_from_json(j);
}

std::string model_spec(const ManifoldModel& m) {
    return std::visit(
        [](const auto& model) -> std::string {
            using T = std::decay_t<decltype(model)>;
            if constexpr (std::is_same_v<T, ProjectiveSpace>) {
                return "cp:" + std::to_string(model.dim);
            } else if constexpr (std::is_same_v<T, ProductOfProjectiveSpaces>) {
                std::string out = "prod:";
                for (std::size_t f = 0; f < model.dims.size(); ++f) {
                    if (f > 0) out += ",";
                    out += "cp" + std::to_string(model.dims[f]);
                }
                return out;
            } else {
                return "raw";
            }
        },
        m);
}

RawChernData raw_from_json(const njson& j) {
    if (!j.is_object() || !j.contains("weight") || !j.contains("terms")) {
        throw std::invalid_argument("raw model: expected {weight, terms}");
    }
    RawChernData raw;
    raw.weight = j.at("weight").get<int>();
    if (raw.weight < 1) throw std::invalid_argument("raw model: weight must be at least 1");
    for (const auto& term : j.at("terms")) {
        Partition key(term.at("partition").get<std::vector<int>>());
        if (key.weight() != raw.weight) {
            throw weight_mismatch_error("raw model: partition " + key.str() +
                                        " does not have weight " + std::to_string(raw.weight));
        }
        const auto& coeff = term.at("coeff");
        Integer value;
        if (coeff.is_string()) {
            const Rational r = Rational::from_string(coeff.get<std::string>());
            value = r.to_integer();
        } else if (coeff.is_number_integer()) {
            value = Integer(coeff.get<long>());
        } else {
            throw std::invalid_argument("raw model: coeff must be an integer");
        }
        if (value != 0) raw.numbers[key] = std::move(value);
    }
    return raw;
}

njson chern_numbers_to_json(int weight, const std::map<Partition, Integer>& numbers) {
    njson terms = njson::array();
    for (const auto& [key, value] : numbers) {
        terms.push_back(njson{{"partition", key.parts()}, {"coeff", value.get_str()}});
    }
    return njson{{"weight", weight}, {"terms", std::move(terms)}};
}

}  // namespace chern
