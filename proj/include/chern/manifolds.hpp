#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "chern/chern_combo.hpp"
#include "chern/genera.hpp"
#include "chern/json.hpp"
#include "chern/partition.hpp"
#include "chern/rational.hpp"

namespace chern {

struct ProjectiveSpace {
    int dim;
};

struct ProductOfProjectiveSpaces {
    std::vector<int> dims;
};

/// Externally supplied Chern numbers; partitions of weight n mapped to
/// integers. Missing partitions count as zero.
struct RawChernData {
    int weight;
    std::map<Partition, Integer> numbers;
};

using ManifoldModel = std::variant<ProjectiveSpace, ProductOfProjectiveSpaces, RawChernData>;

int complex_dimension(const ManifoldModel& m);

/// Parses "cp:3", "prod:cp1,cp3", inline JSON ("{...}" mirroring the
/// ChernCombo schema with integer coefficients), or a path to such a JSON
/// file. Throws std::invalid_argument on anything else.
ManifoldModel parse_model_spec(const std::string& spec);

/// Spec string for output: "cp:3", "prod:cp1,cp3", or "raw".
std::string model_spec(const ManifoldModel& m);

/// All Chern numbers c_lambda[M]. For CP^n these are products of binomial
/// coefficients from c(CP^n) = (1+g)^{n+1}; products are computed in the
/// truncated ring spanned by g_1^{e_1}...g_k^{e_k} with e_f <= n_f.
std::map<Partition, Integer> chern_numbers(const ManifoldModel& m);

/// sum_lambda combo(lambda) * c_lambda[m], exact. Throws
/// weight_mismatch_error when the combo weight differs from the dimension.
Rational evaluate(const ChernCombo& combo, const ManifoldModel& m);

/// CP^n is spin iff n is odd; a product is spin iff every factor dimension
/// is odd. Throws not_decidable_error for RawChernData: the parity of c_1 as
/// a class is not recoverable from Chern numbers.
bool is_spin(const ManifoldModel& m);

struct DivisibilityResult {
    Integer value;
    bool divisible_by_8;
    /// value / 8 when divisible, otherwise value mod 8 (in 0..7).
    Integer quotient_or_remainder;
};

/// Evaluates 2(n-1) c_1 c_{n-1}[m] + c_1^2 c_{n-2}[m] and reports
/// divisibility by 8.
DivisibilityResult divisibility_check(const ManifoldModel& m);

/// Row-by-row evaluation of the genus table on m, indexed by p.
std::vector<Rational> index_table(GenusKind kind, const ManifoldModel& m,
                                  int max_n = kDefaultMaxDimension);

RawChernData raw_from_json(const njson& j);
njson chern_numbers_to_json(int weight, const std::map<Partition, Integer>& numbers);

}  // namespace chern
