#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wsat/errors.hpp"

namespace wsat {

/// Per-color vector of nonnegative integers: host sizes n, uniformity
/// profiles s, pattern sizes r.
using ParamVec = std::vector<int>;

/// Componentwise a <= b.
bool leq(const ParamVec& a, const ParamVec& b);

long vec_total(const ParamVec& v);

/// Throws unless every entry is >= 0 and, when d >= 0, the length is d.
void check_param_vec(const ParamVec& v, int d, const char* what);

/// Sorts a family lexicographically; throws on duplicates or mixed dimensions.
std::vector<ParamVec> canonical_family(std::vector<ParamVec> fam, const char* what);

/// Member that is a componentwise minimum of the family, if one exists.
std::optional<ParamVec> componentwise_min_member(const std::vector<ParamVec>& fam);
/// Member that is a componentwise maximum of the family, if one exists.
std::optional<ParamVec> componentwise_max_member(const std::vector<ParamVec>& fam);

/// R(n): members fitting componentwise inside n.
std::vector<ParamVec> fitting_in(const std::vector<ParamVec>& fam, const ParamVec& n);

/// Validates the full (n, S, R) triple: d >= 1, nonnegative entries, S and R
/// non-empty and duplicate-free, and n_i >= s_i, r_i >= s_i for every s in S,
/// r in R. Returns canonically sorted copies of S and R.
struct ParamFamily {
    ParamVec n;
    std::vector<ParamVec> S;
    std::vector<ParamVec> R;

    ParamFamily(ParamVec n_, std::vector<ParamVec> S_, std::vector<ParamVec> R_);
    int dim() const { return static_cast<int>(n.size()); }
};

void validate_family(const ParamVec& n, const std::vector<ParamVec>& S,
                     const std::vector<ParamVec>& R);

/// Parses "a,b,c" into a vector of nonnegative integers.
ParamVec parse_param_vec(const std::string& text);
/// Parses "a,b;c,d" into a duplicate-free family with consistent dimension.
std::vector<ParamVec> parse_family(const std::string& text);

} // namespace wsat
