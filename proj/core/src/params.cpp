#include "wsat/params.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wsat {

bool leq(const ParamVec& a, const ParamVec& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

long vec_total(const ParamVec& v) { return std::accumulate(v.begin(), v.end(), 0L); }

void check_param_vec(const ParamVec& v, int d, const char* what) {
    if (d >= 0 && static_cast<int>(v.size()) != d)
        throw InvalidInput(std::string(what) + ": expected dimension " + std::to_string(d) +
                           ", got " + std::to_string(v.size()));
    if (v.empty()) throw InvalidInput(std::string(what) + ": dimension must be at least 1");
    for (int x : v)
        if (x < 0) throw InvalidInput(std::string(what) + ": entries must be nonnegative");
}

std::vector<ParamVec> canonical_family(std::vector<ParamVec> fam, const char* what) {
    if (fam.empty()) throw InvalidInput(std::string(what) + ": family must be non-empty");
    const int d = static_cast<int>(fam.front().size());
    for (const auto& v : fam) check_param_vec(v, d, what);
    std::sort(fam.begin(), fam.end());
    if (std::adjacent_find(fam.begin(), fam.end()) != fam.end())
        throw InvalidInput(std::string(what) + ": duplicate vectors rejected");
    return fam;
}

std::optional<ParamVec> componentwise_min_member(const std::vector<ParamVec>& fam) {
    for (const auto& cand : fam) {
        bool ok = true;
        for (const auto& other : fam)
            if (!leq(cand, other)) {
                ok = false;
                break;
            }
        if (ok) return cand;
    }
    return std::nullopt;
}

std::optional<ParamVec> componentwise_max_member(const std::vector<ParamVec>& fam) {
    for (const auto& cand : fam) {
        bool ok = true;
        for (const auto& other : fam)
            if (!leq(other, cand)) {
                ok = false;
                break;
            }
        if (ok) return cand;
    }
    return std::nullopt;
}

std::vector<ParamVec> fitting_in(const std::vector<ParamVec>& fam, const ParamVec& n) {
    std::vector<ParamVec> out;
    for (const auto& v : fam)
        if (leq(v, n)) out.push_back(v);
    return out;
}

void validate_family(const ParamVec& n, const std::vector<ParamVec>& S,
                     const std::vector<ParamVec>& R) {
    check_param_vec(n, -1, "n");
    const int d = static_cast<int>(n.size());
    if (S.empty() || R.empty()) throw InvalidInput("S and R must be non-empty");
    auto sc = canonical_family(S, "S");
    auto rc = canonical_family(R, "R");
    for (const auto& s : sc) {
        check_param_vec(s, d, "S");
        if (!leq(s, n)) throw InvalidInput("profile violates n_i >= s_i");
        for (const auto& r : rc)
            if (!leq(s, r)) throw InvalidInput("pattern violates r_i >= s_i");
    }
    for (const auto& r : rc) check_param_vec(r, d, "R");
}

ParamFamily::ParamFamily(ParamVec n_, std::vector<ParamVec> S_, std::vector<ParamVec> R_)
    : n(std::move(n_)), S(canonical_family(std::move(S_), "S")),
      R(canonical_family(std::move(R_), "R")) {
    validate_family(n, S, R);
}

ParamVec parse_param_vec(const std::string& text) {
    ParamVec out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw InvalidInput("malformed vector entry '" + item + "'");
        }
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size()) throw InvalidInput("malformed vector entry '" + item + "'");
        if (value < 0) throw InvalidInput("vector entries must be nonnegative");
        out.push_back(value);
    }
    if (out.empty()) throw InvalidInput("empty vector text");
    return out;
}

std::vector<ParamVec> parse_family(const std::string& text) {
    std::vector<ParamVec> fam;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) fam.push_back(parse_param_vec(item));
    if (fam.empty()) throw InvalidInput("empty family text");
    for (const auto& v : fam)
        if (v.size() != fam.front().size())
            throw InvalidInput("inconsistent dimensions in family text");
    return canonical_family(std::move(fam), "family");
}

} // namespace wsat
