#include "curcoh/affine.hpp"

#include "curcoh/errors.hpp"

#include <map>

namespace curcoh {

AffineRootData affinize(const RootSystem& rs) {
    const auto n = static_cast<std::size_t>(rs.rank());
    AffineRootData ard{rs, IntMatrix(n + 1, std::vector<int>(n + 1, 0)), {}};
    const Weight theta = rs.theta();
    const RootCoords& theta_root = rs.theta_root();
    ard.affine_cartan[0][0] = 2;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            ard.affine_cartan[i][j] = rs.cartan()[i - 1][j - 1];
    for (std::size_t j = 1; j <= n; ++j) {
        RootCoords aj(n, 0);
        aj[j - 1] = 1;
        // <α_j, θ^∨>
        const int pairing = rs.coroot_pairing(rs.root_to_weight(aj), theta_root);
        ard.affine_cartan[0][j] = -pairing;
        ard.affine_cartan[j][0] = -theta.coords[j - 1];
        ard.alpha0_pairings.push_back(-pairing);
    }
    return ard;
}

std::set<int> table1(const AffineRootData& ard) {
    std::set<int> out;
    for (std::size_t j = 0; j < ard.alpha0_pairings.size(); ++j)
        if (ard.alpha0_pairings[j] != 0)
            out.insert(static_cast<int>(j) + 1);
    return out;
}

std::string AffineCosetElement::word_str() const {
    if (word.empty())
        return "e";
    std::string s;
    for (std::size_t i = 0; i < word.size(); ++i)
        s += (i ? " s" : "s") + std::to_string(word[i]);
    return s;
}

namespace {

int pairing(const AffineRootData& ard, const std::vector<int>& c, std::size_t i) {
    int v = 0;
    for (std::size_t j = 0; j < c.size(); ++j)
        v += c[j] * ard.affine_cartan[i][j];
    return v;
}

void fill_finite_part(const AffineRootData& ard, AffineCosetElement& e) {
    const auto n = static_cast<std::size_t>(ard.base.rank());
    e.lambda_w = Weight::zero(ard.base.rank());
    for (std::size_t i = 1; i <= n; ++i)
        e.lambda_w.coords[i - 1] = pairing(ard, e.dot_value, i);
    e.d_w = -e.dot_value[0];
}

} // namespace

std::vector<AffineCosetElement> enumerate_Wa1(const AffineRootData& ard, int max_length) {
    if (max_length < 0 || max_length > kMaxAffineLength)
        throw ValidationError("max_length must lie in [0, " + std::to_string(kMaxAffineLength) + "]");
    const std::size_t n1 = ard.affine_cartan.size();
    // Breadth-first search over the whole dot orbit of 0: depth equals length,
    // and w·0 determines w. Only the elements with dominant λ_w are kept.
    std::vector<AffineCosetElement> frontier(1);
    frontier[0].dot_value.assign(n1, 0);
    fill_finite_part(ard, frontier[0]);
    std::vector<AffineCosetElement> out{frontier[0]};
    std::set<std::vector<int>> previous, current{frontier[0].dot_value};
    for (int len = 1; len <= max_length; ++len) {
        std::map<std::vector<int>, AffineCosetElement> next;
        for (const auto& e : frontier)
            for (std::size_t i = 0; i < n1; ++i) {
                // s_i·μ = μ − (μ(h_i) + 1) α_i
                std::vector<int> dv = e.dot_value;
                dv[i] -= pairing(ard, e.dot_value, i) + 1;
                if (previous.count(dv) || current.count(dv) || next.count(dv))
                    continue;
                AffineCosetElement f;
                f.dot_value = std::move(dv);
                f.length = len;
                f.word = e.word;
                f.word.insert(f.word.begin(), static_cast<int>(i));
                fill_finite_part(ard, f);
                next.emplace(f.dot_value, std::move(f));
            }
        previous = std::move(current);
        current.clear();
        frontier.clear();
        for (auto& [dv, f] : next) {
            current.insert(dv);
            if (f.lambda_w.dominant())
                out.push_back(f);
            frontier.push_back(std::move(f));
        }
    }
    for (const auto& e : out)
        if (e.d_w < 0)
            throw InvariantViolation("negative δ-degree for a dominant dot value");
    return out;
}

DecompositionReport gl_predict(const AffineRootData& ard, int j) {
    if (j < 0 || j > kMaxAffineLength)
        throw ValidationError("degree must lie in [0, " + std::to_string(kMaxAffineLength) + "]");
    DecompositionReport r;
    r.arity = 1;
    for (const auto& e : enumerate_Wa1(ard, j))
        if (e.length == j)
            r.factors.push_back(Factor{MultiWeight(dual_weight(ard.base, e.lambda_w)), 1, e.d_w});
    r.normalize();
    return r;
}

} // namespace curcoh
