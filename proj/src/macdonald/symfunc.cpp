#include "macdonald/symfunc.hpp"

#include <algorithm>
#include <mutex>

namespace qw {

LaurentPoly monomial_symmetric(const Partition& lambda, int nvars) {
    Partition lam = lambda.padded(nvars);
    std::vector<long> exps = lam.parts;
    std::sort(exps.begin(), exps.end());
    LaurentPoly out(nvars);
    // next_permutation over the sorted multiset visits each distinct
    // arrangement once: the distinct-monomial convention
    do {
        LaurentPoly::Exp e(nvars);
        for (int i = 0; i < nvars; ++i) e[i] = static_cast<int>(exps[i]);
        out.add_term(e, Scalar::one());
    } while (std::next_permutation(exps.begin(), exps.end()));
    return out;
}

LaurentPoly power_sum(const Partition& lambda, int nvars) {
    LaurentPoly out = LaurentPoly::one(nvars);
    for (long part : lambda.parts) {
        if (part == 0) continue;  // zero parts are inert
        if (part < 0) throw invalid_argument("power sums need nonnegative parts");
        LaurentPoly pi(nvars);
        for (int i = 0; i < nvars; ++i) pi += LaurentPoly::variable(nvars, i, static_cast<int>(part));
        out *= pi;
    }
    return out;
}

LaurentPoly elementary_symmetric(long r, int nvars) {
    if (r < 0 || r > nvars) return LaurentPoly::zero(nvars);
    std::vector<long> parts(r, 1);
    return monomial_symmetric(Partition(parts), nvars);
}

std::map<long, LaurentPoly> split_by_degree(const LaurentPoly& f) {
    std::map<long, LaurentPoly> out;
    for (const auto& [e, c] : f.terms()) {
        long d = 0;
        for (int x : e) d += x;
        auto it = out.find(d);
        if (it == out.end()) it = out.emplace(d, LaurentPoly(f.nvars())).first;
        it->second.add_term(e, c);
    }
    return out;
}

int SymTransition::index_of(const Partition& p) const {
    Partition t = p.trimmed();
    for (size_t i = 0; i < m_basis.size(); ++i)
        if (m_basis[i] == t) return static_cast<int>(i);
    return -1;
}

namespace {

std::vector<std::vector<Rat>> invert_rat_matrix(std::vector<std::vector<Rat>> a) {
    size_t n = a.size();
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw error("transition matrix is singular");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rat d = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

std::map<std::pair<long, int>, SymTransition> transition_cache;
std::mutex transition_mutex;

} // namespace

const SymTransition& sym_transition(long degree, int nvars) {
    std::lock_guard<std::mutex> lock(transition_mutex);
    auto key = std::make_pair(degree, nvars);
    auto it = transition_cache.find(key);
    if (it != transition_cache.end()) return it->second;

    SymTransition tr;
    tr.degree = degree;
    tr.nvars = nvars;
    tr.m_basis = partitions_of(degree, nvars);
    tr.pi_basis = tr.m_basis;
    size_t n = tr.m_basis.size();

    // index monomials by their padded exponent vector
    std::map<std::vector<long>, size_t> midx;
    for (size_t j = 0; j < n; ++j) midx[tr.m_basis[j].padded(nvars).parts] = j;

    tr.pi_to_m.assign(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        LaurentPoly pi = power_sum(tr.pi_basis[i], nvars);
        for (const auto& [e, c] : pi.terms()) {
            std::vector<long> sorted(e.begin(), e.end());
            std::sort(sorted.begin(), sorted.end(), std::greater<long>());
            // record only the representative (decreasing) monomial of each orbit
            bool representative = true;
            for (int v = 0; v < nvars; ++v)
                if (e[v] != static_cast<int>(sorted[v])) { representative = false; break; }
            if (!representative) continue;
            auto mit = midx.find(sorted);
            if (mit == midx.end()) throw error("power sum expansion outside basis");
            tr.pi_to_m[i][mit->second] = c.as_rat();
        }
    }
    tr.m_to_pi = invert_rat_matrix(tr.pi_to_m);
    // m_to_pi rows now express m in pi: m = pi_to_m^{-1} applied on the left
    return transition_cache.emplace(key, std::move(tr)).first->second;
}

std::vector<Scalar> m_coordinates(const LaurentPoly& f, const SymTransition& tr) {
    std::vector<Scalar> coords(tr.m_basis.size());
    LaurentPoly check(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        std::vector<long> sorted(e.begin(), e.end());
        for (long x : sorted)
            if (x < 0) throw invalid_argument("scalar product needs polynomial input");
        std::sort(sorted.begin(), sorted.end(), std::greater<long>());
        bool representative = true;
        for (int v = 0; v < f.nvars(); ++v)
            if (e[v] != static_cast<int>(sorted[v])) { representative = false; break; }
        if (!representative) continue;
        while (!sorted.empty() && sorted.back() == 0) sorted.pop_back();
        int j = tr.index_of(Partition(sorted));
        if (j < 0) throw invalid_argument("term outside the degree basis");
        coords[j] = c;
    }
    // symmetry check: rebuild and compare
    for (size_t j = 0; j < coords.size(); ++j)
        if (!coords[j].is_zero()) check += monomial_symmetric(tr.m_basis[j], f.nvars()).scaled(coords[j]);
    if (!(check == f)) throw invalid_argument("input polynomial is not symmetric");
    return coords;
}

} // namespace qw
