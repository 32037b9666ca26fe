#include "verify/suites.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "cterm/cterm.hpp"
#include "demazure/charsum.hpp"
#include "macdonald/operators.hpp"
#include "macdonald/phi.hpp"
#include "qtoda/toda_ops.hpp"
#include "qtoda/whittaker.hpp"
#include "qtorus/torus.hpp"
#include "serialize/json_io.hpp"

namespace qw {

bool Report::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string Report::to_json() const {
    nlohmann::ordered_json root;
    root["suite"] = suite;
    root["pass"] = all_pass();
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["status"] = c.pass ? "pass" : "fail";
        jc["detail"] = c.detail;
        jc["seconds"] = c.seconds;
        arr.push_back(std::move(jc));
    }
    root["checks"] = std::move(arr);
    return root.dump();
}

std::string Report::to_text() const {
    std::ostringstream os;
    for (const auto& c : checks)
        os << (c.pass ? "pass" : "FAIL") << "  " << c.name << "  (" << c.detail << ")\n";
    os << (all_pass() ? "all checks passed" : "FAILURES PRESENT") << " [" << suite << "]\n";
    return os.str();
}

namespace {

std::string point_str(const LatticePoint& p) {
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

std::vector<LatticePoint> dominant_box(int n, long lo, long hi) {
    std::vector<LatticePoint> out;
    LatticePoint p(n);
    std::function<void(int, long)> rec = [&](int i, long cap) {
        if (i == n) { out.push_back(p); return; }
        for (long v = lo; v <= std::min(hi, cap); ++v) { p[i] = v; rec(i + 1, v); }
    };
    rec(0, hi);
    return out;
}

std::vector<int> ranks_for(const VerifyOptions& opt) {
    if (opt.rank == 2 || opt.rank == 3 || opt.rank == 4) return {opt.rank};
    return {2, 3};
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

struct CheckState {
    long count = 0;
    std::string fail;
    std::string note;  // appended to the success detail
};

CheckResult run_counting(const std::string& name, const std::function<void(CheckState&)>& body) {
    CheckResult res;
    res.name = name;
    Timer timer;
    CheckState st;
    try {
        body(st);
        res.pass = st.fail.empty();
        res.detail = st.fail.empty()
                         ? std::to_string(st.count) + " instances" +
                               (st.note.empty() ? "" : " (" + st.note + ")")
                         : st.fail;
    } catch (const std::exception& e) {
        res.pass = false;
        res.detail = std::string("exception: ") + e.what();
    }
    res.seconds = timer.elapsed();
    return res;
}

// ---------------------------------------------------------------- fourway --

void suite_fourway(const VerifyOptions& opt, Report& rep) {
    for (int n : ranks_for(opt)) {
        rep.checks.push_back(run_counting(
            "fourway/rank" + std::to_string(n), [&](CheckState& st) {
                auto& t0 = MacdonaldTable::shared(SpecPoint::t_zero());
                for (const auto& p : dominant_box(n, opt.box_lo, opt.box_hi)) {
                    LaurentPoly a = whittaker_normalized(p);
                    LaurentPoly b = extend_generalized(p, n, t0);
                    LaurentPoly c = demazure_whittaker_value(p);
                    LaurentPoly d = whittaker_matrix_element(p);
                    if (!(a == b && a == c && a == d)) {
                        st.fail = "disagreement at p=" + point_str(p) + "; gz=" + value_to_json(a) +
                               " macdonald=" + value_to_json(b) + " demazure=" + value_to_json(c) +
                               " torus=" + value_to_json(d);
                        return;
                    }
                    ++st.count;
                }
            }));
    }
}

// ----------------------------------------------------------------- eiglat --

void suite_eiglat(const VerifyOptions& opt, Report& rep) {
    long lo = opt.box_set ? opt.box_lo : -2;
    long hi = opt.box_set ? opt.box_hi : 4;
    for (int n : ranks_for(opt)) {
        rep.checks.push_back(run_counting(
            "eiglat/rank" + std::to_string(n), [&](CheckState& st) {
                LatticeTable table = whittaker_box(LatticePoint(n, lo), LatticePoint(n, hi), false);
                for (long r = 1; r <= n; ++r) {
                    LaurentPoly er = elementary_symmetric(r, n);
                    auto moved = toda_apply(r, table);
                    for (const auto& [p, val] : moved) {
                        bool interior = true;
                        for (long x : p)
                            if (x + 1 > hi) interior = false;
                        if (!interior) continue;
                        if (!(val == er * table.at(p))) {
                            st.fail = "eigenproblem fails at r=" + std::to_string(r) +
                                   " p=" + point_str(p) + "; lhs=" + value_to_json(val);
                            return;
                        }
                        ++st.count;
                    }
                }
            }));
    }
}

// ----------------------------------------------------------------- modpsi --

void suite_modpsi(const VerifyOptions& opt, Report& rep) {
    for (int n : ranks_for(opt)) {
        rep.checks.push_back(run_counting(
            "modpsi/position/rank" + std::to_string(n), [&](CheckState& st) {
                auto& t0 = MacdonaldTable::shared(SpecPoint::t_zero());
                for (const auto& lam : dominant_box(n, 0, 4)) {
                    LaurentPoly P = extend_generalized(lam, n, t0);
                    for (long r = 1; r <= n; ++r) {
                        long e = 0;
                        for (int i = n - static_cast<int>(r); i < n; ++i) e += lam[i];
                        if (!(hat_x_apply(r, P) == P.scaled(Scalar::q_power(e)))) {
                            st.fail = "position eigenproblem fails at lambda=" + point_str(lam) +
                                   " r=" + std::to_string(r);
                            return;
                        }
                        ++st.count;
                    }
                }
            }));
        rep.checks.push_back(run_counting(
            "modpsi/spectral/rank" + std::to_string(n), [&](CheckState& st) {
                auto& t0 = MacdonaldTable::shared(SpecPoint::t_zero());
                LatticeTable tab;
                for (const auto& lam : dominant_box(n, 0, 5))
                    tab.emplace(lam, extend_generalized(lam, n, t0));
                for (long r = 1; r <= n; ++r) {
                    LaurentPoly er = elementary_symmetric(r, n);
                    auto moved = hat_dual_apply(r, tab);
                    for (const auto& [lam, val] : moved) {
                        if (lam[0] > 4) continue;
                        if (!(val == er * tab.at(lam))) {
                            st.fail = "spectral eigenproblem fails at lambda=" + point_str(lam) +
                                   " r=" + std::to_string(r);
                            return;
                        }
                        ++st.count;
                    }
                }
            }));
    }
    // conjugation identities on random tables
    rep.checks.push_back(run_counting("modpsi/identities", [&](CheckState& st) {
        std::mt19937 rng(20260810);
        std::uniform_int_distribution<int> coef(-4, 4), expo(0, 3);
        auto random_table = [&](int n, long lo, long hi, bool strict) {
            LatticeTable tab;
            LatticePoint p(n);
            std::function<void(int)> rec = [&](int i) {
                if (i == n) {
                    for (int a = 0; a + 1 < n; ++a)
                        if (strict ? p[a] <= p[a + 1] : p[a] < p[a + 1]) return;
                    LaurentPoly v(1);
                    for (int t = 0; t < 3; ++t) v.add_term({expo(rng)}, Scalar(Rat(coef(rng))));
                    tab.emplace(p, v);
                    return;
                }
                for (long v = lo; v <= hi; ++v) { p[i] = v; rec(i + 1); }
            };
            rec(0);
            return tab;
        };
        for (int trial = 0; trial < 20; ++trial) {
            int n = trial % 2 ? 3 : 2;
            // identity 1: position-limit operator vs q^{-r(r-1)/2} spectral dual
            auto tab = random_table(n, 0, n == 2 ? 4 : 3, true);
            for (long r = 1; r <= n; ++r) {
                auto rhs = spectral_dual_apply(r, tab);
                for (const auto& [lam, dummy] : tab) {
                    (void)dummy;
                    auto it = rhs.find(lam);
                    if (it == rhs.end()) continue;
                    // hat operator evaluated directly on the same lattice
                    LaurentPoly acc(1);
                    bool complete = true;
                    std::vector<int> cur;
                    std::function<void(int, long)> loop = [&](int start, long need) {
                        if (!complete) return;
                        if (need == 0) {
                            Scalar coeff = Scalar::one();
                            for (int i : cur)
                                for (int j = 0; j < n; ++j) {
                                    if (std::find(cur.begin(), cur.end(), j) != cur.end()) continue;
                                    Scalar xj = Scalar::q_power(lam[j]);
                                    Scalar xi = Scalar::q_power(lam[i]);
                                    coeff *= xj / (xj - xi);
                                }
                            LatticePoint sh = lam;
                            for (int i : cur) sh[i] += 1;
                            auto f = tab.find(sh);
                            if (f == tab.end()) { complete = false; return; }
                            acc += f->second.scaled(coeff);
                            return;
                        }
                        for (int i = start; i < n; ++i) {
                            cur.push_back(i);
                            loop(i + 1, need - 1);
                            cur.pop_back();
                        }
                    };
                    loop(0, r);
                    if (!complete) continue;
                    if (!(acc == it->second.scaled(Scalar::q_power(-r * (r - 1) / 2)))) {
                        st.fail = "conjugation identity 1 fails at " + point_str(lam) +
                               " r=" + std::to_string(r);
                        return;
                    }
                    ++st.count;
                }
            }
            // identity 2: spectral limit operator as a Delta conjugation
            auto tab2 = random_table(n, 0, n == 2 ? 4 : 3, false);
            for (long r = 1; r <= n; ++r) {
                auto lhs = hat_dual_apply(r, tab2);
                auto rhs = conjugate_by_delta(
                    toda_dual_x_on_lambda_table(r, conjugate_by_delta(tab2, true)), false);
                for (const auto& [lam, val] : lhs) {
                    auto it = rhs.find(lam);
                    if (it == rhs.end()) continue;
                    if (!(val == it->second)) {
                        st.fail = "conjugation identity 2 fails at " + point_str(lam) +
                               " r=" + std::to_string(r);
                        return;
                    }
                    ++st.count;
                }
            }
        }
    }));
}

// ---------------------------------------------------------------- spectra --

void suite_spectra(const VerifyOptions& opt, Report& rep) {
    (void)opt;
    const std::vector<SpecPoint> specs{SpecPoint::numeric(Rat(1, 3), Rat(1, 5)),
                                       SpecPoint::numeric(Rat(2, 7), Rat(3, 11))};
    for (const auto& sp : specs) {
        rep.checks.push_back(run_counting(
            "spectra/eigen/" + sp.key(), [&](CheckState& st) {
                auto& table = MacdonaldTable::shared(sp);
                for (int nv : {2, 3}) {
                    for (long d = 0; d <= 5; ++d)
                        for (const auto& lam : partitions_of(d, nv)) {
                            LaurentPoly P = table.polynomial(lam, nv);
                            for (long r = 1; r <= nv; ++r) {
                                if (!(macdonald_op_apply(r, P, sp) ==
                                      P.scaled(eigenvalue_c(r, lam, sp, nv)))) {
                                    st.fail = "eigen fails at lambda=" + point_str(lam.parts) +
                                           " r=" + std::to_string(r) + " nvars=" + std::to_string(nv);
                                    return;
                                }
                                ++st.count;
                            }
                        }
                }
            }));
    }
    rep.checks.push_back(run_counting("spectra/orthogonality", [&](CheckState& st) {
        SpecPoint sp = specs[0];
        auto& table = MacdonaldTable::shared(sp);
        for (long d = 1; d <= 6; ++d) {
            auto parts = partitions_of(d, 3);
            int nv = static_cast<int>(d);
            for (size_t a = 0; a < parts.size(); ++a)
                for (size_t b = a + 1; b < parts.size(); ++b) {
                    if (!scalar_product_qt(table.polynomial(parts[a], nv),
                                           table.polynomial(parts[b], nv), sp)
                             .is_zero()) {
                        st.fail = "nonzero product for " + point_str(parts[a].parts) + " vs " +
                               point_str(parts[b].parts);
                        return;
                    }
                    ++st.count;
                }
        }
    }));
}

// --------------------------------------------------------------- selfdual --

void suite_selfdual(const VerifyOptions& opt, Report& rep) {
    for (int n : ranks_for(opt)) {
        for (long k : {1L, 2L}) {
            rep.checks.push_back(run_counting(
                "selfdual/rank" + std::to_string(n) + "/k" + std::to_string(k),
                [&](CheckState& st) {
                    std::vector<Partition> lams;
                    for (const auto& p : dominant_box(n, 0, 3)) lams.emplace_back(Partition(p));
                    long limits = 0;
                    for (const auto& lam : lams)
                        for (const auto& mu : lams) {
                            auto res = self_duality_check(lam, mu, k, n);
                            if (!res.equal) {
                                st.fail = "duality fails at lambda=" + point_str(lam.parts) +
                                       " mu=" + point_str(mu.parts) + ": " + res.lhs.to_string() +
                                       " vs " + res.rhs.to_string();
                                return;
                            }
                            if (res.via_limit) ++limits;
                            ++st.count;
                        }
                    st.note = std::to_string(limits) + " through the deformation limit";
                }));
        }
    }
}

// ----------------------------------------------------------------- corSan --

void suite_corsan(const VerifyOptions& opt, Report& rep) {
    rep.checks.push_back(run_counting("corSan/rank2-series", [&](CheckState& st) {
        auto& t0 = MacdonaldTable::shared(SpecPoint::t_zero());
        for (long m = 0; m <= 3; ++m) {
            CorSanData d0 = demazure_whittaker_data({m, -m});
            if (!(d0.c2 == 2 * m * m &&
                  d0.pi_char ==
                      extend_generalized({m, -m}, 2, t0).scaled(Scalar::q_power(-m * m)))) {
                st.fail = "omega_0 series fails at m=" + std::to_string(m);
                return;
            }
            CorSanData d1 = demazure_whittaker_data({m + 1, -m});
            if (!(d1.c2 == 2 * m * (m + 1) &&
                  d1.pi_char == extend_generalized({m + 1, -m}, 2, t0)
                                    .scaled(Scalar::q_power(-m * (m + 1))))) {
                st.fail = "omega_1 series fails at m=" + std::to_string(m);
                return;
            }
            st.count += 2;
        }
    }));
    for (int n : ranks_for(opt)) {
        rep.checks.push_back(run_counting(
            "corSan/whittaker/rank" + std::to_string(n), [&](CheckState& st) {
                for (const auto& p : dominant_box(n, opt.box_lo, opt.box_hi)) {
                    if (!(demazure_whittaker_value(p) == whittaker_normalized(p))) {
                        st.fail = "character route fails at p=" + point_str(p);
                        return;
                    }
                    ++st.count;
                }
            }));
    }
}

// --------------------------------------------------------------- reclimt0 --

void suite_reclimt0(const VerifyOptions& opt, Report& rep) {
    long N = opt.trunc;
    rep.checks.push_back(run_counting("reclimt0/rank1to2", [&](CheckState& st) {
        for (long m = 0; m <= 4; ++m) {
            if (!verify_t0_recursion(Partition(std::vector<long>{m}).trimmed(), 1, N)) {
                st.fail = "recursion fails for lambda=(" + std::to_string(m) + ")";
                return;
            }
            ++st.count;
        }
    }));
    rep.checks.push_back(run_counting("reclimt0/rank2to3", [&](CheckState& st) {
        for (const auto& lam : {Partition({2, 1}), Partition({3, 1})}) {
            if (!verify_t0_recursion(lam, 2, N)) {
                st.fail = "recursion fails for lambda=" + point_str(lam.parts);
                return;
            }
            ++st.count;
        }
    }));
    rep.checks.push_back(run_counting("reclimt0/budget-stability", [&](CheckState& st) {
        if (!verify_t0_recursion(Partition({2, 1}), 2, N, 2) ||
            !verify_t0_recursion(Partition({3}), 1, N, 2)) {
            st.fail = "budget enlargement changed a conclusion";
            return;
        }
        st.count = 2;
    }));
}

// ------------------------------------------------------------------ norms --

void suite_norms(const VerifyOptions& opt, Report& rep) {
    (void)opt;
    for (const auto& sp : {SpecPoint::numeric(Rat(1, 3), Rat(1, 5)),
                           SpecPoint::numeric(Rat(2, 7), Rat(3, 11))}) {
        rep.checks.push_back(run_counting(
            "norms/" + sp.key(), [&](CheckState& st) {
                auto& table = MacdonaldTable::shared(sp);
                for (long d = 0; d <= 4; ++d)
                    for (const auto& lam : partitions_of(d, 3)) {
                        int nv = std::max<int>(static_cast<int>(d), 1);
                        LaurentPoly P = table.polynomial(lam, nv);
                        auto norms = norm_formulas(lam, nv, sp, 4);
                        if (!(scalar_product_qt(P, P, sp) == norms.second)) {
                            st.fail = "norm mismatch at lambda=" + point_str(lam.parts);
                            return;
                        }
                        ++st.count;
                    }
            }));
    }
}

// ---------------------------------------------------------------- noncomm --

void suite_noncomm(const VerifyOptions& opt, Report& rep) {
    rep.checks.push_back(run_counting("noncomm/qbinomial", [&](CheckState& st) {
        for (long n = 0; n <= 6; ++n) {
            if (!q_binomial_identity_check(n)) {
                st.fail = "identity fails at n=" + std::to_string(n);
                return;
            }
            ++st.count;
        }
    }));
    for (int n : ranks_for(opt)) {
        rep.checks.push_back(run_counting(
            "noncomm/matrix-element/rank" + std::to_string(n), [&](CheckState& st) {
                for (const auto& p : dominant_box(n, 0, 4)) {
                    if (!(whittaker_matrix_element(p) == whittaker_normalized(p))) {
                        st.fail = "matrix element differs at p=" + point_str(p);
                        return;
                    }
                    ++st.count;
                }
            }));
        rep.checks.push_back(run_counting(
            "noncomm/funchar/rank" + std::to_string(n), [&](CheckState& st) {
                for (long k : {-1L, 0L, 2L})
                    for (long r = 0; r <= n; ++r) {
                        LatticePoint p(n, k);
                        for (long i = 0; i < r; ++i) p[i] = k + 1;
                        LaurentPoly lhs = whittaker_gz(p).scaled(Scalar(whittaker_delta(p)));
                        if (!(lhs == fundamental_character_value(k, r, n))) {
                            st.fail = "character value fails at r=" + std::to_string(r) +
                                   " k=" + std::to_string(k);
                            return;
                        }
                        ++st.count;
                    }
            }));
        rep.checks.push_back(run_counting(
            "noncomm/symmetry/rank" + std::to_string(n), [&](CheckState& st) {
                long hi = n == 2 ? 4 : 3;
                if (!whittaker_symmetry_check(LatticePoint(n, 0), LatticePoint(n, hi))) {
                    st.fail = "symmetry fails on the box";
                    return;
                }
                st.count = 1;
            }));
        rep.checks.push_back(run_counting(
            "noncomm/translation/rank" + std::to_string(n), [&](CheckState& st) {
                for (long k : {-1L, 1L, 2L})
                    for (const auto& p : dominant_box(n, 0, 3)) {
                        LatticePoint sh = p;
                        for (auto& x : sh) x += k;
                        LaurentPoly::Exp mono(n, static_cast<int>(k));
                        if (!(whittaker_normalized(sh) ==
                              whittaker_normalized(p).mul_monomial(mono, Scalar::one()))) {
                            st.fail = "translation fails at p=" + point_str(p) + " k=" + std::to_string(k);
                            return;
                        }
                        ++st.count;
                    }
            }));
    }
}

// ---------------------------------------------------------------- demlaws --

void suite_demlaws(const VerifyOptions& opt, Report& rep) {
    (void)opt;
    rep.checks.push_back(run_counting("demlaws/idempotence", [&](CheckState& st) {
        std::mt19937 rng(424243);
        std::uniform_int_distribution<long> fin(-3, 3), lvl(0, 2), deg(-2, 2), coef(-5, 5);
        for (int n : {2, 3}) {
            for (int i = 0; i < n; ++i)
                for (int trial = 0; trial < 50; ++trial) {
                    CharSum c;
                    for (int t = 0; t < 5; ++t) {
                        AffineWeight mu;
                        mu.fin.resize(n);
                        for (auto& x : mu.fin) x = fin(rng);
                        mu.level = lvl(rng);
                        mu.deg = deg(rng);
                        long v = coef(rng);
                        if (v) c = char_add(c, char_monomial(mu, v));
                    }
                    CharSum once = demazure_op(i, c);
                    if (!char_equal(demazure_op(i, once), once)) {
                        st.fail = "idempotence fails for generator " + std::to_string(i);
                        return;
                    }
                    ++st.count;
                }
        }
    }));
    rep.checks.push_back(run_counting("demlaws/braid", [&](CheckState& st) {
        std::mt19937 rng(515253);
        std::uniform_int_distribution<long> fin(-3, 3), lvl(0, 2), deg(-2, 2), coef(-5, 5);
        int n = 3;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                for (int trial = 0; trial < 10; ++trial) {
                    CharSum c;
                    for (int t = 0; t < 5; ++t) {
                        AffineWeight mu;
                        mu.fin.resize(n);
                        for (auto& x : mu.fin) x = fin(rng);
                        mu.level = lvl(rng);
                        mu.deg = deg(rng);
                        long v = coef(rng);
                        if (v) c = char_add(c, char_monomial(mu, v));
                    }
                    CharSum lhs = demazure_op(i, demazure_op(j, demazure_op(i, c)));
                    CharSum rhs = demazure_op(j, demazure_op(i, demazure_op(j, c)));
                    if (!char_equal(lhs, rhs)) {
                        st.fail = "braid relation fails for (" + std::to_string(i) + "," +
                               std::to_string(j) + ")";
                        return;
                    }
                    ++st.count;
                }
            }
    }));
}

} // namespace

std::vector<std::string> suite_names() {
    return {"fourway", "eiglat", "modpsi", "spectra", "selfdual",
            "corSan",  "reclimt0", "norms", "noncomm", "demlaws"};
}

Report run_suite(const std::string& suite, const VerifyOptions& opt) {
    Report rep;
    rep.suite = suite;
    auto dispatch = [&](const std::string& name) {
        if (name == "fourway") suite_fourway(opt, rep);
        else if (name == "eiglat") suite_eiglat(opt, rep);
        else if (name == "modpsi") suite_modpsi(opt, rep);
        else if (name == "spectra") suite_spectra(opt, rep);
        else if (name == "selfdual") suite_selfdual(opt, rep);
        else if (name == "corSan") suite_corsan(opt, rep);
        else if (name == "reclimt0") suite_reclimt0(opt, rep);
        else if (name == "norms") suite_norms(opt, rep);
        else if (name == "noncomm") suite_noncomm(opt, rep);
        else if (name == "demlaws") suite_demlaws(opt, rep);
        else throw invalid_argument("unknown suite: " + name);
    };
    if (suite == "all") {
        for (const auto& name : suite_names()) dispatch(name);
    } else {
        dispatch(suite);
    }
    return rep;
}

} // namespace qw
