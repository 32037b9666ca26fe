#include "qwhit.h"

#include <cstring>
#include <string>

#include "macdonald/gram_schmidt.hpp"
#include "demazure/charsum.hpp"
#include "qtoda/whittaker.hpp"
#include "qtorus/torus.hpp"
#include "serialize/json_io.hpp"
#include "verify/suites.hpp"

namespace {

thread_local std::string g_last_error;

constexpr int kMaxRank = 4;
constexpr long kMaxEntry = 8;

struct ValueImpl {
    qw::LaurentPoly poly;
};

qwhit_status fail(qwhit_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

template <class Fn>
qwhit_status guarded(Fn&& fn) {
    try {
        fn();
        return QWHIT_OK;
    } catch (const qw::pole_error& e) {
        return fail(QWHIT_ERR_POLE, e.what());
    } catch (const qw::degenerate_spec& e) {
        return fail(QWHIT_ERR_DEGENERATE, e.what());
    } catch (const qw::inexact_division& e) {
        return fail(QWHIT_ERR_INEXACT, e.what());
    } catch (const qw::division_by_zero& e) {
        return fail(QWHIT_ERR_POLE, e.what());
    } catch (const qw::invalid_argument& e) {
        return fail(QWHIT_ERR_INVALID, e.what());
    } catch (const std::exception& e) {
        return fail(QWHIT_ERR_INTERNAL, e.what());
    }
}

qwhit_status check_point(int rank, const long* point) {
    if (rank < 1 || rank > kMaxRank) return fail(QWHIT_ERR_INVALID, "rank must be between 1 and 4");
    if (!point) return fail(QWHIT_ERR_INVALID, "null point");
    for (int i = 0; i < rank; ++i)
        if (point[i] > kMaxEntry || point[i] < -kMaxEntry)
            return fail(QWHIT_ERR_INVALID, "entries are limited to |x| <= 8");
    return QWHIT_OK;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

} // namespace

extern "C" {

qwhit_status qwhit_whittaker(int rank, const long* point, int normalized, qwhit_value** out) {
    if (qwhit_status s = check_point(rank, point); s != QWHIT_OK) return s;
    if (!out) return fail(QWHIT_ERR_INVALID, "null output");
    return guarded([&] {
        qw::LatticePoint p(point, point + rank);
        qw::LaurentPoly value = normalized ? qw::whittaker_normalized(p) : qw::whittaker_gz(p);
        *out = reinterpret_cast<qwhit_value*>(new ValueImpl{std::move(value)});
    });
}

qwhit_status qwhit_macdonald(int rank, const long* lambda, const char* q_rational,
                             const char* t_rational, int use_qk, long k, qwhit_value** out) {
    if (qwhit_status s = check_point(rank, lambda); s != QWHIT_OK) return s;
    if (!out) return fail(QWHIT_ERR_INVALID, "null output");
    return guarded([&] {
        std::vector<long> lam(lambda, lambda + rank);
        qw::SpecPoint spec = qw::SpecPoint::t_zero();
        if (t_rational) {
            if (!q_rational) throw qw::invalid_argument("numeric t needs numeric q");
            spec = qw::SpecPoint::numeric(qw::parse_rat(q_rational), qw::parse_rat(t_rational));
        } else if (use_qk) {
            spec = qw::SpecPoint::t_qk(k);
        }
        auto& table = qw::MacdonaldTable::shared(spec);
        qw::LaurentPoly value = qw::extend_generalized(lam, rank, table);
        *out = reinterpret_cast<qwhit_value*>(new ValueImpl{std::move(value)});
    });
}

qwhit_status qwhit_demazure(int rank, const long* point, int include_prefactor, qwhit_value** out) {
    if (qwhit_status s = check_point(rank, point); s != QWHIT_OK) return s;
    if (!out) return fail(QWHIT_ERR_INVALID, "null output");
    return guarded([&] {
        qw::LatticePoint p(point, point + rank);
        qw::LaurentPoly value = include_prefactor
                                    ? qw::demazure_whittaker_value(p)
                                    : qw::demazure_whittaker_data(p).pi_char;
        *out = reinterpret_cast<qwhit_value*>(new ValueImpl{std::move(value)});
    });
}

qwhit_status qwhit_torus(int rank, const long* point, qwhit_value** out) {
    if (qwhit_status s = check_point(rank, point); s != QWHIT_OK) return s;
    if (!out) return fail(QWHIT_ERR_INVALID, "null output");
    return guarded([&] {
        qw::LatticePoint p(point, point + rank);
        *out = reinterpret_cast<qwhit_value*>(new ValueImpl{qw::whittaker_matrix_element(p)});
    });
}

qwhit_status qwhit_value_to_json(const qwhit_value* value, char** json_out) {
    if (!value || !json_out) return fail(QWHIT_ERR_INVALID, "null argument");
    return guarded([&] {
        *json_out = dup_string(qw::value_to_json(reinterpret_cast<const ValueImpl*>(value)->poly));
    });
}

qwhit_status qwhit_value_to_text(const qwhit_value* value, char** text_out) {
    if (!value || !text_out) return fail(QWHIT_ERR_INVALID, "null argument");
    return guarded([&] {
        *text_out = dup_string(qw::value_to_text(reinterpret_cast<const ValueImpl*>(value)->poly));
    });
}

qwhit_status qwhit_value_parse(const char* json, qwhit_value** out) {
    if (!json || !out) return fail(QWHIT_ERR_INVALID, "null argument");
    return guarded([&] {
        *out = reinterpret_cast<qwhit_value*>(new ValueImpl{qw::value_from_json(json)});
    });
}

int qwhit_value_equal(const qwhit_value* a, const qwhit_value* b) {
    if (!a || !b) return 0;
    return reinterpret_cast<const ValueImpl*>(a)->poly ==
                   reinterpret_cast<const ValueImpl*>(b)->poly
               ? 1
               : 0;
}

void qwhit_value_free(qwhit_value* value) {
    delete reinterpret_cast<ValueImpl*>(value);
}

void qwhit_string_free(char* text) {
    std::free(text);
}

qwhit_status qwhit_verify(const char* suite, int rank, int box_set, long box_lo, long box_hi,
                          long trunc, char** report_json, int* all_pass) {
    if (!suite || !report_json || !all_pass) return fail(QWHIT_ERR_INVALID, "null argument");
    if (rank != 0 && (rank < 2 || rank > kMaxRank))
        return fail(QWHIT_ERR_INVALID, "rank must be 0 (default) or between 2 and 4");
    return guarded([&] {
        qw::VerifyOptions opt;
        opt.rank = rank;
        if (box_set) {
            if (box_lo > box_hi) throw qw::invalid_argument("empty box");
            if (box_hi - box_lo > 2 * kMaxEntry) throw qw::invalid_argument("box too large");
            opt.box_lo = box_lo;
            opt.box_hi = box_hi;
            opt.box_set = true;
        }
        if (trunc > 0) opt.trunc = trunc;
        qw::Report rep = qw::run_suite(suite, opt);
        *report_json = dup_string(rep.to_json());
        *all_pass = rep.all_pass() ? 1 : 0;
    });
}

const char* qwhit_status_name(qwhit_status status) {
    switch (status) {
        case QWHIT_OK: return "ok";
        case QWHIT_ERR_INVALID: return "invalid argument";
        case QWHIT_ERR_POLE: return "pole";
        case QWHIT_ERR_DEGENERATE: return "degenerate spec";
        case QWHIT_ERR_INEXACT: return "inexact division";
        default: return "internal error";
    }
}

const char* qwhit_last_error(void) {
    return g_last_error.c_str();
}

} // extern "C"
