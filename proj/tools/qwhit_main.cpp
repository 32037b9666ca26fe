// Command-line front end; talks to the library exclusively through the
// public C interface in qwhit.h.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "qwhit.h"

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitInvalid = 2;

std::vector<long> parse_csv(const std::string& text) {
    std::vector<long> out;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (cur.empty()) throw CLI::ValidationError("empty entry in integer list");
            out.push_back(std::stol(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

int emit(const std::string& payload, const std::string& outfile) {
    if (outfile.empty()) {
        std::cout << payload << "\n";
    } else {
        std::ofstream os(outfile, std::ios::binary);
        if (!os) {
            std::cerr << "cannot open output file: " << outfile << "\n";
            return kExitInvalid;
        }
        os << payload << "\n";
    }
    return 0;
}

int emit_value(qwhit_value* value, const std::string& format, const std::string& outfile) {
    char* text = nullptr;
    qwhit_status st = format == "text" ? qwhit_value_to_text(value, &text)
                                       : qwhit_value_to_json(value, &text);
    qwhit_value_free(value);
    if (st != QWHIT_OK) {
        std::cerr << qwhit_status_name(st) << ": " << qwhit_last_error() << "\n";
        return kExitInvalid;
    }
    std::string payload(text);
    qwhit_string_free(text);
    return emit(payload, outfile);
}

int report_error(qwhit_status st) {
    std::cerr << qwhit_status_name(st) << ": " << qwhit_last_error() << "\n";
    return kExitInvalid;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-deformed Whittaker functions and their verification suites"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string format = "json", outfile;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", outfile, "write output to a file instead of stdout");

    int rank = 2;
    std::string point_csv, lambda_csv, q_str, t_str, suite = "all", box_str;
    long kval = 0, trunc = 8;

    auto* whit = app.add_subcommand("whittaker", "Whittaker function at a lattice point");
    whit->add_option("--rank", rank, "number of variables")->required();
    whit->add_option("--point", point_csv, "comma-separated lattice point")->required();
    bool normalized = false;
    whit->add_flag("--normalized", normalized, "multiply by prod (p_i - p_{i+1})_q!");

    auto* mac = app.add_subcommand("macdonald", "Macdonald polynomial at a spec");
    mac->add_option("--rank", rank, "number of variables")->required();
    mac->add_option("--lambda", lambda_csv, "weakly decreasing integer vector")->required();
    mac->add_option("--q", q_str, "numeric q as a/b (omit for symbolic q)");
    mac->add_option("--t", t_str, "numeric t as a/b (omit for t = 0)");
    mac->add_option("--k", kval, "use t = q^-k with symbolic q");

    auto* dem = app.add_subcommand("demazure", "character route at a dominant point");
    dem->add_option("--rank", rank, "number of variables")->required();
    dem->add_option("--point", point_csv, "dominant lattice point")->required();
    bool raw = false;
    dem->add_flag("--raw", raw, "emit pi(ch) without the q^c prefactor");

    auto* tor = app.add_subcommand("torus", "matrix-element route at a dominant point");
    tor->add_option("--rank", rank, "number of variables")->required();
    tor->add_option("--point", point_csv, "dominant lattice point")->required();

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("--suite", suite,
                    "fourway|eiglat|modpsi|spectra|selfdual|corSan|reclimt0|norms|noncomm|demlaws|all");
    int vrank = 0;
    ver->add_option("--rank", vrank, "restrict to one rank (default: 2 and 3)");
    ver->add_option("--box", box_str, "lattice box as lo..hi");
    ver->add_option("--trunc", trunc, "q-adic truncation order for series checks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (whit->parsed() || dem->parsed() || tor->parsed()) {
            std::vector<long> point = parse_csv(point_csv);
            if (static_cast<int>(point.size()) != rank) {
                std::cerr << "point length must equal rank\n";
                return kExitInvalid;
            }
            qwhit_value* value = nullptr;
            qwhit_status st;
            if (whit->parsed())
                st = qwhit_whittaker(rank, point.data(), normalized ? 1 : 0, &value);
            else if (dem->parsed())
                st = qwhit_demazure(rank, point.data(), raw ? 0 : 1, &value);
            else
                st = qwhit_torus(rank, point.data(), &value);
            if (st != QWHIT_OK) return report_error(st);
            return emit_value(value, format, outfile);
        }
        if (mac->parsed()) {
            std::vector<long> lambda = parse_csv(lambda_csv);
            if (static_cast<int>(lambda.size()) != rank) {
                std::cerr << "lambda length must equal rank\n";
                return kExitInvalid;
            }
            qwhit_value* value = nullptr;
            qwhit_status st = qwhit_macdonald(rank, lambda.data(),
                                              q_str.empty() ? nullptr : q_str.c_str(),
                                              t_str.empty() ? nullptr : t_str.c_str(),
                                              kval != 0 ? 1 : 0, kval, &value);
            if (st != QWHIT_OK) return report_error(st);
            return emit_value(value, format, outfile);
        }
        if (ver->parsed()) {
            int box_set = 0;
            long lo = 0, hi = 0;
            if (!box_str.empty()) {
                auto pos = box_str.find("..");
                if (pos == std::string::npos) {
                    std::cerr << "box must be of the form lo..hi\n";
                    return kExitInvalid;
                }
                lo = std::stol(box_str.substr(0, pos));
                hi = std::stol(box_str.substr(pos + 2));
                box_set = 1;
            }
            char* report = nullptr;
            int all_pass = 0;
            qwhit_status st = qwhit_verify(suite.c_str(), vrank, box_set, lo, hi, trunc,
                                           &report, &all_pass);
            if (st != QWHIT_OK) return report_error(st);
            std::string payload(report);
            qwhit_string_free(report);
            if (format == "text") {
                auto j = nlohmann::json::parse(payload);
                std::string text;
                for (const auto& c : j.at("checks"))
                    text += (c.at("status") == "pass" ? "pass  " : "FAIL  ") +
                            c.at("name").get<std::string>() + "  (" +
                            c.at("detail").get<std::string>() + ")\n";
                text += std::string(all_pass ? "all checks passed" : "FAILURES PRESENT");
                payload = std::move(text);
            }
            int rc = emit(payload, outfile);
            if (rc) return rc;
            return all_pass ? 0 : kExitVerifyFail;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
