// mws: construct / verify / bounds / spectrum for maximum weight spectrum codes.
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "mws/bounds.hpp"
#include "mws/construct.hpp"
#include "mws/io.hpp"

using namespace mws;
using nlohmann::ordered_json;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitVerification = 4;

std::string big(const BigInt& v) { return v.str(); }

struct Loaded {
    std::optional<LinearCode> code;      // present when the input is (or fits as) a matrix
    std::optional<ProjectiveSystem> sys; // present when the input is (or fits as) a system
};

// Sniffs the format: SystemFiles are JSON objects, MatrixFiles start with digits.
Loaded load_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path, 0, 0);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    std::size_t pos = text.find_first_not_of(" \t\r\n");
    Loaded out;
    std::istringstream is(text);
    if (pos != std::string::npos && text[pos] == '{') {
        out.sys = read_system(is);
        if (out.sys->n() <= kMaxMaterializedLength) {
            try {
                out.code = code_from_system(*out.sys);
            } catch (const TooLargeToEnumerate&) {
            }
        }
    } else {
        out.code = read_matrix(is);
        try {
            out.sys = system_from_code(*out.code);
        } catch (const DegenerateCode&) {
        }
    }
    return out;
}

void write_output(const std::string& path, const std::string& format, const Loaded& obj) {
    std::ofstream os(path);
    if (!os) throw ParseError("cannot open " + path + " for writing", 0, 0);
    if (format == "matrix") {
        if (!obj.code) throw TooLongToMaterialize("system too long to emit as a matrix");
        write_matrix(os, *obj.code);
    } else {
        if (!obj.sys) throw DegenerateCode("code has a zero column; no projective system");
        write_system(os, *obj.sys);
    }
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e)) return kExitParse;
    if (dynamic_cast<const NotMWS*>(&e) || dynamic_cast<const PropertyAViolated*>(&e) ||
        dynamic_cast<const PropertyBViolated*>(&e) || dynamic_cast<const PairwiseVMismatch*>(&e))
        return kExitVerification;
    return kExitInfeasible;
}

struct Options {
    std::string method, in_path, out_path;
    std::string format = "system";
    std::string mode = "auto";
    uint32_t q = 0;
    int k = 0;
    unsigned t = 0;
    long seed = 0;  // reserved; all algorithms are deterministic
    bool verbose = false;
};

void emit(const ordered_json& j, bool verbose) {
    if (verbose) std::cout << j.dump(2) << "\n";
    else std::cout << j.dump() << "\n";
}

int cmd_construct(const Options& opt) {
    Loaded obj;
    if (opt.method == "geometric") obj.sys = geometric(opt.q, opt.k);
    else if (opt.method == "k2") obj.sys = optimal_k2(opt.q);
    else if (opt.method == "fano") obj.sys = fano_732();
    else if (opt.method == "pg23") obj.sys = plane_3233();
    else if (opt.method == "triangle") obj.sys = triangle_3d(opt.q);
    else if (opt.method == "lift") {
        if (opt.in_path.empty()) throw ParseError("--method lift needs --in", 0, 0);
        Loaded base = load_input(opt.in_path);
        if (!base.sys) throw DegenerateCode("lift input has no projective system");
        obj.sys = lift(*base.sys, opt.t);
    } else if (opt.method == "algebraic") {
        auto states = algebraic(opt.q, opt.k);
        obj.code = states.back().code;
        obj.sys = system_from_code(*obj.code);
    }
    if (obj.sys && !obj.code && obj.sys->n() <= kMaxMaterializedLength) {
        try {
            obj.code = code_from_system(*obj.sys);
        } catch (const TooLargeToEnumerate&) {
        }
    }
    BigInt n = obj.sys ? obj.sys->n() : BigInt(obj.code->n);
    uint32_t q = obj.sys ? obj.sys->q() : obj.code->field.q();
    int k = obj.sys ? obj.sys->k() : obj.code->k;
    bool verified = obj.sys ? mws_via_characters(*obj.sys).mws : is_mws(*obj.code);
    if (!opt.out_path.empty()) write_output(opt.out_path, opt.format, obj);

    std::cout << "method: " << opt.method << "\n"
              << "code: [" << big(n) << "," << k << "]_" << q << "\n"
              << "MWS: " << (verified ? "true" : "false") << "\n";
    ordered_json j{{"command", "construct"}, {"method", opt.method}, {"q", q}, {"k", k},
                   {"n", big(n)}, {"mws", verified}};
    if (!opt.out_path.empty()) {
        j["out"] = opt.out_path;
        j["format"] = opt.format;
    }
    emit(j, opt.verbose);
    return verified ? 0 : kExitVerification;
}

int cmd_verify(const Options& opt) {
    Loaded obj = load_input(opt.in_path);
    uint32_t q = obj.sys ? obj.sys->q() : obj.code->field.q();
    int k = obj.sys ? obj.sys->k() : obj.code->k;
    BigInt n = obj.sys ? obj.sys->n() : BigInt(obj.code->n);
    BigInt th = theta(q, k - 1);

    std::string mode = opt.mode;
    if (mode == "auto") {
        bool words_ok = obj.code && th <= kMaxRepresentatives;
        bool chars_ok = static_cast<bool>(obj.sys);
        mode = words_ok && chars_ok ? "both" : words_ok ? "codewords" : "characters";
    }
    if ((mode == "codewords" || mode == "both") && !obj.code)
        throw TooLongToMaterialize("codeword engine needs a materializable code");
    if ((mode == "characters" || mode == "both") && !obj.sys)
        throw DegenerateCode("character engine needs a projective system");

    std::optional<bool> by_words, by_chars;
    std::optional<std::size_t> distinct;
    if (mode == "codewords" || mode == "both") {
        auto ws = weight_set(*obj.code);
        distinct = ws.size();
        by_words = BigInt(ws.size()) == th;
    }
    if (mode == "characters" || mode == "both") {
        auto verdict = mws_via_characters(*obj.sys);
        by_chars = verdict.mws;
        if (!distinct) {
            std::set<BigInt> distinct_weights(verdict.weights.begin(), verdict.weights.end());
            distinct = distinct_weights.size();
        }
    }
    bool mws = by_words.value_or(true) && by_chars.value_or(true);

    std::optional<bool> prop_a, prop_b;
    if (obj.code && pow_big(BigInt(q), static_cast<unsigned long>(k)) <= kMaxRepresentatives) {
        prop_a = property_A(*obj.code);
        prop_b = property_B(*obj.code);
    }
    BigInt lb = k >= 2 ? lower_bound(q, k) : BigInt(1);

    std::cout << "code: [" << big(n) << "," << k << "]_" << q << "\n"
              << "weights: " << *distinct << "/" << big(th) << " distinct\n"
              << "MWS: " << (mws ? "true" : "false") << " (engine: " << mode << ")\n";
    if (prop_a) std::cout << "property (A): " << (*prop_a ? "true" : "false") << "\n";
    if (prop_b) std::cout << "property (B): " << (*prop_b ? "true" : "false") << "\n";
    std::cout << "length bound: n = " << big(n) << " vs lower bound " << big(lb) << "\n";

    ordered_json j{{"command", "verify"}, {"q", q}, {"k", k}, {"n", big(n)},
                   {"theta", big(th)}, {"distinct_weights", *distinct},
                   {"mws", mws}, {"engine", mode}, {"lower_bound", big(lb)}};
    if (by_words) j["mws_by_codewords"] = *by_words;
    if (by_chars) j["mws_by_characters"] = *by_chars;
    if (prop_a) j["property_A"] = *prop_a;
    if (prop_b) j["property_B"] = *prop_b;
    emit(j, opt.verbose);
    return mws ? 0 : kExitVerification;
}

int cmd_bounds(const Options& opt) {
    BoundsReport r = bounds_report(opt.q, opt.k);
    std::cout << "q=" << r.q << " k=" << r.k << " theta=" << big(r.theta_val) << "\n"
              << "lb_general: " << big(r.lb_general) << "\n"
              << "lb_propA: " << big(r.lb_propA) << "\n";
    if (r.geometric_n) std::cout << "geometric_n: " << big(*r.geometric_n) << "\n";
    if (r.triangle_n) std::cout << "triangle_n: " << big(*r.triangle_n) << "\n";
    if (r.lift_chain_n) std::cout << "lift_chain_n: " << big(*r.lift_chain_n) << "\n";
    std::cout << "D_k: " << big(r.D_k) << "\nR_k: " << big(r.R_k) << "\n"
              << "n_rec: " << big(r.n_rec) << "\nT_rec: " << big(r.T_rec) << "\n";
    ordered_json j{{"command", "bounds"}, {"q", r.q}, {"k", r.k}, {"theta", big(r.theta_val)},
                   {"lb_general", big(r.lb_general)}, {"lb_propA", big(r.lb_propA)},
                   {"D_k", big(r.D_k)}, {"R_k", big(r.R_k)},
                   {"n_rec", big(r.n_rec)}, {"T_rec", big(r.T_rec)}};
    if (r.geometric_n) j["geometric_n"] = big(*r.geometric_n);
    if (r.triangle_n) j["triangle_n"] = big(*r.triangle_n);
    if (r.lift_chain_n) j["lift_chain_n"] = big(*r.lift_chain_n);
    emit(j, opt.verbose);
    return 0;
}

int cmd_spectrum(const Options& opt) {
    Loaded obj = load_input(opt.in_path);
    if (!obj.code) throw TooLongToMaterialize("spectrum needs a materializable code");
    const LinearCode& C = *obj.code;
    uint32_t q = C.field.q();
    std::map<std::int64_t, BigInt> A;
    for_each_codeword(C, [&](const Codeword& c) {
        std::int64_t w = weight(c);
        if (w > 0) A[w] += 1;
    });
    BigInt total = 0;
    bool divisible = true;
    for (const auto& [w, a] : A) {
        total += a;
        if (a % (q - 1) != 0) divisible = false;
    }
    bool sum_ok = total == pow_big(BigInt(q), static_cast<unsigned long>(C.k)) - 1;

    std::cout << "code: [" << C.n << "," << C.k << "]_" << q << "\n";
    for (const auto& [w, a] : A) std::cout << "A_" << w << " = " << big(a) << "\n";
    std::cout << "all A_i divisible by q-1: " << (divisible ? "true" : "false") << "\n"
              << "sum A_i = q^k - 1: " << (sum_ok ? "true" : "false") << "\n";
    ordered_json spectrum = ordered_json::object();
    for (const auto& [w, a] : A) spectrum[std::to_string(w)] = big(a);
    ordered_json j{{"command", "spectrum"}, {"q", q}, {"k", C.k}, {"n", C.n},
                   {"spectrum", spectrum}, {"divisible_by_q_minus_1", divisible},
                   {"sum_is_qk_minus_1", sum_ok}};
    emit(j, opt.verbose);
    return divisible && sum_ok ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximum weight spectrum codes: construct, verify, bounds, spectrum"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--verbose", opt.verbose, "pretty-print the machine-readable block");
        sub->add_option("--seed", opt.seed, "reserved; all algorithms are deterministic");
    };

    auto* construct = app.add_subcommand("construct", "build an MWS code");
    construct->add_option("--method", opt.method, "construction family")
        ->required()
        ->check(CLI::IsMember({"geometric", "k2", "fano", "pg23", "triangle", "lift", "algebraic"}));
    construct->add_option("--q", opt.q, "field size");
    construct->add_option("--k", opt.k, "dimension");
    construct->add_option("--t", opt.t, "lift parameter (requires n < q^t)");
    construct->add_option("--in", opt.in_path, "input file (lift)");
    construct->add_option("--out", opt.out_path, "output file");
    construct->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"matrix", "system"}));
    add_common(construct);

    auto* verify = app.add_subcommand("verify", "check the MWS property of a stored code");
    verify->add_option("--in", opt.in_path, "input file")->required();
    verify->add_option("--mode", opt.mode, "verification engine")
        ->check(CLI::IsMember({"auto", "codewords", "characters", "both"}));
    add_common(verify);

    auto* bounds = app.add_subcommand("bounds", "print length bounds and recurrence estimates");
    bounds->add_option("--q", opt.q, "field size")->required();
    bounds->add_option("--k", opt.k, "dimension")->required();
    add_common(bounds);

    auto* spectrum = app.add_subcommand("spectrum", "print the weight distribution A(C)");
    spectrum->add_option("--in", opt.in_path, "input file")->required();
    add_common(spectrum);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitParse;
    }

    try {
        if (construct->parsed()) return cmd_construct(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (bounds->parsed()) return cmd_bounds(opt);
        return cmd_spectrum(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}
