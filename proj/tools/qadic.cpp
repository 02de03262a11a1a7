#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qadic/adic.hpp"
#include "qadic/errors.hpp"
#include "qadic/families.hpp"
#include "qadic/interleave.hpp"
#include "qadic/qseq.hpp"
#include "qadic/report.hpp"
#include "qadic/table.hpp"
#include "qadic/verify.hpp"

namespace {

using nlohmann::json;

// Writes `text` to --output or stdout; file problems are I/O errors.
void emit(const std::optional<std::string>& output, const std::string& text) {
    if (!output) {
        std::cout << text;
        return;
    }
    std::ofstream out(*output);
    if (!out) throw qadic::IoError("cannot open " + *output + " for writing");
    out << text;
    out.flush();
    if (!out) throw qadic::IoError("write failed for " + *output);
}

std::uint32_t parse_poly_flag(const std::string& text) {
    std::uint32_t value = 0;
    std::size_t pos = 0;
    try {
        value = static_cast<std::uint32_t>(std::stoul(text, &pos, 16));
    } catch (const std::exception&) {
        throw qadic::ParameterError("--poly: bad hex value \"" + text + "\"");
    }
    if (pos != text.size())
        throw qadic::ParameterError("--poly: bad hex value \"" + text + "\"");
    return value;
}

// Folds --generator / --poly overrides into a sequence spec string by
// appending the key=value pair to the family parameters.
std::string apply_overrides(std::string spec, std::optional<std::uint64_t> generator,
                            const std::optional<std::string>& poly) {
    auto plus = spec.find('+');
    std::string head = spec.substr(0, plus);
    std::string rest = plus == std::string::npos ? "" : spec.substr(plus);
    if (generator) {
        if (head.find("g=") != std::string::npos)
            throw qadic::ParameterError("--generator conflicts with g= in the spec");
        head += ",g=" + std::to_string(*generator);
    }
    if (poly) {
        if (head.find("poly=") != std::string::npos)
            throw qadic::ParameterError("--poly conflicts with poly= in the spec");
        head += ",poly=" + *poly;
    }
    return head + rest;
}

qadic::QseqData read_input(const std::string& path) { return qadic::read_qseq_file(path); }

std::string render_verdict_text(const qadic::TheoremVerdict& v) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(6);
    out << v.theorem;
    for (const auto& [key, value] : v.parameters) out << " " << key << "=" << value;
    out << ": " << (v.match ? "MATCH" : "MISMATCH") << "\n";
    if (v.computed) {
        out << "  computed: d = " << v.computed->divisor.to_decimal()
            << ", fc_log4 = " << v.computed->log4_value << "\n";
    }
    if (v.expected) {
        out << "  expected: d = " << v.expected->divisor.to_decimal()
            << ", fc_log4 = " << v.expected->log4_value << "\n";
    }
    if (!v.notes.empty()) out << "  notes: " << v.notes << "\n";
    return out.str();
}

std::string spectrum_csv(const qadic::QseqData& data) {
    std::ostringstream out;
    out << "tau,re,im\n";
    if (data.alphabet == 2) {
        qadic::BinarySequence s(data.digits);
        for (std::size_t tau = 0; tau < s.period(); ++tau)
            out << tau << "," << qadic::autocorr_binary(s, tau) << ",0\n";
    } else {
        qadic::QuaternarySequence q(data.digits);
        for (std::size_t tau = 0; tau < q.period(); ++tau) {
            auto a = qadic::autocorr_quaternary(q, tau);
            out << tau << "," << a.re << "," << a.im << "\n";
        }
    }
    return out.str();
}

json spectrum_json(const qadic::QseqData& data) {
    json spectrum = json::array();
    if (data.alphabet == 2) {
        qadic::BinarySequence s(data.digits);
        for (std::size_t tau = 0; tau < s.period(); ++tau)
            spectrum.push_back({qadic::autocorr_binary(s, tau), 0});
        return {{"period", s.period()}, {"alphabet", 2}, {"autocorr_spectrum", spectrum}};
    }
    qadic::QuaternarySequence q(data.digits);
    for (std::size_t tau = 0; tau < q.period(); ++tau) {
        auto a = qadic::autocorr_quaternary(q, tau);
        spectrum.push_back({a.re, a.im});
    }
    return {{"period", q.period()}, {"alphabet", 4}, {"autocorr_spectrum", spectrum}};
}

struct VerifyArgs {
    std::string theorem;
    std::optional<std::string> a, b, which;
    std::optional<std::uint64_t> k, l, p, n, trials, seed, generator;
    std::optional<std::int64_t> e;
    std::optional<std::string> poly;
};

template <typename T>
T required(const std::optional<T>& value, const char* flag, const std::string& theorem) {
    if (!value) throw qadic::ParameterError("verify " + theorem + ": missing " + flag);
    return *value;
}

// Runs one verify subcommand; fills text and json output and returns the
// match flag that decides the exit code.
bool run_verify(const VerifyArgs& args, std::string& text, json& record) {
    const std::string& id = args.theorem;
    auto poly32 = [&]() -> std::optional<std::uint32_t> {
        if (!args.poly) return std::nullopt;
        return parse_poly_flag(*args.poly);
    }();

    auto sequence_arg = [&](const std::optional<std::string>& spec, const char* flag) {
        return qadic::parse_sequence_spec(required(spec, flag, id));
    };

    if (id == "cor5" || id == "cor6" || id == "cor7" || id == "thm3") {
        qadic::TheoremVerdict v;
        if (id == "cor5") v = qadic::verify_cor5(sequence_arg(args.a, "--a"), sequence_arg(args.b, "--b"));
        else if (id == "cor6")
            v = qadic::verify_cor6(sequence_arg(args.a, "--a"), sequence_arg(args.b, "--b"),
                                   required(args.e, "--e", id));
        else if (id == "cor7") v = qadic::verify_cor7(sequence_arg(args.a, "--a"));
        else v = qadic::verify_thm3(sequence_arg(args.a, "--a"), sequence_arg(args.b, "--b"));
        text = render_verdict_text(v);
        record = qadic::to_json(v);
        return v.match;
    }
    if (id == "thm8") {
        auto v = qadic::verify_thm8(static_cast<unsigned>(required(args.k, "--k", id)), args.l,
                                    poly32);
        text = render_verdict_text(v);
        record = qadic::to_json(v);
        return v.match;
    }
    if (id == "lemma9") {
        auto c = qadic::verify_lemma9(static_cast<unsigned>(required(args.k, "--k", id)), poly32);
        std::ostringstream out;
        out << "lemma9 k=" << c.k << ": " << (c.holds ? "HOLDS" : "FAILS") << "\n"
            << "  R = " << c.r.to_decimal() << ", Rbar = " << c.r_bar.to_decimal()
            << ", R*Rbar = " << c.product.to_decimal() << ", expected = "
            << c.expected.to_decimal() << " (mod " << c.modulus.to_decimal() << ")\n";
        text = out.str();
        record = qadic::to_json(c);
        return c.holds;
    }
    if (id == "thm10") {
        auto v = qadic::verify_thm10(required(args.p, "--p", id));
        text = render_verdict_text(v);
        record = qadic::to_json(v);
        return v.match;
    }
    if (id == "thm11") {
        auto which = qadic::theorem11_case_from_string(required(args.which, "--case", id));
        if (!which) throw qadic::ParameterError("verify thm11: unknown case");
        auto v = qadic::verify_thm11(required(args.p, "--p", id), *which);
        text = render_verdict_text(v);
        record = qadic::to_json(v);
        return v.match;
    }
    if (id == "thm12") {
        auto v = qadic::verify_thm12(required(args.p, "--p", id), args.generator);
        text = render_verdict_text(v);
        record = qadic::to_json(v);
        return v.match;
    }
    if (id == "lemma4") {
        std::uint64_t n = required(args.n, "--n", id);
        bool holds = qadic::verify_lemma4(n);
        text = "lemma4 n=" + std::to_string(n) + ": " + (holds ? "HOLDS" : "FAILS") + "\n";
        record = {{"lemma", "lemma4"}, {"n", n}, {"holds", holds}};
        return holds;
    }
    if (id == "lemma11") {
        auto v = qadic::verify_lemma11(required(args.p, "--p", id), args.generator);
        std::ostringstream out;
        out << "lemma11 p=" << v.p << " g=" << v.g << ": " << (v.match ? "MATCH" : "MISMATCH")
            << " (c = " << v.c << ", d = " << v.d << ", table "
            << (v.table_match ? "ok" : "DIFFERS") << ", periods "
            << (v.periods_match ? "ok" : "DIFFER") << ")\n";
        text = out.str();
        record = qadic::to_json(v);
        return v.match;
    }
    if (id == "lemma1" || id == "cor2") {
        std::uint64_t n = required(args.n, "--n", id);
        std::uint64_t trials = args.trials.value_or(100);
        std::uint64_t seed = args.seed.value_or(0);
        auto result = id == "lemma1" ? qadic::run_lemma1_suite(n, trials, seed)
                                     : qadic::run_cor2_suite(n, trials, seed);
        std::ostringstream out;
        out << id << " n=" << n << " trials=" << result.trials << " seed=" << seed << ": "
            << result.failures << " failures\n";
        text = out.str();
        record = {{"suite", id},    {"n", n},
                  {"trials", result.trials}, {"seed", seed},
                  {"failures", result.failures}};
        return result.failures == 0;
    }
    throw qadic::ParameterError("verify: unknown theorem \"" + id + "\"");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interleaved quaternary sequences and exact 4-adic complexity"};
    app.require_subcommand(1);

    std::optional<std::string> output;
    auto add_output = [&output](CLI::App* cmd) {
        cmd->add_option("--output", output, "write results to a file instead of stdout");
    };

    // gen
    auto* gen = app.add_subcommand("gen", "generate a binary sequence as QSEQ");
    add_output(gen);
    std::string gen_spec;
    std::optional<std::uint64_t> gen_generator;
    std::optional<std::string> gen_poly;
    gen->add_option("spec", gen_spec,
                    "family spec, e.g. \"legendre:p=7,variant=ell+L^2\"")->required();
    gen->add_option("--generator", gen_generator, "primitive root override (hall)");
    gen->add_option("--poly", gen_poly, "primitive polynomial override, hex (m)");

    // interleave
    auto* il = app.add_subcommand("interleave", "interleave two binary QSEQ files");
    add_output(il);
    std::string il_a, il_b;
    il->add_option("a", il_a, "first QSEQ file (alphabet 2)")->required();
    il->add_option("b", il_b, "second QSEQ file (alphabet 2)")->required();

    // autocorr
    auto* ac = app.add_subcommand("autocorr", "autocorrelation spectrum of a QSEQ file");
    add_output(ac);
    std::string ac_input, ac_format = "csv";
    ac->add_option("input", ac_input, "QSEQ file")->required();
    ac->add_option("--format", ac_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    // complexity
    auto* cx = app.add_subcommand("complexity", "full 4-adic analysis record (JSON)");
    add_output(cx);
    std::string cx_input;
    cx->add_option("input", cx_input, "QSEQ file")->required();

    // verify
    auto* vf = app.add_subcommand("verify", "check one result against computation");
    add_output(vf);
    VerifyArgs vargs;
    std::string vf_format = "text";
    vf->add_option("theorem", vargs.theorem,
                   "cor5|cor6|cor7|thm3|thm8|lemma9|thm10|thm11|thm12|lemma4|lemma11|lemma1|cor2")
        ->required();
    vf->add_option("--a", vargs.a, "first sequence spec");
    vf->add_option("--b", vargs.b, "second sequence spec");
    vf->add_option("--e", vargs.e, "shift amount (cor6)");
    vf->add_option("--k", vargs.k, "GF(2^k) degree");
    vf->add_option("--l", vargs.l, "shift (thm8); all shifts when omitted");
    vf->add_option("--p", vargs.p, "prime parameter");
    vf->add_option("--n", vargs.n, "period (lemma4, suites)");
    vf->add_option("--case", vargs.which, "thm11 case name");
    vf->add_option("--trials", vargs.trials, "suite trial count (default 100)");
    vf->add_option("--seed", vargs.seed, "suite RNG seed (default 0)");
    vf->add_option("--generator", vargs.generator, "primitive root override (hall)");
    vf->add_option("--poly", vargs.poly, "primitive polynomial override, hex");
    vf->add_option("--format", vf_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // table
    auto* tb = app.add_subcommand("table", "batch complexity table");
    add_output(tb);
    std::string tb_family, tb_pairs, tb_format = "csv";
    std::vector<std::uint64_t> tb_params;
    std::optional<std::string> tb_spec;
    tb->add_option("--family", tb_family, "m|legendre|twin|hall");
    tb->add_option("--params", tb_params, "parameter list")->delimiter(',');
    tb->add_option("--pairs", tb_pairs, "self|shifts|tau|theorem11|samples");
    tb->add_option("--spec", tb_spec, "JSON file with {family, params, pairs}");
    tb->add_option("--format", tb_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);

        if (gen->parsed()) {
            auto s = qadic::parse_sequence_spec(apply_overrides(gen_spec, gen_generator, gen_poly));
            std::ostringstream out;
            qadic::write_qseq(out, 2, s.bits());
            emit(output, out.str());
            return 0;
        }
        if (il->parsed()) {
            auto da = read_input(il_a);
            auto db = read_input(il_b);
            if (da.alphabet != 2 || db.alphabet != 2)
                throw qadic::ParameterError("interleave: inputs must be alphabet-2 QSEQ files");
            auto w = qadic::interleave(qadic::BinarySequence(da.digits),
                                       qadic::BinarySequence(db.digits));
            std::ostringstream out;
            qadic::write_qseq(out, 4, w.digits());
            emit(output, out.str());
            return 0;
        }
        if (ac->parsed()) {
            auto data = read_input(ac_input);
            emit(output, ac_format == "csv" ? spectrum_csv(data)
                                            : spectrum_json(data).dump(2) + "\n");
            return 0;
        }
        if (cx->parsed()) {
            auto data = read_input(cx_input);
            auto record = qadic::analysis_record(qadic::QuaternarySequence(data.digits));
            emit(output, record.dump(2) + "\n");
            return 0;
        }
        if (vf->parsed()) {
            std::string text;
            json record;
            bool ok = run_verify(vargs, text, record);
            emit(output, vf_format == "text" ? text : record.dump(2) + "\n");
            return ok ? 0 : 1;
        }
        if (tb->parsed()) {
            qadic::TableSpec spec;
            if (tb_spec) {
                std::ifstream in(*tb_spec);
                if (!in) throw qadic::IoError("cannot open " + *tb_spec);
                json j;
                try {
                    in >> j;
                } catch (const json::exception& e) {
                    throw qadic::IoError(*tb_spec + ": " + e.what());
                }
                spec.family = j.at("family").get<std::string>();
                spec.params = j.at("params").get<std::vector<std::uint64_t>>();
                spec.pairs = j.at("pairs").get<std::string>();
            } else {
                if (tb_family.empty() || tb_pairs.empty() || tb_params.empty())
                    throw qadic::ParameterError(
                        "table: need --family, --params and --pairs (or --spec)");
                spec = {tb_family, tb_params, tb_pairs};
            }
            auto rows = qadic::run_table(spec);
            if (tb_format == "csv") {
                std::ostringstream out;
                qadic::write_table_csv(out, rows);
                emit(output, out.str());
            } else {
                emit(output, qadic::table_to_json(rows).dump(2) + "\n");
            }
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const qadic::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const qadic::ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
