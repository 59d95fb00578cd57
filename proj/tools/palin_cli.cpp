// Command-line front end for libpalin; talks to the library exclusively
// through the C interface in palin/palin.h.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "palin/palin.h"

namespace {

using nlohmann::json;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void fail(palin_status status, const std::string& context) {
    const int code = (status == PALIN_ERR_VERIFY) ? kExitVerifyFailure : kExitUsage;
    throw CliError{code, context + ": " + palin_status_str(status)};
}

// Owns a char* produced by the library.
struct Text {
    char* ptr = nullptr;
    ~Text() { palin_free(ptr); }
    std::string str() const { return ptr ? ptr : ""; }
};

std::string call1(palin_status (*fn)(const char*, char**), const std::string& arg,
                  const std::string& what) {
    Text out;
    if (const palin_status s = fn(arg.c_str(), &out.ptr); s != PALIN_OK) fail(s, what);
    return out.str();
}

// Canonical partition text -> JSON array of parts.
json partition_json(const std::string& text) {
    json arr = json::array();
    if (text == "-") return arr;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        arr.push_back(std::stoull(text.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return arr;
}

json fraction_json(const std::string& text) {
    const std::size_t slash = text.find('/');
    return json{{"p", text.substr(0, slash)}, {"q", text.substr(slash + 1)}};
}

void emit(const std::string& plain, const json& obj, const std::string& format) {
    if (format == "json")
        std::cout << obj.dump() << "\n";
    else
        std::cout << plain << "\n";
}

unsigned long long diagram_width_from_env() {
    const char* env = std::getenv("PALIN_DIAGRAM_WIDTH");
    if (!env || !*env) return 0;
    char* end = nullptr;
    const unsigned long long width = std::strtoull(env, &end, 10);
    return (end && *end == '\0') ? width : 0;
}

void run_palindromes(unsigned long long n, bool plan, const std::string& format) {
    if (plan) {
        Text csv;
        if (const palin_status s = palin_plan_table_csv(n, &csv.ptr); s != PALIN_OK)
            fail(s, "palindromes --plan");
        std::cout << csv.str();
        return;
    }
    palin_stream* stream = nullptr;
    if (const palin_status s = palin_stream_palindromes(n, &stream); s != PALIN_OK)
        fail(s, "palindromes");
    std::unique_ptr<palin_stream, decltype(&palin_stream_close)> guard(stream,
                                                                       &palin_stream_close);
    json items = json::array();
    if (format == "csv") std::cout << "partition,word,length\n";
    for (;;) {
        Text part;
        const palin_status s = palin_stream_next(stream, &part.ptr);
        if (s == PALIN_END) break;
        if (s != PALIN_OK) fail(s, "palindromes");
        if (format == "plain") {
            std::cout << part.str() << "\n";
            continue;
        }
        const std::string word = call1(palin_encode, part.str(), "palindromes");
        const std::size_t length = (word == "-") ? 0 : word.size();
        if (format == "csv")
            std::cout << '"' << part.str() << "\"," << word << ',' << length << "\n";
        else
            items.push_back(
                {{"partition", partition_json(part.str())}, {"word", word}, {"length", length}});
    }
    if (format == "json") std::cout << json{{"n", n}, {"partitions", items}}.dump() << "\n";
}

void run_series(const std::string& kind, unsigned long long max_degree,
                const std::string& format) {
    palin_series* series = nullptr;
    if (const palin_status s = palin_series_create(kind.c_str(), max_degree, &series);
        s != PALIN_OK)
        fail(s, "series");
    std::unique_ptr<palin_series, decltype(&palin_series_close)> guard(series,
                                                                       &palin_series_close);
    std::vector<std::string> coeffs;
    coeffs.reserve(max_degree + 1);
    for (unsigned long long d = 0; d <= max_degree; ++d) {
        Text c;
        if (const palin_status s = palin_series_coeff(series, d, &c.ptr); s != PALIN_OK)
            fail(s, "series");
        coeffs.push_back(c.str());
    }
    if (format == "json") {
        std::cout << json{{"series", kind}, {"max_degree", max_degree}, {"coefficients", coeffs}}
                         .dump()
                  << "\n";
        return;
    }
    if (format == "csv") std::cout << "n,value\n";
    for (unsigned long long d = 1; d <= max_degree; ++d) {
        if (format == "csv")
            std::cout << d << ',' << coeffs[d] << "\n";
        else  // plain and bfile are both OEIS b-file lines "n value"
            std::cout << d << ' ' << coeffs[d] << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Exact combinatorics of integer partitions, boundary words, and the "
                 "Calkin-Wilf tree"};
    app.require_subcommand(1);
    std::string partition, word, fraction, element, kind;
    unsigned long long n = 0;
    unsigned long long max_degree = 40;
    unsigned long long verify_max = 35;
    bool plan = false;
    std::string format = "plain";

    auto* encode_cmd = app.add_subcommand("encode", "Boundary word of a partition");
    encode_cmd->add_option("partition", partition)->required();

    auto* decode_cmd = app.add_subcommand("decode", "Partition of a boundary word");
    decode_cmd->add_option("word", word)->required();

    auto* reverse_cmd =
        app.add_subcommand("reverse", "Partition coded by the reversed boundary word");
    reverse_cmd->add_option("partition", partition)->required();

    auto* conj_cmd = app.add_subcommand("conjugate", "Transpose of a partition");
    conj_cmd->add_option("partition", partition)->required();

    auto* klein_cmd =
        app.add_subcommand("klein", "Apply a word symmetry (E, R, I, RI) to a partition");
    klein_cmd->add_option("element", element)->required();
    klein_cmd->add_option("partition", partition)->required();

    auto* pal_cmd = app.add_subcommand("palindromes", "All palindrome partitions of n");
    pal_cmd->add_option("n", n)->required();
    pal_cmd->add_flag("--plan", plan, "Print the generation plan table as CSV");

    auto* series_cmd = app.add_subcommand("series", "Coefficients of the pp or r series");
    series_cmd->add_option("kind", kind)->required()->check(CLI::IsMember({"pp", "r"}));
    series_cmd->add_option("--max", max_degree, "Truncation degree")->required();

    auto* pl_cmd = app.add_subcommand("pl", "Number of distinct boundary-word lengths");
    pl_cmd->add_option("n", n)->required();

    auto* pp_cmd = app.add_subcommand("pp", "Number of palindrome partitions of n");
    pp_cmd->add_option("n", n)->required();

    auto* wit_cmd =
        app.add_subcommand("witness", "A palindrome partition of n besides (n) and (1^n)");
    wit_cmd->add_option("n", n)->required();

    auto* cw_cmd = app.add_subcommand("cw", "Calkin-Wilf tree navigation");
    cw_cmd->require_subcommand(1);
    auto* cw_eval = cw_cmd->add_subcommand("eval", "Fraction at the end of a path");
    cw_eval->add_option("word", word)->required();
    auto* cw_locate = cw_cmd->add_subcommand("locate", "Path and index of a fraction");
    cw_locate->add_option("fraction", fraction)->required();
    auto* cw_partition = cw_cmd->add_subcommand("partition", "Partition at the end of a path");
    cw_partition->add_option("word", word)->required();
    auto* cw_classify = cw_cmd->add_subcommand("classify", "Palindromic/antipalindromic class");
    cw_classify->add_option("word", word)->required();

    auto* diagram_cmd =
        app.add_subcommand("diagram", "Young diagram with the boundary word annotated");
    diagram_cmd->add_option("partition", partition)->required();

    auto* verify_cmd =
        app.add_subcommand("verify", "Cross-check fast routes against brute force");
    verify_cmd->add_option("--max", verify_max, "Largest n to check (default 35)");

    for (CLI::App* cmd : {encode_cmd, decode_cmd, reverse_cmd, conj_cmd, klein_cmd, pl_cmd,
                          pp_cmd, wit_cmd, cw_eval, cw_locate, cw_partition, cw_classify})
        cmd->add_option("--format", format)->check(CLI::IsMember({"plain", "json"}));
    pal_cmd->add_option("--format", format)->check(CLI::IsMember({"plain", "csv", "json"}));
    series_cmd->add_option("--format", format)
        ->check(CLI::IsMember({"plain", "csv", "json", "bfile"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help or the error message
        return code == 0 ? 0 : kExitUsage;
    }

    if (encode_cmd->parsed()) {
        const std::string out = call1(palin_encode, partition, "encode");
        emit(out, json{{"word", out}}, format);
    } else if (decode_cmd->parsed()) {
        const std::string out = call1(palin_decode, word, "decode");
        emit(out, json{{"partition", partition_json(out)}}, format);
    } else if (reverse_cmd->parsed()) {
        const std::string out = call1(palin_reverse_partition, partition, "reverse");
        emit(out, json{{"partition", partition_json(out)}}, format);
    } else if (conj_cmd->parsed()) {
        const std::string out = call1(palin_conjugate, partition, "conjugate");
        emit(out, json{{"partition", partition_json(out)}}, format);
    } else if (klein_cmd->parsed()) {
        Text out;
        if (const palin_status s = palin_klein(element.c_str(), partition.c_str(), &out.ptr);
            s != PALIN_OK)
            fail(s, "klein");
        emit(out.str(), json{{"partition", partition_json(out.str())}}, format);
    } else if (pal_cmd->parsed()) {
        run_palindromes(n, plan, format);
    } else if (series_cmd->parsed()) {
        run_series(kind, max_degree, format);
    } else if (pl_cmd->parsed()) {
        unsigned long long out = 0;
        if (const palin_status s = palin_pl_count(n, &out); s != PALIN_OK) fail(s, "pl");
        emit(std::to_string(out), json{{"value", out}}, format);
    } else if (pp_cmd->parsed()) {
        Text out;
        if (const palin_status s = palin_pp_count(n, &out.ptr); s != PALIN_OK) fail(s, "pp");
        emit(out.str(), json{{"value", out.str()}}, format);
    } else if (wit_cmd->parsed()) {
        Text out;
        if (const palin_status s = palin_witness(n, &out.ptr); s != PALIN_OK) fail(s, "witness");
        const json j = (out.str() == "-") ? json{{"partition", nullptr}}
                                          : json{{"partition", partition_json(out.str())}};
        emit(out.str(), j, format);
    } else if (cw_eval->parsed()) {
        const std::string out = call1(palin_cw_eval, word, "cw eval");
        emit(out, json{{"fraction", fraction_json(out)}}, format);
    } else if (cw_locate->parsed()) {
        Text path, index;
        if (const palin_status s = palin_cw_locate(fraction.c_str(), &path.ptr, &index.ptr);
            s != PALIN_OK)
            fail(s, "cw locate");
        emit(path.str() + "\n" + index.str(),
             json{{"word", path.str()}, {"index", index.str()}}, format);
    } else if (cw_partition->parsed()) {
        const std::string out = call1(palin_cw_partition, word, "cw partition");
        emit(out, json{{"partition", partition_json(out)}}, format);
    } else if (cw_classify->parsed()) {
        const std::string out = call1(palin_classify_word, word, "cw classify");
        emit(out, json{{"class", out}}, format);
    } else if (diagram_cmd->parsed()) {
        Text out;
        if (const palin_status s =
                palin_diagram(partition.c_str(), diagram_width_from_env(), &out.ptr);
            s != PALIN_OK)
            fail(s, "diagram");
        std::cout << out.str();
    } else if (verify_cmd->parsed()) {
        Text report;
        const palin_status s = palin_verify(verify_max, &report.ptr);
        if (s != PALIN_OK && s != PALIN_ERR_VERIFY) fail(s, "verify");
        std::cout << report.str() << "\n";
        return s == PALIN_OK ? 0 : kExitVerifyFailure;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CliError& e) {
        std::cerr << "palin: " << e.message << "\n";
        return e.code;
    }
}
