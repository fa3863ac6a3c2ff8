// Command-line surface: period tables, correlation data as CSV, randomness
// reports, the herd problem, theorem verification, and keystream emission.
//
// Exit codes: 0 success, 1 domain failure (violation or mismatch), 2 usage
// or I/O error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "narayana/binary_sequences.hpp"
#include "narayana/correlation.hpp"
#include "narayana/keystream.hpp"
#include "narayana/narayana_core.hpp"
#include "narayana/period_analysis.hpp"

namespace {

using namespace narayana;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

std::string format_fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string class_label(const PeriodClass& cls) {
    switch (cls.tag) {
        case PeriodTag::plus_type: return "p^2+p+1";
        case PeriodTag::minus_type: return "p^2-1";
        case PeriodTag::ambiguous: return "ambiguous";
        case PeriodTag::violation: return "violation";
    }
    return "?";
}

// Stream sink: stdout for "-" or empty, otherwise a file.
class OutputSink {
public:
    explicit OutputSink(const std::string& path) {
        if (!path.empty() && path != "-") {
            file_.emplace(path, std::ios::binary);
            if (!*file_) {
                error_ = "cannot open output file: " + path;
            }
        }
    }
    bool ok() const { return error_.empty(); }
    const std::string& error() const { return error_; }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }
    bool flush_ok() {
        stream().flush();
        return stream().good();
    }

private:
    std::optional<std::ofstream> file_;
    std::string error_;
};

struct ReferenceRow {
    std::uint64_t prime = 0;
    std::uint64_t period = 0;
    int parity = 0;
    std::optional<int> b;  // absent where the reference leaves it blank
};

std::vector<ReferenceRow> load_reference_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open reference file: " + path);
    std::vector<ReferenceRow> rows;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (first) {  // header
            first = false;
            continue;
        }
        std::stringstream ss(line);
        std::string field;
        ReferenceRow row;
        if (!std::getline(ss, field, ',')) continue;
        row.prime = std::stoull(field);
        if (!std::getline(ss, field, ',')) throw std::runtime_error("bad reference row: " + line);
        row.period = std::stoull(field);
        if (!std::getline(ss, field, ',')) throw std::runtime_error("bad reference row: " + line);
        row.parity = std::stoi(field);
        if (std::getline(ss, field, ',') && !field.empty()) row.b = std::stoi(field);
        rows.push_back(row);
    }
    return rows;
}

int run_periods_compare(const std::string& compare_path, OutputSink& sink) {
    const auto reference = load_reference_csv(compare_path);
    std::ostream& out = sink.stream();
    std::size_t period_mismatches = 0, parity_mismatches = 0, b_mismatches = 0;
    for (const auto& ref : reference) {
        const std::uint64_t period = period_mod_p(ref.prime);
        const int parity = period % 2 == 0 ? 1 : 0;
        const int b = bipolar_symbol(ref.prime, period);
        if (period != ref.period) {
            ++period_mismatches;
            const PeriodClass cls = classify_period(ref.prime, period);
            out << "mismatch p=" << ref.prime << ": period computed=" << period
                << " reference=" << ref.period << " (computed class: " << class_label(cls)
                << ", divisor " << cls.divisor << ")\n";
        }
        if (parity != ref.parity) {
            ++parity_mismatches;
            out << "mismatch p=" << ref.prime << ": parity computed=" << parity
                << " reference=" << ref.parity << "\n";
        }
        if (ref.b && b != *ref.b) {
            ++b_mismatches;
            out << "mismatch p=" << ref.prime << ": b computed=" << b
                << " reference=" << *ref.b << "\n";
        }
    }
    const std::size_t matched = reference.size() - period_mismatches;
    out << "compared " << reference.size() << " rows\n";
    out << "period matches: " << matched << "/" << reference.size() << "\n";
    out << "parity mismatches: " << parity_mismatches << "\n";
    out << "b mismatches: " << b_mismatches << "\n";
    const bool clean = period_mismatches == 0 && parity_mismatches == 0 && b_mismatches == 0;
    out << (clean ? "all rows match\n" : "MISMATCHES FOUND\n");
    if (!sink.flush_ok()) return kExitUsage;
    return clean ? kExitOk : kExitDomain;
}

int run_periods(std::optional<std::uint64_t> max_prime, std::optional<std::uint64_t> count,
                const std::string& out_path, const std::string& compare_path) {
    OutputSink sink(out_path);
    if (!sink.ok()) {
        std::cerr << "error: " << sink.error() << "\n";
        return kExitUsage;
    }
    if (!compare_path.empty()) return run_periods_compare(compare_path, sink);

    std::vector<std::uint64_t> primes;
    if (max_prime) {
        for (std::uint64_t p : primes_up_to(*max_prime))
            if (p >= 3) primes.push_back(p);
    } else {
        primes = next_primes(3, count.value_or(0));
    }
    std::ostream& out = sink.stream();
    out << "prime,period,c,class,divisor,b\n";
    if (!primes.empty()) {
        for (const auto& rec : build_period_table(primes)) {
            out << rec.prime << ',' << rec.period << ',' << rec.parity_bit << ','
                << class_label(rec.period_class) << ',' << rec.period_class.divisor << ','
                << rec.b << '\n';
        }
    }
    if (!sink.flush_ok()) {
        std::cerr << "error: write failed\n";
        return kExitUsage;
    }
    return kExitOk;
}

BipolarSequence resolve_sequence(const std::string& name, std::size_t bits) {
    if (name == "B") return b_sequence(bits);
    return to_bipolar(c_sequence(bits));  // "C"
}

int run_acf(const std::string& seq_name, std::size_t bits, const std::string& out_path) {
    OutputSink sink(out_path);
    if (!sink.ok()) {
        std::cerr << "error: " << sink.error() << "\n";
        return kExitUsage;
    }
    const BipolarSequence seq = resolve_sequence(seq_name, bits);
    const CorrelationSeries series = acf(seq);
    std::ostream& out = sink.stream();
    out << "shift,acf\n";
    for (std::size_t k = 0; k < series.length(); ++k)
        out << k << ',' << format_fixed6(series.value(k)) << '\n';
    out << "# R=" << format_fixed6(randomness_measure(series)) << '\n';
    if (!sink.flush_ok()) {
        std::cerr << "error: write failed\n";
        return kExitUsage;
    }
    return kExitOk;
}

int run_ccf(const std::string& seq_a, const std::string& seq_b, std::size_t bits_a,
            std::size_t bits_b, const std::string& out_path) {
    OutputSink sink(out_path);
    if (!sink.ok()) {
        std::cerr << "error: " << sink.error() << "\n";
        return kExitUsage;
    }
    const BipolarSequence a = resolve_sequence(seq_a, bits_a);
    const BipolarSequence b = resolve_sequence(seq_b, bits_b);
    const CorrelationSeries series = ccf(a, b);
    std::ostream& out = sink.stream();
    out << "shift,ccf\n";
    for (std::size_t k = 0; k < series.length(); ++k)
        out << k << ',' << format_fixed6(series.value(k)) << '\n';
    out << "# peak_avg=" << format_fixed6(ccf_peak_average(series))
        << " peak_max=" << format_fixed6(ccf_peak_max(series)) << '\n';
    if (!sink.flush_ok()) {
        std::cerr << "error: write failed\n";
        return kExitUsage;
    }
    return kExitOk;
}

std::string encode_binary(const BitSequence& bits) {
    std::string out;
    out.reserve(bits.size() + 1);
    for (std::uint8_t b : bits.values) out.push_back(b ? '1' : '0');
    out.push_back('\n');
    return out;
}

std::string encode_hex(const BitSequence& bits) {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    int nibble = 0, filled = 0;
    for (std::uint8_t b : bits.values) {
        nibble = (nibble << 1) | b;
        if (++filled == 4) {
            out.push_back(digits[nibble]);
            nibble = 0;
            filled = 0;
        }
    }
    if (filled > 0) out.push_back(digits[nibble << (4 - filled)]);  // zero-padded tail
    out.push_back('\n');
    return out;
}

int run_keystream(std::uint64_t prime, const std::vector<std::uint64_t>& seed,
                  std::uint64_t bits, const std::string& rule_name,
                  const std::string& encoding, const std::string& out_path) {
    OutputSink sink(out_path);
    if (!sink.ok()) {
        std::cerr << "error: " << sink.error() << "\n";
        return kExitUsage;
    }
    KeystreamConfig config;
    config.prime = prime;
    config.seed = NarayanaTriple(seed[0], seed[1], seed[2], prime);
    config.bits = bits;
    config.rule = rule_name == "threshold" ? ExtractionRule::threshold
                                           : ExtractionRule::parity_with_rejection;
    const BitSequence stream = generate_keystream(config);
    const KeystreamHealth health = keystream_health_report(config);

    sink.stream() << (encoding == "hex" ? encode_hex(stream) : encode_binary(stream));
    if (!sink.flush_ok()) {
        std::cerr << "error: write failed\n";
        return kExitUsage;
    }
    std::cerr << "keystream health: prime=" << prime << " period=" << health.period
              << " bits=" << bits << " residues_consumed=" << health.residues_consumed
              << " period_consumed=" << format_fixed6(100.0 * health.period_fraction)
              << "% bit_bias=" << format_fixed6(health.bit_bias)
              << " randomness=" << format_fixed6(health.randomness) << "\n";
    if (health.exhaustion_warning)
        std::cerr << "warning: request wraps past one full period of the orbit\n";
    return kExitOk;
}

int run_herd(std::uint64_t years) {
    const BigUint by_recurrence = herd_size_recurrence(years);
    const BigUint by_sum = herd_size_closed_form(years);
    if (!(by_recurrence == by_sum)) {
        std::cerr << "error: closed form disagrees with recurrence at years=" << years
                  << " (" << by_sum.to_string() << " vs " << by_recurrence.to_string() << ")\n";
        return kExitDomain;
    }
    std::cout << by_recurrence.to_string() << "\n";
    return kExitOk;
}

int run_verify_theorem(std::uint64_t max_prime) {
    std::size_t plus = 0, minus = 0, ambiguous = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> violations;
    const auto primes = primes_up_to(max_prime);
    for (std::uint64_t p : primes) {
        const std::uint64_t period = period_mod_p(p);
        switch (classify_period(p, period).tag) {
            case PeriodTag::plus_type: ++plus; break;
            case PeriodTag::minus_type: ++minus; break;
            case PeriodTag::ambiguous: ++ambiguous; break;
            case PeriodTag::violation: violations.emplace_back(p, period); break;
        }
    }
    std::cout << "checked " << primes.size() << " primes up to " << max_prime << ": plus="
              << plus << " minus=" << minus << " ambiguous=" << ambiguous
              << " violations=" << violations.size() << "\n";
    for (const auto& [p, period] : violations) {
        const PeriodClass reduced = classify_period_reduced(p, period);
        std::cout << "violation: p=" << p << " period=" << period
                  << " divides neither p^2+p+1=" << p * p + p + 1
                  << " nor p^2-1=" << p * p - 1
                  << " (reduced period classifies as " << class_label(reduced) << ")\n";
    }
    return violations.empty() ? kExitOk : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Narayana sequence analysis: periods modulo primes, derived binary "
                 "sequences, correlation measures, and keystream demos"};
    app.require_subcommand(1);

    // periods
    auto* periods = app.add_subcommand("periods", "Period table for odd primes as CSV");
    std::uint64_t max_prime = 0;
    std::uint64_t count = 0;
    std::string out_path = "-";
    std::string format = "csv";
    std::string compare_path;
    auto* opt_max = periods->add_option("--max-prime", max_prime, "Largest prime to include");
    auto* opt_count = periods->add_option("--count", count, "Number of odd primes to include");
    periods->add_option("--out", out_path, "Output path ('-' for stdout)");
    periods->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv"}));
    periods->add_option("--compare", compare_path,
                        "Compare computed periods against a reference CSV instead of emitting");
    opt_max->excludes(opt_count);

    // acf
    auto* acf_cmd = app.add_subcommand("acf", "Autocorrelation of a derived sequence as CSV");
    std::string seq_name = "B";
    std::size_t bits = 0;
    std::string acf_out = "-";
    acf_cmd->add_option("--seq", seq_name, "Sequence: B (class sign) or C (parity)")
        ->required()
        ->check(CLI::IsMember({"B", "C"}));
    acf_cmd->add_option("--bits", bits, "Sequence length")->required()->check(CLI::Range(2u, 100000u));
    acf_cmd->add_option("--out", acf_out, "Output path ('-' for stdout)");

    // ccf
    auto* ccf_cmd = app.add_subcommand("ccf", "Crosscorrelation of two derived sequences as CSV");
    std::string seq_a = "B", seq_b = "C";
    std::size_t ccf_bits = 0;
    std::size_t ccf_bits_a = 0, ccf_bits_b = 0;
    std::string ccf_out = "-";
    ccf_cmd->add_option("--seq-a", seq_a, "First sequence: B or C")
        ->required()
        ->check(CLI::IsMember({"B", "C"}));
    ccf_cmd->add_option("--seq-b", seq_b, "Second sequence: B or C")
        ->required()
        ->check(CLI::IsMember({"B", "C"}));
    auto* opt_ccf_bits = ccf_cmd->add_option("--bits", ccf_bits, "Length of both sequences")
                             ->check(CLI::Range(1u, 100000u));
    auto* opt_bits_a =
        ccf_cmd->add_option("--bits-a", ccf_bits_a, "Length of the first sequence only")
            ->check(CLI::Range(1u, 100000u));
    auto* opt_bits_b =
        ccf_cmd->add_option("--bits-b", ccf_bits_b, "Length of the second sequence only")
            ->check(CLI::Range(1u, 100000u));
    ccf_cmd->add_option("--out", ccf_out, "Output path ('-' for stdout)");

    // keystream
    auto* ks_cmd = app.add_subcommand("keystream", "Emit a keystream from a seeded generator");
    std::uint64_t ks_prime = 0;
    std::vector<std::uint64_t> ks_seed = {1, 1, 1};
    std::uint64_t ks_bits = 0;
    std::string ks_rule = "parity-reject";
    std::string ks_encoding = "binary";
    std::string ks_out = "-";
    ks_cmd->add_option("--prime", ks_prime, "Prime modulus (>= 3)")->required();
    ks_cmd->add_option("--seed", ks_seed, "Seed triple a,b,c")->delimiter(',')->expected(3);
    ks_cmd->add_option("--bits", ks_bits, "Number of bits to emit")->required();
    ks_cmd->add_option("--rule", ks_rule, "Extraction rule")
        ->check(CLI::IsMember({"parity-reject", "threshold"}));
    ks_cmd->add_option("--encoding", ks_encoding, "Output encoding")
        ->check(CLI::IsMember({"binary", "hex"}));
    ks_cmd->add_option("--out", ks_out, "Output path ('-' for stdout)");

    // herd
    auto* herd_cmd = app.add_subcommand("herd", "Herd size after the given number of years");
    std::uint64_t years = 0;
    herd_cmd->add_option("years", years, "Years (>= 1)")->required()->check(CLI::PositiveNumber);

    // verify-theorem
    auto* verify_cmd =
        app.add_subcommand("verify-theorem", "Check the period dichotomy for all primes up to a bound");
    std::uint64_t verify_max = 0;
    verify_cmd->add_option("--max-prime", verify_max, "Largest prime to check (>= 3)")
        ->required()
        ->check(CLI::Range(std::uint64_t{3}, std::uint64_t{10'000'000}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (periods->parsed()) {
            const bool has_max = opt_max->count() > 0;
            const bool has_count = opt_count->count() > 0;
            if (compare_path.empty() && !has_max && !has_count) {
                std::cerr << "error: periods requires --max-prime, --count, or --compare\n";
                return kExitUsage;
            }
            return run_periods(has_max ? std::optional(max_prime) : std::nullopt,
                               has_count ? std::optional(count) : std::nullopt, out_path,
                               compare_path);
        }
        if (acf_cmd->parsed()) return run_acf(seq_name, bits, acf_out);
        if (ccf_cmd->parsed()) {
            const std::size_t len_a = opt_bits_a->count() ? ccf_bits_a : ccf_bits;
            const std::size_t len_b = opt_bits_b->count() ? ccf_bits_b : ccf_bits;
            if (len_a == 0 || len_b == 0) {
                std::cerr << "error: ccf requires --bits (or --bits-a and --bits-b)\n";
                return kExitUsage;
            }
            (void)opt_ccf_bits;
            return run_ccf(seq_a, seq_b, len_a, len_b, ccf_out);
        }
        if (ks_cmd->parsed())
            return run_keystream(ks_prime, ks_seed, ks_bits, ks_rule, ks_encoding, ks_out);
        if (herd_cmd->parsed()) return run_herd(years);
        if (verify_cmd->parsed()) return run_verify_theorem(verify_max);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
