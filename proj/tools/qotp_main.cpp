// qotp: build, verify, certify, lift and simulate private quantum channels.
//
// Exit codes: 0 success, 1 property failure, 2 usage/parse/precondition error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "qotp/serialize.hpp"

namespace {

using namespace qotp;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw qotp::ParseError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw qotp::ParseError("cannot write file: " + path);
    out << text;
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

int cmd_build(const std::string& kind, std::size_t n, const std::string& out_path) {
    PQCInstance inst = [&] {
        if (kind == "pauli-otp") return build_pauli_otp(n);
        if (kind == "real-otp") return build_real_otp(n);
        return build_example_pqc();
    }();
    write_file(out_path, serialize_pqc(inst));
    std::cout << "wrote " << out_path << " (" << inst.channel().terms().size() << " terms, "
              << inst.channel().input_qubits() << " qubit input)\n";
    return 0;
}

int cmd_verify(const std::string& path, double tol) {
    const PQCInstance inst = parse_pqc(read_file(path));
    const VerificationReport report = verify_pqc(inst, tol);
    std::cout << "verification: " << (report.ok ? "ok" : "FAIL") << "\n";
    std::cout << "worst_deviation: " << fmt(report.worst_deviation) << "\n";
    if (!report.ok) std::cout << "witness: " << report.witness << "\n";
    return report.ok ? 0 : 1;
}

int cmd_certify(const std::string& path, int theorem, double tol) {
    const PQCInstance inst = parse_pqc(read_file(path));
    std::cout << "theorem: " << theorem << "\n";
    bool ok = false;
    if (theorem == 3) {
        ok = certify_theorem3(inst, tol);
        std::cout << "mixed_target: " << (ok ? "true" : "false") << "\n";
    } else if (theorem == 4) {
        const Theorem4Report report = certify_theorem4(inst, tol);
        std::cout << "max_p: " << fmt(report.max_p) << "\n";
        std::cout << "term_count: " << report.term_count << "\n";
        ok = report.ok;
    } else {
        const Theorem6Report report = certify_theorem6(inst, tol);
        std::cout << "S_rho0: " << fmt(report.s_rho0) << "\n";
        std::cout << "H_p: " << fmt(report.h_p) << "\n";
        std::cout << "S_ancilla: " << fmt(report.s_ancilla) << "\n";
        std::cout << "lower_ok: " << (report.lower_ok ? "true" : "false") << "\n";
        std::cout << "upper_ok: " << (report.upper_ok ? "true" : "false") << "\n";
        ok = report.lower_ok && report.upper_ok;
    }
    std::cout << "ok: " << (ok ? "true" : "false") << "\n";
    return ok ? 0 : 1;
}

int cmd_lift(const std::string& path, const std::string& out_path) {
    const PQCInstance lifted = lift_to_classical(parse_pqc(read_file(path)));
    write_file(out_path, serialize_pqc(lifted));
    std::cout << "wrote " << out_path << " (" << lifted.channel().input_qubits()
              << " qubit input)\n";
    return 0;
}

int cmd_protocol(const std::string& path, std::uint64_t seed, const std::string& plaintext_path,
                 bool random_plaintext, std::size_t samples) {
    const PQCInstance inst = parse_pqc(read_file(path));
    const VerificationReport check = verify_pqc(inst, kDefaultCertifyTol);
    if (!check.ok)
        throw PreconditionError("protocol needs a verified PQC document (witness: " +
                                check.witness + ")");

    const PureState phi = [&] {
        if (random_plaintext) {
            SplitMix64 rng(seed ^ 0x517cc1b727220a95ULL);  // separate stream from key draws
            return sample_plaintext(inst, rng);
        }
        return parse_state(read_file(plaintext_path));
    }();

    const Transcript transcript = run_protocol(inst, phi, seed);
    const EveEstimate eve = estimate_eve_state(inst, phi, samples, seed);

    std::cout << "key_index: " << transcript.key_index << "\n";
    std::cout << "key_entropy: " << fmt(key_entropy(inst)) << "\n";
    std::cout << "round_trip_deviation: " << fmt(transcript.round_trip_deviation) << "\n";
    std::cout << "eve_samples: " << (samples == 0 ? std::string("exact") : std::to_string(samples))
              << "\n";
    std::cout << "eve_distance: " << fmt(eve.distance) << "\n";
    return transcript.round_trip_deviation > 1e-9 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"private quantum channel toolkit"};
    app.require_subcommand(1);

    std::string kind;
    std::size_t n = 1;
    std::string out_path;
    std::string in_path;
    double tol = kDefaultCertifyTol;
    int theorem = 0;
    std::uint64_t seed = 0;
    std::string plaintext_path;
    bool random_plaintext = false;
    std::size_t samples = 0;

    CLI::App* build = app.add_subcommand("build", "write a PQC document for a known construction");
    build->add_option("kind", kind, "pauli-otp | real-otp | example")
        ->required()
        ->check(CLI::IsMember({"pauli-otp", "real-otp", "example"}));
    build->add_option("-n,--qubits", n, "qubit count for the pads (1..5)");
    build->add_option("-o,--out", out_path, "output path")->required();

    CLI::App* verify = app.add_subcommand("verify", "check the private-channel property");
    verify->add_option("pqc", in_path, "PQC document path")->required();
    verify->add_option("--tol", tol, "max-entry tolerance");

    CLI::App* certify = app.add_subcommand("certify", "run a theorem certifier");
    certify->add_option("pqc", in_path, "PQC document path")->required();
    certify->add_option("--theorem", theorem, "3, 4 or 6")
        ->required()
        ->check(CLI::IsMember({3, 4, 6}));
    certify->add_option("--tol", tol, "certifier tolerance");

    CLI::App* lift = app.add_subcommand("lift", "lift a full-Hilbert PQC to classical states");
    lift->add_option("pqc", in_path, "PQC document path")->required();
    lift->add_option("-o,--out", out_path, "output path")->required();

    CLI::App* protocol = app.add_subcommand("protocol", "run one Alice/Bob/Eve round");
    protocol->add_option("pqc", in_path, "PQC document path")->required();
    protocol->add_option("--seed", seed, "key/plaintext seed")->required();
    CLI::Option* opt_plain =
        protocol->add_option("--plaintext-path", plaintext_path, "state document to send");
    CLI::Option* opt_random = protocol->add_flag(
        "--random-plaintext", random_plaintext, "send a seeded random state from the state set");
    opt_plain->excludes(opt_random);
    protocol->add_option("--samples", samples, "Eve estimate sample count (0 = exact mixture)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // anything but help/version is a usage error
    }

    try {
        if (build->parsed()) return cmd_build(kind, n, out_path);
        if (verify->parsed()) return cmd_verify(in_path, tol);
        if (certify->parsed()) return cmd_certify(in_path, theorem, tol);
        if (lift->parsed()) return cmd_lift(in_path, out_path);
        if (protocol->parsed()) {
            if (plaintext_path.empty() && !random_plaintext)
                throw PreconditionError(
                    "protocol needs --plaintext-path or --random-plaintext");
            return cmd_protocol(in_path, seed, plaintext_path, random_plaintext, samples);
        }
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
