// logpoisson: checks and filtered cohomology for polynomial Poisson algebras.
//
//   logpoisson check       --input ex.json
//   logpoisson cohomology  --input ex.json --complex log-poisson --k 0..2
//   logpoisson compare     --input ex.json --complex log-poisson --complex poisson
//   logpoisson prequantize --input ex.json
//   logpoisson selftest
//
// Exit codes: 0 ok, 1 check failure, 2 parse error, 3 internal invariant violation.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "logpoisson/logpoisson.hpp"

namespace {

enum Exit { Ok = 0, CheckFailed = 1, ParseFailed = 2, Internal = 3 };

struct Common {
    std::string input;
    std::string format = "table";
    std::optional<unsigned> max_degree;
    std::optional<unsigned> buffer;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--input,-i", c.input, "problem document (JSON)")->required();
    cmd->add_option("--format,-f", c.format, "output format")->check(CLI::IsMember({"table", "json"}));
    cmd->add_option("--max-degree", c.max_degree, "override max_degree");
    cmd->add_option("--buffer", c.buffer, "override image buffer");
}

logp::ProblemSpec load(const Common& c) {
    std::ifstream in(c.input);
    if (!in) throw logp::SpecError("cannot read '" + c.input + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    logp::ProblemSpec spec = logp::parse_spec(ss.str());
    if (c.max_degree) spec.max_degree = *c.max_degree;
    if (c.buffer) spec.buffer = *c.buffer;
    return spec;
}

int cmd_check(const Common& c) {
    auto spec = load(c);
    auto rep = logp::run_check(spec);
    if (c.format == "json")
        std::cout << logp::to_json(rep, spec).dump(2) << '\n';
    else
        std::cout << logp::to_text(rep, spec);
    return rep.passed() ? Ok : CheckFailed;
}

int cmd_cohomology(const Common& c, const std::string& kind, const std::string& krange) {
    auto spec = load(c);
    std::optional<logp::KRange> range;
    if (!krange.empty()) range = logp::parse_k_range(krange);
    auto table = logp::run_cohomology(spec, logp::parse_kind(kind), range);
    if (c.format == "json")
        std::cout << logp::to_json(table).dump(2) << '\n';
    else
        std::cout << logp::to_text(table);
    return Ok;
}

int cmd_compare(const Common& c, std::vector<std::string> kinds, const std::string& krange) {
    auto spec = load(c);
    if (kinds.empty()) kinds = {"log-poisson", "poisson"};
    if (kinds.size() != 2) throw logp::SpecError("compare takes exactly two --complex values");
    std::optional<logp::KRange> range;
    if (!krange.empty()) range = logp::parse_k_range(krange);
    auto a = logp::run_cohomology(spec, logp::parse_kind(kinds[0]), range);
    auto b = logp::run_cohomology(spec, logp::parse_kind(kinds[1]), range);
    auto cmp = logp::compare_tables(a, b);
    if (c.format == "json") {
        logp::json out = logp::to_json(cmp, kinds[0], kinds[1]);
        out["tables"] = {logp::to_json(a), logp::to_json(b)};
        std::cout << out.dump(2) << '\n';
        return Ok;
    }
    std::cout << logp::to_text(a) << '\n' << logp::to_text(b) << '\n';
    if (cmp.equal) {
        std::cout << kinds[0] << " and " << kinds[1] << " agree at every (k, d)\n";
    } else {
        std::cout << "differences (k, d: " << kinds[0] << " vs " << kinds[1] << "):\n";
        for (const auto& d : cmp.differences)
            std::cout << "  H^" << d.k << ", d=" << d.degree << ": " << d.first << " vs " << d.second << '\n';
    }
    return Ok;
}

int cmd_prequantize(const Common& c) {
    auto spec = load(c);
    auto rep = logp::run_prequantize(spec);
    if (c.format == "json") {
        std::cout << logp::to_json(rep, spec).dump(2) << '\n';
    } else {
        auto L = logp::build_complex(spec, logp::ComplexKind::LogPoisson);
        std::cout << logp::to_text(rep, spec, L.basis_labels);
    }
    return Ok;
}

int cmd_selftest(const std::string& format, const logp::SelftestOptions& opt) {
    auto rep = logp::run_selftest(opt);
    if (format == "json") {
        logp::json out;
        out["pass"] = rep.pass();
        out["families"] = rep.family_count();
        out["suites"] = logp::json::array();
        for (const auto& s : rep.suites)
            out["suites"].push_back(
                {{"family", s.family}, {"name", s.name}, {"cases", s.cases}, {"pass", s.pass}, {"detail", s.detail}});
        std::cout << out.dump(2) << '\n';
    } else {
        for (const auto& s : rep.suites) {
            std::cout << (s.pass ? "PASS " : "FAIL ") << s.family << ": " << s.name << " (" << s.cases << " cases)";
            if (!s.pass) std::cout << "  " << s.detail;
            std::cout << '\n';
        }
        std::cout << rep.suites.size() << " suites in " << rep.family_count() << " families: "
                  << (rep.pass() ? "all pass" : "FAILURES") << '\n';
    }
    return rep.pass() ? Ok : Internal;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Poisson, log Poisson and log de Rham cohomology of polynomial Poisson algebras"};
    app.require_subcommand(1);

    Common common;
    std::string kind = "log-poisson", krange;
    std::vector<std::string> kinds;

    auto* check = app.add_subcommand("check", "Jacobi, log-principal, normalization and logsymplectic checks");
    add_common(check, common);

    auto* coh = app.add_subcommand("cohomology", "filtered cohomology table of one complex");
    add_common(coh, common);
    coh->add_option("--complex,-c", kind, "poisson, log-poisson or log-derham")
        ->check(CLI::IsMember({"poisson", "log-poisson", "log-derham"}));
    coh->add_option("--k", krange, "degree range, e.g. 1 or 0..2");

    auto* cmp = app.add_subcommand("compare", "compare the tables of two complexes");
    add_common(cmp, common);
    cmp->add_option("--complex,-c", kinds, "two complex kinds (default log-poisson poisson)")
        ->check(CLI::IsMember({"poisson", "log-poisson", "log-derham"}));
    cmp->add_option("--k", krange, "degree range");

    auto* pre = app.add_subcommand("prequantize", "search a primitive of the structure 2-cochain");
    add_common(pre, common);

    logp::SelftestOptions sopt;
    std::string sformat = "table";
    auto* st = app.add_subcommand("selftest", "randomized identity suites");
    st->add_option("--samples", sopt.samples, "cases per suite");
    st->add_option("--seed", sopt.seed, "random seed");
    st->add_option("--format,-f", sformat, "output format")->check(CLI::IsMember({"table", "json"}));
    st->add_flag("--mutate", sopt.mutate_structure_constant, "negate one structure constant (harness check)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? Ok : ParseFailed;
    }

    try {
        if (*check) return cmd_check(common);
        if (*coh) return cmd_cohomology(common, kind, krange);
        if (*cmp) return cmd_compare(common, kinds, krange);
        if (*pre) return cmd_prequantize(common);
        if (*st) return cmd_selftest(sformat, sopt);
    } catch (const logp::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return ParseFailed;
    } catch (const logp::SpecError& e) {
        std::cerr << "invalid problem: " << e.what() << '\n';
        return ParseFailed;
    } catch (const logp::CheckFailure& e) {
        std::cerr << "check failed: " << e.what() << '\n';
        return CheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return Internal;
    }
    return Internal;
}
