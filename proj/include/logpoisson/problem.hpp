// Problem documents and the checks/computations driven from them.
//
// A problem document is a JSON object:
//
//   {"variables": ["x", "y"],
//    "bracket": {"x,y": "x"},        // unordered pairs, omitted pairs are 0
//    "log_generators": ["x"],
//    "max_degree": 8,
//    "buffer": 3}                    // optional
//
// Reports serialize to JSON with deterministic key and row ordering.

#ifndef LOGPOISSON_PROBLEM_HPP
#define LOGPOISSON_PROBLEM_HPP

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "logpoisson/cohomology.hpp"

namespace logp {

using json = nlohmann::ordered_json;

/// Malformed or inconsistent problem document.
class SpecError : public Error {
public:
    using Error::Error;
};

/// A check required by the requested computation did not pass.
class CheckFailure : public Error {
public:
    using Error::Error;
};

struct ProblemSpec {
    std::vector<std::string> variables;
    std::map<std::pair<std::size_t, std::size_t>, std::string> bracket;  // i < j, canonical text
    std::vector<std::string> log_generators;                             // canonical text
    unsigned max_degree = 0;
    std::optional<unsigned> buffer;

    friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

namespace detail {

inline std::string trim(std::string s) {
    auto ws = [](unsigned char c) { return std::isspace(c) != 0; };
    s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), ws));
    s.erase(std::find_if_not(s.rbegin(), s.rend(), ws).base(), s.end());
    return s;
}

inline bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

inline std::size_t variable_index(const std::vector<std::string>& vars, const std::string& name,
                                  const std::string& key) {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw SpecError("bracket key '" + key + "' references unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - vars.begin());
}

inline unsigned non_negative(const json& j, const char* field) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw SpecError(std::string("'") + field + "' must be a non-negative integer");
    return j.get<unsigned>();
}

}  // namespace detail

inline ProblemSpec parse_spec(const json& doc) {
    if (!doc.is_object()) throw SpecError("problem document must be a JSON object");
    for (const auto& [key, value] : doc.items())
        if (key != "variables" && key != "bracket" && key != "log_generators" && key != "max_degree" &&
            key != "buffer")
            throw SpecError("unknown field '" + key + "'");

    ProblemSpec spec;
    if (!doc.contains("variables") || !doc["variables"].is_array() || doc["variables"].empty())
        throw SpecError("'variables' must be a non-empty array of names");
    for (const auto& v : doc["variables"]) {
        if (!v.is_string() || !detail::is_identifier(v.get<std::string>()))
            throw SpecError("variable names must be identifiers");
        std::string name = v.get<std::string>();
        if (std::find(spec.variables.begin(), spec.variables.end(), name) != spec.variables.end())
            throw SpecError("duplicate variable '" + name + "'");
        spec.variables.push_back(name);
    }
    const auto& vars = spec.variables;

    if (doc.contains("bracket")) {
        if (!doc["bracket"].is_object()) throw SpecError("'bracket' must be an object");
        for (const auto& [key, value] : doc["bracket"].items()) {
            auto comma = key.find(',');
            if (comma == std::string::npos) throw SpecError("bracket key '" + key + "' must look like \"x,y\"");
            std::string a = detail::trim(key.substr(0, comma)), b = detail::trim(key.substr(comma + 1));
            std::size_t i = detail::variable_index(vars, a, key), j = detail::variable_index(vars, b, key);
            if (i == j) throw SpecError("bracket key '" + key + "' pairs a variable with itself");
            if (!value.is_string()) throw SpecError("bracket value for '" + key + "' must be a string");
            Poly p = parse_poly(value.get<std::string>(), vars);
            if (i > j) {
                std::swap(i, j);
                p = -p;
            }
            if (!spec.bracket.emplace(std::make_pair(i, j), to_string(p, vars)).second)
                throw SpecError("duplicate bracket key for pair '" + vars[i] + "," + vars[j] + "'");
        }
    }

    if (doc.contains("log_generators")) {
        if (!doc["log_generators"].is_array()) throw SpecError("'log_generators' must be an array");
        for (const auto& g : doc["log_generators"]) {
            if (!g.is_string()) throw SpecError("log generators must be strings");
            spec.log_generators.push_back(to_string(parse_poly(g.get<std::string>(), vars), vars));
        }
    }

    if (!doc.contains("max_degree")) throw SpecError("missing 'max_degree'");
    spec.max_degree = detail::non_negative(doc["max_degree"], "max_degree");
    if (doc.contains("buffer")) spec.buffer = detail::non_negative(doc["buffer"], "buffer");
    return spec;
}

inline ProblemSpec parse_spec(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    return parse_spec(doc);
}

inline json serialize_spec(const ProblemSpec& spec) {
    json doc;
    doc["variables"] = spec.variables;
    json br = json::object();
    for (const auto& [ij, text] : spec.bracket)
        br[spec.variables[ij.first] + "," + spec.variables[ij.second]] = text;
    doc["bracket"] = br;
    doc["log_generators"] = spec.log_generators;
    doc["max_degree"] = spec.max_degree;
    if (spec.buffer) doc["buffer"] = *spec.buffer;
    return doc;
}

inline PoissonStructure build_poisson(const ProblemSpec& spec) {
    PoissonStructure P(spec.variables);
    for (const auto& [ij, text] : spec.bracket) P.set(ij.first, ij.second, parse_poly(text, spec.variables));
    return P;
}

inline std::vector<Poly> build_generators(const ProblemSpec& spec) {
    std::vector<Poly> out;
    for (const auto& g : spec.log_generators) out.push_back(parse_poly(g, spec.variables));
    return out;
}

// ---------------------------------------------------------------------------
// check

struct CheckReport {
    JacobiReport jacobi;
    std::optional<LogDivisorSpec> divisor;  // empty when normalization failed
    std::string normalization_error;
    std::vector<std::string> normalization_notes;
    std::optional<LogPrincipalReport> principal;
    std::optional<LogSymplecticVerdict> logsymplectic;

    bool passed() const { return jacobi.pass && divisor && principal && principal->pass; }
};

inline CheckReport run_check(const ProblemSpec& spec) {
    CheckReport rep;
    PoissonStructure P = build_poisson(spec);
    const auto& v = spec.variables;
    rep.jacobi = check_jacobi(P);
    try {
        rep.divisor = make_divisor(build_generators(spec));
    } catch (const Unsupported& e) {
        rep.normalization_error = e.what();
        return rep;
    }
    for (std::size_t i = 0; i < rep.divisor->generators.size(); ++i) {
        const auto& g = rep.divisor->generators[i];
        const auto& n = rep.divisor->normalized[i];
        std::string note = to_string(g, v) + " -> d" + v[n.variable] + "/" + v[n.variable];
        if (n.multiplicity > 1)
            note += " (d(" + to_string(g, v) + ")/(" + to_string(g, v) + ") = " + std::to_string(n.multiplicity) +
                    " d" + v[n.variable] + "/" + v[n.variable] + ")";
        rep.normalization_notes.push_back(note);
    }
    rep.principal = is_log_principal(P, *rep.divisor);
    if (rep.principal->pass) rep.logsymplectic = is_logsymplectic(P, LogBasis(P.nvars(), *rep.divisor));
    return rep;
}

inline json to_json(const CheckReport& rep, const ProblemSpec& spec) {
    const auto& v = spec.variables;
    json out;
    json jac;
    jac["pass"] = rep.jacobi.pass;
    jac["vacuous"] = rep.jacobi.vacuous;
    jac["failures"] = json::array();
    for (const auto& [t, p] : rep.jacobi.failures)
        jac["failures"].push_back({{"triple", {v[t[0]], v[t[1]], v[t[2]]}}, {"value", to_string(p, v)}});
    out["jacobi"] = jac;

    json norm;
    norm["pass"] = rep.divisor.has_value();
    norm["notes"] = rep.normalization_notes;
    if (!rep.divisor) norm["error"] = rep.normalization_error;
    out["normalization"] = norm;

    json lp;
    if (rep.principal) {
        lp["pass"] = rep.principal->pass;
        if (rep.principal->witness) {
            auto [k, j] = *rep.principal->witness;
            lp["witness"] = {{"pair", {v[k], v[j]}},
                             {"bracket", to_string(rep.principal->offending, v)},
                             {"divisor", v[j]}};
        }
    } else {
        lp["pass"] = false;
        lp["skipped"] = true;
    }
    out["log_principal"] = lp;

    if (rep.logsymplectic) {
        out["logsymplectic"] = {{"value", rep.logsymplectic->logsymplectic},
                                {"determinant", to_string(rep.logsymplectic->determinant, v)}};
    } else {
        out["logsymplectic"] = nullptr;
    }
    out["pass"] = rep.passed();
    return out;
}

inline std::string to_text(const CheckReport& rep, const ProblemSpec& spec) {
    const auto& v = spec.variables;
    std::ostringstream os;
    os << "jacobi:          " << (rep.jacobi.pass ? "pass" : "FAIL");
    if (rep.jacobi.vacuous) os << " (vacuous, fewer than 3 variables)";
    os << '\n';
    for (const auto& [t, p] : rep.jacobi.failures)
        os << "  jacobiator(" << v[t[0]] << "," << v[t[1]] << "," << v[t[2]] << ") = " << to_string(p, v) << '\n';
    if (!rep.divisor) {
        os << "normalization:   FAIL (" << rep.normalization_error << ")\n";
        return os.str();
    }
    os << "normalization:   pass\n";
    for (const auto& note : rep.normalization_notes) os << "  " << note << '\n';
    os << "log principal:   " << (rep.principal->pass ? "pass" : "FAIL") << '\n';
    if (rep.principal->witness) {
        auto [k, j] = *rep.principal->witness;
        os << "  {" << v[k] << "," << v[j] << "} = " << to_string(rep.principal->offending, v)
           << " is not divisible by " << v[j] << '\n';
    }
    if (rep.logsymplectic)
        os << "logsymplectic:   " << (rep.logsymplectic->logsymplectic ? "true" : "false")
           << " (det = " << to_string(rep.logsymplectic->determinant, v) << ")\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// cohomology

enum class ComplexKind { Poisson, LogPoisson, LogDeRham };

inline std::string kind_name(ComplexKind k) {
    switch (k) {
        case ComplexKind::Poisson: return "poisson";
        case ComplexKind::LogPoisson: return "log-poisson";
        case ComplexKind::LogDeRham: return "log-derham";
    }
    return "";
}

inline ComplexKind parse_kind(const std::string& s) {
    if (s == "poisson") return ComplexKind::Poisson;
    if (s == "log-poisson") return ComplexKind::LogPoisson;
    if (s == "log-derham") return ComplexKind::LogDeRham;
    throw SpecError("unknown complex kind '" + s + "' (expected poisson, log-poisson or log-derham)");
}

/// Builds the requested complex after the checks it depends on.
inline LieRinehartData build_complex(const ProblemSpec& spec, ComplexKind kind) {
    CheckReport rep = run_check(spec);
    PoissonStructure P = build_poisson(spec);
    if (kind != ComplexKind::LogDeRham && !rep.jacobi.pass)
        throw CheckFailure("bracket fails the Jacobi identity; run `check` for details");
    if (kind == ComplexKind::Poisson) return poisson_complex(P);
    if (!rep.divisor)
        throw CheckFailure("divisor normalization failed (" + rep.normalization_error + "); run `check`");
    if (kind == ComplexKind::LogDeRham) return log_derham_complex(LogBasis(P.nvars(), *rep.divisor), P.names());
    if (!rep.principal->pass) throw CheckFailure("bracket is not log principal along the divisor; run `check`");
    return log_poisson_complex(P, *rep.divisor);
}

struct KRange {
    std::size_t lo = 0;
    std::size_t hi = 0;
};

/// Accepts "k", "a..b" or "a-b".
inline KRange parse_k_range(const std::string& s) {
    auto num = [&](const std::string& t) -> std::size_t {
        std::string u = detail::trim(t);
        if (u.empty() || !std::all_of(u.begin(), u.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw SpecError("invalid degree range '" + s + "'");
        return std::stoul(u);
    };
    std::size_t dots = s.find("..");
    if (dots != std::string::npos) return {num(s.substr(0, dots)), num(s.substr(dots + 2))};
    std::size_t dash = s.find('-');
    if (dash != std::string::npos) return {num(s.substr(0, dash)), num(s.substr(dash + 1))};
    std::size_t k = num(s);
    return {k, k};
}

inline SliceWindow window_for(const ProblemSpec& spec, const LieRinehartData& L) {
    SliceWindow W = SliceWindow::for_complex(L, spec.max_degree);
    if (spec.buffer) W.buffer = *spec.buffer;
    return W;
}

inline CohomologyTable run_cohomology(const ProblemSpec& spec, ComplexKind kind, std::optional<KRange> range = {}) {
    LieRinehartData L = build_complex(spec, kind);
    KRange k = range.value_or(KRange{0, L.rank()});
    if (k.lo > k.hi || k.hi > L.rank())
        throw SpecError("degree range must lie within 0.." + std::to_string(L.rank()));
    return cohomology_table(L, kind_name(kind), k.lo, k.hi, window_for(spec, L));
}

inline json to_json(const CohomologyTable& t) {
    json out;
    out["complex"] = t.complex_kind;
    out["max_degree"] = t.window.max_degree;
    out["buffer"] = t.window.buffer;
    out["rows"] = json::array();
    for (const auto& [k, row] : t.rows) {
        json r;
        r["k"] = k;
        r["dims"] = json::array();
        r["cumulative"] = json::array();
        r["stabilized"] = json::array();
        for (const auto& e : row) {
            r["dims"].push_back(e.dim);
            r["cumulative"].push_back(e.cumulative);
            r["stabilized"].push_back(e.stabilized);
        }
        r["total"] = row.back().cumulative;
        out["rows"].push_back(r);
    }
    return out;
}

/// Column-aligned table; entries not stable under buffer+1 carry a '*'.
inline std::string to_text(const CohomologyTable& t) {
    std::ostringstream os;
    os << "complex: " << t.complex_kind << "   max degree: " << t.window.max_degree
       << "   buffer: " << t.window.buffer << '\n';
    const unsigned D = t.window.max_degree;
    os << "      d |";
    for (unsigned d = 0; d <= D; ++d) os << std::setw(5) << d;
    os << " | total\n";
    os << std::string(9 + 5 * (D + 1), '-') << "-+------\n";
    bool any_unstable = false;
    for (const auto& [k, row] : t.rows) {
        os << std::setw(4) << "H^" + std::to_string(k) << "    |";
        for (const auto& e : row) {
            std::string cell = std::to_string(e.dim) + (e.stabilized ? "" : "*");
            any_unstable = any_unstable || !e.stabilized;
            os << std::setw(5) << cell;
        }
        os << " | " << row.back().cumulative << '\n';
    }
    if (any_unstable) os << "(* not yet stable under buffer + 1)\n";
    return os.str();
}

inline json to_json(const TableComparison& c, const std::string& a, const std::string& b) {
    json out;
    out["first"] = a;
    out["second"] = b;
    out["equal"] = c.equal;
    out["differences"] = json::array();
    for (const auto& d : c.differences)
        out["differences"].push_back({{"k", d.k}, {"d", d.degree}, {"first", d.first}, {"second", d.second}});
    return out;
}

// ---------------------------------------------------------------------------
// prequantize

struct PrequantizeReport {
    Cochain pi;
    PrimitiveResult primitive;
    std::optional<std::vector<CohomologyEntry>> h2_row;  // attached when no primitive was found

    bool prequantizable() const { return primitive.found; }
};

/// The 2-cochain pi(e_i, e_j) = s_ij of the log Poisson algebroid.
inline Cochain pi_cochain(const PoissonStructure& P, const LogBasis& B) {
    Cochain pi(2, P.nvars());
    for (std::size_t i = 0; i < B.size(); ++i)
        for (std::size_t j = i + 1; j < B.size(); ++j) pi.add({i, j}, structure_scalar(P, B, i, j));
    return pi;
}

inline PrequantizeReport run_prequantize(const ProblemSpec& spec) {
    LieRinehartData L = build_complex(spec, ComplexKind::LogPoisson);
    PoissonStructure P = build_poisson(spec);
    LogBasis B(P.nvars(), make_divisor(build_generators(spec)));
    PrequantizeReport rep;
    rep.pi = pi_cochain(P, B);
    SliceWindow W = window_for(spec, L);
    rep.primitive = find_primitive(L, rep.pi, W);
    if (!rep.primitive.found && L.rank() >= 2) rep.h2_row = cohomology_dims(L, 2, W);
    return rep;
}

inline json cochain_to_json(const Cochain& c, const std::vector<std::string>& names) {
    json out = json::array();
    for (const auto& [t, p] : c.components()) out.push_back({{"indices", t}, {"value", to_string(p, names)}});
    return out;
}

inline std::string cochain_to_text(const Cochain& c, const std::vector<std::string>& names,
                                   const std::vector<std::string>& labels) {
    if (c.is_zero()) return "0";
    std::string out;
    for (const auto& [t, p] : c.components()) {
        if (!out.empty()) out += ", ";
        std::string args;
        for (auto i : t) args += (args.empty() ? "" : ",") + labels.at(i);
        out += "(" + args + ") -> " + to_string(p, names);
    }
    return out;
}

inline json to_json(const PrequantizeReport& rep, const ProblemSpec& spec) {
    json out;
    out["pi"] = cochain_to_json(rep.pi, spec.variables);
    out["prequantizable"] = rep.prequantizable();
    out["searched_degree"] = rep.primitive.searched_degree;
    if (rep.primitive.found) {
        out["witness"] = cochain_to_json(rep.primitive.witness, spec.variables);
        out["witness_degree"] = rep.primitive.source_degree;
    } else {
        out["witness"] = nullptr;
        if (rep.h2_row) {
            json h2;
            for (const auto& e : *rep.h2_row) h2.push_back(e.dim);
            out["h2_dims"] = h2;
        }
    }
    return out;
}

inline std::string to_text(const PrequantizeReport& rep, const ProblemSpec& spec, const std::vector<std::string>& labels) {
    std::ostringstream os;
    os << "pi: " << cochain_to_text(rep.pi, spec.variables, labels) << '\n';
    if (rep.primitive.found) {
        os << "prequantizable within window (witness of degree " << rep.primitive.source_degree << ")\n";
        os << "witness: " << cochain_to_text(rep.primitive.witness, spec.variables, labels) << '\n';
    } else {
        os << "obstruction persists to source degree " << rep.primitive.searched_degree
           << " (not a proof that pi is not exact)\n";
        if (rep.h2_row) {
            os << "H^2 dims by degree:";
            for (const auto& e : *rep.h2_row) os << ' ' << e.dim;
            os << '\n';
        }
    }
    return os.str();
}

}  // namespace logp

#endif  // LOGPOISSON_PROBLEM_HPP
