#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qch/orbit.hpp"
#include "qch/vars.hpp"

using namespace qch;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfig = 2;
constexpr int kExitEngine = 3;

struct Options {
    std::string hecke = "standard:2";
    std::string algebra = "RE";
    std::string mu;
    std::string nu;
    std::string orbit_file;
    unsigned degree_bound = 0;
    std::string out;
    std::string format = "json";
    unsigned coeff_p = 4;
};

void emit(const Options& opt, const std::string& payload)
{
    if (opt.out.empty()) {
        std::cout << payload << "\n";
        return;
    }
    std::ofstream f(opt.out);
    if (!f)
        throw DomainError("cannot open output file '" + opt.out + "'");
    f << payload << "\n";
}

void progress(const std::string& msg)
{
    std::cerr << "[qch] " << msg << "\n";
}

HeckeSymmetry resolve_hecke(const std::string& spec)
{
    if (spec.rfind("standard:", 0) == 0) {
        int n = std::stoi(spec.substr(9));
        if (n < 2 || n > 6)
            throw DomainError("standard:n supports 2 <= n <= 6");
        progress("building standard Hecke symmetry, n = " + std::to_string(n));
        return standard_R(static_cast<unsigned>(n));
    }
    progress("loading Hecke symmetry from " + spec);
    return load_hecke(spec);
}

AlgebraTag resolve_algebra(const std::string& s)
{
    if (s == "RE")
        return AlgebraTag::RE;
    if (s == "REqh")
        return AlgebraTag::REqh;
    if (s == "Ugl")
        return AlgebraTag::Ugl;
    throw DomainError("unknown algebra tag '" + s + "' (RE, REqh, Ugl)");
}

// Comma-separated expressions; bare identifiers are declared as fresh
// indeterminates before parsing.
std::vector<Scalar> parse_expr_list(const std::string& text)
{
    std::vector<Scalar> out;
    std::stringstream ss(text);
    std::string item;
    std::vector<std::string> items;
    while (std::getline(ss, item, ',')) {
        // trim
        size_t b = item.find_first_not_of(" \t");
        size_t e = item.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw DomainError("empty entry in expression list");
        items.push_back(item.substr(b, e - b + 1));
    }
    for (auto& s : items)
        if (is_valid_identifier(s))
            Vars::instance().declare(s);
    for (auto& s : items)
        out.push_back(parse_scalar(s));
    return out;
}

unsigned effective_bound(const Options& opt, unsigned p)
{
    if (opt.degree_bound != 0)
        return opt.degree_bound;
    if (const char* env = std::getenv("QCH_DEGREE_BOUND")) {
        int v = std::atoi(env);
        if (v > 0)
            return static_cast<unsigned>(v);
    }
    return p + 2;
}

/* Orbit inputs from either an orbit-description file or the flag set. */
struct OrbitInputs {
    HeckeSymmetry hecke;
    AlgebraTag tag;
    std::vector<Scalar> mu;
    unsigned bound;
};

OrbitInputs resolve_orbit_inputs(const Options& opt)
{
    if (!opt.orbit_file.empty()) {
        OrbitDescription d = load_orbit_description(opt.orbit_file);
        HeckeSymmetry h = resolve_hecke(d.hecke_source);
        unsigned bound = d.degree_bound ? d.degree_bound : effective_bound(opt, h.rank_p());
        return OrbitInputs{std::move(h), d.algebra, d.mu, bound};
    }
    if (opt.mu.empty())
        throw DomainError("--mu (or --orbit) is required");
    HeckeSymmetry h = resolve_hecke(opt.hecke);
    unsigned bound = effective_bound(opt, h.rank_p());
    return OrbitInputs{std::move(h), resolve_algebra(opt.algebra), parse_expr_list(opt.mu),
                       bound};
}

RewriteSystem build_system(const HeckeSymmetry& h, AlgebraTag tag, unsigned bound)
{
    progress("completing rewrite system (" + algebra_tag_name(tag) + ", bound " +
             std::to_string(bound) + ")");
    switch (tag) {
    case AlgebraTag::RE:
        return complete(relations_RE(h), h.n() * h.n(), matrix_alphabet(h.n(), "l"), bound);
    case AlgebraTag::REqh:
        return complete(relations_REqh(h), h.n() * h.n(), matrix_alphabet(h.n(), "lb"), bound);
    case AlgebraTag::Ugl:
        return complete(relations_Ugl(h.n()), h.n() * h.n(), matrix_alphabet(h.n(), "a"), bound);
    }
    throw DomainError("bad algebra tag");
}

int cmd_verify_ch(const Options& opt)
{
    HeckeSymmetry h = resolve_hecke(opt.hecke);
    AlgebraTag tag = resolve_algebra(opt.algebra);
    RewriteSystem rs = build_system(h, tag, effective_bound(opt, h.rank_p()));
    progress("reducing the Cayley-Hamilton identity");
    CHReport rep;
    switch (tag) {
    case AlgebraTag::RE: rep = verify_ch_RE(h, rs); break;
    case AlgebraTag::REqh: rep = verify_ch_qh(h, rs); break;
    case AlgebraTag::Ugl: rep = verify_ch_ugl(h.n(), rs); break;
    }
    if (opt.format == "text") {
        std::ostringstream os;
        os << "identity " << rep.identity << " n=" << rep.n << " p=" << rep.p << ": "
           << (rep.pass ? "pass" : "FAIL") << " (" << rep.convention << ")";
        emit(opt, os.str());
    } else {
        emit(opt, rep.to_json());
    }
    return rep.pass ? kExitOk : kExitCheckFailed;
}

int cmd_verify_hecke(const Options& opt)
{
    HeckeSymmetry h = resolve_hecke(opt.hecke); // construction validates
    HeckeReport rep = check_all(h.R(), h.lambda());
    ordered_json j;
    j["yang_baxter"] = rep.yang_baxter;
    j["hecke"] = rep.hecke;
    j["even_rank"] = rep.even_rank;
    j["rank_p"] = rep.rank_p;
    j["closed"] = rep.closed;
    j["status"] = rep.all_pass() ? "pass" : "fail";
    if (opt.format == "text") {
        std::ostringstream os;
        os << "yang_baxter=" << rep.yang_baxter << " hecke=" << rep.hecke
           << " even_rank=" << rep.even_rank << " (p=" << rep.rank_p << ")"
           << " closed=" << rep.closed;
        emit(opt, os.str());
    } else {
        emit(opt, j.dump(2));
    }
    return rep.all_pass() ? kExitOk : kExitCheckFailed;
}

int cmd_verify_projectors(const Options& opt)
{
    OrbitInputs in = resolve_orbit_inputs(opt);
    OrbitSpec orbit = make_orbit(in.hecke, in.mu, in.tag, in.bound);
    progress("checking the projector family");
    ProjectorReport rep = verify_projector_family(orbit);
    if (opt.format == "text")
        emit(opt, std::string("projectors: ") + (rep.all_pass() ? "pass" : "FAIL"));
    else
        emit(opt, rep.to_json());
    return rep.all_pass() ? kExitOk : kExitCheckFailed;
}

int cmd_verify_lplus(const Options& opt)
{
    OrbitInputs in = resolve_orbit_inputs(opt);
    OrbitSpec orbit = make_orbit(in.hecke, in.mu, AlgebraTag::RE, in.bound);
    progress("reducing the cubic identity for the symmetric extension");
    LplusReport rep = verify_ch_lplus(in.hecke, orbit);
    if (opt.format == "text")
        emit(opt, "lplus: " + rep.passing_variant + (rep.pass() ? " (pass)" : " (FAIL)"));
    else
        emit(opt, rep.to_json());
    return rep.pass() ? kExitOk : kExitCheckFailed;
}

int cmd_verify_shift(const Options& opt)
{
    HeckeSymmetry h = resolve_hecke(opt.hecke);
    progress("comparing the two paths of the coefficient shift");
    ordered_json rows = ordered_json::array();
    bool all = true;
    for (unsigned k = 1; k <= h.rank_p(); ++k) {
        bool ok = sigma_shift_direct(h, k) == sigma_shift_transform(h, k);
        all = all && ok;
        ordered_json r;
        r["k"] = k;
        r["agree"] = ok;
        rows.push_back(std::move(r));
    }
    ordered_json j;
    j["identity"] = "sigma-shift";
    j["n"] = h.n();
    j["p"] = h.rank_p();
    j["rows"] = std::move(rows);
    j["status"] = all ? "pass" : "fail";
    emit(opt, opt.format == "text" ? std::string("shift: ") + (all ? "pass" : "FAIL")
                                   : j.dump(2));
    return all ? kExitOk : kExitCheckFailed;
}

int cmd_coeffs(const Options& opt)
{
    unsigned p = opt.coeff_p;
    if (p < 1 || p > 6)
        throw DomainError("--p must be between 1 and 6");
    progress("computing coefficient tables for p = " + std::to_string(p));
    ordered_json rows = ordered_json::array();
    for (unsigned s = 0; s <= p; ++s)
        for (unsigned k = 0; k <= s; ++k) {
            Scalar xd = xi_direct(p, s, k);
            Scalar xc = xi_closed(p, s, k);
            Scalar om = omega(p, s, k);
            ordered_json r;
            r["p"] = p;
            r["s"] = s;
            r["k"] = k;
            r["xi_direct"] = xd.str();
            r["xi_closed"] = xc.str();
            r["xi_agree"] = (xd == xc);
            r["omega"] = om.str();
            try {
                r["rho"] = rho(p, s, k).str();
            } catch (const PoleError&) {
                r["rho"] = "POLE";
            }
            rows.push_back(std::move(r));
        }
    PhiVerdict v = compare_phi(p);
    ordered_json j;
    j["p"] = p;
    j["rows"] = std::move(rows);
    j["phi"] = {{"matches_upper_p", v.matches_upper_p},
                {"matches_upper_p_minus_1", v.matches_upper_pm1},
                {"extraction_inverts", v.extraction_inverts}};
    if (opt.format == "text") {
        std::ostringstream os;
        os << "p s k  xi-agree  omega  rho\n";
        for (auto& r : j["rows"])
            os << r["p"] << " " << r["s"] << " " << r["k"] << "  "
               << (r["xi_agree"].get<bool>() ? "yes" : "NO") << "  "
               << r["omega"].get<std::string>() << "  " << r["rho"].get<std::string>()
               << "\n";
        os << "phi product upper limit: "
           << (v.matches_upper_pm1 ? "p-1" : (v.matches_upper_p ? "p" : "none"));
        emit(opt, os.str());
    } else {
        emit(opt, j.dump(2));
    }
    return kExitOk;
}

int cmd_orbit(const Options& opt)
{
    if (opt.nu.empty())
        throw DomainError("--nu is required for orbit reports");
    OrbitInputs in = resolve_orbit_inputs(opt);
    AlgebraTag tag = in.tag;
    OrbitSpec orbit = make_orbit(in.hecke, in.mu, tag, in.bound);
    ordered_json rows = ordered_json::array();
    for (auto& nu : parse_expr_list(opt.nu)) {
        ModuleVerdict v = module_nontrivial(orbit, nu);
        ordered_json r;
        r["nu"] = nu.str();
        r["verdict"] = v.trivial ? "trivial" : "nontrivial";
        if (!v.trivial)
            r["index"] = v.index;
        rows.push_back(std::move(r));
    }
    ordered_json j;
    j["algebra"] = algebra_tag_name(tag);
    j["n"] = orbit.n;
    j["p"] = orbit.p;
    j["rows"] = std::move(rows);
    if (opt.format == "text") {
        std::ostringstream os;
        for (auto& r : j["rows"]) {
            os << r["nu"].get<std::string>() << ": " << r["verdict"].get<std::string>();
            if (r.contains("index"))
                os << "(" << r["index"] << ")";
            os << "\n";
        }
        std::string s = os.str();
        if (!s.empty())
            s.pop_back();
        emit(opt, s);
    } else {
        emit(opt, j.dump(2));
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact verification of Hecke-symmetry matrix identities, "
                 "quantum orbits, and line-bundle projectors"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd, bool with_mu_nu) {
        cmd->add_option("--hecke", opt.hecke, "standard:n or a JSON file path");
        cmd->add_option("--algebra", opt.algebra, "RE | REqh | Ugl");
        if (with_mu_nu) {
            cmd->add_option("--mu", opt.mu, "comma-separated root expressions");
            cmd->add_option("--nu", opt.nu, "comma-separated test values");
            cmd->add_option("--orbit", opt.orbit_file, "orbit description JSON file");
        }
        cmd->add_option("--degree-bound", opt.degree_bound,
                        "completion bound (default rank+2; env QCH_DEGREE_BOUND)");
        cmd->add_option("--out", opt.out, "write the report to a file");
        cmd->add_option("--format", opt.format, "json | text")
            ->check(CLI::IsMember({"json", "text"}));
    };

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->require_subcommand(1);
    std::map<std::string, int (*)(const Options&)> verify_targets = {
        {"ch", cmd_verify_ch},
        {"hecke", cmd_verify_hecke},
        {"projectors", cmd_verify_projectors},
        {"lplus", cmd_verify_lplus},
        {"shift", cmd_verify_shift},
    };
    for (auto& [name, fn] : verify_targets)
        add_common(verify->add_subcommand(name), true);

    auto* coeffs = app.add_subcommand("coeffs", "Appendix coefficient tables");
    coeffs->add_option("--p", opt.coeff_p, "rank parameter (1..6, default 4)");
    coeffs->add_option("--out", opt.out, "write the report to a file");
    coeffs->add_option("--format", opt.format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* orbit = app.add_subcommand("orbit", "module triviality across a nu list");
    add_common(orbit, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (app.got_subcommand("coeffs"))
            return cmd_coeffs(opt);
        if (app.got_subcommand("orbit"))
            return cmd_orbit(opt);
        for (auto& [name, fn] : verify_targets)
            if (verify->got_subcommand(name))
                return fn(opt);
        throw DomainError("no subcommand selected");
    } catch (const EngineError& e) {
        std::cerr << "engine failure: " << e.what() << "\n";
        return kExitEngine;
    } catch (const PoleError& e) {
        std::cerr << "engine failure (pole): " << e.what() << "\n";
        return kExitEngine;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
}
