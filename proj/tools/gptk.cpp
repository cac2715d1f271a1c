// gptk: exact Gorenstein-projective toolkit over triangular matrix algebras.
//
// Exit codes: 0 pass/agree, 1 invalid input, 2 invariant breach
// (disagreement or suite failure), 3 criterion inapplicable.
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gptk/homological.hpp"
#include "gptk/io.hpp"
#include "gptk/suites.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitBreach = 2;
constexpr int kExitInapplicable = 3;

struct Config {
    std::size_t bound = 8;
    uint64_t seed = 0xC0FFEEull;
    std::size_t trials = 200;
    uint64_t cap = 1ull << 20;
    std::string out;
};

std::string config_echo(const Config& c) {
    std::ostringstream s;
    s << "bound=" << c.bound << " seed=0x" << std::hex << c.seed << std::dec
      << " trials=" << c.trials << " cap=" << c.cap;
    return s.str();
}

std::string tag_name(gptk::GPTag t) {
    switch (t) {
        case gptk::GPTag::ProvenGP: return "ProvenGP";
        case gptk::GPTag::GPUpToBound: return "GPUpToBound";
        case gptk::GPTag::NotGP: return "NotGP";
    }
    return "?";
}

struct Inapplicable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Certified base list of Gorenstein projectives over a, via whichever
// structural strategy applies.
std::vector<gptk::Module> derive_base(const gptk::AlgebraPtr& a,
                                      std::size_t maxdim) {
    if (gptk::is_self_injective(a)) {
        try {
            return gptk::gp_base_list(a, maxdim,
                                      gptk::GPStrategy::SelfInjective);
        } catch (const std::exception& e) {
            throw Inapplicable(
                std::string("self-injective strategy needs a supplied "
                            "indecomposable list: ") +
                e.what());
        }
    }
    if (gptk::finite_global_dimension(a, 16))
        return gptk::gp_base_list(a, maxdim,
                                  gptk::GPStrategy::FiniteGlobalDimension);
    throw Inapplicable(
        "no structural strategy: base algebra is neither self-injective nor "
        "of finite global dimension <= 16");
}

// Gorenstein injective candidates over a: duals of the Gorenstein
// projectives over the opposite algebra.
std::vector<gptk::Module> derive_gi_list(const gptk::AlgebraPtr& a,
                                         std::size_t maxdim) {
    auto gp_op = derive_base(gptk::opposite(a), maxdim);
    std::vector<gptk::Module> out;
    for (const auto& m : gp_op) out.push_back(gptk::dual(m));
    return out;
}

int cmd_validate(const std::vector<std::string>& paths) {
    for (const auto& path : paths) {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(gptk::read_file(path));
        } catch (const std::exception& e) {
            std::cout << path << ": INVALID (" << e.what() << ")\n";
            return kExitInput;
        }
        std::string kind = doc.value("kind", "");
        try {
            if (kind == "algebra") gptk::load_algebra(path);
            else if (kind == "module") gptk::load_module(path);
            else if (kind == "bimodule") gptk::load_bimodule(path);
            else if (kind == "triangular") gptk::load_triangular(path);
            else if (kind == "triple") gptk::load_triple(path);
            else if (kind == "census") gptk::load_census(path);
            else throw std::runtime_error("unknown kind '" + kind + "'");
        } catch (const std::exception& e) {
            std::cout << path << ": INVALID (" << e.what() << ")\n";
            return kExitInput;
        }
        std::cout << path << ": OK (" << kind << ")\n";
    }
    return kExitOk;
}

int cmd_check(const std::string& path, const std::string& kind,
              const Config& cfg) {
    gptk::TripleModule t = gptk::load_triple(path);
    gptk::Module flat = gptk::triple_to_module(t);
    std::cout << "check " << kind << " " << path << " [" << config_echo(cfg)
              << "]\n";
    if (kind == "proj") {
        gptk::ProjectivityReport rep = gptk::is_projective_triple(t);
        bool oracle = gptk::is_projective(flat);
        bool agree = rep.projective == oracle;
        std::cout << "criterion: "
                  << (rep.projective ? "projective" : "not projective") << " ("
                  << rep.reason << ")\n"
                  << "oracle:    " << (oracle ? "projective" : "not projective")
                  << "\n"
                  << (agree ? "AGREE" : "DISAGREE") << "\n";
        return agree ? kExitOk : kExitBreach;
    }
    if (kind == "gp") {
        auto r_list = derive_base(t.gamma->r, cfg.bound);
        auto s_list = derive_base(t.gamma->s, cfg.bound);
        auto c1 = gptk::check_condition1(t.gamma->m, r_list);
        auto c2 = gptk::check_condition2(t.gamma->m, s_list);
        if (!c1.pass || !c2.pass)
            throw Inapplicable("bimodule flatness condition failed: " +
                               (c1.pass ? c2.witness : c1.witness));
        gptk::GPTripleVerdict v = gptk::is_gp_triple(t, c1, c2, cfg.bound);
        if (!v.applicable) throw Inapplicable(v.note);
        gptk::GPVerdict o = gptk::gp_oracle(flat, cfg.bound);
        bool agree = (v.verdict.tag == gptk::GPTag::NotGP) ==
                     (o.tag == gptk::GPTag::NotGP);
        std::cout << "criterion: " << tag_name(v.verdict.tag)
                  << " (phi mono=" << v.phi_mono
                  << " X=" << tag_name(v.x_verdict.tag)
                  << " coker=" << tag_name(v.coker_verdict.tag) << ")\n"
                  << "oracle:    " << tag_name(o.tag) << "\n"
                  << (agree ? "AGREE" : "DISAGREE") << "\n";
        return agree ? kExitOk : kExitBreach;
    }
    if (kind == "gi") {
        auto gi_s = derive_gi_list(t.gamma->s, cfg.bound);
        auto gi_r = derive_gi_list(t.gamma->r, cfg.bound);
        auto c3 = gptk::check_condition3(t.gamma->m, gi_s);
        auto c4 = gptk::check_condition4(t.gamma->m, gi_r);
        if (!c3.pass || !c4.pass)
            throw Inapplicable("bimodule coflatness condition failed: " +
                               (c3.pass ? c4.witness : c3.witness));
        gptk::GITripleVerdict v = gptk::is_gi_triple(t, c3, c4, cfg.bound);
        if (!v.applicable) throw Inapplicable(v.note);
        gptk::GPVerdict o = gptk::gi_oracle(flat, cfg.bound);
        bool agree = (v.verdict.tag == gptk::GPTag::NotGP) ==
                     (o.tag == gptk::GPTag::NotGP);
        std::cout << "criterion: " << tag_name(v.verdict.tag)
                  << " (adjoint epi=" << v.adjoint_epi
                  << " Y=" << tag_name(v.y_verdict.tag)
                  << " kernel=" << tag_name(v.kernel_verdict.tag) << ")\n"
                  << "oracle:    " << tag_name(o.tag) << "\n"
                  << (agree ? "AGREE" : "DISAGREE") << "\n";
        return agree ? kExitOk : kExitBreach;
    }
    throw std::invalid_argument("unknown check kind '" + kind + "'");
}

int cmd_census(const std::string& path, const Config& cfg) {
    gptk::TriangularPtr g = gptk::load_triangular(path);
    auto r_list = derive_base(g->r, cfg.bound);
    auto s_list = derive_base(g->s, cfg.bound);
    auto c1 = gptk::check_condition1(g->m, r_list);
    auto c2 = gptk::check_condition2(g->m, s_list);
    if (!c1.pass || !c2.pass)
        throw Inapplicable("bimodule flatness condition failed");
    gptk::CensusConfig ccfg;
    ccfg.seed = cfg.seed;
    ccfg.oracle_bound = cfg.bound;
    gptk::GPCensus census =
        gptk::enumerate_gp_gamma(g, r_list, s_list, cfg.bound, c1, c2, ccfg);
    std::cout << "census " << path << " [" << config_echo(cfg) << "]\n"
              << gptk::census_table(census);
    if (!cfg.out.empty()) {
        gptk::save_census(cfg.out, census, cfg.seed);
        std::cout << "saved " << cfg.out << "\n";
    }
    return kExitOk;
}

int cmd_suite(const std::string& name, const Config& cfg) {
    gptk::SuiteResult r = gptk::run_suite(name, cfg.seed);
    std::cout << "suite " << name << " [" << config_echo(cfg) << "] "
              << (r.pass ? "PASS" : "FAIL") << " " << r.detail << "\n";
    if (!r.pass && !cfg.out.empty()) {
        std::filesystem::create_directories(cfg.out);
        std::string report =
            (std::filesystem::path(cfg.out) / ("suite_" + name + "_failure.txt"))
                .string();
        gptk::atomic_write(report, r.detail + "\n");
        std::cout << "counterexample written to " << report << "\n";
    }
    return r.pass ? kExitOk : kExitBreach;
}

int cmd_ext(const std::string& xp, const std::string& yp, std::size_t degree) {
    gptk::Module x = gptk::load_module(xp), y = gptk::load_module(yp);
    std::cout << "dim Ext^" << degree << " = " << gptk::ext_dim(x, y, degree)
              << "\n";
    return kExitOk;
}

int cmd_tor(const std::string& mp, const std::string& xp, std::size_t degree) {
    gptk::Module m = gptk::load_module(mp), x = gptk::load_module(xp);
    std::cout << "dim Tor_" << degree << " = " << gptk::tor_dim(m, x, degree)
              << "\n";
    return kExitOk;
}

int cmd_cover(const std::string& xp) {
    gptk::Module x = gptk::load_module(xp);
    gptk::ModuleHom c = gptk::projective_cover(x);
    std::cout << "module dim " << x.dim << ", projective cover dim "
              << c.source.dim << "\n";
    return kExitOk;
}

int cmd_syzygy(const std::string& xp, std::size_t degree) {
    gptk::Module x = gptk::load_module(xp);
    gptk::Module s = gptk::syzygy(x, degree);
    std::cout << "dim syzygy_" << degree << " = " << s.dim << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Gorenstein-projective toolkit for triangular matrix "
                 "algebras over prime fields"};
    app.require_subcommand(1);

    Config cfg;
    if (const char* ws = std::getenv("GPTK_WORKSPACE")) cfg.out = ws;
    app.add_option("--bound", cfg.bound, "homological search bound");
    app.add_option("--seed", cfg.seed, "random seed (recorded in outputs)");
    app.add_option("--trials", cfg.trials, "random isomorphism trials");
    app.add_option("--cap", cfg.cap, "exhaustive search cap");
    app.add_option("--out", cfg.out,
                   "output file or directory (default: $GPTK_WORKSPACE)");

    // let --bound/--seed/--out appear after the subcommand as well
    app.fallthrough();

    std::vector<std::string> paths;
    auto* validate = app.add_subcommand("validate", "check file invariants");
    validate->add_option("files", paths, "input files")->required();

    std::string triple_path, check_kind = "gp";
    auto* check = app.add_subcommand("check", "triple criterion vs oracle");
    check->add_option("triple", triple_path, "triple file")->required();
    check->add_option("--kind", check_kind, "proj | gp | gi");

    std::string gamma_path;
    auto* census =
        app.add_subcommand("census", "enumerate Gorenstein projectives");
    census->add_option("triangular", gamma_path, "triangular algebra file")
        ->required();

    std::string suite_name;
    auto* suite = app.add_subcommand("suite", "run a verification suite");
    suite->add_option("name", suite_name, "suite name (see --list)");
    bool list_suites = false;
    suite->add_flag("--list", list_suites, "list suite names");

    std::string path_a, path_b;
    std::size_t degree = 1;
    auto* ext = app.add_subcommand("ext", "dim Ext^i(x, y)");
    ext->add_option("x", path_a)->required();
    ext->add_option("y", path_b)->required();
    ext->add_option("--degree", degree);

    auto* tor = app.add_subcommand("tor", "dim Tor_i(m_right, x)");
    tor->add_option("m", path_a)->required();
    tor->add_option("x", path_b)->required();
    tor->add_option("--degree", degree);

    auto* cover = app.add_subcommand("cover", "projective cover dimensions");
    cover->add_option("x", path_a)->required();

    auto* syz = app.add_subcommand("syzygy", "dim of the i-th syzygy");
    syz->add_option("x", path_a)->required();
    syz->add_option("--degree", degree);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(validate)) return cmd_validate(paths);
        if (app.got_subcommand(check))
            return cmd_check(triple_path, check_kind, cfg);
        if (app.got_subcommand(census)) return cmd_census(gamma_path, cfg);
        if (app.got_subcommand(suite)) {
            if (list_suites) {
                for (const auto& n : gptk::suite_names())
                    std::cout << n << "\n";
                return kExitOk;
            }
            if (suite_name.empty()) {
                std::cerr << "suite: name required (or --list)\n";
                return kExitInput;
            }
            return cmd_suite(suite_name, cfg);
        }
        if (app.got_subcommand(ext)) return cmd_ext(path_a, path_b, degree);
        if (app.got_subcommand(tor)) return cmd_tor(path_a, path_b, degree);
        if (app.got_subcommand(cover)) return cmd_cover(path_a);
        if (app.got_subcommand(syz)) return cmd_syzygy(path_a, degree);
    } catch (const Inapplicable& e) {
        std::cout << "criterion inapplicable: " << e.what() << "\n";
        return kExitInapplicable;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::logic_error& e) {
        std::cerr << "invariant breach: " << e.what() << "\n";
        return kExitBreach;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
