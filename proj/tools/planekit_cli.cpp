// Command line front end: every library operation behind a verb, with the
// shared text grammar for payloads and optional JSON output.
//
// Exit codes: 0 success, 1 domain error (the error code name goes to
// stderr), 2 parse error (byte offset in the message).

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "planekit/json_io.hpp"
#include "planekit/matpoly.hpp"
#include "planekit/parse.hpp"

using namespace planekit;

namespace {

std::string read_payload(const std::string& arg) {
    if (arg != "-") return arg;
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
}

// "(a:b)|f" -> line and coefficient polynomial
std::pair<ProjPoint, UniPoly> parse_factor_arg(const std::string& raw, const FieldSpec& fld) {
    std::string text = read_payload(raw);
    auto bar = text.find('|');
    if (bar == std::string::npos) {
        throw ParseError(text.size(), "expected '<line>|<poly>' in a factor argument");
    }
    ProjPoint delta = parse_projpoint(text.substr(0, bar), fld);
    UniPoly f = parse_unipoly(text.substr(bar + 1), fld);
    return {delta, f};
}

struct Common {
    std::string field_text = "q";
    bool json = false;

    FieldSpec field() const { return FieldSpec::parse(field_text); }
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--field", c.field_text, "Base field: q (rationals) or fp:<prime>");
    cmd->add_flag("--json", c.json, "Emit a JSON envelope instead of plain text");
}

void emit(const Common& c, const std::string& verb, const std::string& text,
          const std::string& json_value) {
    if (c.json) {
        std::cout << json_envelope(verb, c.field(), json_value) << "\n";
    } else {
        std::cout << text << "\n";
    }
}

std::string tau_word_text(const TauWord& w) {
    if (w.factors.empty()) return "identity";
    std::string out;
    for (const TauFactor& f : w.factors) {
        if (!out.empty()) out += "\n";
        out += f.delta.str() + " | " + f.f.str();
    }
    return out;
}

std::string e_word_text(const EWord& w) {
    if (w.factors.empty()) return "identity";
    std::string out;
    for (const EFactor& f : w.factors) {
        if (!out.empty()) out += "\n";
        out += f.delta.str() + " | " + f.f.str();
    }
    return out;
}

std::string vdk_word_text(const VdkWord& w) {
    std::string out;
    for (const VdkFactor& f : w.factors) {
        out += (f.kind == Membership::Affine ? "affine:     " : "elementary: ");
        out += f.value.str() + "\n";
    }
    out += "tail:       " + w.tail.str();
    return out;
}

std::string congruence_text(const CongruenceData& c) {
    std::string out = "modulus: " + std::to_string(c.modulus);
    out += "\nindex: " + std::to_string(c.index);
    out += "\ngenerators:";
    if (c.generators.empty()) out += " (none)";
    for (const Mat2& g : c.generators) out += "\n  " + g.str();
    out += "\ntransversal:";
    for (const Mat2& g : c.transversal) out += "\n  " + g.str();
    return out;
}

std::string pingpong_text(const PingPongReport& r) {
    std::string out = "checks: " + std::to_string(r.checks);
    out += "\nviolations: " + std::to_string(r.violations.size());
    for (const std::string& v : r.violations) out += "\n  " + v;
    out += r.clean() ? "\nclean: yes" : "\nclean: NO";
    return out;
}

std::string distinctness_text(const DistinctnessReport& r) {
    std::string out = "words enumerated: " + std::to_string(r.words_enumerated);
    out += "\nnormal forms: " + std::to_string(r.normal_forms);
    out += "\ncollisions: " + std::to_string(r.collisions.size());
    for (const std::string& v : r.collisions) out += "\n  " + v;
    out += "\nmismatches: " + std::to_string(r.mismatches.size());
    for (const std::string& v : r.mismatches) out += "\n  " + v;
    out += r.clean() ? "\nclean: yes" : "\nclean: NO";
    return out;
}

std::string degree_report_text(const DegreeLawReport& r) {
    std::string out = "map degree: " + std::to_string(r.aut_degree);
    out += "\nmatrix degree: " + std::to_string(r.mat_degree);
    out += "\nfactor degrees:";
    for (int d : r.factor_degrees) out += " " + std::to_string(d);
    return out;
}

SubgroupSpec subgroup_from(const std::vector<std::string>& gen_texts, const FieldSpec& fld) {
    std::vector<Mat2> gens;
    for (const std::string& g : gen_texts) gens.push_back(parse_mat2(read_payload(g), fld));
    return SubgroupSpec(std::move(gens), fld);
}

OrbitSection section_for(const std::string& mode, const SubgroupSpec& s, int depth) {
    if (mode == "identity") return identity_section(s.field);
    if (mode == "cyclic") {
        require(s.generators.size() == 1, "BadShape",
                "cyclic sections need exactly one generator");
        return cyclic_exact_section(s.generators[0]);
    }
    if (mode == "bfs") return bounded_bfs_section(s, depth);
    // auto: prove an exact section when the group is cyclic, else search
    if (s.generators.empty()) return identity_section(s.field);
    if (s.generators.size() == 1) {
        try {
            return cyclic_exact_section(s.generators[0]);
        } catch (const Error&) {
            // not unipotent over the rationals; fall back to the search
        }
    }
    return bounded_bfs_section(s, depth);
}

// deterministic ping-pong grid over the full projective line: three factor
// polynomials and three cone vectors per line
PingPongReport pingpong_grid(const FieldSpec& fld) {
    require(fld.is_prime_field(), "BadShape",
            "the exhaustive grid needs a finite projective line; use --field fp:<p>");
    std::vector<ProjPoint> lines = all_proj_points(fld);
    std::map<ProjPoint, std::vector<EFactor>> samples;
    std::map<ProjPoint, std::vector<PolyVector>> vectors;
    Scalar one = Scalar::one(fld);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const ProjPoint& delta = lines[i];
        UniPoly t = UniPoly::t(fld);
        samples[delta] = {EFactor(delta, UniPoly::one(fld)), EFactor(delta, t),
                          EFactor(delta, t + UniPoly::one(fld))};
        LineFrame fr = line_frame(delta);
        LineFrame other = line_frame(lines[(i + 1) % lines.size()]);
        PolyVector w{UniPoly::constant(fr.w1), UniPoly::constant(fr.w2)};
        // head coefficient stays on the line; lower order terms may wander
        PolyVector v1{w.x.shifted(1) + UniPoly::constant(other.w1),
                      w.y.shifted(1) + UniPoly::constant(other.w2)};
        PolyVector v2{w.x.shifted(2) + UniPoly::constant(other.w1).shifted(1),
                      w.y.shifted(2) + UniPoly::constant(other.w2).shifted(1)};
        vectors[delta] = {w, v1, v2};
    }
    (void)one;
    return verify_pingpong(samples, vectors);
}

CheckReport cornulier_grid() {
    FieldSpec q = FieldSpec::rationals();
    std::vector<Scalar> alphas = {Scalar::from_int(1, q), Scalar::from_int(-1, q),
                                  Scalar::from_int(2, q), Scalar::fraction(1, 2, q),
                                  Scalar::fraction(-3, 5, q)};
    CheckReport rep;
    for (int n = 0; n <= 4; ++n) {
        std::vector<Scalar> coeffs(static_cast<std::size_t>(n) + 1, Scalar::zero(q));
        coeffs.back() = Scalar::one(q);
        BinomialPoly f(q, coeffs);
        for (const Scalar& alpha : alphas) {
            std::string name = "f=C(t," + std::to_string(n) + ") alpha=" + alpha.str();
            rep.checks.emplace_back(name, verify_cornulier_identity(f, alpha));
        }
    }
    return rep;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"Exact computations with polynomial automorphisms of the plane"};
    app.require_subcommand(1);
    Common c;
    add_common(&app, c);

    std::vector<std::string> payloads;
    std::string payload;
    std::vector<std::string> gen_texts;
    std::string kind = "tau";
    std::string section_mode = "auto";
    std::string suite = "gamma";
    std::string input_text;
    int depth = 6;
    int max_len = 4;
    long modulus = 0;
    long cap = 200000;

    CLI::App* compose_cmd = app.add_subcommand("compose", "Compose two maps (left acts after right)");
    compose_cmd->add_option("maps", payloads)->expected(2);
    CLI::App* inverse_cmd = app.add_subcommand("inverse", "Invert a polynomial map");
    inverse_cmd->add_option("map", payload)->required();
    CLI::App* normalize_cmd =
        app.add_subcommand("normalize", "Merge adjacent shear or matrix factors on equal lines");
    normalize_cmd->add_option("--kind", kind, "tau (shear factors) or e (matrix factors)");
    normalize_cmd->add_option("factors", payloads, "Factors as '<line>|<poly>'");
    CLI::App* fvdk_cmd =
        app.add_subcommand("factor-vdk", "Alternating affine/shear factorization of a map");
    fvdk_cmd->add_option("map", payload)->required();
    CLI::App* ffree_cmd = app.add_subcommand(
        "factor-free", "Shear-word factorization of an origin-fixing, differential-one map");
    ffree_cmd->add_option("map", payload)->required();
    CLI::App* fe_cmd = app.add_subcommand(
        "factor-e", "Unipotent factor word of a unimodular polynomial matrix");
    fe_cmd->add_option("matrix", payload)->required();
    CLI::App* psi_cmd = app.add_subcommand("psi", "Matrix image of an origin-fixing map");
    psi_cmd->add_option("map", payload)->required();
    CLI::App* psiinv_cmd = app.add_subcommand("psi-inv", "Map with the given matrix image");
    psiinv_cmd->add_option("matrix", payload)->required();
    CLI::App* classify_cmd =
        app.add_subcommand("classify", "Reducibility and quasi-unipotence of a constant matrix");
    classify_cmd->add_option("matrix", payload)->required();
    CLI::App* rhos_cmd =
        app.add_subcommand("rho-s", "Linear image of a map through a subgroup-twisted section");
    rhos_cmd->add_option("--gen", gen_texts, "Subgroup generator (repeatable)")->required()->allow_extra_args(false);
    rhos_cmd->add_option("--section", section_mode, "auto, cyclic, bfs or identity");
    rhos_cmd->add_option("--depth", depth, "Search depth for bfs sections");
    rhos_cmd->add_option("map", payload)->required();
    CLI::App* cong_cmd =
        app.add_subcommand("congruence", "Congruence subgroup data for a matrix group");
    cong_cmd->add_option("--gen", gen_texts, "Subgroup generator (repeatable)")->required()->allow_extra_args(false);
    cong_cmd->add_option("--modulus", modulus, "Reduction modulus (default: computed)");
    cong_cmd->add_option("--cap", cap, "Image size cap for the coset enumeration");
    CLI::App* induce_cmd =
        app.add_subcommand("induce", "Block representation induced across the coset transversal");
    induce_cmd->add_option("--gen", gen_texts, "Subgroup generator (repeatable)")->required()->allow_extra_args(false);
    induce_cmd->add_option("--modulus", modulus, "Reduction modulus (default: computed)");
    induce_cmd->add_option("--section", section_mode, "auto, cyclic, bfs or identity");
    induce_cmd->add_option("--depth", depth, "Search depth for bfs sections");
    induce_cmd->add_option("map", payload)->required();
    CLI::App* witness_cmd = app.add_subcommand("witness", "Verification suites");
    witness_cmd->add_option("--suite", suite, "gamma, distinct, cornulier or conjugator");
    witness_cmd->add_option("--max-len", max_len, "Word length bound for the distinct suite");
    witness_cmd->add_option("--input", input_text, "Triangular matrix for the conjugator suite");
    CLI::App* pp_cmd =
        app.add_subcommand("pingpong", "Exhaustive cone inclusion grid over a finite line");
    CLI::App* dl_cmd = app.add_subcommand("degree-law", "Degree bookkeeping of a shear word");
    dl_cmd->add_option("factors", payloads, "Factors as '<line>|<poly>'")->required();

    for (CLI::App* sub : app.get_subcommands({})) add_common(sub, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    FieldSpec fld = c.field();

    if (compose_cmd->parsed()) {
        PolyAut a = PolyAut::from_text(read_payload(payloads[0]), fld);
        PolyAut b = PolyAut::from_text(read_payload(payloads[1]), fld);
        PolyAut r = compose(a, b);
        emit(c, "compose", r.str(), json_of_aut(r));
    } else if (inverse_cmd->parsed()) {
        PolyAut r = inverse(PolyAut::from_text(read_payload(payload), fld));
        emit(c, "inverse", r.str(), json_of_aut(r));
    } else if (normalize_cmd->parsed()) {
        if (kind == "tau") {
            std::vector<TauFactor> fs;
            for (const std::string& p : payloads) {
                auto [d, f] = parse_factor_arg(p, fld);
                fs.emplace_back(d, f);
            }
            TauWord w = tau_word_normalize(std::move(fs));
            emit(c, "normalize", tau_word_text(w), json_of_tau_word(w));
        } else if (kind == "e") {
            std::vector<EFactor> fs;
            for (const std::string& p : payloads) {
                auto [d, f] = parse_factor_arg(p, fld);
                fs.emplace_back(d, f);
            }
            EWord w = e_word_normalize(std::move(fs));
            emit(c, "normalize", e_word_text(w), json_of_e_word(w));
        } else {
            raise("BadShape", "unknown factor kind: " + kind);
        }
    } else if (fvdk_cmd->parsed()) {
        VdkWord w = vdk_factorize(PolyAut::from_text(read_payload(payload), fld));
        emit(c, "factor-vdk", vdk_word_text(w), json_of_vdk(w));
    } else if (ffree_cmd->parsed()) {
        TauWord w = free_factorize(PolyAut::from_text(read_payload(payload), fld));
        emit(c, "factor-free", tau_word_text(w), json_of_tau_word(w));
    } else if (fe_cmd->parsed()) {
        EWord w = e_generation_factorize(parse_matpoly(read_payload(payload), fld));
        emit(c, "factor-e", e_word_text(w), json_of_e_word(w));
    } else if (psi_cmd->parsed()) {
        MatPoly2 m = psi(PolyAut::from_text(read_payload(payload), fld));
        emit(c, "psi", m.str(), json_of_matpoly(m));
    } else if (psiinv_cmd->parsed()) {
        PolyAut r = psi_inv(parse_matpoly(read_payload(payload), fld));
        emit(c, "psi-inv", r.str(), json_of_aut(r));
    } else if (classify_cmd->parsed()) {
        Classification cl = classify(parse_mat2(read_payload(payload), fld));
        emit(c, "classify", cl.str(), json_of_classification(cl));
    } else if (rhos_cmd->parsed()) {
        SubgroupSpec s = subgroup_from(gen_texts, fld);
        OrbitSection sec = section_for(section_mode, s, depth);
        MatPoly2 m = rho_S(PolyAut::from_text(read_payload(payload), fld), s, sec);
        emit(c, "rho-s", m.str(), json_of_matpoly(m));
    } else if (cong_cmd->parsed()) {
        SubgroupSpec s = subgroup_from(gen_texts, fld);
        long m = modulus > 0 ? modulus : congruence_modulus(s);
        CongruenceData data = congruence_subgroup_gens(s, m, cap);
        emit(c, "congruence", congruence_text(data), json_of_congruence(data));
    } else if (induce_cmd->parsed()) {
        SubgroupSpec s = subgroup_from(gen_texts, fld);
        long m = modulus > 0 ? modulus : congruence_modulus(s);
        CongruenceData data = congruence_subgroup_gens(s, m, cap);
        SubgroupSpec sub(data.generators, fld);
        OrbitSection sec = section_for(section_mode, sub, depth);
        BlockMat b =
            induce_representation(PolyAut::from_text(read_payload(payload), fld), s, data, sec);
        emit(c, "induce", b.str(), json_of_blockmat(b));
    } else if (witness_cmd->parsed()) {
        if (suite == "gamma") {
            CheckReport rep = verify_gamma_relations();
            emit(c, "witness", rep.str(), json_of_check_report(rep));
            if (!rep.all_pass()) return 1;
        } else if (suite == "distinct") {
            DistinctnessReport rep = distinctness_suite(max_len);
            emit(c, "witness", distinctness_text(rep), json_of_distinctness(rep));
            if (!rep.clean()) return 1;
        } else if (suite == "cornulier") {
            CheckReport rep = cornulier_grid();
            emit(c, "witness", rep.str(), json_of_check_report(rep));
            if (!rep.all_pass()) return 1;
        } else if (suite == "conjugator") {
            require(!input_text.empty(), "BadShape", "the conjugator suite needs --input");
            Mat2 m = parse_mat2(read_payload(input_text), FieldSpec::rationals());
            PolyAut g = AffineAut::linear(m).to_poly();
            PolyAut gamma = hypothesis_H_witness(g);
            emit(c, "witness", gamma.str(), json_of_aut(gamma));
        } else {
            raise("BadShape", "unknown suite: " + suite);
        }
    } else if (pp_cmd->parsed()) {
        PingPongReport rep = pingpong_grid(fld);
        emit(c, "pingpong", pingpong_text(rep), json_of_pingpong(rep));
        if (!rep.clean()) return 1;
    } else if (dl_cmd->parsed()) {
        std::vector<TauFactor> fs;
        for (const std::string& p : payloads) {
            auto [d, f] = parse_factor_arg(p, fld);
            fs.emplace_back(d, f);
        }
        TauWord w{std::move(fs)};
        DegreeLawReport rep = degree_law_check(w, fld);
        emit(c, "degree-law", degree_report_text(rep), json_of_degree_report(rep));
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}
