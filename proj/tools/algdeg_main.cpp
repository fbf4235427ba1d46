// algdeg: exact computations with algebra structure tensors from the command
// line.  Commands read and emit JSON so they compose through pipes; "-" reads
// stdin.  Exit codes: 0 success, 1 domain error, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "algdeg/catalog.hpp"
#include "algdeg/degen.hpp"
#include "algdeg/json_io.hpp"
#include "algdeg/modspan.hpp"

using namespace algdeg;

namespace {

Json read_json_input(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open \"" + path + "\"");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("\"" + path + "\" is not valid JSON");
    return j;
}

StructureVector read_vector(const std::string& path) {
    return structure_vector_from_json(read_json_input(path));
}

std::vector<long long> parse_int_list(const std::string& text, const char* flag) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ParseError(std::string(flag) + ": \"" + item + "\" is not an integer");
        }
    }
    if (out.empty()) throw ParseError(std::string(flag) + ": empty list");
    return out;
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

FieldSpec field_option(unsigned p) {
    return p == 0 ? FieldSpec::rationals() : FieldSpec::prime_field(p);
}

StructureVector reinterpret_over(const StructureVector& v, const FieldSpec& fs) {
    if (v.spec() == fs) return v;
    if (!v.spec().is_rationals())
        throw ParseError("--p: input is already over a different finite field");
    StructureVector out(v.n(), fs);
    for (std::size_t m = 1; m <= v.size(); ++m) {
        const FieldScalar& e = v.at_flat(m);
        if (!e.is_zero()) out.set_flat(m, FieldScalar::from_rational(fs, e.rational()));
    }
    return out;
}

void run_info(const std::string& file, bool human) {
    const StructureVector v = read_vector(file);
    const InvariantProfile p = invariant_profile(v);
    if (!human) {
        emit(json_of(p, v));
        return;
    }
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "n = " << v.n() << ", field = " << json_of(v.spec()).dump() << "\n"
              << "skew " << yn(p.skew) << ", lie " << yn(p.lie) << ", metabelian "
              << yn(p.metabelian) << ", commutative " << yn(p.commutative)
              << ", unimodular " << yn(p.unimodular) << "\n"
              << "products in factor span (" << (p.star ? yn(*p.star) : "undecidable")
              << "), squares on element line (" << yn(p.star_star) << ")\n"
              << "rank a = " << p.rank_a << ", rank b = " << p.rank_b << ", ann = ("
              << p.ann.left << "," << p.ann.right << "," << p.ann.two_sided
              << "), square dim = " << p.square << "\n"
              << "in P " << yn(in_P(v)) << ", in U " << yn(in_U(v)) << "\n";
}

void run_act(const std::string& vec_file, const std::string& basis_file) {
    if (vec_file == "-" && basis_file == "-")
        throw ParseError("only one argument may read stdin");
    const StructureVector v = read_vector(vec_file);
    const BasisChange g = basis_change_from_json(read_json_input(basis_file));
    emit(json_of(act(v, g)));
}

void run_grade(const std::string& file, const std::string& q_list,
               const std::string& target_file, bool human) {
    const StructureVector v = read_vector(file);
    const WeightVector q{parse_int_list(q_list, "--q")};
    const bool hyp = hypothesis_holds(v, q);
    const StructureVector tr = truncate(v, q);
    Json out{{"q", json_of(q)}, {"hypothesis_holds", hyp}, {"truncation", json_of(tr)}};
    if (!target_file.empty())
        out["matches_target"] = tr == read_vector(target_file);
    if (human) {
        std::cout << "hypothesis: " << (hyp ? "holds" : "fails") << "\n"
                  << "truncation: " << json_of(tr).dump() << "\n";
        if (out.contains("matches_target"))
            std::cout << "matches target: " << (out["matches_target"].get<bool>() ? "yes" : "no")
                      << "\n";
        return;
    }
    emit(out);
}

void run_degen(const std::string& from_file, const std::string& to_file, long long bound) {
    if (from_file == "-" && to_file == "-")
        throw ParseError("only one argument may read stdin");
    const StructureVector from = read_vector(from_file);
    const StructureVector to = read_vector(to_file);
    DegenerationVerdict verdict = necessary_conditions(from, to);
    if (verdict.kind == DegenerationVerdict::Kind::Inconclusive) {
        if (to.is_zero()) {
            verdict = witness_to_abelian(from);
        } else if (auto q = search_weight_witness(from, to, bound)) {
            verdict = DegenerationVerdict{DegenerationVerdict::Kind::WitnessGrading,
                                          from,
                                          to,
                                          *q,
                                          BasisChange::identity(from.n(), from.spec()),
                                          0,
                                          {},
                                          {},
                                          {}};
            if (!verdict.self_verify()) throw InternalError("search returned a bad witness");
        }
    }
    emit(json_of(verdict));
}

void run_orbit(const std::string& file) {
    const StructureVector v = read_vector(file);
    const OrbitEnumeration orbit = enumerate_orbit(v);
    emit(Json{{"n", v.n()},
              {"field", json_of(v.spec())},
              {"orbit_size", orbit.size()},
              {"members_count", orbit.size()},
              {"group_order", orbit.group_order()},
              {"representative", json_of(orbit.representative())}});
}

void run_span(const std::string& file, unsigned p) {
    StructureVector v = read_vector(file);
    if (p != 0) v = reinterpret_over(v, FieldSpec::prime_field(p));
    emit(json_of(fg_span(v)));
}

void run_classify(const std::string& file, bool human) {
    const ClassificationLabel label = classify(read_vector(file));
    if (human) {
        std::cout << "label: " << label_name(label.kind);
        if (label.alpha) std::cout << " with alpha = " << label.alpha->str();
        std::cout << "\n";
        if (label.witness)
            std::cout << "witness: " << json_of(*label.witness).dump() << "\n";
        return;
    }
    emit(json_of(label));
}

void run_catalog(const std::string& name, std::size_t n, unsigned p, const std::string& alpha,
                 const std::string& beta, const std::string& rst) {
    const FieldSpec fs = field_option(p);
    auto alpha_scalar = [&]() {
        if (alpha.empty()) throw ParseError("--alpha is required for \"" + name + "\"");
        return FieldScalar::parse(fs, alpha);
    };
    auto rst_list = [&]() {
        const std::vector<long long> v = parse_int_list(rst.empty() ? "0" : rst, "--rst");
        if (rst.empty() || v.size() != 3)
            throw ParseError("--rst needs three comma-separated indices");
        return v;
    };
    StructureVector out = catalog::abelian(2, fs);
    if (name == "abelian") {
        out = catalog::abelian(n, fs);
    } else if (name == "rho") {
        out = catalog::rho(n, fs);
    } else if (name == "eta") {
        out = catalog::eta(n, fs);
    } else if (name == "delta") {
        out = catalog::delta(n, fs);
    } else if (name == "epsilon") {
        out = catalog::epsilon(n, fs, alpha_scalar());
    } else if (name == "lambda_hat") {
        const auto v = rst_list();
        out = catalog::lambda_hat(v[0], v[1], v[2], n, fs);
    } else if (name == "lambda_tilde") {
        const auto v = rst_list();
        out = catalog::lambda_tilde(v[0], v[1], v[2], n, fs);
    } else if (name == "k2") {
        if (beta.empty()) throw ParseError("--beta is required for \"k2\"");
        out = catalog::k2_member(fs, alpha_scalar(), FieldScalar::parse(fs, beta));
    } else if (name == "g_family") {
        if (beta.empty()) throw ParseError("--beta is required for \"g_family\"");
        std::vector<FieldScalar> betas;
        std::stringstream ss(beta);
        std::string item;
        while (std::getline(ss, item, ',')) betas.push_back(FieldScalar::parse(fs, item));
        out = catalog::g_family(fs, alpha_scalar(), betas);
    } else {
        throw ParseError("unknown catalog name \"" + name + "\"");
    }
    emit(json_of(out));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with algebra structure tensors"};
    app.require_subcommand(1);

    std::string file = "-", second_file, q_list, target_file, name, alpha, beta, rst;
    std::size_t n = 3;
    unsigned p = 0;
    long long bound = 3;
    bool human = false;

    CLI::App* info = app.add_subcommand("info", "predicates and invariants of a vector");
    info->add_option("file", file)->required();
    info->add_flag("--human", human, "prose report instead of JSON");

    CLI::App* act_cmd = app.add_subcommand("act", "apply a change of basis");
    act_cmd->add_option("file", file)->required();
    act_cmd->add_option("basis", second_file)->required();

    CLI::App* grade = app.add_subcommand("grade", "weight truncation and hypothesis check");
    grade->add_option("file", file)->required();
    grade->add_option("--q", q_list, "comma-separated weights")->required();
    grade->add_option("--target", target_file, "compare the truncation with this vector");
    grade->add_flag("--human", human);

    CLI::App* degen_cmd = app.add_subcommand("degen", "degeneration verdict for a pair");
    degen_cmd->add_option("from", file)->required();
    degen_cmd->add_option("to", second_file)->required();
    degen_cmd->add_option("--search", bound, "weight search bound (default 3)");

    CLI::App* orbit = app.add_subcommand("orbit", "enumerate a small finite-field orbit");
    orbit->add_option("file", file)->required();

    CLI::App* span = app.add_subcommand("span", "basis-change-stable span of a vector");
    span->add_option("file", file)->required();
    span->add_option("--p", p, "reinterpret the vector over F_p first");

    CLI::App* classify_cmd = app.add_subcommand("classify", "level-one classification");
    classify_cmd->add_option("file", file)->required();
    classify_cmd->add_flag("--human", human);

    CLI::App* cat = app.add_subcommand("catalog", "emit a named structure vector");
    cat->add_option("name", name)->required();
    cat->add_option("--n", n, "dimension (default 3)");
    cat->add_option("--p", p, "prime field instead of the rationals");
    cat->add_option("--alpha", alpha, "family parameter, as a scalar string");
    cat->add_option("--beta", beta, "scalar or comma-separated scalars");
    cat->add_option("--rst", rst, "three indices r,s,t");

    try {
        app.parse(argc, argv);
        if (info->parsed()) run_info(file, human);
        if (act_cmd->parsed()) run_act(file, second_file);
        if (grade->parsed()) run_grade(file, q_list, target_file, human);
        if (degen_cmd->parsed()) run_degen(file, second_file, bound);
        if (orbit->parsed()) run_orbit(file);
        if (span->parsed()) run_span(file, p);
        if (classify_cmd->parsed()) run_classify(file, human);
        if (cat->parsed()) run_catalog(name, n, p, alpha, beta, rst);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
