// charvar: invariants of generalized torus knot/link groups.
// Exit codes: 0 ok, 1 domain error (NotApplicable, NotKnot, ...), 2 usage error.

#include "charvar/charvar.hpp"
#include "charvar/json_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using charvar::io::json;
namespace census = charvar::census;
namespace groups = charvar::groups;
namespace io = charvar::io;
namespace replab = charvar::replab;

struct Emitter {
    bool as_json = false;

    void ok(const json& payload, const std::string& human) const {
        if (as_json) {
            json envelope{{"schema", "charvar/1"},
                          {"status", "ok"},
                          {"payload", payload},
                          {"diagnostics", json::array()}};
            std::cout << envelope.dump() << "\n";
        } else {
            std::cout << human << "\n";
        }
    }

    void fail(const std::string& name, const std::string& message) const {
        if (as_json) {
            json envelope{{"schema", "charvar/1"},
                          {"status", "error"},
                          {"diagnostics", json::array({name + ": " + message})}};
            std::cout << envelope.dump() << "\n";
        } else {
            std::cerr << "error [" << name << "]: " << message << "\n";
        }
    }
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << j.dump() << "\n";
}

std::string format_complex(const replab::Complex& z) {
    std::ostringstream s;
    s << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return s.str();
}

std::string angle_string(const charvar::exact::RootOfUnity& q) {
    return std::to_string(q.num()) + "/" + std::to_string(q.den());
}

groups::GroupSpec spec_from_flag(const std::vector<long long>& n) {
    return groups::GroupSpec(n);
}

void run_classify(const Emitter& emit, const std::vector<long long>& n) {
    groups::GroupSpec spec = spec_from_flag(n);
    bool knot = groups::classify(spec) == groups::GroupClass::Knot;
    json payload{{"n", spec.exponents}, {"classification", knot ? "knot" : "link"}};
    emit.ok(payload, std::string(knot ? "knot" : "link") +
                         " (exponents pairwise coprime: " + (knot ? "yes" : "no") + ")");
}

void run_abelianize(const Emitter& emit, const std::vector<long long>& n, bool witness) {
    groups::GroupSpec spec = spec_from_flag(n);
    groups::Abelianization ab = groups::abelianize(spec);
    json payload = io::to_json(ab);
    std::ostringstream human;
    human << "Z";
    for (const auto& d : ab.torsion) human << " + Z_" << d.str();
    if (witness) {
        auto gen = groups::abelian_generator(spec);
        if (!gen)
            throw charvar::domain_error("NotKnot",
                                        "no single abelianized generator for a link group");
        json coefficients = json::array();
        for (const auto& b : gen->coefficients) coefficients.push_back(io::int_to_json(b));
        json multipliers = json::array();
        for (const auto& m : gen->witness_multipliers) multipliers.push_back(io::int_to_json(m));
        payload["generator"] =
            json{{"coefficients", std::move(coefficients)}, {"multipliers", std::move(multipliers)}};
        human << "; generator x with coefficients (";
        for (std::size_t i = 0; i < gen->coefficients.size(); ++i)
            human << (i ? "," : "") << gen->coefficients[i].str();
        human << ")";
    }
    emit.ok(payload, human.str());
}

void run_snf(const Emitter& emit, const std::string& matrix_path) {
    charvar::exact::IntMatrix a = io::int_matrix_from_json(read_json_file(matrix_path));
    charvar::exact::SmithDecomposition snf = charvar::exact::smith_normal_form(a);
    std::ostringstream human;
    human << "invariant factors:";
    for (const auto& f : snf.factors) human << " " << f.str();
    emit.ok(io::to_json(snf), human.str());
}

void run_count_sl2(const Emitter& emit, const std::vector<long long>& n, bool formula, bool both,
                   bool witness, long long budget) {
    groups::GroupSpec spec = spec_from_flag(n);
    json payload{{"n", spec.exponents}};
    std::ostringstream human;

    auto formula_count = [&]() -> charvar::exact::Int {
        auto value = census::sl2_components_formula(spec);
        if (!value)
            throw charvar::domain_error(
                "NotApplicable", "closed formula needs at most one even exponent");
        return *value;
    };

    if (formula) {
        charvar::exact::Int count = formula_count();
        payload["method"] = "formula";
        payload["count"] = io::int_to_json(count);
        human << "components (formula): " << count.str();
        emit.ok(payload, human.str());
        return;
    }

    census::EnumerateOptions opt;
    opt.budget = budget;
    opt.witnesses = witness;
    census::CensusReport report = census::sl2_components_enumerate(spec, opt);
    payload["method"] = both ? "both" : "enumeration";
    payload["count"] = report.component_count;
    if (both) {
        charvar::exact::Int fc = formula_count();
        if (fc != report.component_count)
            throw charvar::domain_error(
                "CrossCheckMismatch", "formula gives " + fc.str() + " but enumeration gives " +
                                          std::to_string(report.component_count));
        payload["formula_count"] = io::int_to_json(fc);
    }
    json report_json = io::to_json(report);
    for (auto& [key, value] : report_json.items()) payload[key] = value;
    human << "components: " << report.component_count << " (orbits " << report.total_orbits
          << ", exceptional " << report.exceptional_orbits << "; +1 family "
          << report.plus->orbits << "/" << report.plus->exceptional << ", -1 family "
          << report.minus->orbits << "/" << report.minus->exceptional << ")";
    if (both) human << " [formula agrees]";
    emit.ok(payload, human.str());
}

void run_count_free_product(const Emitter& emit, long long m, const std::vector<long long>& n) {
    groups::GroupSpec spec = spec_from_flag(n);
    charvar::exact::Int count = census::free_product_components_gl(m, spec);
    json payload{{"m", m}, {"n", spec.exponents}, {"count", io::int_to_json(count)}};
    emit.ok(payload, "components: " + count.str());
}

void run_count_roots(const Emitter& emit, long long m, long long order, long long budget) {
    census::RootClassList classes = census::nth_root_classes(m, order, budget);
    json reps = json::array();
    for (const auto& rep : classes.representatives) {
        json one = json::array();
        for (const auto& q : rep) one.push_back(io::to_json(q));
        reps.push_back(std::move(one));
    }
    json payload{{"m", m},
                 {"root_order", order},
                 {"count", io::int_to_json(classes.count)},
                 {"representatives", std::move(reps)}};
    std::ostringstream human;
    human << classes.count.str() << " classes of " << order << "-th roots of identity in " << m
          << "x" << m;
    std::size_t shown = std::min<std::size_t>(classes.representatives.size(), 4);
    for (std::size_t i = 0; i < shown; ++i) {
        const auto& angles = classes.representatives[i];
        human << (i ? ", (" : ": (");
        for (std::size_t j = 0; j < angles.size(); ++j)
            human << (j ? "," : "") << angle_string(angles[j]);
        human << ")";
    }
    if (classes.representatives.size() > shown) human << ", ...";
    emit.ok(payload, human.str());
}

void run_count_de(const Emitter& emit, long long m, const std::vector<long long>& n, bool witness,
                  long long budget) {
    groups::GroupSpec spec = spec_from_flag(n);
    census::EnumerateOptions opt;
    opt.budget = budget;
    opt.witnesses = witness;
    auto report = census::de_components(m, spec, opt);
    if (!report)
        throw charvar::domain_error("Empty",
                                    "no " + std::to_string(m) +
                                        " distinct eigenvalues available for the smallest exponent");
    json payload{{"m", m},
                 {"n", spec.exponents},
                 {"pre_quotient", io::int_to_json(*report->pre_quotient)},
                 {"count", report->component_count}};
    if (witness) payload["witnesses"] = io::to_json(*report)["witnesses"];
    std::ostringstream human;
    human << "components: " << report->component_count << " (pre-quotient "
          << report->pre_quotient->str() << ")";
    emit.ok(payload, human.str());
}

void run_count_mccrudden(const Emitter& emit, long long m, long long order, long long budget) {
    census::McCruddenBound bound = census::mccrudden_bound_check(m, order, budget);
    json payload{{"m", m},
                 {"root_order", order},
                 {"lhs", io::int_to_json(bound.lhs)},
                 {"rhs", io::int_to_json(bound.rhs)},
                 {"bound_ok", bound.bound_ok}};
    std::ostringstream human;
    human << "lhs " << bound.lhs.str() << " <= rhs " << bound.rhs.str() << ": "
          << (bound.bound_ok ? "holds" : "VIOLATED");
    emit.ok(payload, human.str());
}

json omega_json(const replab::RelationCheck& check) {
    return check.omega ? io::to_json(*check.omega) : json(nullptr);
}

void run_rep_build(const Emitter& emit, const std::string& in_path, const std::string& out_path,
                   std::uint64_t seed, std::optional<double> tol) {
    replab::EigenConfig config = io::eigen_config_from_json(read_json_file(in_path));
    replab::Representation rep =
        replab::build_representation(config, seed, tol.value_or(replab::kVerifyTol));
    replab::RelationCheck check = replab::verify_relations(rep);
    write_json_file(out_path, io::to_json(rep));
    json payload{{"n", rep.spec.exponents},
                 {"m", rep.size()},
                 {"max_residual", check.max_residual},
                 {"central", check.central()},
                 {"omega", omega_json(check)},
                 {"out", out_path}};
    std::ostringstream human;
    human << "built " << rep.size() << "x" << rep.size() << " representation, residual "
          << check.max_residual << ", wrote " << out_path;
    emit.ok(payload, human.str());
}

replab::Representation load_rep(const std::string& path, std::optional<double> tol) {
    replab::Representation rep = io::representation_from_json(read_json_file(path));
    if (tol) rep.tolerance = *tol;
    return rep;
}

void run_rep_verify(const Emitter& emit, const std::string& in_path, std::optional<double> tol) {
    replab::Representation rep = load_rep(in_path, tol);
    replab::RelationCheck check = replab::verify_relations(rep);
    bool free_product = check.omega && std::abs(*check.omega - replab::Complex(1.0, 0.0)) <=
                                           rep.tolerance;
    json payload{{"n", rep.spec.exponents},
                 {"m", rep.size()},
                 {"max_residual", check.max_residual},
                 {"central", check.central()},
                 {"omega", omega_json(check)},
                 {"free_product_rep", free_product}};
    std::ostringstream human;
    human << "max residual " << check.max_residual << "; "
          << (check.central() ? "central, omega = " + format_complex(*check.omega)
                              : "not central");
    emit.ok(payload, human.str());
}

void emit_transformed(const Emitter& emit, const replab::Representation& out,
                      const std::string& out_path, json payload, const std::string& human) {
    if (!out_path.empty()) {
        write_json_file(out_path, io::to_json(out));
        payload["out"] = out_path;
    } else {
        payload["representation"] = io::to_json(out);
    }
    emit.ok(payload, human);
}

void run_rep_sdr(const Emitter& emit, const std::string& in_path, const std::string& out_path,
                 double s, std::optional<double> tol) {
    replab::Representation rep = load_rep(in_path, tol);
    replab::RelationCheck before = replab::verify_relations(rep);
    replab::Representation out = replab::sdr_step(rep, s);
    replab::RelationCheck after = replab::verify_relations(out);
    json payload{{"s", s},
                 {"omega_before", omega_json(before)},
                 {"omega_after", omega_json(after)},
                 {"omega_modulus_after", after.omega ? json(std::abs(*after.omega)) : json(nullptr)},
                 {"max_residual", after.max_residual}};
    std::ostringstream human;
    human << "scaled central charge modulus to "
          << (after.omega ? std::to_string(std::abs(*after.omega)) : std::string("n/a"));
    emit_transformed(emit, out, out_path, std::move(payload), human.str());
}

void run_rep_zflow(const Emitter& emit, const std::string& in_path, const std::string& out_path,
                   long long k, std::optional<double> tol) {
    replab::Representation rep = load_rep(in_path, tol);
    replab::Representation out = replab::z_flow(rep, k);
    replab::RelationCheck after = replab::verify_relations(out);
    json payload{{"k", k},
                 {"omega_after", omega_json(after)},
                 {"max_residual", after.max_residual}};
    std::ostringstream human;
    human << "rotated generators by step " << k << ", residual " << after.max_residual;
    emit_transformed(emit, out, out_path, std::move(payload), human.str());
}

void run_rep_path(const Emitter& emit, const std::string& in_path, const std::string& out_path,
                  int steps, std::uint64_t seed, std::optional<double> tol) {
    replab::Representation rep = load_rep(in_path, tol);
    std::vector<replab::Representation> path = replab::path_to_abelian(rep, steps, seed);

    double endpoint_commutator = 0.0;
    const replab::Representation& end = path.back();
    const replab::ComplexMatrix eye = replab::ComplexMatrix::Identity(end.size(), end.size());
    for (std::size_t i = 0; i < end.matrices.size(); ++i)
        for (std::size_t j = i + 1; j < end.matrices.size(); ++j) {
            replab::ComplexMatrix c = end.matrices[i] * end.matrices[j] *
                                      end.matrices[i].inverse() * end.matrices[j].inverse();
            endpoint_commutator = std::max(endpoint_commutator, (c - eye).norm());
        }
    double max_residual = 0.0;
    for (const auto& sample : path)
        max_residual = std::max(max_residual, replab::verify_relations(sample).max_residual);

    json payload{{"steps", steps},
                 {"samples", path.size()},
                 {"endpoint_max_commutator", endpoint_commutator},
                 {"max_residual_along_path", max_residual}};
    json path_json = json::array();
    for (const auto& sample : path) path_json.push_back(io::to_json(sample));
    if (!out_path.empty()) {
        write_json_file(out_path, path_json);
        payload["out"] = out_path;
    } else {
        payload["path"] = std::move(path_json);
    }
    std::ostringstream human;
    human << "path with " << path.size() << " samples; endpoint commutator norm "
          << endpoint_commutator;
    emit.ok(payload, human.str());
}

void run_rep_irreducible(const Emitter& emit, const std::string& in_path,
                         std::optional<double> tol) {
    replab::Representation rep = load_rep(in_path, tol);
    bool irreducible = replab::is_irreducible_sl2(rep);
    json payload{{"irreducible", irreducible}};
    emit.ok(payload, irreducible ? "irreducible" : "reducible");
}

void run_rep_eigenspan(const Emitter& emit, const std::string& in_path, long long k,
                       std::optional<double> tol) {
    replab::Representation rep = load_rep(in_path, tol);
    json checks = json::array();
    bool all_equal = true;
    for (const auto& a : rep.matrices) {
        replab::EigenspanCheck check = replab::eigenspan_check(a, k, rep.tolerance);
        all_equal = all_equal && check.equal;
        checks.push_back(json{{"dim_base", check.dim_base},
                              {"dim_power", check.dim_power},
                              {"equal", check.equal}});
    }
    json payload{{"k", k}, {"checks", std::move(checks)}, {"all_equal", all_equal}};
    emit.ok(payload, all_equal ? "eigenvector spans agree for every generator"
                               : "eigenvector span mismatch found");
}

void run_rep_invariant(const Emitter& emit, const std::string& in_path,
                       std::optional<double> tol) {
    replab::Representation rep = load_rep(in_path, tol);
    json xs = json::array();
    json bcs = json::array();
    std::ostringstream human;
    human << "x =";
    for (const auto& a : rep.matrices) {
        replab::Complex x = replab::double_coset_invariant(a, rep.tolerance);
        xs.push_back(io::to_json(x));
        bcs.push_back(io::to_json(x - replab::Complex(1.0, 0.0)));
        human << " " << format_complex(x);
    }
    json payload{{"x", std::move(xs)}, {"bc", std::move(bcs)}};
    emit.ok(payload, human.str());
}

}  // namespace

int main(int argc, char** argv) {
    bool wants_json = false;
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--json") wants_json = true;
    Emitter emit{wants_json};

    CLI::App app{"invariants of generalized torus knot and link groups"};
    app.require_subcommand(1);
    app.add_flag("--json", wants_json, "machine-readable output");

    std::vector<long long> n_flag;
    long long m_flag = 1;
    long long order_flag = 1;
    long long budget = 10'000'000;
    long long k_flag = 0;
    int steps = 16;
    double s_value = 1.0;
    std::uint64_t seed = 0;
    double tol_value = replab::kVerifyTol;
    bool witness = false;
    bool use_formula = false;
    bool use_both = false;
    std::string in_path, out_path, matrix_path;

    auto* classify = app.add_subcommand("classify", "knot or link");
    classify->fallthrough();
    classify->add_option("--n", n_flag, "exponents n_1,...,n_r")->required()->delimiter(',');
    classify->callback([&] { run_classify(emit, n_flag); });

    auto* abelianize = app.add_subcommand("abelianize", "abelianization Z + torsion");
    abelianize->fallthrough();
    abelianize->add_option("--n", n_flag, "exponents n_1,...,n_r")->required()->delimiter(',');
    abelianize->add_flag("--witness", witness, "include the single-generator witness");
    abelianize->callback([&] { run_abelianize(emit, n_flag, witness); });

    auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
    snf->fallthrough();
    snf->add_option("--matrix", matrix_path, "JSON file with {rows, cols, entries}")->required();
    snf->callback([&] { run_snf(emit, matrix_path); });

    auto* count = app.add_subcommand("count", "component counting");
    count->fallthrough();
    count->require_subcommand(1);

    auto* sl2 = count->add_subcommand("sl2", "rank-2 character variety components");
    sl2->fallthrough();
    sl2->add_option("--n", n_flag, "exponents n_1,...,n_r")->required()->delimiter(',');
    auto* formula_flag = sl2->add_flag("--formula", use_formula, "closed formula only");
    sl2->add_flag("--both", use_both, "cross-check formula against enumeration")
        ->excludes(formula_flag);
    sl2->add_flag("--witness", witness, "list one eigenvalue tuple per component");
    sl2->add_option("--budget", budget, "enumeration budget")->check(CLI::PositiveNumber);
    sl2->callback([&] { run_count_sl2(emit, n_flag, use_formula, use_both, witness, budget); });

    auto* free_product = count->add_subcommand("free-product", "free product components in GL(m)");
    free_product->fallthrough();
    free_product->add_option("--m", m_flag, "matrix size")->required()->check(CLI::PositiveNumber);
    free_product->add_option("--n", n_flag, "exponents n_1,...,n_r")->required()->delimiter(',');
    free_product->callback([&] { run_count_free_product(emit, m_flag, n_flag); });

    auto* roots = count->add_subcommand("roots", "conjugacy classes of n-th roots of identity");
    roots->fallthrough();
    roots->add_option("--m", m_flag, "matrix size")->required()->check(CLI::PositiveNumber);
    roots->add_option("--root-order", order_flag, "root order n")
        ->required()
        ->check(CLI::PositiveNumber);
    roots->add_option("--budget", budget, "enumeration budget")->check(CLI::PositiveNumber);
    roots->callback([&] { run_count_roots(emit, m_flag, order_flag, budget); });

    auto* de = count->add_subcommand("de", "distinct-eigenvalue components mod rotation flow");
    de->fallthrough();
    de->add_option("--m", m_flag, "matrix size")->required()->check(CLI::PositiveNumber);
    de->add_option("--n", n_flag, "exponents n_1,...,n_r")->required()->delimiter(',');
    de->add_flag("--witness", witness, "list one subset tuple per component");
    de->add_option("--budget", budget, "enumeration budget")->check(CLI::PositiveNumber);
    de->callback([&] { run_count_de(emit, m_flag, n_flag, witness, budget); });

    auto* mccrudden = count->add_subcommand("mccrudden", "root-class bound at the identity");
    mccrudden->fallthrough();
    mccrudden->add_option("--m", m_flag, "matrix size")->required()->check(CLI::PositiveNumber);
    mccrudden->add_option("--root-order", order_flag, "root order n")
        ->required()
        ->check(CLI::PositiveNumber);
    mccrudden->add_option("--budget", budget, "enumeration budget")->check(CLI::PositiveNumber);
    mccrudden->callback([&] { run_count_mccrudden(emit, m_flag, order_flag, budget); });

    auto* rep = app.add_subcommand("rep", "numeric representation lab");
    rep->fallthrough();
    rep->require_subcommand(1);

    std::optional<double> tol_override;
    auto add_tol = [&](CLI::App* sub) {
        sub->add_option("--tol", tol_value, "tolerance override")
            ->check(CLI::PositiveNumber)
            ->each([&](const std::string&) { tol_override = tol_value; });
    };

    auto* build = rep->add_subcommand("build", "conjugated-diagonal representation from a config");
    build->fallthrough();
    build->add_option("--in", in_path, "eigen config JSON")->required();
    build->add_option("--out", out_path, "output representation JSON")->required();
    build->add_option("--seed", seed, "random seed for conjugators");
    add_tol(build);
    build->callback([&] { run_rep_build(emit, in_path, out_path, seed, tol_override); });

    auto* verify = rep->add_subcommand("verify", "relation residual and central charge");
    verify->fallthrough();
    verify->add_option("--in", in_path, "representation JSON")->required();
    add_tol(verify);
    verify->callback([&] { run_rep_verify(emit, in_path, tol_override); });

    auto* sdr = rep->add_subcommand("sdr", "retract the central charge toward modulus 1");
    sdr->fallthrough();
    sdr->add_option("--in", in_path, "representation JSON")->required();
    sdr->add_option("--out", out_path, "output representation JSON");
    sdr->add_option("--s", s_value, "retraction parameter in [0,1]")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    add_tol(sdr);
    sdr->callback([&] { run_rep_sdr(emit, in_path, out_path, s_value, tol_override); });

    auto* zflow = rep->add_subcommand("zflow", "rotate generators by the root-of-unity flow");
    zflow->fallthrough();
    zflow->add_option("--in", in_path, "representation JSON")->required();
    zflow->add_option("--out", out_path, "output representation JSON");
    zflow->add_option("--k", k_flag, "flow step (any integer)")->required();
    add_tol(zflow);
    zflow->callback([&] { run_rep_zflow(emit, in_path, out_path, k_flag, tol_override); });

    auto* path = rep->add_subcommand("path", "deform onto the diagonal abelian limit");
    path->fallthrough();
    path->add_option("--in", in_path, "representation JSON")->required();
    path->add_option("--out", out_path, "output path JSON (array of representations)");
    path->add_option("--steps", steps, "number of segments")->check(CLI::Range(1, 1000000));
    path->add_option("--seed", seed, "random seed for log branch retries");
    add_tol(path);
    path->callback([&] { run_rep_path(emit, in_path, out_path, steps, seed, tol_override); });

    auto* irreducible = rep->add_subcommand("irreducible", "2x2 commutator irreducibility test");
    irreducible->fallthrough();
    irreducible->add_option("--in", in_path, "representation JSON")->required();
    add_tol(irreducible);
    irreducible->callback([&] { run_rep_irreducible(emit, in_path, tol_override); });

    auto* eigenspan = rep->add_subcommand("eigenspan", "eigenvector span of A versus A^k");
    eigenspan->fallthrough();
    eigenspan->add_option("--in", in_path, "representation JSON")->required();
    eigenspan->add_option("--k", k_flag, "nonzero power")->required();
    add_tol(eigenspan);
    eigenspan->callback([&] { run_rep_eigenspan(emit, in_path, k_flag, tol_override); });

    auto* invariant = rep->add_subcommand("invariant", "double-coset coordinate of det-1 matrices");
    invariant->fallthrough();
    invariant->add_option("--in", in_path, "representation JSON")->required();
    add_tol(invariant);
    invariant->callback([&] { run_rep_invariant(emit, in_path, tol_override); });

    try {
        app.parse(argc, argv);
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit.fail("Usage", e.what());
        return 2;
    } catch (const charvar::domain_error& e) {
        emit.fail(e.name(), e.what());
        return 1;
    } catch (const std::invalid_argument& e) {
        emit.fail("InvalidArgument", e.what());
        return 2;
    } catch (const std::exception& e) {
        emit.fail("InternalError", e.what());
        return 1;
    }
}
