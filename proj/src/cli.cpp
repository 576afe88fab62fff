#include "s3modes/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "s3modes/bases.hpp"
#include "s3modes/error.hpp"
#include "s3modes/quotients.hpp"
#include "s3modes/rotations.hpp"
#include "s3modes/serialize.hpp"
#include "s3modes/verify.hpp"

namespace s3modes::cli {

namespace {

using nlohmann::json;

enum class Format { Json, Csv };

struct Common {
    std::string format = "json";
    std::string out_file;
};

/// Report produced by a command: JSON always, CSV when the command supports it.
struct Report {
    json body;
    std::string csv;
    bool ok = true;
};

void require(bool cond, const std::string& message) {
    if (!cond) throw DomainError(message);
}

void require_level(int k) { require(k >= 0 && k <= 64, "--k must lie in 0..64"); }

std::string csv_row(std::initializer_list<std::string> cells) {
    std::string line;
    for (const auto& c : cells) {
        if (!line.empty()) line += ',';
        line += c;
    }
    return line + '\n';
}

ToroidalPoint parse_point(const std::vector<double>& v) {
    require(v.size() == 3, "--point takes chi,theta,phi");
    return {v[0], v[1], v[2]};
}

Rotation rotation_from_args(const std::vector<double>& numbers, const std::string& space, int generator) {
    require(numbers.empty() != space.empty(), "give exactly one of --rotation (8 numbers) or --space");
    if (!numbers.empty()) {
        require(numbers.size() == 8, "--rotation takes 8 numbers: q_left (4) then q_right (4)");
        json j{{"q_left", {numbers[0], numbers[1], numbers[2], numbers[3]}},
               {"q_right", {numbers[4], numbers[5], numbers[6], numbers[7]}}};
        return rotation_from_json(j);
    }
    const GroupSpec spec = parse_group_spec(space);
    spec.validate();
    const auto gens = spec.generators();
    require(generator >= 0 && generator < static_cast<int>(gens.size()),
            "--generator must lie in 0.." + std::to_string(gens.size() - 1));
    return gens[static_cast<std::size_t>(generator)];
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Laplacian eigenmodes on S^3: bases, transforms, rotations and quotient spaces", "s3modes"};
    app.require_subcommand(1);
    app.allow_extras(false);
    Common common;
    auto add_common = [&common](CLI::App* sub) {
        sub->add_option("--format", common.format, "Output format")
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
        sub->add_option("--out", common.out_file, "Write the report to FILE instead of standard output");
    };

    // eval
    int eval_k = -1;
    std::string eval_basis = "B2";
    std::vector<int> eval_mode;
    std::vector<double> eval_point;
    auto* eval = app.add_subcommand("eval", "Evaluate basis functions at a point");
    eval->add_option("--k", eval_k, "Level")->required();
    eval->add_option("--basis", eval_basis, "B2 or B3")->check(CLI::IsMember({"B2", "B3", "b2", "b3"}));
    eval->add_option("--mode", eval_mode,
                     "B2: doubled indices 2m1,2m2; B3: I,J. Omit for every mode of the level")
        ->delimiter(',')
        ->expected(2);
    eval->add_option("--point", eval_point, "chi,theta,phi")->delimiter(',')->expected(3)->required();
    add_common(eval);

    // basis-matrix
    int bm_k = -1;
    std::string bm_from = "B3", bm_to = "B2", bm_scaling = "scaled";
    auto* bm = app.add_subcommand("basis-matrix", "Change-of-basis matrix between B2 and B3");
    bm->add_option("--k", bm_k, "Level (even)")->required();
    bm->add_option("--from", bm_from, "Source basis")->check(CLI::IsMember({"B2", "B3", "b2", "b3"}));
    bm->add_option("--to", bm_to, "Target basis")->check(CLI::IsMember({"B2", "B3", "b2", "b3"}));
    bm->add_option("--scaling", bm_scaling, "B2 side: scaled (script-T) or plain (T)")
        ->check(CLI::IsMember({"scaled", "plain"}));
    add_common(bm);

    // rotate
    int rot_k = -1, rot_generator = 0;
    std::vector<double> rot_numbers;
    std::string rot_space, rot_frame = "auto", rot_scaling = "auto";
    bool rot_oracle = false;
    double rot_threshold = kDegeneracyThreshold;
    auto* rot = app.add_subcommand("rotate", "Matrix of a rotation acting on a level");
    rot->add_option("--k", rot_k, "Level")->required();
    rot->add_option("--rotation", rot_numbers, "q_left then q_right, 8 numbers")->delimiter(',')->expected(8);
    rot->add_option("--space", rot_space, "Take the rotation from a group: lens:p,q, prism:P or FILE");
    rot->add_option("--generator", rot_generator, "Generator index within --space")->capture_default_str();
    rot->add_option("--frame", rot_frame, "B3 (closed form) or B2; auto picks B3 for even k, B2 for odd k")
        ->check(CLI::IsMember({"auto", "B2", "B3", "b2", "b3"}))
        ->capture_default_str();
    rot->add_option("--scaling", rot_scaling, "B2 frame scaling; auto picks scaled for even k, plain for odd k")
        ->check(CLI::IsMember({"auto", "scaled", "plain"}))
        ->capture_default_str();
    rot->add_flag("--oracle", rot_oracle, "Use the least-squares oracle for every row");
    rot->add_option("--degeneracy-threshold", rot_threshold, "Relative threshold for degenerate scalars")
        ->capture_default_str();
    add_common(rot);

    // invariants
    int inv_k = -1;
    std::string inv_space;
    auto* inv = app.add_subcommand("invariants", "Orthonormal basis of the group-invariant modes");
    inv->add_option("--k", inv_k, "Level")->required();
    inv->add_option("--space", inv_space, "lens:p,q, prism:P or FILE")->required();
    add_common(inv);

    // multiplicity
    std::optional<int> mul_k, mul_kmax;
    int mul_kmin = 0;
    std::string mul_space;
    auto* mul = app.add_subcommand("multiplicity", "Number of invariant modes per level");
    mul->add_option("--space", mul_space, "lens:p,q, prism:P or FILE")->required();
    auto* opt_k = mul->add_option("--k", mul_k, "Single level");
    auto* opt_kmax = mul->add_option("--k-max", mul_kmax, "Table for k-min..k-max");
    mul->add_option("--k-min", mul_kmin, "First level of the table")->capture_default_str();
    opt_k->excludes(opt_kmax);
    add_common(mul);

    // verify
    int ver_k = -1, ver_rotations = 10;
    unsigned long long ver_seed = 1;
    std::string ver_suite = "all";
    Tolerances tol;
    auto* ver = app.add_subcommand("verify", "Run the oracle suites and report residuals");
    ver->add_option("--k", ver_k, "Level")->required();
    ver->add_option("--suite", ver_suite, "Suite to run")
        ->check(CLI::IsMember({"all", "bases", "rotations", "quotients", "quad"}))
        ->capture_default_str();
    ver->add_option("--seed", ver_seed, "Random seed")->capture_default_str();
    ver->add_option("--random-rotations", ver_rotations, "Random rotations per check")->capture_default_str();
    ver->add_option("--tol-roots", tol.roots)->capture_default_str();
    ver->add_option("--tol-orthogonality", tol.orthogonality)->capture_default_str();
    ver->add_option("--tol-harmonic", tol.harmonic)->capture_default_str();
    ver->add_option("--tol-membership", tol.membership)->capture_default_str();
    ver->add_option("--tol-roundtrip", tol.roundtrip)->capture_default_str();
    ver->add_option("--tol-coefficient", tol.coefficient)->capture_default_str();
    ver->add_option("--tol-rotation", tol.rotation)->capture_default_str();
    ver->add_option("--tol-scalars", tol.scalars)->capture_default_str();
    ver->add_option("--tol-invariance", tol.invariance)->capture_default_str();
    add_common(ver);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    const Format format = common.format == "csv" ? Format::Csv : Format::Json;
    Report report;
    try {
        if (eval->parsed()) {
            require_level(eval_k);
            const Basis basis = basis_from_string(eval_basis);
            const ToroidalPoint p = parse_point(eval_point);
            report.body = {{"command", "eval"}, {"k", eval_k}, {"basis", to_string(basis)},
                           {"point", {p.chi, p.theta, p.phi}}};
            json values = json::array();
            report.csv = csv_row({basis == Basis::B2 ? "two_m1" : "I", basis == Basis::B2 ? "two_m2" : "J", "re", "im"});
            auto emit = [&](int a, int b, std::complex<double> v) {
                values.push_back({{"mode", {a, b}}, {"value", to_json(v)}});
                report.csv += csv_row({std::to_string(a), std::to_string(b), format_double(v.real()),
                                       format_double(v.imag())});
            };
            if (basis == Basis::B2) {
                if (!eval_mode.empty()) {
                    const ModeB2 mode = ModeB2::from_doubled(eval_k, eval_mode[0], eval_mode[1]);
                    emit(mode.two_m1(), mode.two_m2(), eval_T(mode, p));
                } else {
                    const Eigen::VectorXcd all = eval_T_all(eval_k, p);
                    for (const auto& mode : b2_modes(eval_k)) emit(mode.two_m1(), mode.two_m2(), all[b2_index(mode)]);
                }
            } else {
                require_even_level(eval_k);
                if (!eval_mode.empty()) {
                    const ModeB3 mode{eval_k, eval_mode[0], eval_mode[1]};
                    mode.validate();
                    emit(mode.I, mode.J, eval_Phi(mode, p));
                } else {
                    const Eigen::VectorXcd all = eval_Phi_all(eval_k, p);
                    for (const auto& mode : b3_modes(eval_k)) emit(mode.I, mode.J, all[b3_index(mode)]);
                }
            }
            report.body["values"] = values;
        } else if (bm->parsed()) {
            require_level(bm_k);
            require_even_level(bm_k);
            const Basis from = basis_from_string(bm_from), to = basis_from_string(bm_to);
            require(from != to, "--from and --to must differ");
            CoeffMatrix m = from == Basis::B3 ? t_from_phi_matrix(bm_k) : phi_from_t_matrix(bm_k);
            m = with_b2_scaling(m, b2_scaling_from_string(bm_scaling));
            report.body = to_json(m);
            report.body["command"] = "basis-matrix";
            report.csv = matrix_to_csv(m.entries);
        } else if (rot->parsed()) {
            require_level(rot_k);
            require(rot_threshold >= 0.0, "--degeneracy-threshold must be nonnegative");
            const Rotation g = rotation_from_args(rot_numbers, rot_space, rot_generator);
            const bool odd = rot_k % 2 != 0;
            const bool b2 = rot_frame == "auto" ? odd : basis_from_string(rot_frame) == Basis::B2;
            const B2Scaling scaling = rot_scaling == "auto" ? (odd ? B2Scaling::Plain : B2Scaling::Scaled)
                                                            : b2_scaling_from_string(rot_scaling);
            if (odd) {
                require(b2 && scaling == B2Scaling::Plain, "odd k is available only with --frame B2 --scaling plain");
                const Eigen::MatrixXcd W = b2_rotation_matrix(g, rot_k);
                report.body = {{"command", "rotate"}, {"k", rot_k}, {"rotation", to_json(g)}, {"frame", "B2"},
                               {"b2_scaling", "plain"}, {"shape", {W.rows(), W.cols()}}, {"entries", matrix_to_json(W)}};
                report.csv = matrix_to_csv(W);
            } else {
                const RotationCoeffs G = rot_oracle ? g_coeffs_oracle(g, rot_k) : g_coeffs(g, rot_k, rot_threshold);
                if (b2) {
                    const Eigen::MatrixXcd W = to_B2_frame(G, scaling);
                    report.body = {{"command", "rotate"}, {"k", rot_k}, {"rotation", to_json(g)}, {"frame", "B2"},
                                   {"b2_scaling", to_string(scaling)}, {"shape", {W.rows(), W.cols()}},
                                   {"entries", matrix_to_json(W)}, {"oracle_rows", G.oracle_rows},
                                   {"oracle_residual", G.oracle_residual}};
                    report.csv = matrix_to_csv(W);
                } else {
                    report.body = to_json(G);
                    report.body["command"] = "rotate";
                    report.body["frame"] = "B3";
                    report.csv = matrix_to_csv(G.matrix);
                }
            }
        } else if (inv->parsed()) {
            require_level(inv_k);
            const GroupSpec spec = parse_group_spec(inv_space);
            spec.validate();
            const InvariantSubspace sub = invariant_subspace(spec, inv_k);
            report.body = to_json(sub);
            report.body["command"] = "invariants";
            report.csv = csv_row({"basis", "vector", "index", "re", "im"});
            auto dump = [&](const std::string& name, const std::vector<Eigen::VectorXcd>& vs) {
                for (std::size_t v = 0; v < vs.size(); ++v)
                    for (long i = 0; i < vs[v].size(); ++i)
                        report.csv += csv_row({name, std::to_string(v), std::to_string(i),
                                               format_double(vs[v][i].real()), format_double(vs[v][i].imag())});
            };
            dump("T", sub.basis_t);
            dump("script_T", sub.basis_scaled_t);
            dump("B3", sub.basis_b3);
        } else if (mul->parsed()) {
            require(mul_k.has_value() != mul_kmax.has_value(), "give exactly one of --k or --k-max");
            const GroupSpec spec = parse_group_spec(mul_space);
            spec.validate();
            const int lo = mul_k ? *mul_k : mul_kmin;
            const int hi = mul_k ? *mul_k : *mul_kmax;
            require_level(lo);
            require_level(hi);
            require(lo <= hi, "--k-min must not exceed --k-max");
            json rows = json::array();
            report.csv = csv_row({"k", "multiplicity", "projector_rank", "closed_form", "published"});
            for (int k = lo; k <= hi; ++k) {
                const MultiplicityReport r = multiplicity(spec, k);
                rows.push_back(to_json(r));
                report.csv += csv_row({std::to_string(k), std::to_string(r.multiplicity),
                                       std::to_string(r.projector_rank),
                                       r.closed_form ? std::to_string(*r.closed_form) : "",
                                       r.published ? std::to_string(*r.published) : ""});
            }
            report.body = {{"command", "multiplicity"}, {"space", spec.describe()}};
            if (mul_k)
                report.body["multiplicity"] = rows[0]["multiplicity"];
            report.body["table"] = rows;
        } else if (ver->parsed()) {
            require_level(ver_k);
            require(ver_rotations >= 1, "--random-rotations must be positive");
            std::vector<SuiteResult> suites;
            const bool all = ver_suite == "all";
            if (all || ver_suite == "bases") suites.push_back(verify_bases(ver_k, tol, ver_seed));
            if (all || ver_suite == "quad") suites.push_back(verify_quad(ver_k, tol, ver_seed));
            if (all || ver_suite == "rotations") suites.push_back(verify_rotations(ver_k, tol, ver_seed, ver_rotations));
            if (all || ver_suite == "quotients") suites.push_back(verify_quotients(ver_k, tol, ver_seed));
            json js = json::array();
            report.csv = csv_row({"suite", "check", "value", "tolerance", "passed"});
            for (const auto& s : suites) {
                js.push_back(s.to_json());
                report.ok = report.ok && s.passed();
                for (const auto& c : s.checks)
                    report.csv += csv_row({s.suite, c.name, format_double(c.value), format_double(c.tolerance),
                                           c.passed() ? "true" : "false"});
                for (const auto& c : s.counts)
                    report.csv += csv_row({s.suite, c.name, std::to_string(c.actual), std::to_string(c.expected),
                                           c.passed() ? "true" : "false"});
            }
            report.body = {{"command", "verify"}, {"k", ver_k}, {"seed", ver_seed}, {"tolerances", tol.to_json()},
                           {"suites", js}, {"passed", report.ok}};
            for (const auto& s : suites)
                for (const auto& c : s.checks)
                    if (!c.passed())
                        err << "FAIL " << s.suite << '.' << c.name << ": " << c.value << " >= " << c.tolerance << '\n';
            for (const auto& s : suites)
                for (const auto& c : s.counts)
                    if (!c.passed())
                        err << "FAIL " << s.suite << '.' << c.name << ": " << c.actual << " != " << c.expected << '\n';
        }
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << '\n';
        return 1;
    }

    json ordered{{"schema", kSchemaVersion}};
    ordered.update(report.body);
    const std::string text = format == Format::Csv ? report.csv : ordered.dump(2) + '\n';
    if (!common.out_file.empty()) {
        std::ofstream f(common.out_file, std::ios::binary);
        if (!f) {
            err << "error: cannot write " << common.out_file << '\n';
            return 2;
        }
        f << text;
    } else {
        out << text;
    }
    return report.ok ? 0 : 1;
}

}  // namespace s3modes::cli
