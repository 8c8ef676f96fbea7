// Command-line surface for Jack symmetric functions, the commuting operator
// hierarchy, step operators, and the verification suites.  Output is JSON by
// default (--format text for human-readable coefficients).
//
// Exit codes: 0 success, 1 verification failure or evaluation pole,
// 2 usage / parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "jacksf/json_io.hpp"
#include "jacksf/verify.hpp"

namespace {

using namespace jacksf;

struct Options {
    std::string format = "json";
    std::optional<Rat> alpha;

    std::string label;
    std::string basis;
    std::string op_name;
    std::string input = "-";
    std::string direction;
    int index = 1;
    int degree = 2;
    std::optional<int> poch_k;

    std::string suite;
    int max_weight = 6;
    int max_k = 4;
    int detid_n = 3;
    int detid_m = 3;
    int seeds = 25;
    int ydeg = 3;
};

std::string read_input_text(const std::string& source) {
    if (source == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(source);
    if (file) {
        std::ostringstream buffer;
        buffer << file.rdbuf();
        return buffer.str();
    }
    return source; // inline JSON
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw argument_error(std::string("input is not valid JSON: ") + e.what());
    }
}

template <CoeffField F>
std::string symfun_to_text(const SymFunT<F>& f) {
    if (f.is_zero())
        return "0";
    std::ostringstream out;
    const char* prefix = basis_name(f.basis());
    bool first = true;
    for (const auto& [la, c] : f.terms()) {
        if (!first)
            out << " + ";
        first = false;
        out << "(" << c.to_string() << ")*" << prefix << "_{" << la.to_string() << "}";
    }
    return out.str();
}

template <CoeffField F>
void print_symfun(const SymFunT<F>& f, const Options& opt) {
    if (opt.format == "text")
        std::cout << symfun_to_text(f) << "\n";
    else
        std::cout << symfun_to_json(f).dump() << "\n";
}

template <CoeffField F>
SymFunT<F> with_basis(const SymFunT<F>& f, const std::string& basis) {
    if (basis == "m")
        return to_m_basis(f);
    if (basis == "p")
        return to_p_basis(f);
    throw argument_error("unknown basis: " + basis);
}

// Operator names: A1..Ak, B1.., C1.., H1, H2, a+n, a-n.
template <CoeffField F>
SymFunT<F> apply_named_operator(const std::string& name, const SymFunT<F>& f) {
    if (name == "H1")
        return apply_H1(f);
    if (name == "H2")
        return apply_H2(f);
    try {
        if (name.size() >= 2 && (name[0] == 'A' || name[0] == 'B' || name[0] == 'C')) {
            size_t pos = 0;
            int k = std::stoi(name.substr(1), &pos);
            if (pos == name.size() - 1) {
                if (name[0] == 'A')
                    return apply_A(k, f);
                if (name[0] == 'B')
                    return apply_B(k, f);
                return apply_C(k, f);
            }
        } else if (name.size() >= 2 && name[0] == 'a' && (name[1] == '+' || name[1] == '-')) {
            size_t pos = 0;
            int n = std::stoi(name.substr(1), &pos);
            if (pos == name.size() - 1)
                return heisenberg_a(n, f);
        }
    } catch (const std::logic_error&) {
    }
    throw argument_error("unknown operator: " + name);
}

template <CoeffField F>
int cmd_expand(const Options& opt) {
    Partition la = Partition::parse(opt.label);
    std::string basis = opt.basis.empty() ? "m" : opt.basis;
    print_symfun(with_basis(jack_P<F>(la).m_form, basis), opt);
    return 0;
}

template <CoeffField F>
int cmd_apply(const Options& opt) {
    SymFunT<F> input = symfun_from_json<F>(parse_json(read_input_text(opt.input)));
    SymFunT<F> image = apply_named_operator(opt.op_name, input);
    std::string basis = opt.basis.empty() ? "p" : opt.basis;
    print_symfun(with_basis(image, basis), opt);
    return 0;
}

template <CoeffField F>
int cmd_eigenvalue(const Options& opt) {
    Partition la = Partition::parse(opt.label);
    UPolyRat<F> series = eigenvalue_A_series<F>(la);
    std::vector<F> coeffs = expand_pochhammer(series, la.length());
    if (opt.poch_k) {
        if (*opt.poch_k < 0)
            throw argument_error("--k must be ≥ 0");
        F value = (*opt.poch_k > la.length()) ? F::zero()
                                              : coeffs[static_cast<size_t>(*opt.poch_k)];
        if (opt.format == "text")
            std::cout << value.to_string() << "\n";
        else
            std::cout << coeff_to_json(value).dump() << "\n";
        return 0;
    }
    if (opt.format == "text") {
        std::cout << "A(u) eigenvalue: " << series.to_string() << "\n";
        for (size_t k = 0; k < coeffs.size(); ++k)
            std::cout << "A^(" << k << "): " << coeffs[k].to_string() << "\n";
        return 0;
    }
    json coeff_list = json::array();
    for (const F& c : coeffs)
        coeff_list.push_back(coeff_to_json(c));
    json out = {{"label", partition_to_json(la)},
                {"series", upolyrat_to_json(series)},
                {"pochhammer", coeff_list}};
    std::cout << out.dump() << "\n";
    return 0;
}

template <CoeffField F>
int cmd_step(const Options& opt) {
    Partition la = Partition::parse(opt.label);
    std::pair<Partition, F> step = opt.direction == "up" ? step_up<F>(la, opt.index)
                                                         : step_down<F>(la, opt.index);
    if (opt.format == "text") {
        std::cout << "mu=" << step.first.to_string() << " coeff=" << step.second.to_string()
                  << "\n";
        return 0;
    }
    json out = {{"mu", partition_to_json(step.first)}, {"coeff", coeff_to_json(step.second)}};
    std::cout << out.dump() << "\n";
    return 0;
}

template <CoeffField F>
int cmd_kernel(const Options& opt) {
    BiSymFun<F> pi = kernel_truncated<F>(opt.degree);
    if (opt.format == "text") {
        for (const auto& [key, c] : pi.terms())
            std::cout << "p_{" << key.first.to_string() << "}(x) p_{" << key.second.to_string()
                      << "}(y): " << c.to_string() << "\n";
        return 0;
    }
    json terms = json::array();
    for (const auto& [key, c] : pi.terms())
        terms.push_back({{"x", partition_to_json(key.first)},
                         {"y", partition_to_json(key.second)},
                         {"coeff", coeff_to_json(c)}});
    std::cout << json{{"degree", opt.degree}, {"terms", terms}}.dump() << "\n";
    return 0;
}

template <CoeffField F>
int cmd_verify(const Options& opt) {
    std::vector<CheckResult> results;
    auto want = [&](const char* name) { return opt.suite == name || opt.suite == "all"; };
    if (want("commute")) {
        results.push_back(verify_commute<F>(opt.max_weight, opt.max_k));
        results.push_back(verify_self_adjoint<F>(std::min(opt.max_weight, 6), opt.max_k));
    }
    if (want("eigen")) {
        results.push_back(verify_eigen_A<F>(opt.max_weight, opt.max_k));
        results.push_back(
            verify_eigen_S_N<F>(std::min(opt.max_weight, 6), std::min(opt.detid_n, 3)));
    }
    if (want("pieri")) {
        results.push_back(verify_pieri<F>(opt.max_weight));
        results.push_back(verify_bc_commutators<F>(opt.max_weight, opt.max_k));
        results.push_back(verify_bc_adjoint<F>(opt.max_weight, opt.max_k));
        results.push_back(verify_matrix_elements<F>(opt.max_weight));
        results.push_back(verify_steps<F>(opt.max_weight));
        results.push_back(verify_jack_orthogonality<F>(opt.max_weight));
    }
    if (want("hs"))
        results.push_back(verify_hs<F>(opt.max_weight));
    if (want("kernel"))
        results.push_back(verify_kernel<F>(opt.max_weight));
    if (want("detid")) {
        results.push_back(verify_detid_numeric(opt.detid_n, opt.detid_m, opt.seeds));
        results.push_back(verify_detid_series(std::min(opt.detid_n, 3), opt.ydeg));
        results.push_back(verify_detid_term_counts(std::max(opt.detid_n, 2)));
    }
    if (want("stability"))
        results.push_back(
            verify_stability<F>(std::min(opt.max_weight, 6), std::min(opt.detid_n, 3)));
    if (want("heisenberg"))
        results.push_back(verify_heisenberg<F>(opt.max_weight, opt.max_k));
    if (results.empty())
        throw argument_error("unknown suite: " + opt.suite);

    long total = 0;
    for (const auto& r : results) {
        total += r.checks;
        if (r.pass)
            std::cout << "PASS " << r.name << " (" << r.checks << " checks)\n";
        else
            std::cout << "FAIL " << r.name << " (" << r.checks
                      << " checks): " << r.counterexample << "\n";
    }
    bool ok = all_pass(results);
    std::cout << (ok ? "all passed" : "FAILURES above") << ", " << total << " checks total\n";
    return ok ? 0 : 1;
}

template <CoeffField F>
int dispatch(const std::string& command, const Options& opt) {
    if (command == "expand")
        return cmd_expand<F>(opt);
    if (command == "apply")
        return cmd_apply<F>(opt);
    if (command == "eigenvalue")
        return cmd_eigenvalue<F>(opt);
    if (command == "step")
        return cmd_step<F>(opt);
    if (command == "kernel")
        return cmd_kernel<F>(opt);
    if (command == "verify")
        return cmd_verify<F>(opt);
    throw argument_error("unknown command: " + command);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jack symmetric functions and the commuting operator hierarchy"};
    app.require_subcommand(1);

    Options opt;
    std::string alpha_text;
    app.add_option("--alpha", alpha_text,
                   "evaluate at a rational α (p/q) instead of working symbolically");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    CLI::App* expand = app.add_subcommand("expand", "expansion of the Jack function P_λ");
    expand->add_option("-l,--label", opt.label, "partition, e.g. 3,1 ('-' for empty)")->required();
    expand->add_option("--basis", opt.basis, "output basis (default m)")
        ->check(CLI::IsMember({"m", "p"}));

    CLI::App* apply = app.add_subcommand("apply", "apply an operator to a symmetric function");
    apply->add_option("--op", opt.op_name, "operator: A1..Ak, B1.., C1.., H1, H2, a+n, a-n")
        ->required();
    apply->add_option("--in", opt.input, "SymFun JSON: file, '-' for stdin, or inline");
    apply->add_option("--basis", opt.basis, "output basis (default p)")
        ->check(CLI::IsMember({"m", "p"}));

    CLI::App* eigenvalue =
        app.add_subcommand("eigenvalue", "eigenvalue of A(u) and its A^(k) coefficients on P_λ");
    eigenvalue->add_option("-l,--label", opt.label)->required();
    int poch_k = -1;
    eigenvalue->add_option("--k", poch_k, "print only the A^(k) eigenvalue");

    CLI::App* step = app.add_subcommand("step", "elementary step operator at u = αλ_i - i + 1");
    step->add_option("--dir", opt.direction, "up or down")
        ->required()
        ->check(CLI::IsMember({"up", "down"}));
    step->add_option("-l,--label", opt.label, "target partition λ")->required();
    step->add_option("-i,--index", opt.index, "1-based part index")->required();

    CLI::App* kernel = app.add_subcommand("kernel", "truncated reproducing kernel");
    kernel->add_option("--degree", opt.degree, "truncation degree")->required();

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", opt.suite,
                       "commute|eigen|pieri|hs|kernel|detid|stability|heisenberg|all")
        ->required();
    verify->add_option("--max-weight", opt.max_weight);
    verify->add_option("--max-k", opt.max_k);
    verify->add_option("--n", opt.detid_n);
    verify->add_option("--m", opt.detid_m);
    verify->add_option("--seeds", opt.seeds);
    verify->add_option("--ydeg", opt.ydeg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eigenvalue->count("--k") > 0)
            opt.poch_k = poch_k;
        if (!alpha_text.empty())
            opt.alpha = rat_from_string(alpha_text);
        std::string command;
        for (const CLI::App* sub : app.get_subcommands())
            command = sub->get_name();
        if (opt.alpha) {
            NumericAlpha::set_alpha(*opt.alpha);
            return dispatch<NumericAlpha>(command, opt);
        }
        return dispatch<AlphaRat>(command, opt);
    } catch (const argument_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
