#include "afree/cli.hpp"

#include "afree/algebra_io.hpp"
#include "afree/borel.hpp"
#include "afree/certificate.hpp"
#include "afree/error.hpp"
#include "afree/graph.hpp"
#include "afree/groebner.hpp"
#include "afree/reduction.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

namespace afree::cli {

namespace {

class IoError : public Error {
public:
    using Error::Error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text))
        throw IoError("cannot write '" + path + "'");
}

bool looks_like_algebra(const std::string& text)
{
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#')
            continue;
        return line.compare(pos, 8, "sullivan") == 0;
    }
    return false;
}

struct Common {
    std::string input;
    int k = 2;
    bool require_connected = false;
    bool porcelain = false;
    std::string output;
};

Graph load_graph(const Common& c, std::ostream& err)
{
    Graph g = parse_dimacs(read_file(c.input));
    if (auto rep = validate(g, c.require_connected); !rep.ok()) {
        std::string msg = c.input + ":";
        for (const auto& i : rep.issues)
            msg += " " + i;
        throw PreconditionError(msg);
    }
    if (!c.require_connected && !is_connected(g))
        err << "warning: " << c.input << ": graph is disconnected; components are treated independently\n";
    return g;
}

int cmd_encode(const Common& c, const std::string& variant, std::ostream& out, std::ostream& err)
{
    EncodingParams p;
    p.k = c.k;
    if (variant == "shifted")
        p.variant = EncodingVariant::shifted;
    else if (variant == "original")
        p.variant = EncodingVariant::original;
    else
        throw PreconditionError("unknown variant '" + variant + "' (shifted or original)");
    Graph g = load_graph(c, err);
    emit(write_algebra(encode(g, p)), c.output, out);
    return exit_ok;
}

int cmd_decide(const Common& c, const std::string& method, bool cross_check, const std::string& order,
               std::size_t budget, const std::string& dump_basis, std::ostream& out, std::ostream& err)
{
    DecisionOptions opt;
    try {
        opt.order = parse_monomial_order(order);
    }
    catch (const std::invalid_argument&) {
        throw PreconditionError("unknown monomial order '" + order + "'");
    }
    opt.step_budget = budget;
    DecisionMethod m;
    try {
        m = parse_decision_method(method);
    }
    catch (const std::invalid_argument&) {
        throw PreconditionError("unknown method '" + method + "'");
    }
    Graph g = load_graph(c, err);
    Decision d = decide_almost_free(g, c.k, m, opt);
    std::string report = write_decision(d, c.porcelain);
    if (cross_check) {
        DecisionMethod other = m == DecisionMethod::groebner ? DecisionMethod::certificate_search : DecisionMethod::groebner;
        Decision d2 = decide_almost_free(g, c.k, other, opt);
        bool agree = d2.verdict == d.verdict;
        if (c.porcelain)
            report += std::string("cross_check=") + (agree ? "agree" : "disagree") + "\n";
        else
            report += std::string("cross-check (") + to_string(other) + "): " + to_string(d2.verdict) +
                      (agree ? ", agrees\n" : ", DISAGREES\n");
        if (!agree) {
            out << report;
            err << "error: decision methods disagree\n";
            return exit_internal;
        }
    }
    if (!dump_basis.empty()) {
        SullivanAlgebra A = encode_shifted(g, c.k);
        PolyIdeal I = pure_ideal(A);
        BuchbergerOptions bo;
        bo.step_budget = budget;
        emit(write_groebner(buchberger(I, opt.order, bo), I.variables), dump_basis, out);
    }
    out << report;
    return d.verdict == Verdict::almost_free ? exit_ok : exit_negative;
}

int cmd_verify(const Common& c, const std::string& cert_path, bool k_given, std::ostream& out, std::ostream& err)
{
    Certificate cert = parse_certificate(read_file(cert_path));
    if (k_given && cert.k != c.k)
        throw PreconditionError("certificate has k=" + std::to_string(cert.k) + " but -k " + std::to_string(c.k) +
                                " was given");
    std::string text = read_file(c.input);
    std::optional<SullivanAlgebra> A;
    if (looks_like_algebra(text)) {
        A = read_algebra(text);
    }
    else {
        Graph g = parse_dimacs(text);
        if (!c.require_connected && !is_connected(g))
            err << "warning: " << c.input << ": graph is disconnected\n";
        else if (auto rep = validate(g, c.require_connected); !rep.ok())
            throw PreconditionError(c.input + ": " + rep.issues.front());
        A = encode_shifted(g, cert.k);
    }
    VerificationResult r = verify_morphism(*A, cert.assignment());
    if (c.porcelain) {
        out << "result=" << (r.accepted ? "accept" : "reject") << "\n";
        if (r.failing_generator)
            out << "failing_generator=" << *r.failing_generator << "\n";
        if (r.failing_edge)
            out << "failing_edge=" << r.failing_edge->a + 1 << "," << r.failing_edge->b + 1 << "\n";
    }
    else {
        out << (r.accepted ? "accept" : "reject");
        if (!r.reason.empty())
            out << ": " << r.reason;
        out << "\n";
    }
    return r.accepted ? exit_ok : exit_negative;
}

int cmd_construct(const Common& c, std::ostream& out, std::ostream& err)
{
    Graph g = load_graph(c, err);
    emit(write_action(assemble_action(g, c.k)), c.output, out);
    return exit_ok;
}

int cmd_check_borel(const Common& c, std::ostream& out, std::ostream& err)
{
    Graph g = load_graph(c, err);
    BorelCheckReport rep = check_borel(g, c.k);
    if (c.porcelain) {
        out << "well_formed=" << (rep.well_formed.ok() ? 1 : 0) << "\n";
        out << "kernel_dimension=" << rep.kernel.kernel_dimension << "\n";
        out << "kernel_ok=" << (rep.kernel.ok ? 1 : 0) << "\n";
        for (const auto& v : rep.volumes)
            out << "edge=" << v.edge.a + 1 << "," << v.edge.b + 1 << " sign=" << v.sign << "\n";
        out << "global_sign=" << rep.global_sign << "\n";
        out << "result=" << (rep.ok ? "pass" : "fail") << "\n";
    }
    else {
        for (const auto& l : rep.lines)
            out << l << "\n";
        out << (rep.ok ? "all checks passed" : "CHECK FAILED") << "\n";
    }
    return rep.ok ? exit_ok : exit_negative;
}

int cmd_betti(const Common& c, std::optional<int> cutoff, std::size_t budget, std::ostream& out, std::ostream& err)
{
    std::string text = read_file(c.input);
    std::optional<SullivanAlgebra> A;
    if (looks_like_algebra(text))
        A = read_algebra(text);
    else
        A = encode_shifted(load_graph(c, err), c.k);
    if (cutoff && *cutoff < 0)
        throw PreconditionError("cutoff must be >= 0");
    int n = cutoff ? *cutoff : default_cohomology_cutoff(*A);
    auto dims = cohomology_dims(*A, n, budget);
    std::ostringstream s;
    for (std::size_t i = 0; i < dims.size(); ++i)
        s << "H^" << i << " " << dims[i] << "\n";
    emit(s.str(), c.output, out);
    return exit_ok;
}

int cmd_selftest(std::ostream& out)
{
    int failures = 0;
    auto report = [&](const std::string& name, bool ok) {
        out << (ok ? "PASS " : "FAIL ") << name << "\n";
        failures += ok ? 0 : 1;
    };
    for (auto method : {DecisionMethod::groebner, DecisionMethod::certificate_search}) {
        std::string m = to_string(method);
        report("K4 k=2 almost free (" + m + ")",
               decide_almost_free(graphs::complete(4), 2, method).verdict == Verdict::almost_free);
        report("K3 k=2 not almost free (" + m + ")",
               decide_almost_free(graphs::complete(3), 2, method).verdict == Verdict::not_almost_free);
    }
    Graph k3 = graphs::complete(3);
    report("K3 proper colouring certificate accepted", verify_is_proper_iff({{0, 1, 2}}, k3, 2) &&
                                                           verify_morphism(encode_shifted(k3, 2), assignment_from_coloring({{0, 1, 2}}, 2)).accepted);
    report("K3 improper certificate rejected",
           !verify_morphism(encode_shifted(k3, 2), assignment_from_coloring({{0, 0, 1}}, 2)).accepted);
    report("edge sphere dimension k=2..5", [] {
        for (int k = 2; k <= 5; ++k)
            if (build_edge_sphere(k).dimension() != 2 * k - 1)
                return false;
        return true;
    }());
    report("Borel checks on K2 k=2", check_borel(graphs::complete(2), 2).ok);
    report("encoded K3 k=2 well-formed", check_well_formed(encode_shifted(k3, 2)).ok());
    out << (failures ? "selftest failed" : "selftest passed") << "\n";
    return failures ? exit_negative : exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Almost-free torus actions and graph colourings"};
    app.require_subcommand(1);

    Common c;
    std::string variant = "shifted", method = "groebner", order = "grevlex", cert_path, dump_basis;
    bool cross_check = false;
    std::size_t step_budget = 1'000'000, basis_budget = 200'000;
    std::optional<int> cutoff;

    auto add_graph = [&](CLI::App* sub, const char* what) {
        sub->add_option("input", c.input, what)->required();
        sub->add_flag("--require-connected", c.require_connected, "Reject disconnected graphs");
    };
    auto* encode_cmd = app.add_subcommand("encode", "Encode a DIMACS graph as a Sullivan algebra");
    add_graph(encode_cmd, "DIMACS graph file");
    encode_cmd->add_option("-k", c.k, "Degree parameter")->capture_default_str();
    encode_cmd->add_option("--variant", variant, "shifted (k>=2) or original (k>=3)")->capture_default_str();
    encode_cmd->add_option("-o,--output", c.output, "Output file (default stdout)");

    auto* decide_cmd = app.add_subcommand("decide", "Decide almost-freeness of the encoded action");
    add_graph(decide_cmd, "DIMACS graph file");
    decide_cmd->add_option("-k", c.k, "Degree parameter (k+1 colours)")->capture_default_str();
    decide_cmd->add_option("--method", method, "groebner or certificate_search")->capture_default_str();
    decide_cmd->add_flag("--cross-check", cross_check, "Run both methods and compare");
    decide_cmd->add_option("--order", order, "grevlex, grlex or lex")->capture_default_str();
    decide_cmd->add_option("--budget", step_budget, "Work budget")->capture_default_str();
    decide_cmd->add_option("--dump-basis", dump_basis, "Write the Groebner basis to this file ('-' for stdout)");
    decide_cmd->add_flag("--porcelain", c.porcelain, "key=value output");

    auto* verify_cmd = app.add_subcommand("verify", "Verify a colouring certificate");
    add_graph(verify_cmd, "DIMACS graph or algebra file");
    verify_cmd->add_option("certificate", cert_path, "Certificate file")->required();
    auto* k_opt = verify_cmd->add_option("-k", c.k, "Expected k (must match the certificate)");
    verify_cmd->add_flag("--porcelain", c.porcelain, "key=value output");

    auto* construct_cmd = app.add_subcommand("construct", "Write the torus action data for a graph");
    add_graph(construct_cmd, "DIMACS graph file");
    construct_cmd->add_option("-k", c.k, "Degree parameter")->capture_default_str();
    construct_cmd->add_option("-o,--output", c.output, "Output file (default stdout)");

    auto* borel_cmd = app.add_subcommand("check-borel", "Check the Borel model of the constructed action");
    add_graph(borel_cmd, "DIMACS graph file");
    borel_cmd->add_option("-k", c.k, "Degree parameter")->capture_default_str();
    borel_cmd->add_flag("--porcelain", c.porcelain, "key=value output");

    auto* betti_cmd = app.add_subcommand("betti", "Cohomology dimensions of an encoded graph or algebra file");
    add_graph(betti_cmd, "DIMACS graph or algebra file");
    betti_cmd->add_option("-k", c.k, "Degree parameter for graph input")->capture_default_str();
    betti_cmd->add_option("--cutoff", cutoff, "Highest degree (default: formal dimension + 6)");
    betti_cmd->add_option("--budget", basis_budget, "Largest graded piece")->capture_default_str();
    betti_cmd->add_option("-o,--output", c.output, "Output file (default stdout)");

    auto* selftest_cmd = app.add_subcommand("selftest", "Run built-in consistency checks");

    std::vector<const char*> argv{"afree"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_malformed;
    }

    try {
        if (*encode_cmd)
            return cmd_encode(c, variant, out, err);
        if (*decide_cmd)
            return cmd_decide(c, method, cross_check, order, step_budget, dump_basis, out, err);
        if (*verify_cmd)
            return cmd_verify(c, cert_path, k_opt->count() > 0, out, err);
        if (*construct_cmd)
            return cmd_construct(c, out, err);
        if (*borel_cmd)
            return cmd_check_borel(c, out, err);
        if (*betti_cmd)
            return cmd_betti(c, cutoff, basis_budget, out, err);
        if (*selftest_cmd)
            return cmd_selftest(out);
    }
    catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return exit_io;
    }
    catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_malformed;
    }
    catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return exit_malformed;
    }
    catch (const BudgetExceeded& e) {
        err << "error: budget exceeded: " << e.what() << "\n";
        return exit_budget;
    }
    catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_internal;
}

}  // namespace afree::cli
