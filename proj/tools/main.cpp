// Command-line surface over the trinom library: compute the family
// coefficient A(k, p), emit verified factorizations of x^(2p) - A*x^p + 1,
// check divisibility, solve the inverse problem, and generate tables.
//
// Exit codes: 0 success, 1 internal verification defect, 2 invalid
// parameters, 3 well-formed query with a negative answer.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trinom/trinom.hpp"

namespace {

using json = nlohmann::ordered_json;
using trinom::Int;

constexpr int kExitOk = 0;
constexpr int kExitDefect = 1;
constexpr int kExitBadArgs = 2;
constexpr int kExitNegative = 3;

Int parse_big(const std::string& text, const char* flag) {
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    if (pos == text.size())
        throw std::invalid_argument(std::string(flag) + ": expected a decimal integer");
    for (; pos < text.size(); ++pos)
        if (text[pos] < '0' || text[pos] > '9')
            throw std::invalid_argument(std::string(flag) + ": expected a decimal integer");
    return Int(text[0] == '+' ? text.substr(1) : text);
}

std::string join_csv(const std::vector<Int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != 0) out += ',';
        out += values[i].str();
    }
    return out;
}

struct CoeffArgs {
    std::int64_t p = 0;
    std::string k;
    std::string method = "recurrence";
    std::string format = "plain";
};

struct FactorArgs {
    std::int64_t p = 0;
    std::string k;
    std::string format = "plain";
};

struct VerifyArgs {
    std::int64_t p = 0;
    std::string k;
    std::string A;
    std::string format = "plain";
};

struct SolveArgs {
    std::int64_t p = 0;
    std::string A;
    std::string format = "plain";
};

struct RowArgs {
    std::int64_t p = 0;
    std::string format = "plain";
};

struct TableArgs {
    std::vector<std::int64_t> ps;
    std::int64_t kmax = 0;
    std::string format = "plain";
    bool verify_all = false;
};

int cmd_coeff(const CoeffArgs& args) {
    const trinom::FamilyPoint pt(args.p, parse_big(args.k, "--k"));
    Int A;
    if (args.method == "closed") {
        A = trinom::coeff_A_closed(pt);
    } else if (args.method == "gf") {
        A = trinom::gf_coefficient_A(pt.k, args.p);
    } else if (args.method == "all") {
        A = trinom::coeff_A_recurrence(pt);
        const Int closed = trinom::coeff_A_closed(pt);
        const Int gf = trinom::gf_coefficient_A(pt.k, args.p);
        if (closed != A || gf != A)
            throw std::logic_error("coefficient routes disagree: recurrence=" + A.str() +
                                   " closed=" + closed.str() + " gf=" + gf.str());
    } else {
        A = trinom::coeff_A_recurrence(pt);
    }
    if (args.format == "records") {
        json rec;
        rec["command"] = "coeff";
        rec["p"] = args.p;
        rec["k"] = pt.k.str();
        rec["method"] = args.method;
        rec["A"] = A.str();
        std::cout << rec.dump() << '\n';
    } else {
        std::cout << A.str() << '\n';
    }
    return kExitOk;
}

int cmd_factor(const FactorArgs& args) {
    const trinom::FamilyPoint pt(args.p, parse_big(args.k, "--k"));
    const auto cert = trinom::build_certificate(pt);
    const trinom::Poly trinomial = trinom::make_trinomial(pt.p, cert.A);
    if (args.format == "records") {
        json rec;
        rec["command"] = "factor";
        rec["p"] = args.p;
        rec["k"] = pt.k.str();
        rec["A"] = cert.A.str();
        rec["trinomial"] = trinom::to_string(trinomial);
        rec["quadratic"] = trinom::to_string(cert.quadratic);
        rec["cofactor"] = trinom::to_string(cert.cofactor);
        rec["verified"] = cert.verified;
        std::cout << rec.dump() << '\n';
    } else {
        std::cout << trinom::to_string(trinomial) << '\n'
                  << trinom::to_string(cert.quadratic) << '\n'
                  << trinom::to_string(cert.cofactor) << '\n';
    }
    return kExitOk;
}

int cmd_verify(const VerifyArgs& args) {
    const Int k = parse_big(args.k, "--k");
    const Int A = parse_big(args.A, "--A");
    const bool divides = trinom::verify_divides(A, args.p, k);
    if (args.format == "records") {
        json rec;
        rec["command"] = "verify";
        rec["p"] = args.p;
        rec["k"] = k.str();
        rec["A"] = A.str();
        rec["divides"] = divides;
        std::cout << rec.dump() << '\n';
    } else {
        std::cout << (divides ? "OK" : "FAIL") << '\n';
    }
    return divides ? kExitOk : kExitNegative;
}

int cmd_solve(const SolveArgs& args) {
    const Int A = parse_big(args.A, "--A");
    const std::optional<Int> k = trinom::solve_k(A, args.p);
    if (args.format == "records") {
        json rec;
        rec["command"] = "solve";
        rec["p"] = args.p;
        rec["A"] = A.str();
        rec["found"] = k.has_value();
        rec["k"] = k ? json(k->str()) : json(nullptr);
        std::cout << rec.dump() << '\n';
    } else {
        if (k)
            std::cout << "k=" << k->str() << '\n';
        else
            std::cout << "NONE" << '\n';
    }
    return k ? kExitOk : kExitNegative;
}

int cmd_row(const RowArgs& args) {
    const std::vector<Int> row = trinom::row_polynomial(args.p);
    if (args.format == "records") {
        json rec;
        rec["command"] = "row";
        rec["p"] = args.p;
        rec["coeffs"] = join_csv(row);
        std::cout << rec.dump() << '\n';
    } else {
        std::cout << join_csv(row) << '\n';
    }
    return kExitOk;
}

int cmd_table(const TableArgs& args) {
    if (args.kmax < 1) throw std::invalid_argument("--kmax must be at least 1");
    const auto rows = trinom::scan_table(args.ps, args.kmax, args.verify_all ? 1 : 16);
    for (const auto& row : rows) {
        if (args.format == "records") {
            json rec;
            rec["command"] = "table";
            rec["p"] = row.p;
            rec["k"] = row.k.str();
            rec["A"] = row.A.str();
            rec["prime"] = row.prime;
            rec["verified"] = row.checked;
            std::cout << rec.dump() << '\n';
        } else {
            std::cout << row.p << ',' << row.k.str() << ',' << row.A.str() << '\n';
        }
    }
    return kExitOk;
}

void add_format_flag(CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"plain", "records"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for the reducible trinomial family x^(2p) - A*x^p + 1"};
    app.require_subcommand(1);

    CoeffArgs coeff;
    CLI::App* coeff_cmd = app.add_subcommand("coeff", "compute the coefficient A(k, p)");
    coeff_cmd->add_option("--p", coeff.p, "odd positive exponent parameter")->required();
    coeff_cmd->add_option("--k", coeff.k, "family parameter (decimal, any size)")->required();
    coeff_cmd->add_option("--method", coeff.method, "route: closed, recurrence, gf, or all")
        ->check(CLI::IsMember({"closed", "recurrence", "gf", "all"}));
    add_format_flag(coeff_cmd, coeff.format);

    FactorArgs factor;
    CLI::App* factor_cmd =
        app.add_subcommand("factor", "emit the verified factorization for (p, k)");
    factor_cmd->add_option("--p", factor.p, "odd positive exponent parameter")->required();
    factor_cmd->add_option("--k", factor.k, "family parameter (decimal, any size)")->required();
    add_format_flag(factor_cmd, factor.format);

    VerifyArgs verify;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "check whether x^2 - k*x + 1 divides x^(2p) - A*x^p + 1");
    verify_cmd->add_option("--p", verify.p, "odd positive exponent parameter")->required();
    verify_cmd->add_option("--k", verify.k, "family parameter (decimal, any size)")->required();
    verify_cmd->add_option("--A", verify.A, "middle coefficient (decimal, any size)")->required();
    add_format_flag(verify_cmd, verify.format);

    SolveArgs solve;
    CLI::App* solve_cmd = app.add_subcommand("solve", "find k with A(k, p) = A, if any");
    solve_cmd->add_option("--p", solve.p, "odd positive exponent parameter")->required();
    solve_cmd->add_option("--A", solve.A, "middle coefficient (decimal, any size)")->required();
    add_format_flag(solve_cmd, solve.format);

    RowArgs row;
    CLI::App* row_cmd =
        app.add_subcommand("row", "coefficients of A(., p) as a polynomial in k");
    row_cmd->add_option("--p", row.p, "odd positive exponent parameter")->required();
    add_format_flag(row_cmd, row.format);

    TableArgs table;
    CLI::App* table_cmd = app.add_subcommand("table", "tabulate (p, k, A) over a k range");
    table_cmd->add_option("--p", table.ps, "odd positive exponent parameter (repeatable)")
        ->required();
    table_cmd->add_option("--kmax", table.kmax, "largest k to include")->required();
    table_cmd->add_flag("--verify-all", table.verify_all,
                        "re-verify every row by exact division (default: every 16th)");
    add_format_flag(table_cmd, table.format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadArgs;
    }

    try {
        if (app.got_subcommand(coeff_cmd)) return cmd_coeff(coeff);
        if (app.got_subcommand(factor_cmd)) return cmd_factor(factor);
        if (app.got_subcommand(verify_cmd)) return cmd_verify(verify);
        if (app.got_subcommand(solve_cmd)) return cmd_solve(solve);
        if (app.got_subcommand(row_cmd)) return cmd_row(row);
        if (app.got_subcommand(table_cmd)) return cmd_table(table);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadArgs;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitDefect;
    }
    return kExitBadArgs;
}
