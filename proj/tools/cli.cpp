#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <future>
#include <ostream>
#include <sstream>
#include <thread>

#include "dworkhg/eigenspace.hpp"
#include "dworkhg/fuchsian.hpp"
#include "dworkhg/partitions.hpp"
#include "dworkhg/reduction.hpp"
#include "dworkhg/series.hpp"

namespace dworkhg::cli {

namespace {

using nlohmann::json;

const char* var_name(Var v) { return v == Var::Lambda ? "lambda" : "z"; }

json rationals_json(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(r.str());
    return a;
}

json params_json(const HGParams& p) {
    return json{{"alphas", rationals_json(p.alphas)}, {"betas", rationals_json(p.betas)}};
}

json matrix_json(const RFMatrix& m, const std::string& var) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str(var));
        rows.push_back(std::move(row));
    }
    return json{{"variable", var}, {"entries", std::move(rows)}};
}

std::string matrix_text(const RFMatrix& m, const std::string& var) {
    std::vector<std::vector<std::string>> cells(static_cast<size_t>(m.rows()));
    std::vector<size_t> width(static_cast<size_t>(m.cols()), 0);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            std::string s = m.at(i, j).str(var);
            width[static_cast<size_t>(j)] = std::max(width[static_cast<size_t>(j)], s.size());
            cells[static_cast<size_t>(i)].push_back(std::move(s));
        }
    std::ostringstream os;
    for (int i = 0; i < m.rows(); ++i) {
        os << "[ ";
        for (int j = 0; j < m.cols(); ++j) {
            const std::string& s = cells[static_cast<size_t>(i)][static_cast<size_t>(j)];
            os << s << std::string(width[static_cast<size_t>(j)] - s.size(), ' ');
            os << (j + 1 < m.cols() ? "  " : " ");
        }
        os << "]\n";
    }
    return os.str();
}

std::string rationals_text(const std::vector<Rational>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i].str();
    }
    return os.str();
}

json combination_json(const Combination& c, const std::string& var) {
    json terms = json::array();
    for (const auto& t : c.terms())
        terms.push_back(json{{"coeff", t.coeff.str(var)}, {"monomial", t.mono.str()}});
    return json{{"variable", var}, {"terms", std::move(terms)}};
}

json table_row_json(const TableRow& row) {
    return json{{"monomial", row.monomial.str()},
                {"alphas", rationals_json(row.alphas)},
                {"betas", rationals_json(row.betas)},
                {"oracle_match", row.oracle_match}};
}

const Monomial& require_monomial(const CommandRequest& req) {
    if (!req.monomial)
        throw Error(ErrorCode::ParseError, "this command requires a monomial (-w)");
    return *req.monomial;
}

}  // namespace

std::vector<TableRow> compute_table(int n, bool parallel) {
    std::vector<Monomial> reps = basis_representatives(n);
    std::vector<TableRow> rows(reps.size(), TableRow{Monomial({1, 1}), {}, {}, false});

    auto fill = [&](size_t i) {
        TableRow row{reps[i], {}, {}, false};
        HGParams extracted = extract_params(reps[i]);
        HGParams predicted = katz_oracle(reps[i]);
        row.alphas = extracted.alphas;
        row.betas = extracted.betas;
        row.oracle_match = extracted == predicted;
        rows[i] = std::move(row);
    };

    unsigned workers = parallel ? std::thread::hardware_concurrency() : 1;
    if (workers <= 1 || reps.size() <= 1) {
        for (size_t i = 0; i < reps.size(); ++i) fill(i);
        return rows;
    }

    // Rows are independent pure computations; results land in enumeration
    // order regardless of completion order.
    std::atomic<size_t> next{0};
    std::vector<std::future<void>> pool;
    for (unsigned t = 0; t < std::min<size_t>(workers, reps.size()); ++t)
        pool.push_back(std::async(std::launch::async, [&] {
            for (size_t i = next.fetch_add(1); i < reps.size(); i = next.fetch_add(1)) fill(i);
        }));
    for (auto& f : pool) f.get();
    return rows;
}

std::string format_table(const std::vector<TableRow>& rows, Format format) {
    if (format == Format::Json) {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back(table_row_json(r));
        return arr.dump();
    }
    std::vector<std::array<std::string, 4>> cells;
    cells.push_back({"monomial", "alphas", "betas", "match"});
    for (const auto& r : rows)
        cells.push_back({r.monomial.str(), rationals_text(r.alphas), rationals_text(r.betas),
                         r.oracle_match ? "yes" : "NO"});
    std::array<size_t, 4> width{};
    for (const auto& row : cells)
        for (size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream os;
    for (const auto& row : cells) {
        for (size_t c = 0; c < 4; ++c) {
            os << row[c] << std::string(width[c] - row[c].size(), ' ');
            os << (c < 3 ? " | " : "\n");
        }
    }
    return os.str();
}

std::vector<TableRow> parse_table_json(const std::string& text) {
    json arr;
    try {
        arr = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("bad table JSON: ") + e.what());
    }
    if (!arr.is_array()) throw Error(ErrorCode::ParseError, "table JSON must be an array");
    std::vector<TableRow> rows;
    for (const auto& item : arr) {
        try {
            TableRow row{Monomial::parse(item.at("monomial").get<std::string>()), {}, {},
                         item.at("oracle_match").get<bool>()};
            for (const auto& a : item.at("alphas")) row.alphas.push_back(Rational::parse(a.get<std::string>()));
            for (const auto& b : item.at("betas")) row.betas.push_back(Rational::parse(b.get<std::string>()));
            rows.push_back(std::move(row));
        } catch (const json::exception& e) {
            throw Error(ErrorCode::ParseError, std::string("bad table row: ") + e.what());
        }
    }
    return rows;
}

int run(const CommandRequest& req, std::ostream& out, std::ostream& err) {
    try {
        switch (req.command) {
            case Command::Dim: {
                if (req.n < 2) throw Error(ErrorCode::ParseError, "dim requires -n >= 2");
                Integer d = dimension(req.n);
                if (req.format == Format::Json)
                    out << json{{"n", req.n}, {"dimension", d.get_str()}}.dump() << "\n";
                else
                    out << d.get_str() << "\n";
                return 0;
            }
            case Command::Orbit: {
                EigenspaceBasis basis = orbit(require_monomial(req));
                if (req.format == Format::Json) {
                    json members = json::array();
                    for (const auto& m : basis.members) members.push_back(m.str());
                    out << json{{"n", basis.n}, {"members", std::move(members)}}.dump() << "\n";
                } else {
                    for (const auto& m : basis.members) out << m.str() << "\n";
                }
                return 0;
            }
            case Command::Reduce: {
                Combination c = reduce(RationalFunction(Rational(1)), require_monomial(req));
                if (req.format == Format::Json)
                    out << combination_json(c, "lambda").dump() << "\n";
                else
                    out << c.str("lambda") << "\n";
                return 0;
            }
            case Command::Block: {
                ConnectionBlock block = connection_block(require_monomial(req));
                if (req.format == Format::Json)
                    out << matrix_json(block.mat, "lambda").dump() << "\n";
                else
                    out << matrix_text(block.mat, "lambda");
                return 0;
            }
            case Command::System: {
                SystemMatrix a = system_matrix(connection_block(require_monomial(req)));
                if (req.format == Format::Json)
                    out << matrix_json(a.mat, "lambda").dump() << "\n";
                else
                    out << matrix_text(a.mat, "lambda");
                return 0;
            }
            case Command::Params: {
                HGParams p = extract_params(require_monomial(req));
                if (req.format == Format::Json)
                    out << params_json(p).dump() << "\n";
                else
                    out << "alphas: " << rationals_text(p.alphas)
                        << "\nbetas: " << rationals_text(p.betas) << "\n";
                return 0;
            }
            case Command::Oracle: {
                HGParams p = katz_oracle(require_monomial(req));
                if (req.format == Format::Json)
                    out << params_json(p).dump() << "\n";
                else
                    out << "alphas: " << rationals_text(p.alphas)
                        << "\nbetas: " << rationals_text(p.betas) << "\n";
                return 0;
            }
            case Command::Verify: {
                const Monomial& w = require_monomial(req);
                bool ok = verify_annihilation(w, req.order);
                if (req.format == Format::Json)
                    out << json{{"monomial", w.str()}, {"order", req.order}, {"verified", ok}}.dump()
                        << "\n";
                else
                    out << (ok ? "true" : "false") << "\n";
                return 0;
            }
            case Command::Table: {
                if (req.n < 2) throw Error(ErrorCode::ParseError, "table requires -n >= 2");
                std::vector<TableRow> rows = compute_table(req.n, req.parallel);
                out << format_table(rows, req.format);
                if (req.format == Format::Json) out << "\n";
                if (req.strict_oracle)
                    for (const auto& r : rows)
                        if (!r.oracle_match) {
                            err << "oracle mismatch at " << r.monomial.str() << "\n";
                            return 2;
                        }
                return 0;
            }
        }
    } catch (const Error& e) {
        std::string mono = req.monomial ? req.monomial->str() : "";
        if (req.format == Format::Json) {
            json record{{"error", {{"code", e.code_name()}, {"message", e.what()}}}};
            if (!mono.empty()) record["error"]["monomial"] = mono;
            out << record.dump() << "\n";
        } else {
            err << "error: " << e.what();
            if (!mono.empty()) err << " (monomial " << mono << ")";
            err << "\n";
        }
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

int main_entry(int argc, char** argv) {
    CLI::App app{"Gauss-Manin connection blocks and hypergeometric parameters for the Dwork family"};
    app.require_subcommand(1);

    CommandRequest req;
    std::string monomial_csv;
    std::string format = "text";

    auto add_common = [&](CLI::App* sub, bool needs_monomial) {
        sub->add_option("-n", req.n, "degree of the family");
        if (needs_monomial)
            sub->add_option("-w", monomial_csv, "monomial as comma-separated exponents")
                ->required();
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* dim = app.add_subcommand("dim", "dimension of the Dwork module");
    add_common(dim, false);
    dim->get_option("-n")->required();

    CLI::App* orbit_cmd = app.add_subcommand("orbit", "eigenspace basis of a monomial");
    add_common(orbit_cmd, true);
    CLI::App* reduce_cmd = app.add_subcommand("reduce", "express a monomial in the basis");
    add_common(reduce_cmd, true);
    CLI::App* block_cmd = app.add_subcommand("block", "connection matrix block");
    add_common(block_cmd, true);
    CLI::App* system_cmd = app.add_subcommand("system", "first-order system matrix (transpose)");
    add_common(system_cmd, true);
    CLI::App* params_cmd = app.add_subcommand("params", "hypergeometric parameters via residues");
    add_common(params_cmd, true);
    CLI::App* oracle_cmd = app.add_subcommand("oracle", "hypergeometric parameters via cancellation");
    add_common(oracle_cmd, true);

    CLI::App* verify_cmd = app.add_subcommand("verify", "series annihilation check");
    add_common(verify_cmd, true);
    verify_cmd->add_option("--order", req.order, "series truncation order")->default_val(60);

    CLI::App* table_cmd = app.add_subcommand("table", "parameters for every basis representative");
    add_common(table_cmd, false);
    table_cmd->get_option("-n")->required();
    table_cmd->add_flag("--strict-oracle", req.strict_oracle,
                        "exit nonzero when extraction and oracle disagree");
    bool serial = false;
    table_cmd->add_flag("--serial", serial, "compute rows on a single thread");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (dim->parsed()) req.command = Command::Dim;
    else if (orbit_cmd->parsed()) req.command = Command::Orbit;
    else if (reduce_cmd->parsed()) req.command = Command::Reduce;
    else if (block_cmd->parsed()) req.command = Command::Block;
    else if (system_cmd->parsed()) req.command = Command::System;
    else if (params_cmd->parsed()) req.command = Command::Params;
    else if (oracle_cmd->parsed()) req.command = Command::Oracle;
    else if (verify_cmd->parsed()) req.command = Command::Verify;
    else if (table_cmd->parsed()) req.command = Command::Table;

    req.format = format == "json" ? Format::Json : Format::Text;
    req.parallel = !serial;

    if (!monomial_csv.empty()) {
        try {
            req.monomial = Monomial::parse(monomial_csv);
        } catch (const Error& e) {
            if (req.format == Format::Json)
                std::cout << nlohmann::json{{"error", {{"code", e.code_name()}, {"message", e.what()}}}}
                                 .dump()
                          << "\n";
            else
                std::cerr << "error: " << e.what() << "\n";
            return 1;
        }
        if (req.n == 0) req.n = req.monomial->n();
        if (req.n != req.monomial->n()) {
            std::cerr << "error: ParseError: monomial has " << req.monomial->n()
                      << " exponents but -n is " << req.n << "\n";
            return 1;
        }
    }

    return run(req, std::cout, std::cerr);
}

}  // namespace dworkhg::cli
