#pragma once

/// Command surface of the dworkhg tool: per-monomial queries, table
/// generation, verification runs, text and JSON output.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dworkhg/monomial.hpp"
#include "dworkhg/params.hpp"

namespace dworkhg::cli {

enum class Command { Dim, Orbit, Reduce, Block, System, Params, Oracle, Verify, Table };
enum class Format { Text, Json };

struct CommandRequest {
    Command command = Command::Dim;
    int n = 0;
    std::optional<Monomial> monomial;
    int order = 60;  // series truncation for verify
    Format format = Format::Text;
    bool strict_oracle = false;
    bool parallel = true;
};

struct TableRow {
    Monomial monomial;
    std::vector<Rational> alphas;
    std::vector<Rational> betas;
    bool oracle_match = false;
};

// Dispatches a request; writes results to out and error records to err.
// Returns the process exit status (0 on success).
int run(const CommandRequest& req, std::ostream& out, std::ostream& err);

// One row per basis representative of degree n, in enumeration order.
std::vector<TableRow> compute_table(int n, bool parallel);

std::string format_table(const std::vector<TableRow>& rows, Format format);
std::vector<TableRow> parse_table_json(const std::string& text);

// Argument parsing + run; the main() of the tool.
int main_entry(int argc, char** argv);

}  // namespace dworkhg::cli
