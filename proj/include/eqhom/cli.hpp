#pragma once

// Text formats for groups, spaces and coefficient systems, plus the job
// driver behind the command-line tool. Formats are line oriented, one
// declaration per line, with # comments.

#include "eqhom/bredon.hpp"
#include "eqhom/coeff.hpp"
#include "eqhom/grp.hpp"
#include "eqhom/sset.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace eqhom::cli {

struct ParseError : std::runtime_error {
    int line;
    int col;

    ParseError(int line_, int col_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ", col " + std::to_string(col_) +
                             ": " + msg),
          line(line_),
          col(col_) {}
};

GroupPtr parse_group(const std::string& text);
SimplicialGSet parse_space(const std::string& text, GroupPtr group);
CoeffSystem parse_coeff(const std::string& text, OrbitCategoryPtr cat);

std::string serialize_group(const FiniteGroup& g);
std::string serialize_space(const SimplicialGSet& x);
std::string serialize_coeff(const CoeffSystem& k);

struct JobSpec {
    std::string group_text;
    std::string space_text;
    std::string coeff_text;
    int max_degree = 2;
    std::vector<std::string> pipelines;  // empty: all applicable
    std::string variant = "both";        // normalized | unnormalized | both
    std::string format = "table";        // table | record
};

struct RunResult {
    int exit_code = 0;  // 0 pass, 1 disagreement, 2 input error
    std::string output;
    std::string error;
};

RunResult run_job(const JobSpec& job);

}  // namespace eqhom::cli
