// Command-line front end: reads a group, a space and a coefficient system,
// runs the requested chain pipelines and reports per-degree homology with an
// agreement verdict. Exit codes: 0 pass, 1 disagreement, 2 input error.

#include "CLI11.hpp"
#include "eqhom/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bredon equivariant homology of finite simplicial G-sets"};

    std::string group_file, space_file, coeff_file;
    std::string pipelines, variant = "both", format = "table";
    int max_degree = 2;

    app.add_option("--group", group_file, "group description file")->required();
    app.add_option("--space", space_file, "space description file")->required();
    app.add_option("--coeff", coeff_file, "coefficient system file")->required();
    app.add_option("--max-degree", max_degree, "largest homology degree to report");
    app.add_option("--pipelines", pipelines,
                   "comma-separated subset of cellular,coend,quotient,fixedpoint "
                   "(default: all applicable)");
    app.add_option("--variant", variant, "normalized | unnormalized | both");
    app.add_option("--format", format, "table | record");

    CLI11_PARSE(app, argc, argv);

    eqhom::cli::JobSpec job;
    try {
        job.group_text = read_file(group_file);
        job.space_text = read_file(space_file);
        job.coeff_text = read_file(coeff_file);
    } catch (const std::runtime_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    job.max_degree = max_degree;
    job.variant = variant;
    job.format = format;
    if (!pipelines.empty()) {
        std::stringstream ss(pipelines);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) job.pipelines.push_back(item);
    }

    eqhom::cli::RunResult res = eqhom::cli::run_job(job);
    std::cout << res.output;
    std::cerr << res.error;
    return res.exit_code;
}
