/*********************************************************************
 * Software License Agreement (BSD License)
 *
 *  Copyright (c) 2026, The grrt Contributors
 *  All rights reserved.
 *
 *  Redistribution and use in source and binary forms, with or without
 *  modification, are permitted provided that the following conditions
 *  are met:
 *
 *   * Redistributions of source code must retain the above copyright
 *     notice, this list of conditions and the following disclaimer.
 *   * Redistributions in binary form must reproduce the above
 *     copyright notice, this list of conditions and the following
 *     disclaimer in the documentation and/or other materials provided
 *     with the distribution.
 *   * Neither the names of the copyright holders nor the names of its
 *     contributors may be used to endorse or promote products derived
 *     from this software without specific prior written permission.
 *
 *  THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS
 *  "AS IS" AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT
 *  LIMITED TO, THE IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS
 *  FOR A PARTICULAR PURPOSE ARE DISCLAIMED. IN NO EVENT SHALL THE
 *  COPYRIGHT OWNER OR CONTRIBUTORS BE LIABLE FOR ANY DIRECT, INDIRECT,
 *  INCIDENTAL, SPECIAL, EXEMPLARY, OR CONSEQUENTIAL DAMAGES (INCLUDING,
 *  BUT NOT LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS OR SERVICES;
 *  LOSS OF USE, DATA, OR PROFITS; OR BUSINESS INTERRUPTION) HOWEVER
 *  CAUSED AND ON ANY THEORY OF LIABILITY, WHETHER IN CONTRACT, STRICT
 *  LIABILITY, OR TORT (INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN
 *  ANY WAY OUT OF THE USE OF THIS SOFTWARE, EVEN IF ADVISED OF THE
 *  POSSIBILITY OF SUCH DAMAGE.
 *********************************************************************/

// Command-line front end of the benchmark harness. Talks to the library only
// through the C interface.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "grrt/grrt.h"

namespace
{
    bool readFile(const std::string &path, std::string &out)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            return false;
        std::ostringstream ss;
        ss << in.rdbuf();
        out = ss.str();
        return true;
    }

    int report(grrt_status status)
    {
        if (status == GRRT_OK)
            return 0;
        std::cerr << "bench: " << grrt_status_string(status) << ": " << grrt_last_error() << "\n";
        return 2;
    }
}  // namespace

int main(int argc, char **argv)
{
    CLI::App app{"G-RRT* benchmark harness"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(grrt_version()));

    std::string configPath, outDir;
    auto *run = app.add_subcommand("run", "Run a trial suite and write trials.csv, summary.json, verification.json");
    run->add_option("--config", configPath, "Suite configuration (JSON)")->required()->check(CLI::ExistingFile);
    run->add_option("--out", outDir, "Output directory")->required();

    std::string inDir;
    auto *summarize = app.add_subcommand("summarize", "Rebuild summary.json from a run directory");
    summarize->add_option("--in", inDir, "Run directory")->required()->check(CLI::ExistingDirectory);

    std::string verifyDir;
    std::uint64_t verifySeed = 0;
    double verifyScale = 1.0;
    auto *verify = app.add_subcommand("verify", "Run the sampling verification suite and write verification.json");
    verify->add_option("--out", verifyDir, "Output directory")->required();
    verify->add_option("--seed", verifySeed, "Seed of the suite");
    verify->add_option("--scale", verifyScale, "Sample-count multiplier (1 = full suite)")
        ->check(CLI::PositiveNumber);

    std::string kind, emit, paramsPath;
    int dim = 2;
    auto *problem = app.add_subcommand("problem", "Write a benchmark world as a problem document");
    problem->add_option("--kind", kind, "empty | many_homotopy | narrow_passage | double_enclosure")->required();
    problem->add_option("--dim", dim, "State dimension")->required();
    problem->add_option("--params", paramsPath, "Geometry overrides (JSON)")->check(CLI::ExistingFile);
    problem->add_option("--emit", emit, "Output file")->required();

    CLI11_PARSE(app, argc, argv);

    if (*run)
    {
        std::string text;
        if (!readFile(configPath, text))
        {
            std::cerr << "bench: cannot read " << configPath << "\n";
            return 2;
        }
        if (int rc = report(grrt_bench_run(text.c_str(), outDir.c_str())))
            return rc;
        std::cout << "wrote " << outDir << "/{trials.csv,summary.json,verification.json,config.json}\n";
        return 0;
    }
    if (*summarize)
    {
        if (int rc = report(grrt_bench_summarize(inDir.c_str())))
            return rc;
        std::cout << "wrote " << inDir << "/summary.json\n";
        return 0;
    }
    if (*verify)
    {
        int passed = 0;
        if (int rc = report(grrt_bench_verify(verifyDir.c_str(), verifySeed, verifyScale, &passed)))
            return rc;
        std::cout << "verification " << (passed ? "passed" : "FAILED") << "; report in " << verifyDir
                  << "/verification.json\n";
        return passed ? 0 : 1;
    }
    std::string params;
    if (!paramsPath.empty() && !readFile(paramsPath, params))
    {
        std::cerr << "bench: cannot read " << paramsPath << "\n";
        return 2;
    }
    if (int rc = report(grrt_bench_problem(kind.c_str(), dim, paramsPath.empty() ? nullptr : params.c_str(),
                                           emit.c_str())))
        return rc;
    std::cout << "wrote " << emit << "\n";
    return 0;
}
