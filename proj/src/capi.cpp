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

#include "grrt/grrt.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "grrt/bench.hpp"
#include "grrt/error.hpp"
#include "grrt/planner.hpp"
#include "grrt/world.hpp"

struct grrt_problem
{
    grrt::Problem problem;
};

struct grrt_result
{
    grrt::PlannerResult result;
};

namespace
{
    thread_local std::string lastError;

    grrt_status fail(grrt_status status, const char *message)
    {
        lastError = message;
        return status;
    }

    template <typename F>
    grrt_status guarded(F &&body)
    {
        try
        {
            body();
            return GRRT_OK;
        }
        catch (const grrt::ParseError &e)
        {
            return fail(GRRT_PARSE_ERROR, e.what());
        }
        catch (const grrt::PreconditionError &e)
        {
            return fail(GRRT_PRECONDITION, e.what());
        }
        catch (const grrt::SamplingError &e)
        {
            return fail(GRRT_SAMPLING_ERROR, e.what());
        }
        catch (const grrt::IoError &e)
        {
            return fail(GRRT_IO_ERROR, e.what());
        }
        catch (const grrt::InvalidArgument &e)
        {
            return fail(GRRT_INVALID_ARGUMENT, e.what());
        }
        catch (const std::bad_alloc &)
        {
            return fail(GRRT_INTERNAL, "out of memory");
        }
        catch (const std::exception &e)
        {
            return fail(GRRT_INTERNAL, e.what());
        }
        catch (...)
        {
            return fail(GRRT_INTERNAL, "unknown error");
        }
    }

    void requireNonNull(const void *p, const char *what)
    {
        if (!p)
            throw grrt::InvalidArgument(std::string(what) + " must not be null");
    }

    char *duplicate(const std::string &s)
    {
        char *out = static_cast<char *>(std::malloc(s.size() + 1));
        if (!out)
            throw std::bad_alloc();
        std::memcpy(out, s.data(), s.size() + 1);
        return out;
    }

    grrt::State toState(const grrt::Problem &p, const double *x)
    {
        requireNonNull(x, "state");
        return Eigen::Map<const Eigen::VectorXd>(x, static_cast<Eigen::Index>(p.dimension()));
    }

    grrt::Problem buildProblem(const char *kind, int dim, const char *paramsJson)
    {
        requireNonNull(kind, "kind");
        grrt::ProblemParams params;
        if (paramsJson)
            params = grrt::parseProblemParams(paramsJson);
        return grrt::makeProblem(grrt::problemKindFromString(kind), dim, params);
    }

    grrt::PlannerConfig fromC(const grrt_planner_config &c)
    {
        grrt::PlannerConfig p;
        p.epsilon = c.epsilon;
        p.maxEdge = c.max_edge;
        p.eta = c.eta;
        p.delayRewiring = c.delay_rewiring != 0;
        p.prune = c.prune != 0;
        p.balanced = c.balanced != 0;
        p.heuristicGate = c.heuristic_gate != 0;
        if (c.greedy_scope != GRRT_SCOPE_BEST_BRIDGE && c.greedy_scope != GRRT_SCOPE_ALL_BRIDGES)
            throw grrt::InvalidArgument("unknown greedy scope");
        p.greedyScope = c.greedy_scope == GRRT_SCOPE_BEST_BRIDGE ? grrt::GreedyScope::BestBridge
                                                                 : grrt::GreedyScope::AllBridges;
        p.seed = c.seed;
        p.timeLimit = c.time_limit;
        p.iterationLimit = c.iteration_limit;
        p.virtualSecondsPerIteration = c.virtual_seconds_per_iteration;
        p.stopAtFirstSolution = c.stop_at_first_solution != 0;
        p.sampleRetriesPerDimension = c.sample_retries_per_dimension;
        p.validate();
        return p;
    }
}  // namespace

extern "C" {

const char *grrt_version(void)
{
    return "1.0.0";
}

const char *grrt_last_error(void)
{
    return lastError.c_str();
}

const char *grrt_status_string(grrt_status status)
{
    switch (status)
    {
        case GRRT_OK:
            return "ok";
        case GRRT_INVALID_ARGUMENT:
            return "invalid argument";
        case GRRT_PARSE_ERROR:
            return "parse error";
        case GRRT_PRECONDITION:
            return "precondition violated";
        case GRRT_SAMPLING_ERROR:
            return "sampling failed";
        case GRRT_IO_ERROR:
            return "i/o error";
        case GRRT_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

void grrt_string_free(char *text)
{
    std::free(text);
}

grrt_status grrt_problem_make(const char *kind, int dim, const char *params_json, grrt_problem **out)
{
    return guarded([&] {
        requireNonNull(out, "out");
        *out = new grrt_problem{buildProblem(kind, dim, params_json)};
    });
}

grrt_status grrt_problem_load(const char *json, grrt_problem **out)
{
    return guarded([&] {
        requireNonNull(json, "json");
        requireNonNull(out, "out");
        *out = new grrt_problem{grrt::loadProblem(json)};
    });
}

grrt_status grrt_problem_save(const grrt_problem *problem, char **json_out)
{
    return guarded([&] {
        requireNonNull(problem, "problem");
        requireNonNull(json_out, "json_out");
        *json_out = duplicate(grrt::saveProblem(problem->problem));
    });
}

void grrt_problem_free(grrt_problem *problem)
{
    delete problem;
}

int grrt_problem_dim(const grrt_problem *problem)
{
    return problem ? static_cast<int>(problem->problem.dimension()) : 0;
}

grrt_status grrt_problem_is_free(const grrt_problem *problem, const double *x, int *out)
{
    return guarded([&] {
        requireNonNull(problem, "problem");
        requireNonNull(out, "out");
        *out = grrt::isFree(problem->problem, toState(problem->problem, x)) ? 1 : 0;
    });
}

grrt_status grrt_problem_segment_free(const grrt_problem *problem, const double *a, const double *b, int *out)
{
    return guarded([&] {
        requireNonNull(problem, "problem");
        requireNonNull(out, "out");
        const auto &p = problem->problem;
        *out = grrt::segmentFree(p, toState(p, a), toState(p, b)) ? 1 : 0;
    });
}

void grrt_planner_config_default(grrt_planner_config *config)
{
    if (!config)
        return;
    const grrt::PlannerConfig d;
    config->epsilon = d.epsilon;
    config->max_edge = d.maxEdge;
    config->eta = d.eta;
    config->delay_rewiring = d.delayRewiring ? 1 : 0;
    config->prune = d.prune ? 1 : 0;
    config->balanced = d.balanced ? 1 : 0;
    config->heuristic_gate = d.heuristicGate ? 1 : 0;
    config->greedy_scope = d.greedyScope == grrt::GreedyScope::BestBridge ? GRRT_SCOPE_BEST_BRIDGE
                                                                          : GRRT_SCOPE_ALL_BRIDGES;
    config->seed = d.seed;
    config->time_limit = d.timeLimit;
    config->iteration_limit = d.iterationLimit;
    config->virtual_seconds_per_iteration = d.virtualSecondsPerIteration;
    config->stop_at_first_solution = d.stopAtFirstSolution ? 1 : 0;
    config->sample_retries_per_dimension = d.sampleRetriesPerDimension;
    config->variant = GRRT_VARIANT_GREEDY_RRT_STAR;
}

grrt_status grrt_plan(const grrt_problem *problem, const grrt_planner_config *config, grrt_observer observer,
                      void *user, grrt_result **out)
{
    return guarded([&] {
        requireNonNull(problem, "problem");
        requireNonNull(config, "config");
        requireNonNull(out, "out");
        if (config->variant != GRRT_VARIANT_GREEDY_RRT_STAR && config->variant != GRRT_VARIANT_RRT_CONNECT)
            throw grrt::InvalidArgument("unknown planner variant");
        const grrt::PlannerConfig pc = fromC(*config);
        grrt::Observer forward;
        if (observer)
            forward = [observer, user](const grrt::CostEvent &e) {
                observer(e.elapsed, e.cost, static_cast<int>(e.tag), e.iteration, user);
            };
        auto *r = new grrt_result{};
        try
        {
            r->result = config->variant == GRRT_VARIANT_RRT_CONNECT ? grrt::rrtConnectPlan(problem->problem, pc, forward)
                                                                    : grrt::grrtStarPlan(problem->problem, pc, forward);
        }
        catch (...)
        {
            delete r;
            throw;
        }
        *out = r;
    });
}

double grrt_result_cost(const grrt_result *result)
{
    return result ? result->result.bestCost : grrt::kInfiniteCost;
}

double grrt_result_initial_cost(const grrt_result *result)
{
    return result ? result->result.initialCost : grrt::kInfiniteCost;
}

double grrt_result_initial_time(const grrt_result *result)
{
    return result ? result->result.initialTime : grrt::kInfiniteCost;
}

double grrt_result_elapsed(const grrt_result *result)
{
    return result ? result->result.elapsed : 0.0;
}

uint64_t grrt_result_iterations(const grrt_result *result)
{
    return result ? result->result.stats.iterations : 0;
}

size_t grrt_result_path_length(const grrt_result *result)
{
    return result ? result->result.bestPath.size() : 0;
}

grrt_status grrt_result_path_state(const grrt_result *result, size_t index, double *out)
{
    return guarded([&] {
        requireNonNull(result, "result");
        requireNonNull(out, "out");
        const auto &states = result->result.bestPath.states();
        if (index >= states.size())
            throw grrt::InvalidArgument("path index out of range");
        Eigen::Map<Eigen::VectorXd>(out, states[index].size()) = states[index];
    });
}

size_t grrt_result_event_count(const grrt_result *result)
{
    return result ? result->result.events.size() : 0;
}

grrt_status grrt_result_event(const grrt_result *result, size_t index, double *elapsed, double *cost, int *tag)
{
    return guarded([&] {
        requireNonNull(result, "result");
        const auto &events = result->result.events;
        if (index >= events.size())
            throw grrt::InvalidArgument("event index out of range");
        if (elapsed)
            *elapsed = events[index].elapsed;
        if (cost)
            *cost = events[index].cost;
        if (tag)
            *tag = static_cast<int>(events[index].tag);
    });
}

void grrt_result_free(grrt_result *result)
{
    delete result;
}

grrt_status grrt_bench_run(const char *config_json, const char *out_dir)
{
    return guarded([&] {
        requireNonNull(config_json, "config_json");
        requireNonNull(out_dir, "out_dir");
        grrt::SuiteConfig config = grrt::parseSuiteConfig(config_json);
        grrt::applyEnvironment(config);
        grrt::runAndWrite(config, out_dir);
    });
}

grrt_status grrt_bench_summarize(const char *dir)
{
    return guarded([&] {
        requireNonNull(dir, "dir");
        grrt::summarizeDirectory(dir);
    });
}

grrt_status grrt_bench_verify(const char *out_dir, uint64_t seed, double scale, int *passed)
{
    return guarded([&] {
        requireNonNull(out_dir, "out_dir");
        const bool ok = grrt::verifyToDirectory(out_dir, seed, scale);
        if (passed)
            *passed = ok ? 1 : 0;
    });
}

grrt_status grrt_bench_problem(const char *kind, int dim, const char *params_json, const char *path)
{
    return guarded([&] {
        requireNonNull(path, "path");
        grrt::writeTextFile(path, grrt::saveProblem(buildProblem(kind, dim, params_json)));
    });
}

}  // extern "C"
