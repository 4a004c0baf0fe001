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

#include "grrt/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include "grrt/analysis.hpp"
#include "grrt/error.hpp"
#include "grrt/simplify.hpp"
#include "json.hpp"

namespace grrt
{
    namespace
    {
        using Json = nlohmann::ordered_json;

        constexpr std::string_view kCsvHeader = "planner,problem,dim,seed,elapsed_s,cost,tag";
        constexpr std::string_view kSimplifiedInitial = "simplified_initial";
        constexpr std::string_view kSimplifiedFinal = "simplified_final";

        std::string formatNumber(double v)
        {
            if (std::isinf(v))
                return v > 0 ? "inf" : "-inf";
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            return buf;
        }

        double parseNumber(std::string_view s, std::size_t line)
        {
            if (s == "inf")
                return kInfiniteCost;
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc() || ptr != s.data() + s.size())
                throw ParseError("line " + std::to_string(line) + ": bad number '" + std::string(s) + "'");
            return v;
        }

        template <typename T>
        T parseInteger(std::string_view s, std::size_t line)
        {
            T v{};
            const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc() || ptr != s.data() + s.size())
                throw ParseError("line " + std::to_string(line) + ": bad integer '" + std::string(s) + "'");
            return v;
        }

        Json costJson(Cost c)
        {
            if (std::isinf(c))
                return "inf";
            return c;
        }

        Json optionalCostJson(const std::optional<Cost> &c)
        {
            return c ? costJson(*c) : Json(nullptr);
        }

        Json parseJson(std::string_view text, const char *what)
        {
            try
            {
                return Json::parse(text);
            }
            catch (const nlohmann::json::exception &e)
            {
                throw ParseError(std::string(what) + ": " + e.what());
            }
        }

        // Reads fields of a JSON object, rejecting keys nobody asked for.
        class ObjectReader
        {
        public:
            ObjectReader(const Json &object, std::string context) : object_(object), context_(std::move(context))
            {
                if (!object_.is_object())
                    throw ParseError(context_ + " must be an object");
            }

            template <typename T>
            void read(const char *key, T &out)
            {
                seen_.emplace_back(key);
                auto it = object_.find(key);
                if (it == object_.end())
                    return;
                try
                {
                    out = it->template get<T>();
                }
                catch (const nlohmann::json::exception &)
                {
                    throw ParseError(context_ + ": field '" + key + "' has the wrong type");
                }
            }

            const Json *child(const char *key)
            {
                seen_.emplace_back(key);
                auto it = object_.find(key);
                return it == object_.end() ? nullptr : &*it;
            }

            void finish() const
            {
                for (auto it = object_.begin(); it != object_.end(); ++it)
                    if (std::find(seen_.begin(), seen_.end(), it.key()) == seen_.end())
                        throw ParseError(context_ + ": unknown field '" + it.key() + "'");
            }

        private:
            const Json &object_;
            std::string context_;
            std::vector<std::string> seen_;
        };

        ProblemParams readProblemParams(const Json &j)
        {
            ProblemParams p;
            ObjectReader r(j, "problem params");
            r.read("collision_resolution", p.collisionResolution);
            r.read("wall_thickness", p.wallThickness);
            r.read("gap_width", p.gapWidth);
            r.read("gap_center", p.gapCenter);
            r.read("wall_top", p.wallTop);
            r.read("grid_count", p.gridCount);
            r.read("cube_edge", p.cubeEdge);
            r.read("grid_pitch", p.gridPitch);
            r.read("enclosure_edge", p.enclosureEdge);
            r.read("enclosure_wall", p.enclosureWall);
            r.read("enclosure_opening", p.enclosureOpening);
            r.finish();
            return p;
        }

        Json problemParamsJson(const ProblemParams &p)
        {
            return Json{{"collision_resolution", p.collisionResolution},
                        {"wall_thickness", p.wallThickness},
                        {"gap_width", p.gapWidth},
                        {"gap_center", p.gapCenter},
                        {"wall_top", p.wallTop},
                        {"grid_count", p.gridCount},
                        {"cube_edge", p.cubeEdge},
                        {"grid_pitch", p.gridPitch},
                        {"enclosure_edge", p.enclosureEdge},
                        {"enclosure_wall", p.enclosureWall},
                        {"enclosure_opening", p.enclosureOpening}};
        }

        std::string_view scopeName(GreedyScope s)
        {
            return s == GreedyScope::BestBridge ? "best_bridge" : "all_bridges";
        }

        GreedyScope scopeFromName(const std::string &s)
        {
            if (s == "best_bridge")
                return GreedyScope::BestBridge;
            if (s == "all_bridges")
                return GreedyScope::AllBridges;
            throw ParseError("unknown greedy scope '" + s + "'");
        }

        void requirePlannerId(std::string_view id)
        {
            if (id != kPlannerGreedy && id != kPlannerInformed && id != kPlannerConnect)
                throw InvalidArgument("unknown planner '" + std::string(id) + "'");
        }

        void requireCsvSafe(const std::string &s)
        {
            if (s.empty() || s.find_first_of(",\"\r\n") != std::string::npos)
                throw InvalidArgument("identifier not representable in CSV: '" + s + "'");
        }

        std::string_view trialTagName(EventTag tag)
        {
            return toString(tag);
        }

        // Grid-point value of one trial: the best cost reported by then.
        Cost costAt(const TrialRecord &r, double t)
        {
            Cost c = kInfiniteCost;
            for (const auto &e : r.events)
            {
                if (e.elapsed > t)
                    break;
                c = std::min(c, e.cost);
            }
            return c;
        }

        double finalTime(const TrialRecord &r)
        {
            return r.events.empty() ? 0.0 : r.events.back().elapsed;
        }
    }  // namespace

    void SuiteConfig::validate() const
    {
        if (planners.empty())
            throw InvalidArgument("suite needs at least one planner");
        for (const auto &p : planners)
            requirePlannerId(p);
        if (problems.empty())
            throw InvalidArgument("suite needs at least one problem");
        for (const auto &p : problems)
        {
            if (p.dims.empty())
                throw InvalidArgument("problem entry needs at least one dimension");
            for (int n : p.dims)
                if (n < 2)
                    throw InvalidArgument("problem dimensions must be at least 2");
        }
        if (trials == 0)
            throw InvalidArgument("trials must be positive");
        if (!(timeLimit > 0.0) || !std::isfinite(timeLimit))
            throw InvalidArgument("time limit must be positive and finite");
        if (!(epsilon >= 0.0 && epsilon <= 1.0))
            throw InvalidArgument("epsilon must lie in [0, 1]");
        if (!(virtualSecondsPerIteration >= 0.0))
            throw InvalidArgument("virtual time per iteration must be non-negative");
        if (workers == 0)
            throw InvalidArgument("workers must be positive");
        if (!(verifyScale >= 0.0))
            throw InvalidArgument("verify scale must be non-negative");
        if (gridPoints < 2)
            throw InvalidArgument("time grid needs at least two points");
        if (!(gridStart > 0.0) || gridStart >= timeLimit)
            throw InvalidArgument("time grid must start in (0, time limit)");
        PlannerConfig c = planner;
        c.epsilon = epsilon;
        c.validate();
    }

    ProblemParams parseProblemParams(std::string_view text)
    {
        return readProblemParams(parseJson(text, "problem params"));
    }

    SuiteConfig parseSuiteConfig(std::string_view text)
    {
        const Json doc = parseJson(text, "suite config");
        SuiteConfig c;
        ObjectReader r(doc, "suite config");
        int format = 1;
        r.read("format", format);
        if (format != 1)
            throw ParseError("unsupported suite config format " + std::to_string(format));
        r.read("planners", c.planners);
        if (const Json *problems = r.child("problems"))
        {
            if (!problems->is_array())
                throw ParseError("problems must be an array");
            c.problems.clear();
            for (const auto &entry : *problems)
            {
                ProblemSpec spec;
                ObjectReader pr(entry, "problem entry");
                std::string kind = std::string(toString(spec.kind));
                pr.read("kind", kind);
                try
                {
                    spec.kind = problemKindFromString(kind);
                }
                catch (const InvalidArgument &e)
                {
                    throw ParseError(e.what());
                }
                pr.read("dims", spec.dims);
                if (const Json *params = pr.child("params"))
                    spec.params = readProblemParams(*params);
                pr.finish();
                c.problems.push_back(std::move(spec));
            }
        }
        r.read("trials", c.trials);
        r.read("time_limit_s", c.timeLimit);
        r.read("seed_base", c.seedBase);
        r.read("epsilon", c.epsilon);
        r.read("virtual_time_per_iteration_s", c.virtualSecondsPerIteration);
        r.read("iteration_limit", c.iterationLimit);
        r.read("workers", c.workers);
        r.read("shortcut_iterations", c.shortcutIterations);
        r.read("verify_scale", c.verifyScale);
        r.read("grid_points", c.gridPoints);
        r.read("grid_start_s", c.gridStart);
        if (const Json *planner = r.child("planner"))
        {
            ObjectReader pr(*planner, "planner");
            std::string scope(scopeName(c.planner.greedyScope));
            pr.read("max_edge", c.planner.maxEdge);
            pr.read("eta", c.planner.eta);
            pr.read("delay_rewiring", c.planner.delayRewiring);
            pr.read("prune", c.planner.prune);
            pr.read("balanced", c.planner.balanced);
            pr.read("heuristic_gate", c.planner.heuristicGate);
            pr.read("greedy_scope", scope);
            pr.read("stop_at_first_solution", c.planner.stopAtFirstSolution);
            pr.read("sample_retries_per_dimension", c.planner.sampleRetriesPerDimension);
            pr.finish();
            c.planner.greedyScope = scopeFromName(scope);
        }
        r.finish();
        c.validate();
        return c;
    }

    std::string suiteConfigToJson(const SuiteConfig &c)
    {
        Json problems = Json::array();
        for (const auto &p : c.problems)
            problems.push_back({{"kind", toString(p.kind)}, {"dims", p.dims}, {"params", problemParamsJson(p.params)}});
        Json doc{{"format", 1},
                 {"planners", c.planners},
                 {"problems", problems},
                 {"trials", c.trials},
                 {"time_limit_s", c.timeLimit},
                 {"seed_base", c.seedBase},
                 {"epsilon", c.epsilon},
                 {"virtual_time_per_iteration_s", c.virtualSecondsPerIteration},
                 {"iteration_limit", c.iterationLimit},
                 {"workers", c.workers},
                 {"shortcut_iterations", c.shortcutIterations},
                 {"verify_scale", c.verifyScale},
                 {"grid_points", c.gridPoints},
                 {"grid_start_s", c.gridStart},
                 {"planner",
                  {{"max_edge", c.planner.maxEdge},
                   {"eta", c.planner.eta},
                   {"delay_rewiring", c.planner.delayRewiring},
                   {"prune", c.planner.prune},
                   {"balanced", c.planner.balanced},
                   {"heuristic_gate", c.planner.heuristicGate},
                   {"greedy_scope", scopeName(c.planner.greedyScope)},
                   {"stop_at_first_solution", c.planner.stopAtFirstSolution},
                   {"sample_retries_per_dimension", c.planner.sampleRetriesPerDimension}}}};
        return doc.dump(2) + "\n";
    }

    void applyEnvironment(SuiteConfig &config)
    {
        const char *seed = std::getenv("BENCH_SEED");
        if (!seed || !*seed)
            return;
        const std::string_view s(seed);
        std::uint64_t v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size())
            throw InvalidArgument("BENCH_SEED must be a non-negative integer");
        config.seedBase = v;
    }

    TrialRecord runTrial(const Problem &problem, const SuiteConfig &config, std::string_view planner,
                         std::uint64_t seed)
    {
        requirePlannerId(planner);
        PlannerConfig pc = config.planner;
        pc.seed = seed;
        pc.timeLimit = config.timeLimit;
        pc.iterationLimit = config.iterationLimit;
        pc.virtualSecondsPerIteration = config.virtualSecondsPerIteration;
        pc.epsilon = planner == kPlannerInformed ? 0.0 : config.epsilon;

        const PlannerResult result =
            planner == kPlannerConnect ? rrtConnectPlan(problem, pc) : grrtStarPlan(problem, pc);

        TrialRecord r;
        r.planner = std::string(planner);
        r.problem = problem.name();
        r.dim = static_cast<int>(problem.dimension());
        r.seed = seed;
        for (const auto &e : result.events)
            r.events.push_back({e.elapsed, e.cost, e.tag});

        // Simplification is reporting only; the planner never sees it.
        Rng rng(seed, Stream::Shortcut);
        if (result.initialPath.size() >= 2)
            r.simplifiedInitialCost = shortcut(result.initialPath, problem, config.shortcutIterations, rng).cost();
        if (result.bestPath.size() >= 2)
            r.simplifiedFinalCost = shortcut(result.bestPath, problem, config.shortcutIterations, rng).cost();
        return r;
    }

    std::vector<TrialRecord> runSuite(const SuiteConfig &config)
    {
        config.validate();
        struct Job
        {
            std::size_t problem;
            std::string_view planner;
            std::uint64_t seed;
        };
        std::vector<Problem> problems;
        std::vector<Job> jobs;
        for (const auto &planner : config.planners)
        {
            std::size_t index = 0;
            for (const auto &spec : config.problems)
                for (int n : spec.dims)
                {
                    if (problems.size() <= index)
                        problems.push_back(makeProblem(spec.kind, n, spec.params));
                    for (std::size_t t = 0; t < config.trials; ++t)
                        jobs.push_back({index, planner, config.seedBase + t});
                    ++index;
                }
        }

        std::vector<TrialRecord> records(jobs.size());
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failureMutex;
        auto worker = [&]() {
            for (;;)
            {
                const std::size_t i = next.fetch_add(1);
                if (i >= jobs.size())
                    return;
                try
                {
                    records[i] = runTrial(problems[jobs[i].problem], config, jobs[i].planner, jobs[i].seed);
                }
                catch (...)
                {
                    std::lock_guard<std::mutex> lock(failureMutex);
                    if (!failure)
                        failure = std::current_exception();
                    next.store(jobs.size());
                    return;
                }
            }
        };
        const std::size_t threads = std::min(config.workers, std::max<std::size_t>(jobs.size(), 1));
        if (threads <= 1)
            worker();
        else
        {
            std::vector<std::thread> pool;
            for (std::size_t k = 0; k < threads; ++k)
                pool.emplace_back(worker);
            for (auto &t : pool)
                t.join();
        }
        if (failure)
            std::rethrow_exception(failure);
        return records;
    }

    std::string emitTrialsCsv(const std::vector<TrialRecord> &records)
    {
        std::string out(kCsvHeader);
        out += '\n';
        for (const auto &r : records)
        {
            requireCsvSafe(r.planner);
            requireCsvSafe(r.problem);
            const std::string prefix = r.planner + "," + r.problem + "," + std::to_string(r.dim) + "," +
                                       std::to_string(r.seed) + ",";
            double initialTime = kInfiniteCost;
            for (const auto &e : r.events)
            {
                if (e.tag == EventTag::Initial)
                    initialTime = e.elapsed;
                out += prefix + formatNumber(e.elapsed) + "," + formatNumber(e.cost) + "," +
                       std::string(trialTagName(e.tag)) + "\n";
            }
            out += prefix + formatNumber(initialTime) + "," + formatNumber(r.simplifiedInitialCost) + "," +
                   std::string(kSimplifiedInitial) + "\n";
            out += prefix + formatNumber(finalTime(r)) + "," + formatNumber(r.simplifiedFinalCost) + "," +
                   std::string(kSimplifiedFinal) + "\n";
        }
        return out;
    }

    std::vector<TrialRecord> parseTrialsCsv(std::string_view text)
    {
        std::vector<TrialRecord> records;
        std::size_t lineNo = 0;
        std::size_t pos = 0;
        bool header = true;
        // The simplified_final row closes a record.
        bool open = false;
        while (pos < text.size())
        {
            std::size_t end = text.find('\n', pos);
            if (end == std::string_view::npos)
                end = text.size();
            std::string_view line = text.substr(pos, end - pos);
            pos = end + 1;
            ++lineNo;
            if (!line.empty() && line.back() == '\r')
                line.remove_suffix(1);
            if (header)
            {
                if (line != kCsvHeader)
                    throw ParseError("unexpected trials.csv header");
                header = false;
                continue;
            }
            if (line.empty())
                continue;

            std::vector<std::string_view> f;
            std::size_t start = 0;
            for (;;)
            {
                const std::size_t comma = line.find(',', start);
                f.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
                if (comma == std::string_view::npos)
                    break;
                start = comma + 1;
            }
            if (f.size() != 7)
                throw ParseError("line " + std::to_string(lineNo) + ": expected 7 fields");

            const std::string planner(f[0]);
            const std::string problem(f[1]);
            const int dim = parseInteger<int>(f[2], lineNo);
            const auto seed = parseInteger<std::uint64_t>(f[3], lineNo);
            if (!open)
            {
                records.push_back({planner, problem, dim, seed, {}, kInfiniteCost, kInfiniteCost});
                open = true;
            }
            TrialRecord &r = records.back();
            if (r.planner != planner || r.problem != problem || r.dim != dim || r.seed != seed)
                throw ParseError("line " + std::to_string(lineNo) + ": row interleaves trials");

            const double elapsed = parseNumber(f[4], lineNo);
            const Cost cost = parseNumber(f[5], lineNo);
            if (f[6] == kSimplifiedInitial)
                r.simplifiedInitialCost = cost;
            else if (f[6] == kSimplifiedFinal)
            {
                r.simplifiedFinalCost = cost;
                open = false;
            }
            else
                r.events.push_back({elapsed, cost, eventTagFromString(f[6])});
        }
        if (header)
            throw ParseError("trials.csv is missing its header");
        if (open)
            throw ParseError("trials.csv ends inside a trial");
        return records;
    }

    std::vector<double> logTimeGrid(double start, double stop, std::size_t points)
    {
        if (!(start > 0.0) || !(stop > start) || points < 2)
            throw InvalidArgument("log grid needs 0 < start < stop and at least two points");
        std::vector<double> grid(points);
        const double a = std::log(start);
        const double b = std::log(stop);
        for (std::size_t i = 0; i < points; ++i)
            grid[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(points - 1));
        grid.front() = start;
        grid.back() = stop;
        return grid;
    }

    Cost medianCost(std::vector<Cost> values)
    {
        if (values.empty())
            throw InvalidArgument("median of an empty set");
        std::sort(values.begin(), values.end());
        const std::size_t n = values.size();
        if (n % 2 == 1)
            return values[n / 2];
        const Cost lo = values[n / 2 - 1];
        const Cost hi = values[n / 2];
        if (std::isinf(lo) || std::isinf(hi))
            return kInfiniteCost;
        return 0.5 * (lo + hi);
    }

    std::optional<std::pair<std::size_t, std::size_t>> medianCiRanks(std::size_t n, double confidence)
    {
        if (!(confidence > 0.0 && confidence < 1.0))
            throw InvalidArgument("confidence must lie in (0, 1)");
        if (n == 0)
            return std::nullopt;
        const double tail = 0.5 * (1.0 - confidence);
        // Largest l with P(B <= l - 1) <= tail for B ~ Bin(n, 1/2).
        const double logHalf = static_cast<double>(n) * std::log(0.5);
        const double lgN = std::lgamma(static_cast<double>(n) + 1.0);
        double cdf = 0.0;
        std::size_t l = 0;
        for (std::size_t k = 0; k <= n / 2; ++k)
        {
            const double lk = std::lgamma(static_cast<double>(k) + 1.0);
            const double lnk = std::lgamma(static_cast<double>(n - k) + 1.0);
            cdf += std::exp(lgN - lk - lnk + logHalf);
            if (cdf > tail)
                break;
            l = k + 1;
        }
        if (l == 0)
            return std::nullopt;
        return std::make_pair(l, n - l + 1);
    }

    SummaryTable summarize(const std::vector<TrialRecord> &records, const std::vector<double> &timeGrid)
    {
        if (timeGrid.empty())
            throw InvalidArgument("time grid is empty");
        if (!std::is_sorted(timeGrid.begin(), timeGrid.end()) || timeGrid.front() < 0.0)
            throw InvalidArgument("time grid must be sorted and non-negative");
        SummaryTable table;
        table.timeGrid = timeGrid;

        // Cells keep the order in which they first appear.
        std::vector<std::tuple<std::string, std::string, int>> keys;
        std::map<std::tuple<std::string, std::string, int>, std::vector<const TrialRecord *>> groups;
        for (const auto &r : records)
        {
            auto key = std::make_tuple(r.planner, r.problem, r.dim);
            auto [it, inserted] = groups.try_emplace(key);
            if (inserted)
                keys.push_back(key);
            it->second.push_back(&r);
        }

        for (const auto &key : keys)
        {
            const auto &trials = groups[key];
            SummaryCell cell;
            std::tie(cell.planner, cell.problem, cell.dim) = key;
            cell.trials = trials.size();

            double lastRecorded = 0.0;
            for (const auto *r : trials)
                lastRecorded = std::max(lastRecorded, finalTime(*r));
            std::size_t clamped = 0;
            const auto ranks = medianCiRanks(trials.size(), 0.99);

            for (double t : timeGrid)
            {
                if (t > lastRecorded)
                {
                    ++clamped;
                    t = lastRecorded;
                }
                std::vector<Cost> costs;
                costs.reserve(trials.size());
                std::size_t solved = 0;
                for (const auto *r : trials)
                {
                    const Cost c = costAt(*r, t);
                    solved += isFinite(c) ? 1 : 0;
                    costs.push_back(c);
                }
                cell.success.push_back(static_cast<double>(solved) / static_cast<double>(trials.size()));
                cell.median.push_back(medianCost(costs));
                std::sort(costs.begin(), costs.end());
                if (ranks)
                {
                    cell.ciLower.push_back(costs[ranks->first - 1]);
                    cell.ciUpper.push_back(costs[ranks->second - 1]);
                }
                else
                {
                    cell.ciLower.push_back(std::nullopt);
                    cell.ciUpper.push_back(std::nullopt);
                }
            }
            if (clamped > 0)
                table.warnings.push_back(cell.planner + "/" + cell.problem + "/" + std::to_string(cell.dim) + ": " +
                                         std::to_string(clamped) + " grid points beyond the last recorded time " +
                                         formatNumber(lastRecorded) + " s were clamped");

            std::vector<Cost> initial, final;
            for (const auto *r : trials)
            {
                initial.push_back(r->simplifiedInitialCost);
                final.push_back(r->simplifiedFinalCost);
            }
            cell.initialMedian = medianCost(initial);
            cell.finalMedian = medianCost(final);
            table.cells.push_back(std::move(cell));
        }
        return table;
    }

    std::string summaryToJson(const SummaryTable &table)
    {
        Json cells = Json::array();
        for (const auto &c : table.cells)
        {
            Json median = Json::array(), lower = Json::array(), upper = Json::array();
            for (std::size_t i = 0; i < c.median.size(); ++i)
            {
                median.push_back(costJson(c.median[i]));
                lower.push_back(optionalCostJson(c.ciLower[i]));
                upper.push_back(optionalCostJson(c.ciUpper[i]));
            }
            cells.push_back({{"planner", c.planner},
                             {"problem", c.problem},
                             {"dim", c.dim},
                             {"trials", c.trials},
                             {"success", c.success},
                             {"median_cost", median},
                             {"ci_lower", lower},
                             {"ci_upper", upper},
                             {"initial_cost_median", costJson(c.initialMedian)},
                             {"final_cost_median", costJson(c.finalMedian)}});
        }
        Json doc{{"format", 1},
                 {"confidence", 0.99},
                 {"time_grid_s", table.timeGrid},
                 {"cells", cells},
                 {"warnings", table.warnings}};
        return doc.dump(2) + "\n";
    }

    std::string readTextFile(const std::string &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw IoError("cannot open '" + path + "' for reading");
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    void writeTextFile(const std::string &path, std::string_view text)
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw IoError("cannot open '" + path + "' for writing");
        out.write(text.data(), static_cast<std::streamsize>(text.size()));
        if (!out)
            throw IoError("failed writing '" + path + "'");
    }

    namespace
    {
        std::string prepareDirectory(const std::string &dir)
        {
            std::error_code ec;
            std::filesystem::create_directories(dir, ec);
            if (ec || !std::filesystem::is_directory(dir))
                throw IoError("cannot create output directory '" + dir + "'");
            return dir;
        }

        std::string join(const std::string &dir, const char *file)
        {
            return (std::filesystem::path(dir) / file).string();
        }

        std::vector<double> gridFor(const SuiteConfig &c)
        {
            return logTimeGrid(c.gridStart, c.timeLimit, c.gridPoints);
        }

        void writeVerification(const std::string &dir, std::uint64_t seed, double scale, bool *passed)
        {
            VerificationOptions options{seed, scale};
            std::vector<CheckResult> results;
            if (scale > 0.0)
                results = runVerificationSuite(options);
            bool ok = true;
            for (const auto &r : results)
                ok = ok && r.passed;
            if (passed)
                *passed = ok;
            writeTextFile(join(dir, "verification.json"), verificationReport(results, options));
        }
    }  // namespace

    void runAndWrite(const SuiteConfig &config, const std::string &outDir)
    {
        prepareDirectory(outDir);
        const auto records = runSuite(config);
        writeTextFile(join(outDir, "config.json"), suiteConfigToJson(config));
        writeTextFile(join(outDir, "trials.csv"), emitTrialsCsv(records));
        writeTextFile(join(outDir, "summary.json"), summaryToJson(summarize(records, gridFor(config))));
        writeVerification(outDir, config.seedBase, config.verifyScale, nullptr);
    }

    void summarizeDirectory(const std::string &dir)
    {
        const SuiteConfig config = parseSuiteConfig(readTextFile(join(dir, "config.json")));
        const auto records = parseTrialsCsv(readTextFile(join(dir, "trials.csv")));
        writeTextFile(join(dir, "summary.json"), summaryToJson(summarize(records, gridFor(config))));
    }

    bool verifyToDirectory(const std::string &outDir, std::uint64_t seed, double scale)
    {
        if (!(scale > 0.0))
            throw InvalidArgument("verification scale must be positive");
        prepareDirectory(outDir);
        bool passed = false;
        writeVerification(outDir, seed, scale, &passed);
        return passed;
    }
}  // namespace grrt
