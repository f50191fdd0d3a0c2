#include "batnav/trace_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "batnav/text.hpp"

namespace batnav {

std::string trace_to_csv(const MissionTrace& trace) {
    std::ostringstream os;
    const std::size_t obstacle_count =
        trace.records.empty() ? 0 : trace.records.front().obstacle_positions.size();

    os << "cycle,time_s,x_m,y_m,mode,sensory_vector,escape_bearing_deg";
    for (std::size_t i = 1; i <= obstacle_count; ++i) {
        os << ",obs" << i << "_x_m,obs" << i << "_y_m";
    }
    os << "\n";

    for (const CycleRecord& r : trace.records) {
        os << r.cycle << "," << format_double(r.time_s) << "," << format_double(r.position.x)
           << "," << format_double(r.position.y) << "," << mode_name(r.mode) << ","
           << r.sensory.to_string() << ",";
        if (r.escape_bearing_deg) os << format_double(*r.escape_bearing_deg);
        for (const Vec2& p : r.obstacle_positions) {
            os << "," << format_double(p.x) << "," << format_double(p.y);
        }
        os << "\n";
    }
    return os.str();
}

std::vector<CycleRecord> parse_trace_csv(std::string_view csv) {
    std::vector<std::string> lines;
    for (auto& line : split(csv, '\n')) {
        if (!trim(line).empty()) lines.push_back(line);
    }
    if (lines.empty()) throw std::invalid_argument("trace csv: empty input");

    auto header = split(lines.front(), ',');
    constexpr std::size_t kFixed = 7;
    if (header.size() < kFixed || header[0] != "cycle" || header[4] != "mode") {
        throw std::invalid_argument("trace csv: unexpected header");
    }
    if ((header.size() - kFixed) % 2 != 0) {
        throw std::invalid_argument("trace csv: unpaired obstacle columns");
    }
    const std::size_t obstacle_count = (header.size() - kFixed) / 2;

    std::vector<CycleRecord> records;
    records.reserve(lines.size() - 1);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto fields = split(lines[i], ',');
        if (fields.size() != header.size()) {
            throw std::invalid_argument("trace csv: row " + std::to_string(i) +
                                        " has wrong field count");
        }
        CycleRecord r;
        r.cycle = static_cast<int>(parse_integer(fields[0]));
        r.time_s = parse_double(fields[1]);
        r.position = {parse_double(fields[2]), parse_double(fields[3])};
        r.mode = mode_from_name(fields[4]);
        r.sensory = SensoryVector::from_string(fields[5]);
        if (!fields[6].empty()) r.escape_bearing_deg = parse_double(fields[6]);
        for (std::size_t k = 0; k < obstacle_count; ++k) {
            r.obstacle_positions.push_back({parse_double(fields[kFixed + 2 * k]),
                                            parse_double(fields[kFixed + 2 * k + 1])});
        }
        records.push_back(std::move(r));
    }
    return records;
}

MissionSummary summarize_records(const std::vector<CycleRecord>& records,
                                 const EnvironmentSpec& environment,
                                 const PlannerConfig& config) {
    if (records.empty()) throw std::invalid_argument("summarize_records: no records");

    MissionSummary summary;
    summary.cycle_count = static_cast<int>(records.size()) - 1;
    if (records.size() >= 2) {
        std::vector<Vec2> points;
        points.reserve(records.size());
        for (const CycleRecord& r : records) points.push_back(r.position);
        summary.path_length = path_length(points);
    }
    for (const CycleRecord& r : records) {
        for (const Obstacle& obstacle : environment.obstacles) {
            if (collision(r.position, obstacle, r.time_s, config.robot_radius)) {
                summary.collision = true;
            }
        }
    }
    summary.reached =
        distance(records.back().position, environment.goal) <= config.goal_tolerance;
    return summary;
}

namespace {

struct SvgMapper {
    double min_x, max_y, margin;
    double sx(double x) const { return x - min_x + margin; }
    double sy(double y) const { return max_y - y + margin; }
    std::string point(Vec2 p) const {
        return format_double(sx(p.x)) + "," + format_double(sy(p.y));
    }
};

void svg_circle(std::ostream& os, const SvgMapper& m, Vec2 center, double radius,
                const char* style) {
    os << "  <circle cx=\"" << format_double(m.sx(center.x)) << "\" cy=\""
       << format_double(m.sy(center.y)) << "\" r=\"" << format_double(radius) << "\" "
       << style << "/>\n";
}

}  // namespace

std::string trace_to_svg(const MissionTrace& trace, const EnvironmentSpec& environment,
                         const PlannerConfig& config) {
    const Rect& b = environment.bounds;
    const double margin = 0.75;
    SvgMapper m{b.min.x, b.max.y, margin};
    const double width = (b.max.x - b.min.x) + 2 * margin;
    const double height = (b.max.y - b.min.y) + 2 * margin;
    const double t_end = trace.records.empty() ? 0.0 : trace.records.back().time_s;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << format_double(width)
       << " " << format_double(height) << "\" width=\"650\" height=\"650\">\n";
    os << "  <rect x=\"0\" y=\"0\" width=\"" << format_double(width) << "\" height=\""
       << format_double(height) << "\" fill=\"white\"/>\n";
    os << "  <rect x=\"" << format_double(margin) << "\" y=\"" << format_double(margin)
       << "\" width=\"" << format_double(b.max.x - b.min.x) << "\" height=\""
       << format_double(b.max.y - b.min.y)
       << "\" fill=\"none\" stroke=\"#444\" stroke-width=\"0.04\"/>\n";

    // Obstacle trajectories: solid disc at t=0, dotted heading line, dashed disc at the end.
    for (const Obstacle& o : environment.obstacles) {
        Vec2 p0 = obstacle_position(o, 0.0);
        Vec2 p1 = obstacle_position(o, t_end);
        os << "  <line x1=\"" << format_double(m.sx(p0.x)) << "\" y1=\""
           << format_double(m.sy(p0.y)) << "\" x2=\"" << format_double(m.sx(p1.x))
           << "\" y2=\"" << format_double(m.sy(p1.y))
           << "\" stroke=\"#cc3333\" stroke-width=\"0.03\" stroke-dasharray=\"0.1,0.1\"/>\n";
        svg_circle(os, m, p0, o.radius, "fill=\"#888\" stroke=\"black\" stroke-width=\"0.03\"");
        svg_circle(os, m, p1, o.radius,
                   "fill=\"none\" stroke=\"#888\" stroke-width=\"0.03\" stroke-dasharray=\"0.08,0.08\"");
    }

    // Sensing-radius circles at a few snapshots along the path.
    if (trace.records.size() > 2) {
        const std::size_t n = trace.records.size();
        for (std::size_t idx : {n / 4, n / 2, (3 * n) / 4}) {
            svg_circle(os, m, trace.records[idx].position, config.sensors.sensing_range,
                       "fill=\"none\" stroke=\"magenta\" stroke-width=\"0.025\" "
                       "stroke-dasharray=\"0.12,0.06\"");
        }
    }

    if (!trace.records.empty()) {
        os << "  <polyline fill=\"none\" stroke=\"#1155cc\" stroke-width=\"0.06\" points=\"";
        for (std::size_t i = 0; i < trace.records.size(); ++i) {
            if (i) os << " ";
            os << m.point(trace.records[i].position);
        }
        os << "\"/>\n";
    }

    svg_circle(os, m, environment.start, 0.15, "fill=\"green\"");
    svg_circle(os, m, environment.goal, 0.15,
               "fill=\"none\" stroke=\"red\" stroke-width=\"0.06\"");
    os << "</svg>\n";
    return os.str();
}

FitnessStats fitness_stats(const std::vector<RunSummary>& runs) {
    if (runs.empty()) throw std::invalid_argument("fitness_stats: no runs");
    // Sorted accumulation keeps the aggregates bit-identical under any run order.
    std::vector<double> values;
    values.reserve(runs.size());
    for (const RunSummary& r : runs) values.push_back(r.run_fitness);
    std::sort(values.begin(), values.end());

    FitnessStats stats;
    stats.minimum = values.front();
    stats.maximum = values.back();
    double sum = 0.0;
    for (double v : values) sum += v;
    stats.mean = sum / static_cast<double>(values.size());
    if (values.size() > 1) {
        double ssq = 0.0;
        for (double v : values) {
            double d = v - stats.mean;
            ssq += d * d;
        }
        stats.standard_deviation = std::sqrt(ssq / static_cast<double>(values.size() - 1));
    }
    return stats;
}

std::string bench_to_csv(const std::vector<TrialStatistics>& rows) {
    std::ostringstream os;
    os << "function,algorithm,best,worst,mean,sd,significant\n";
    for (const TrialStatistics& r : rows) {
        os << r.function_name << "," << r.algorithm << "," << format_double(r.best) << ","
           << format_double(r.worst) << "," << format_double(r.mean) << ","
           << format_double(r.standard_deviation) << ",";
        if (r.algorithm == "MFBA") os << r.significance_mark;
        os << "\n";
    }
    return os.str();
}

std::string bench_to_text(const std::vector<TrialStatistics>& rows) {
    std::ostringstream os;
    os << std::left << std::setw(18) << "Function" << std::setw(13) << "Alg.";
    os << std::setw(14) << "Best" << std::setw(14) << "Worst" << std::setw(14) << "Mean"
       << std::setw(14) << "SD" << "significant\n";
    os << std::string(92, '-') << "\n";
    os << std::setprecision(5);
    for (const TrialStatistics& r : rows) {
        os << std::left << std::setw(18) << r.function_name << std::setw(13) << r.algorithm;
        os << std::setw(14) << r.best << std::setw(14) << r.worst << std::setw(14) << r.mean
           << std::setw(14) << r.standard_deviation;
        if (r.algorithm == "MFBA") os << r.significance_mark;
        os << "\n";
    }
    return os.str();
}

std::string plan_summary_to_csv(const BestOfRuns& result) {
    std::ostringstream os;
    os << "run,seed,reached,collision,path_length_m,cycles,run_fitness\n";
    for (std::size_t i = 0; i < result.runs.size(); ++i) {
        const RunSummary& r = result.runs[i];
        os << (i + 1) << "," << r.seed << "," << (r.summary.reached ? "true" : "false") << ","
           << (r.summary.collision ? "true" : "false") << ","
           << format_double(r.summary.path_length) << "," << r.summary.cycle_count << ","
           << format_double(r.run_fitness) << "\n";
    }
    const FitnessStats stats = fitness_stats(result.runs);
    os << "minimum,,,,,," << format_double(stats.minimum) << "\n";
    os << "maximum,,,,,," << format_double(stats.maximum) << "\n";
    os << "standard_deviation,,,,,," << format_double(stats.standard_deviation) << "\n";
    os << "mean,,,,,," << format_double(stats.mean) << "\n";
    return os.str();
}

std::string plan_summary_to_text(const BestOfRuns& result, const PlannerConfig& config) {
    std::ostringstream os;
    os << "Algorithm: " << algorithm_name(config.algorithm) << "\n\n";
    os << std::left << std::setw(5) << "run" << std::setw(8) << "seed" << std::setw(9)
       << "reached" << std::setw(11) << "collision" << std::setw(15) << "path_length_m"
       << std::setw(8) << "cycles" << "fitness\n";
    os << std::setprecision(6);
    for (std::size_t i = 0; i < result.runs.size(); ++i) {
        const RunSummary& r = result.runs[i];
        os << std::left << std::setw(5) << (i + 1) << std::setw(8) << r.seed << std::setw(9)
           << (r.summary.reached ? "yes" : "no") << std::setw(11)
           << (r.summary.collision ? "yes" : "no") << std::setw(15) << r.summary.path_length
           << std::setw(8) << r.summary.cycle_count << r.run_fitness << "\n";
    }
    const FitnessStats stats = fitness_stats(result.runs);
    os << "\nFitness statistics over " << result.runs.size() << " runs\n";
    os << std::setprecision(10);
    os << "  minimum:            " << stats.minimum << "\n";
    os << "  maximum:            " << stats.maximum << "\n";
    os << "  standard deviation: " << stats.standard_deviation << "\n";
    os << "  mean:               " << stats.mean << "\n";
    if (result.best_index) {
        const MissionTrace& best = result.traces[*result.best_index];
        os << "\nBest run: " << (*result.best_index + 1) << " (seed " << best.seed
           << "), path length " << std::setprecision(6) << best.summary.path_length
           << " m in " << best.summary.cycle_count << " cycles\n";
    } else {
        os << "\nBest run: none reached the goal collision-free\n";
    }
    return os.str();
}

std::string compare_to_csv(const BestOfRuns& ba, const BestOfRuns& mfba) {
    const FitnessStats fb = fitness_stats(ba.runs);
    const FitnessStats fm = fitness_stats(mfba.runs);
    std::ostringstream os;
    os << "fitness,Standard BA,MFBA\n";
    os << "minimum," << format_double(fb.minimum) << "," << format_double(fm.minimum) << "\n";
    os << "maximum," << format_double(fb.maximum) << "," << format_double(fm.maximum) << "\n";
    os << "standard_deviation," << format_double(fb.standard_deviation) << ","
       << format_double(fm.standard_deviation) << "\n";
    os << "mean," << format_double(fb.mean) << "," << format_double(fm.mean) << "\n";
    auto best_length = [](const BestOfRuns& r) {
        return r.best_index ? format_double(r.traces[*r.best_index].summary.path_length)
                            : std::string();
    };
    os << "best_path_length_m," << best_length(ba) << "," << best_length(mfba) << "\n";
    return os.str();
}

std::string compare_to_text(const BestOfRuns& ba, const BestOfRuns& mfba) {
    const FitnessStats fb = fitness_stats(ba.runs);
    const FitnessStats fm = fitness_stats(mfba.runs);
    std::ostringstream os;
    os << std::left << std::setw(22) << "Fitness" << std::setw(18) << "Standard BA"
       << "MFBA\n";
    os << std::string(52, '-') << "\n" << std::setprecision(10);
    os << std::left << std::setw(22) << "minimum" << std::setw(18) << fb.minimum << fm.minimum
       << "\n";
    os << std::left << std::setw(22) << "maximum" << std::setw(18) << fb.maximum << fm.maximum
       << "\n";
    os << std::left << std::setw(22) << "standard deviation" << std::setw(18)
       << fb.standard_deviation << fm.standard_deviation << "\n";
    os << std::left << std::setw(22) << "mean" << std::setw(18) << fb.mean << fm.mean << "\n";
    auto best_length = [](const BestOfRuns& r) -> std::string {
        if (!r.best_index) return "none";
        std::ostringstream tmp;
        tmp << std::setprecision(6) << r.traces[*r.best_index].summary.path_length;
        return tmp.str();
    };
    os << std::left << std::setw(22) << "best path length (m)" << std::setw(18)
       << best_length(ba) << best_length(mfba) << "\n";
    return os.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace batnav
