#include "batnav/config.hpp"

#include <fstream>
#include <sstream>

#include "batnav/text.hpp"

namespace batnav {

void SimulationConfig::validate() const {
    planner.validate();
    environment.validate();
}

BetaSchedule schedule_from_name(std::string_view name) {
    if (name == "ba") return BetaSchedule::StandardBeta;
    if (name == "mfba") return BetaSchedule::ModifiedFrequency;
    throw ConfigError("unknown algorithm '" + std::string(name) + "' (expected ba or mfba)");
}

const char* schedule_key(BetaSchedule schedule) {
    return schedule == BetaSchedule::StandardBeta ? "ba" : "mfba";
}

namespace {

[[noreturn]] void key_error(int line, const std::string& message) {
    throw ConfigError("config line " + std::to_string(line) + ": " + message);
}

std::vector<double> parse_numbers(int line, const std::string& key, const std::string& value,
                                  std::size_t expected) {
    auto tokens = split_whitespace(value);
    if (tokens.size() != expected) {
        key_error(line, key + " expects " + std::to_string(expected) + " numbers, got " +
                            std::to_string(tokens.size()));
    }
    std::vector<double> numbers;
    numbers.reserve(expected);
    for (const auto& token : tokens) {
        try {
            numbers.push_back(parse_double(token));
        } catch (const std::exception&) {
            key_error(line, key + ": '" + token + "' is not a number");
        }
    }
    return numbers;
}

double number(int line, const std::string& key, const std::string& value) {
    return parse_numbers(line, key, value, 1)[0];
}

int integer(int line, const std::string& key, const std::string& value) {
    try {
        return static_cast<int>(parse_integer(value));
    } catch (const std::exception&) {
        key_error(line, key + ": '" + value + "' is not an integer");
    }
}

}  // namespace

SimulationConfig parse_config(std::string_view text) {
    SimulationConfig config;
    config.environment = preset_environment("case1");

    std::string section;
    bool obstacles_cleared = false;
    int line_number = 0;

    std::istringstream stream{std::string(text)};
    std::string raw;
    while (std::getline(stream, raw)) {
        ++line_number;
        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;

        if (line.front() == '[') {
            if (line.back() != ']') key_error(line_number, "malformed section header");
            section = std::string(line.substr(1, line.size() - 2));
            if (section != "optimizer" && section != "planner" && section != "environment" &&
                section != "obstacles") {
                key_error(line_number, "unknown section [" + section + "]");
            }
            if (section == "obstacles" && !obstacles_cleared) {
                // The section replaces any preset obstacle list, even when empty.
                config.environment.obstacles.clear();
                obstacles_cleared = true;
            }
            continue;
        }

        std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            key_error(line_number, "expected key = value");
        }
        std::string key{trim(line.substr(0, eq))};
        std::string value{trim(line.substr(eq + 1))};
        if (section.empty()) key_error(line_number, "key '" + key + "' outside any section");

        OptimizerConfig& opt = config.planner.optimizer;
        PlannerConfig& plan = config.planner;
        EnvironmentSpec& env = config.environment;

        if (section == "optimizer") {
            if (key == "population_size") opt.population_size = integer(line_number, key, value);
            else if (key == "f_min") opt.f_min = number(line_number, key, value);
            else if (key == "f_max") opt.f_max = number(line_number, key, value);
            else if (key == "alpha") opt.alpha = number(line_number, key, value);
            else if (key == "gamma") opt.gamma = number(line_number, key, value);
            else if (key == "sigma") opt.sigma = number(line_number, key, value);
            else if (key == "initial_loudness") opt.initial_loudness = number(line_number, key, value);
            else if (key == "initial_pulse_rate") opt.initial_pulse_rate = number(line_number, key, value);
            else if (key == "max_iterations") opt.max_iterations = integer(line_number, key, value);
            else if (key == "rho") opt.rho = number(line_number, key, value);
            else if (key == "epsilon") opt.epsilon = number(line_number, key, value);
            else key_error(line_number, "unknown key '" + key + "' in [optimizer]");
        } else if (section == "planner") {
            if (key == "algorithm") {
                plan.algorithm = schedule_from_name(value);
                plan.optimizer.schedule = plan.algorithm;
            } else if (key == "step_length") plan.step_length = number(line_number, key, value);
            else if (key == "waypoint_iterations") plan.waypoint_iterations = integer(line_number, key, value);
            else if (key == "max_cycles") plan.max_cycles = integer(line_number, key, value);
            else if (key == "goal_tolerance") plan.goal_tolerance = number(line_number, key, value);
            else if (key == "sensor_count") plan.sensors.sensor_count = integer(line_number, key, value);
            else if (key == "sensing_range") plan.sensors.sensing_range = number(line_number, key, value);
            else if (key == "robot_radius") plan.robot_radius = number(line_number, key, value);
            else key_error(line_number, "unknown key '" + key + "' in [planner]");
        } else if (section == "environment") {
            if (key == "preset") {
                try {
                    env = preset_environment(value);
                } catch (const std::exception& e) {
                    key_error(line_number, e.what());
                }
                obstacles_cleared = false;
            } else if (key == "bounds") {
                auto v = parse_numbers(line_number, key, value, 4);
                env.bounds = {{v[0], v[1]}, {v[2], v[3]}};
            } else if (key == "start") {
                auto v = parse_numbers(line_number, key, value, 2);
                env.start = {v[0], v[1]};
            } else if (key == "goal") {
                auto v = parse_numbers(line_number, key, value, 2);
                env.goal = {v[0], v[1]};
            } else if (key == "time_step") {
                env.time_step = number(line_number, key, value);
            } else {
                key_error(line_number, "unknown key '" + key + "' in [environment]");
            }
        } else {  // obstacles
            if (key != "obstacle") {
                key_error(line_number, "unknown key '" + key + "' in [obstacles]");
            }
            auto v = parse_numbers(line_number, key, value, 5);
            config.environment.obstacles.push_back({{v[0], v[1]}, v[2], v[3], v[4]});
        }
    }

    try {
        config.validate();
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
    return config;
}

SimulationConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::string serialize_config(const SimulationConfig& config) {
    const OptimizerConfig& opt = config.planner.optimizer;
    const PlannerConfig& plan = config.planner;
    const EnvironmentSpec& env = config.environment;

    std::ostringstream os;
    os << "[optimizer]\n";
    os << "population_size = " << opt.population_size << "\n";
    os << "f_min = " << format_double(opt.f_min) << "\n";
    os << "f_max = " << format_double(opt.f_max) << "\n";
    os << "alpha = " << format_double(opt.alpha) << "\n";
    os << "gamma = " << format_double(opt.gamma) << "\n";
    os << "sigma = " << format_double(opt.sigma) << "\n";
    os << "initial_loudness = " << format_double(opt.initial_loudness) << "\n";
    os << "initial_pulse_rate = " << format_double(opt.initial_pulse_rate) << "\n";
    os << "max_iterations = " << opt.max_iterations << "\n";
    os << "rho = " << format_double(opt.rho) << "\n";
    os << "epsilon = " << format_double(opt.epsilon) << "\n";
    os << "\n[planner]\n";
    os << "algorithm = " << schedule_key(plan.algorithm) << "\n";
    os << "step_length = " << format_double(plan.step_length) << "\n";
    os << "waypoint_iterations = " << plan.waypoint_iterations << "\n";
    os << "max_cycles = " << plan.max_cycles << "\n";
    os << "goal_tolerance = " << format_double(plan.goal_tolerance) << "\n";
    os << "sensor_count = " << plan.sensors.sensor_count << "\n";
    os << "sensing_range = " << format_double(plan.sensors.sensing_range) << "\n";
    os << "robot_radius = " << format_double(plan.robot_radius) << "\n";
    os << "\n[environment]\n";
    os << "bounds = " << format_double(env.bounds.min.x) << " " << format_double(env.bounds.min.y)
       << " " << format_double(env.bounds.max.x) << " " << format_double(env.bounds.max.y) << "\n";
    os << "start = " << format_double(env.start.x) << " " << format_double(env.start.y) << "\n";
    os << "goal = " << format_double(env.goal.x) << " " << format_double(env.goal.y) << "\n";
    os << "time_step = " << format_double(env.time_step) << "\n";
    os << "\n[obstacles]\n";
    for (const Obstacle& o : env.obstacles) {
        os << "obstacle = " << format_double(o.initial_center.x) << " "
           << format_double(o.initial_center.y) << " " << format_double(o.radius) << " "
           << format_double(o.speed) << " " << format_double(o.heading_deg) << "\n";
    }
    return os.str();
}

}  // namespace batnav
