#pragma once

#include <string>
#include <vector>

#include "fsd/core.hpp"

namespace fsd {

// Malformed .fsd/.sched text. Line and column are 1-based.
struct ParseError : std::runtime_error {
    int line;
    int column;

    ParseError(int line_, int column_, const std::string& msg);
};

// .fsd format: optional '#' comment lines; first data line is n; then n lines
// "a l b" of nonnegative integers.
Instance parse_instance(const std::string& text);
std::string format_instance(const Instance& inst, const std::string& comment = "");

// Non-fatal things a caller may want to surface (e.g. more than two distinct
// delay values: storable, but solve_concatenation will reject it).
std::vector<std::string> instance_warnings(const Instance& inst);

// .sched format: optional '#' comments; n lines "job_index start1".
// parse_schedule checks the indices cover 0..n-1 exactly once.
Schedule parse_schedule(const std::string& text, const Instance& inst);
// Writes the normalized schedule (earliest nonempty operation at time 0).
std::string format_schedule(const Instance& inst, const Schedule& sched);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace fsd
