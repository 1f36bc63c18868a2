#include "fsd/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace fsd {

ParseError::ParseError(int line_, int column_, const std::string& msg)
    : std::runtime_error(std::to_string(line_) + ":" + std::to_string(column_) + ": " + msg),
      line(line_),
      column(column_) {}

namespace {

// One whitespace-separated token with its 1-based position.
struct Token {
    std::string text;
    int line = 0;
    int column = 0;
};

// Strips '#' comments, splits the rest into tokens grouped by line.
std::vector<std::vector<Token>> tokenize(const std::string& text) {
    std::vector<std::vector<Token>> lines;
    int line_no = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::vector<Token> toks;
        std::size_t i = 0;
        while (i < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            toks.push_back({line.substr(i, j - i), line_no, static_cast<int>(i) + 1});
            i = j;
        }
        if (!toks.empty()) lines.push_back(std::move(toks));
    }
    return lines;
}

Time parse_int(const Token& tok, const char* what) {
    std::size_t pos = 0;
    Time value = 0;
    try {
        value = std::stoll(tok.text, &pos);
    } catch (const std::exception&) {
        throw ParseError(tok.line, tok.column,
                         std::string(what) + ": '" + tok.text + "' is not an integer");
    }
    if (pos != tok.text.size()) {
        throw ParseError(tok.line, tok.column,
                         std::string(what) + ": '" + tok.text + "' is not an integer");
    }
    return value;
}

Time parse_nonneg(const Token& tok, const char* what) {
    const Time value = parse_int(tok, what);
    if (value < 0) {
        throw ParseError(tok.line, tok.column,
                         std::string(what) + ": '" + tok.text + "' must be nonnegative");
    }
    return value;
}

}  // namespace

Instance parse_instance(const std::string& text) {
    const auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, 1, "missing job count");
    const auto& head = lines[0];
    if (head.size() != 1) {
        throw ParseError(head[1].line, head[1].column, "expected a single job count");
    }
    const Time n = parse_nonneg(head[0], "job count");

    Instance inst;
    inst.jobs.reserve(static_cast<std::size_t>(n));
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto& toks = lines[k];
        if (static_cast<Time>(inst.jobs.size()) == n) {
            throw ParseError(toks[0].line, toks[0].column,
                             "more job lines than the declared count " + std::to_string(n));
        }
        if (toks.size() != 3) {
            throw ParseError(toks[0].line, toks[0].column,
                             "expected 'a l b', got " + std::to_string(toks.size()) + " tokens");
        }
        inst.jobs.push_back({parse_nonneg(toks[0], "a"), parse_nonneg(toks[1], "l"),
                             parse_nonneg(toks[2], "b")});
    }
    if (static_cast<Time>(inst.jobs.size()) != n) {
        throw ParseError(static_cast<int>(lines.back()[0].line), 1,
                         "declared " + std::to_string(n) + " jobs, found " +
                             std::to_string(inst.jobs.size()));
    }
    return inst;
}

std::string format_instance(const Instance& inst, const std::string& comment) {
    std::ostringstream os;
    if (!comment.empty()) os << "# " << comment << "\n";
    os << inst.size() << "\n";
    for (const Job& j : inst.jobs) os << j.a << " " << j.l << " " << j.b << "\n";
    return os.str();
}

std::vector<std::string> instance_warnings(const Instance& inst) {
    std::vector<std::string> warnings;
    std::set<Time> delays;
    for (const Job& j : inst.jobs) delays.insert(j.l);
    if (delays.size() > 2) {
        warnings.push_back("instance has " + std::to_string(delays.size()) +
                           " distinct delay values; the concatenation solver accepts at most 2");
    }
    return warnings;
}

Schedule parse_schedule(const std::string& text, const Instance& inst) {
    const auto lines = tokenize(text);
    Schedule sched;
    sched.start1.assign(inst.jobs.size(), 0);
    std::vector<char> seen(inst.jobs.size(), 0);
    for (const auto& toks : lines) {
        if (toks.size() != 2) {
            throw ParseError(toks[0].line, toks[0].column,
                             "expected 'job_index start1', got " + std::to_string(toks.size()) +
                                 " tokens");
        }
        const Time j = parse_int(toks[0], "job index");
        if (j < 0 || j >= inst.size()) {
            throw ParseError(toks[0].line, toks[0].column,
                             "job index " + std::to_string(j) + " out of range [0, " +
                                 std::to_string(inst.size()) + ")");
        }
        if (seen[static_cast<std::size_t>(j)]) {
            throw ParseError(toks[0].line, toks[0].column,
                             "job index " + std::to_string(j) + " listed twice");
        }
        seen[static_cast<std::size_t>(j)] = 1;
        sched.start1[static_cast<std::size_t>(j)] = parse_int(toks[1], "start1");
    }
    for (int j = 0; j < inst.size(); ++j) {
        if (!seen[static_cast<std::size_t>(j)]) {
            throw ParseError(static_cast<int>(lines.size()) + 1, 1,
                             "job " + std::to_string(j) + " has no start");
        }
    }
    return sched;
}

std::string format_schedule(const Instance& inst, const Schedule& sched) {
    const Schedule norm = normalize(inst, sched);
    std::ostringstream os;
    for (int j = 0; j < inst.size(); ++j) {
        os << j << " " << norm.start1[static_cast<std::size_t>(j)] << "\n";
    }
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

}  // namespace fsd
