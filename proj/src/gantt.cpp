#include "fsd/gantt.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fsd {

namespace {

constexpr Time kScale = 8;     // horizontal units per time unit
constexpr Time kMargin = 10;
constexpr Time kLaneHeight = 30;
constexpr Time kLaneGap = 20;

// fixed fills so golden files stay stable
const char* kClassColors[2] = {"#add8e6", "#ffcc80"};  // light blue, light orange

}  // namespace

std::string render_gantt(const Instance& inst, const Schedule& sched) {
    const Verdict verdict = validate(inst, sched);
    if (!verdict.ok()) {
        std::string msg = "refusing to render an infeasible schedule:";
        for (const Violation& v : verdict.violations) msg += "\n  " + describe(v);
        throw PreconditionError(msg);
    }
    const Schedule norm = normalize(inst, sched);

    std::set<Time> delays;
    for (const Job& j : inst.jobs) delays.insert(j.l);
    auto color_of = [&](int job) {
        const std::size_t cls = static_cast<std::size_t>(
            std::distance(delays.begin(), delays.find(inst.job(job).l)));
        return kClassColors[cls % 2];
    };

    const Time span = makespan(inst, norm);
    const Time width = 2 * kMargin + span * kScale;
    const Time height = 2 * kMargin + 2 * kLaneHeight + kLaneGap + 20;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\">\n";
    for (int machine : {1, 2}) {
        const Time lane_y =
            kMargin + 20 + (machine - 1) * (kLaneHeight + kLaneGap);
        os << "<text x=\"" << kMargin << "\" y=\"" << lane_y - 4 << "\" font-size=\"12\">M"
           << machine << "</text>\n";
        for (const OpInterval& op : machine_ops(inst, norm, machine)) {
            const Time x = kMargin + op.begin * kScale;
            const Time w = (op.end - op.begin) * kScale;
            os << "<rect x=\"" << x << "\" y=\"" << lane_y << "\" width=\"" << w
               << "\" height=\"" << kLaneHeight << "\" fill=\"" << color_of(op.job)
               << "\" stroke=\"#333333\"/>\n";
            os << "<text x=\"" << x + 2 << "\" y=\"" << lane_y + 20 << "\" font-size=\"12\">"
               << op.job << "</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace fsd
