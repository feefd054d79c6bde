#include "defpart/report.hpp"

namespace defpart {

json partition_report(const Instance& inst, const SolveResult& result, bool valid) {
    json out;
    out["n"] = inst.graph().n();
    out["m"] = inst.graph().m();
    out["k"] = inst.k();
    out["r"] = inst.targets();
    out["mode"] = inst.mode() == Mode::main ? "main" : "lovasz";
    json parts = json::array();
    for (int i = 0; i < inst.k(); ++i) parts.push_back(result.partition.part_vertices(i).ids());
    out["parts"] = std::move(parts);
    Potential pot = potential(inst, result.partition);
    out["potential"] = {{"f", pot.f}, {"c", pot.c}, {"p", pot.p}};
    out["valid"] = valid;
    out["moves"] = result.trace.moves;
    return out;
}

json color_report(const ColoringResult& result, bool proper) {
    json out;
    out["colors"] = result.colors;
    out["used"] = result.used;
    out["bound"] = result.bound;
    out["plan"] = {{"kind", result.plan.kind},
                   {"economical", result.plan.economical},
                   {"k", result.plan.k()},
                   {"r", result.plan.targets},
                   {"budgets", result.plan.budgets},
                   {"claimed_total", result.plan.claimed_total}};
    out["proper"] = proper;
    return out;
}

json validity_report_json(const ValidityReport& report) {
    json out;
    out["ok"] = report.ok;
    json vs = json::array();
    for (const auto& v : report.violations) {
        json item;
        item["part"] = v.part;
        item["kind"] =
            v.kind == Violation::Kind::degree_cap ? "degree_cap" : "forbidden_component";
        item["witness"] = v.witness.ids();
        vs.push_back(std::move(item));
    }
    out["violations"] = std::move(vs);
    return out;
}

json trace_entry_json(const TraceEntry& entry) {
    json out;
    out["event"] = trace_event_name(entry.event);
    if (entry.event == TraceEvent::rollback) {
        out["to_step"] = entry.to;
    } else {
        out["vertex"] = entry.vertex;
        out["from"] = entry.from;
        out["to"] = entry.to;
    }
    out["f"] = entry.after.f;
    out["c"] = entry.after.c;
    out["p"] = entry.after.p;
    out["commit"] = entry.commit;
    return out;
}

}  // namespace defpart
