/**
 * @file io.cpp
 */

#include "nilwave/io.hpp"

#include <map>

#include "nilwave/error.hpp"

namespace nilwave {

Json to_json(const Partition& p) { return Json(p.vec()); }

Json to_json(const TypedOrbit& o) {
    Json j;
    j["kind"] = std::string(to_string(o.kind()));
    j["n"] = o.rank();
    j["partition"] = to_json(o.partition());
    return j;
}

Json to_json(const MarkedOrbit& o) {
    Json j = to_json(o.orbit());
    j["marking"] = to_json(o.marking());
    return j;
}

Json to_json(const PiCertificate& c) {
    Json j;
    j["empty"] = c.empty;
    j["reason"] = c.reason ? Json(std::string(to_string(*c.reason))) : Json(nullptr);
    j["witness"] = to_json(c.witness);
    return j;
}

Json to_json(const SupportFamily& f) {
    Json j;
    j["group"] = std::string(to_string(f.group.family));
    j["n"] = f.group.n;
    j["twist"] = f.group.twist.to_string();
    j["a"] = f.params.a;
    j["b"] = f.params.b;
    j["j_label"] = f.j_label;
    Json comps = Json::array();
    for (const auto& c : f.wf_components) {
        Json cj;
        cj["kind"] = std::string(to_string(c.kind));
        cj["factor"] = c.factor;
        cj["partition"] = to_json(c.partition);
        comps.push_back(std::move(cj));
    }
    j["wf_components"] = std::move(comps);
    j["lambda"] = to_json(f.lambda);
    j["sigma_count"] = f.sigma_count;
    j["marking_index"] = f.marking_index ? Json(*f.marking_index) : Json(nullptr);
    if (f.alt_marking) j["alt_marking"] = to_json(*f.alt_marking);
    return j;
}

Json to_json(const ExceptionalRow& row) {
    Json j;
    j["group"] = std::string(to_string(row.group.family));
    Json twists = Json::array();
    for (const auto& w : row.twists) twists.push_back(w.to_string());
    j["twists"] = std::move(twists);
    j["j_label"] = row.j_label;
    j["sigma_names"] = row.sigma_names;
    j["sigma_params"] = row.sigma_params;
    j["wf_label"] = row.wf_label;
    j["dual_orbit_label"] = row.dual_orbit_label;
    j["duality_fact"] = row.duality_fact.to_string();
    j["component_group"] = row.component_group;
    if (row.partition_alias) {
        Json a;
        a["partition"] = to_json(row.partition_alias->partition);
        a["ambient"] = row.partition_alias->ambient;
        a["label"] = row.partition_alias->label;
        j["partition_alias"] = std::move(a);
    } else {
        j["partition_alias"] = nullptr;
    }
    j["j_is_full_diagram"] = row.j_is_full_diagram;
    return j;
}

Json to_json(const LiftResult& r) {
    Json j;
    j["underlying"] = to_json(r.underlying);
    j["marking_raw"] = to_json(r.marking_raw);
    j["marking_reduced"] = to_json(r.marking_reduced);
    j["collapse_was_nontrivial"] = r.collapse_was_nontrivial;
    return j;
}

Json to_json(const VerificationReport& r) {
    Json j;
    j["family"] = r.family_id;
    if (r.params) {
        j["a"] = r.params->a;
        j["b"] = r.params->b;
    }
    if (r.lambda) j["lambda"] = to_json(*r.lambda);
    if (r.lift_result) j["lift"] = to_json(*r.lift_result);
    if (r.dual) j["d_A"] = to_json(*r.dual);
    Json checks = Json::object();
    for (const auto& [name, ok] : r.checks) checks[name] = ok;
    j["checks"] = std::move(checks);
    if (!r.skipped.empty()) {
        Json skipped = Json::object();
        for (const auto& [name, why] : r.skipped) skipped[name] = why;
        j["skipped"] = std::move(skipped);
    }
    Json diag = Json::object();
    for (const auto& [name, text] : r.diagnostics) diag[name] = text;
    j["diagnostics"] = std::move(diag);
    j["pass"] = r.binding_passed();
    return j;
}

Json to_json(const AggregateReport& r) {
    Json j;
    j["families"] = r.reports.size();
    j["binding_failures"] = r.binding_failures();
    j["regression_failures"] = r.regression_failures();
    j["skipped_checks"] = r.skipped_checks();
    Json reports = Json::array();
    for (const auto& rep : r.reports) reports.push_back(to_json(rep));
    j["reports"] = std::move(reports);
    return j;
}

Partition partition_from_json(const Json& j) {
    if (!j.is_array()) {
        throw Error(ErrorCode::InvalidInput, "a partition must be a JSON array");
    }
    std::vector<int> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer()) {
            throw Error(ErrorCode::InvalidInput, "partition parts must be integers");
        }
        parts.push_back(v.get<int>());
    }
    return Partition(std::move(parts));
}

namespace {

std::string group_heading(const VerificationReport& r) {
    std::string head(to_string(r.group.family));
    if (r.params) head += " (" + std::string(to_string(r.params->which)) + ")";
    return head;
}

std::string cell(const std::optional<LiftResult>& lift) {
    if (!lift) return "n/a";
    return lift->underlying.partition().to_string() + " <" + lift->marking_reduced.to_string() + ">";
}

}  // namespace

void write_markdown(std::ostream& os, const AggregateReport& report) {
    std::vector<std::string> order;
    std::map<std::string, std::vector<const VerificationReport*>> sections;
    for (const auto& r : report.reports) {
        const std::string heading = group_heading(r);
        if (!sections.count(heading)) order.push_back(heading);
        sections[heading].push_back(&r);
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i) os << '\n';
        os << "## " << order[i] << "\n\n"
           << "| n | twist | a | b | lambda | lift | d_A | pass |\n"
           << "|---|---|---|---|---|---|---|---|\n";
        for (const auto* r : sections[order[i]]) {
            os << "| " << r->group.n << " | " << r->group.twist.to_string() << " | "
               << (r->params ? r->params->a : 0) << " | " << (r->params ? r->params->b : 0) << " | "
               << (r->lambda ? r->lambda->to_string() : "") << " | " << cell(r->lift_result) << " | "
               << (r->dual ? r->dual->orbit().partition().to_string() + " <" +
                                 r->dual->marking().to_string() + ">"
                           : std::string("n/a"))
               << " | " << (r->binding_passed() ? "yes" : "NO") << " |\n";
        }
    }
    os << "\nfamilies: " << report.reports.size()
       << ", binding failures: " << report.binding_failures()
       << ", regression failures: " << report.regression_failures()
       << ", skipped checks: " << report.skipped_checks() << '\n';
}

void write_markdown(std::ostream& os, const std::vector<VerificationReport>& exceptional) {
    os << "## Exceptional groups\n\n| row | checks | pass |\n|---|---|---|\n";
    for (const auto& r : exceptional) {
        std::string names;
        for (const auto& [name, ok] : r.checks) {
            names += (names.empty() ? "" : ", ") + name + (ok ? "" : " (FAILED)");
        }
        os << "| " << r.family_id << " | " << names << " | "
           << (r.binding_passed() ? "yes" : "NO") << " |\n";
    }
}

}  // namespace nilwave
