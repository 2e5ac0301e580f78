#include "pacert/report.hpp"
#include "pacert/errors.hpp"

#include <json.hpp>

#include <sstream>

namespace pacert {

std::string to_string(Tier t) {
    switch (t) {
        case Tier::verified: return "verified";
        case Tier::observed: return "observed";
        default: return "assumption";
    }
}

std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::not_yet_observed: return "not_yet_observed";
        case Status::partial: return "partial";
        case Status::assumption: return "assumption";
        default: return "skipped";
    }
}

Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    throw UsageError("unknown format '" + s + "' (expected json, csv or text)");
}

Check& Report::check(std::string name, bool ok, std::string detail) {
    checks.push_back({std::move(name), Tier::verified, ok ? Status::pass : Status::fail, std::move(detail)});
    return checks.back();
}

Check& Report::observe(std::string name, std::string detail) {
    checks.push_back({std::move(name), Tier::observed, Status::pass, std::move(detail)});
    return checks.back();
}

Check& Report::assume(std::string name) {
    checks.push_back({std::move(name), Tier::assumption, Status::assumption, ""});
    return checks.back();
}

Check& Report::partial(std::string name, std::string detail) {
    checks.push_back({std::move(name), Tier::verified, Status::partial, std::move(detail)});
    return checks.back();
}

Table& Report::table(std::string name, std::vector<std::string> columns) {
    tables.push_back({std::move(name), std::move(columns), {}});
    return tables.back();
}

int Report::exit_code() const {
    bool conditional = false;
    for (const auto& c : checks) {
        if (c.tier == Tier::verified && c.status == Status::fail) return 1;
        if (c.status == Status::partial || c.status == Status::not_yet_observed) conditional = true;
    }
    return conditional ? 3 : 0;
}

std::string tool_version() { return "pacert 0.3.0"; }

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void csv_table(std::ostringstream& os, const Table& t) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_field(t.columns[i]);
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
        os << "\n";
    }
}

} // namespace

std::string render(const Report& r, Format f) {
    std::ostringstream os;
    if (f == Format::json) {
        nlohmann::ordered_json j;
        j["tool"] = tool_version();
        j["command"] = r.command;
        nlohmann::ordered_json in = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.inputs) in[k] = v;
        j["inputs"] = in;
        j["summary"] = r.summary;
        nlohmann::ordered_json cs = nlohmann::ordered_json::array();
        for (const auto& c : r.checks)
            cs.push_back({{"name", c.name}, {"tier", to_string(c.tier)}, {"status", to_string(c.status)}, {"detail", c.detail}});
        j["checks"] = cs;
        nlohmann::ordered_json ts = nlohmann::ordered_json::object();
        for (const auto& t : r.tables) ts[t.name] = {{"columns", t.columns}, {"rows", t.rows}};
        j["tables"] = ts;
        if (!r.attachment.empty()) j["certificate"] = nlohmann::ordered_json::parse(r.attachment);
        j["exit_code"] = r.exit_code();
        os << j.dump(2) << "\n";
        return os.str();
    }
    if (f == Format::csv) {
        // a single table is emitted bare; otherwise checks first, then each table after a `# name` line
        if (r.tables.size() == 1) {
            csv_table(os, r.tables.front());
            return os.str();
        }
        Table checks{"checks", {"check", "tier", "status", "detail"}, {}};
        for (const auto& c : r.checks) checks.rows.push_back({c.name, to_string(c.tier), to_string(c.status), c.detail});
        csv_table(os, checks);
        for (const auto& t : r.tables) {
            os << "# " << t.name << "\n";
            csv_table(os, t);
        }
        return os.str();
    }
    os << tool_version() << " " << r.command << "\n";
    for (const auto& [k, v] : r.inputs) os << "  " << k << " = " << v << "\n";
    if (!r.summary.empty()) os << r.summary << "\n";
    for (Tier tier : {Tier::verified, Tier::observed, Tier::assumption}) {
        bool header = false;
        for (const auto& c : r.checks) {
            if (c.tier != tier) continue;
            if (!header) {
                os << "\n[" << to_string(tier) << "]\n";
                header = true;
            }
            os << "  " << to_string(c.status) << "  " << c.name;
            if (!c.detail.empty()) os << ": " << c.detail;
            os << "\n";
        }
    }
    for (const auto& t : r.tables) {
        os << "\n" << t.name << "\n";
        std::vector<std::size_t> w(t.columns.size(), 0);
        for (std::size_t i = 0; i < t.columns.size(); ++i) w[i] = t.columns[i].size();
        for (const auto& row : t.rows)
            for (std::size_t i = 0; i < row.size() && i < w.size(); ++i) w[i] = std::max(w[i], row[i].size());
        auto line = [&](const std::vector<std::string>& cells) {
            os << " ";
            for (std::size_t i = 0; i < cells.size(); ++i) {
                os << " " << cells[i];
                if (i + 1 < cells.size()) os << std::string(w[i] - cells[i].size(), ' ');
            }
            os << "\n";
        };
        line(t.columns);
        for (const auto& row : t.rows) line(row);
    }
    os << "\nexit status " << r.exit_code() << "\n";
    return os.str();
}

} // namespace pacert
