#pragma once

#include <string>
#include <utility>
#include <vector>

namespace pacert {

// Machine-verified facts, desk-scale observations, and results taken as given.
enum class Tier { verified, observed, assumption };
enum class Status { pass, fail, not_yet_observed, partial, assumption, skipped };

std::string to_string(Tier t);
std::string to_string(Status s);

struct Check {
    std::string name;
    Tier tier = Tier::verified;
    Status status = Status::pass;
    std::string detail;
};

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

enum class Format { text, json, csv };
Format parse_format(const std::string& s);

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<Check> checks;
    std::vector<Table> tables;
    std::string summary;
    std::string attachment;   // pre-rendered JSON document (certificates)
    std::vector<std::pair<std::string, std::string>> files;   // extra artifacts for --out

    Check& check(std::string name, bool ok, std::string detail = {});
    Check& observe(std::string name, std::string detail);
    Check& assume(std::string name);
    Check& partial(std::string name, std::string detail);
    Table& table(std::string name, std::vector<std::string> columns);

    // 0 all asserted checks pass, 1 a check failed, 3 conditional pass
    // (partial or not yet observed results).
    int exit_code() const;
};

std::string render(const Report& r, Format f);
std::string tool_version();

} // namespace pacert
