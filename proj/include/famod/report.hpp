#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace famod {

struct CheckEntry {
    std::string check;
    std::string params;
    bool pass = false;
    std::string witness;  // set on failure when a concrete witness exists
};

struct Report {
    std::vector<CheckEntry> entries;

    void add(std::string check, std::string params, bool pass, std::string witness = "") {
        entries.push_back({std::move(check), std::move(params), pass, std::move(witness)});
    }

    void merge(const Report& other) {
        entries.insert(entries.end(), other.entries.begin(), other.entries.end());
    }

    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }

    std::string to_text() const {
        std::ostringstream os;
        for (const auto& e : entries) {
            os << (e.pass ? "[pass] " : "[FAIL] ") << e.check;
            if (!e.params.empty()) os << " " << e.params;
            if (!e.pass && !e.witness.empty()) os << "  witness: " << e.witness;
            os << "\n";
        }
        return os.str();
    }
};

}  // namespace famod
