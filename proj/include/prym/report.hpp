#pragma once

#include <string>
#include <vector>

namespace prym {

struct Assertion {
    std::string name;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct Report {
    std::vector<Assertion> entries;

    void add(std::string name, std::string expected, std::string computed) {
        bool ok = expected == computed;
        entries.push_back({std::move(name), std::move(expected), std::move(computed), ok});
    }
    void add(std::string name, std::string expected, std::string computed, bool pass) {
        entries.push_back({std::move(name), std::move(expected), std::move(computed), pass});
    }
    void append(const Report& other, const std::string& prefix) {
        for (const Assertion& a : other.entries) {
            entries.push_back({prefix + a.name, a.expected, a.computed, a.pass});
        }
    }
    bool all_pass() const {
        for (const Assertion& a : entries) {
            if (!a.pass) return false;
        }
        return true;
    }
};

}  // namespace prym
