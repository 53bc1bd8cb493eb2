#pragma once

#include <string>
#include <vector>

namespace clab {

// One named check with an optional human-readable witness (the values that
// make the verdict reproducible without rerunning).
struct CheckItem {
    std::string label;
    bool pass = false;
    std::string witness;
};

struct VerificationReport {
    std::string name;
    std::vector<CheckItem> items;

    void add(std::string label, bool pass, std::string witness = "") {
        items.push_back({std::move(label), pass, std::move(witness)});
    }
    bool pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
};

}  // namespace clab
