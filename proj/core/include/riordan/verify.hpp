#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace riordan::verify {

struct CheckResult {
    std::string name;
    bool passed = false;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    bool passed() const;
    int failed_count() const;
};

// A named, seedable verification suite. covered_ops documents which check
// operations of the library the suite exercises; the full list is pinned
// by check_op_manifest() so a new check cannot be silently left out of
// `verify all`.
struct Suite {
    std::string_view name;
    std::string_view summary;
    std::vector<std::string_view> covered_ops;
    SuiteResult (*run)(int order, std::uint64_t seed);
};

const std::vector<Suite>& suites();
const Suite* find_suite(std::string_view name);

// Every check operation `verify all` must cover.
const std::vector<std::string_view>& check_op_manifest();

std::vector<SuiteResult> run_all(int order, std::uint64_t seed);

}  // namespace riordan::verify
