#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qfla/workspace.hpp"

namespace qfla {

struct TaskResult {
    std::string name;
    bool pass = false;
    std::string detail;
    /// 1-based basis indices of the first failure, when a check reports one.
    std::vector<Eigen::Index> failure_indices;
    long long elapsed_ms = 0;
};

struct RunReport {
    std::vector<TaskResult> tasks;

    bool all_pass() const {
        for (const TaskResult& t : tasks)
            if (!t.pass) return false;
        return true;
    }
    int exit_code() const { return all_pass() ? 0 : 1; }
};

struct RunOptions {
    std::uint64_t seed = 0;
    Eigen::Index max_dim = kSymbolicDetMaxDim;
    /// Run only the named task when set.
    std::optional<std::string> only_task;
    /// Ad-hoc command line ("frobenius q") executed instead of the file's
    /// tasks.
    std::optional<std::string> command;
};

/// Executes the document's task sections in order (or the single ad-hoc
/// command).  Deterministic for fixed inputs and seed.
RunReport run_document(const ws::Document& doc, const RunOptions& options = {});

/// One line per task: "TASK <name>: PASS|FAIL — <detail>".
std::string render_human(const RunReport& report);

/// One JSON object per line with fields task, verdict, failure_indices,
/// elapsed_ms.
std::string render_machine(const RunReport& report);

} // namespace qfla
