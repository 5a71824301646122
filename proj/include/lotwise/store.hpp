#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lotwise/scenario.hpp"

namespace lotwise {

struct StoredScenario {
    Scenario scenario;
    std::string created_at;  // UTC, ISO 8601
    int revision = 1;
};

struct StoredSummary {
    std::string name;
    int revision = 1;
};

class StoreError : public std::runtime_error {
public:
    enum class Kind { not_found, conflict, precondition_failed, invalid_name, io };

    StoreError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// One scenario document per file, `<dir>/<name>.json`, in the same format
/// the CLI reads. Revision and creation time live next to it in
/// `<dir>/.meta/<name>.json`. Every file is replaced atomically (write to a
/// temporary, fsync, rename), so a killed process never leaves a partial
/// document behind.
class ScenarioStore {
public:
    explicit ScenarioStore(std::filesystem::path dir);

    const std::filesystem::path& directory() const noexcept { return dir_; }

    std::vector<StoredSummary> list() const;
    std::optional<StoredScenario> get(const std::string& name) const;

    /// Throws StoreError::conflict when the name is taken.
    StoredScenario create(const Scenario& s);

    /// Replaces an existing scenario and bumps its revision. With
    /// `expected_revision` set, a different current revision throws
    /// StoreError::precondition_failed.
    StoredScenario update(const std::string& name, const Scenario& s,
                          std::optional<int> expected_revision = std::nullopt);

    void remove(const std::string& name, std::optional<int> expected_revision = std::nullopt);

    /// Names are 1-128 characters of [A-Za-z0-9._-] not starting with '.'.
    static bool valid_name(const std::string& name);

private:
    std::filesystem::path document_path(const std::string& name) const;
    std::filesystem::path meta_path(const std::string& name) const;
    std::optional<StoredScenario> read_locked(const std::string& name) const;
    void write_locked(const StoredScenario& stored);

    std::filesystem::path dir_;
    mutable std::mutex mutex_;
};

/// Writes `contents` to `target` through a temporary file in the same
/// directory and an atomic rename.
void atomic_write_file(const std::filesystem::path& target, const std::string& contents);

}  // namespace lotwise
