#include "lotwise/store.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cerrno>
#include <chrono>
#include <cstring>
#include <ctime>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "lotwise/json_io.hpp"

namespace fs = std::filesystem;

namespace lotwise {

namespace {

std::string now_utc_iso8601() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw StoreError(StoreError::Kind::io, "cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void require_valid_name(const std::string& name) {
    if (!ScenarioStore::valid_name(name)) {
        throw StoreError(StoreError::Kind::invalid_name, "invalid scenario name '" + name + "'");
    }
}

}  // namespace

void atomic_write_file(const fs::path& target, const std::string& contents) {
    static std::atomic<unsigned> counter{0};
    const fs::path tmp = target.parent_path() /
                         fmt::format(".tmp-{}-{}-{}", target.filename().string(), ::getpid(),
                                     counter.fetch_add(1));
    const int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC | O_CLOEXEC, 0644);
    if (fd < 0) {
        throw StoreError(StoreError::Kind::io,
                         fmt::format("cannot create {}: {}", tmp.string(), std::strerror(errno)));
    }
    const char* data = contents.data();
    std::size_t left = contents.size();
    bool ok = true;
    while (left > 0) {
        const ssize_t n = ::write(fd, data, left);
        if (n < 0) {
            if (errno == EINTR) continue;
            ok = false;
            break;
        }
        data += n;
        left -= static_cast<std::size_t>(n);
    }
    ok = ok && ::fsync(fd) == 0;
    ok = (::close(fd) == 0) && ok;
    if (!ok || ::rename(tmp.c_str(), target.c_str()) != 0) {
        const std::string reason = std::strerror(errno);
        std::error_code ignored;
        fs::remove(tmp, ignored);
        throw StoreError(StoreError::Kind::io, "cannot write " + target.string() + ": " + reason);
    }
}

ScenarioStore::ScenarioStore(fs::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    fs::create_directories(dir_ / ".meta", ec);
    if (ec) {
        throw StoreError(StoreError::Kind::io,
                         "cannot create store directory " + dir_.string() + ": " + ec.message());
    }
}

bool ScenarioStore::valid_name(const std::string& name) {
    if (name.empty() || name.size() > 128 || name.front() == '.') return false;
    return std::all_of(name.begin(), name.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '.' || c == '_' || c == '-';
    });
}

fs::path ScenarioStore::document_path(const std::string& name) const {
    return dir_ / (name + ".json");
}

fs::path ScenarioStore::meta_path(const std::string& name) const {
    return dir_ / ".meta" / (name + ".json");
}

std::vector<StoredSummary> ScenarioStore::list() const {
    std::lock_guard lock(mutex_);
    std::vector<StoredSummary> out;
    for (const auto& entry : fs::directory_iterator(dir_)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
        const std::string name = entry.path().stem().string();
        if (!valid_name(name)) continue;
        try {
            if (auto stored = read_locked(name)) out.push_back({name, stored->revision});
        } catch (const InputError&) {
            // not a scenario document; leave it out of the listing
        }
    }
    std::sort(out.begin(), out.end(),
              [](const StoredSummary& a, const StoredSummary& b) { return a.name < b.name; });
    return out;
}

std::optional<StoredScenario> ScenarioStore::get(const std::string& name) const {
    require_valid_name(name);
    std::lock_guard lock(mutex_);
    return read_locked(name);
}

std::optional<StoredScenario> ScenarioStore::read_locked(const std::string& name) const {
    const fs::path doc = document_path(name);
    if (!fs::exists(doc)) return std::nullopt;
    StoredScenario stored;
    stored.scenario = scenario_from_text(read_file(doc));
    const fs::path meta = meta_path(name);
    if (fs::exists(meta)) {
        const Json m = Json::parse(read_file(meta), nullptr, false);
        if (m.is_object()) {
            stored.revision = m.value("revision", 1);
            stored.created_at = m.value("created_at", std::string{});
        }
    }
    return stored;
}

void ScenarioStore::write_locked(const StoredScenario& stored) {
    const std::string& name = stored.scenario.name;
    // document first: a crash in between leaves the new content under the
    // old revision, never a partial file
    atomic_write_file(document_path(name), to_json(stored.scenario).dump(2) + "\n");
    const Json meta = {{"revision", stored.revision}, {"created_at", stored.created_at}};
    atomic_write_file(meta_path(name), meta.dump(2) + "\n");
}

StoredScenario ScenarioStore::create(const Scenario& s) {
    require_valid_name(s.name);
    std::lock_guard lock(mutex_);
    if (fs::exists(document_path(s.name))) {
        throw StoreError(StoreError::Kind::conflict, "scenario '" + s.name + "' already exists");
    }
    StoredScenario stored{s, now_utc_iso8601(), 1};
    write_locked(stored);
    return stored;
}

StoredScenario ScenarioStore::update(const std::string& name, const Scenario& s,
                                     std::optional<int> expected_revision) {
    require_valid_name(name);
    if (s.name != name) {
        throw StoreError(StoreError::Kind::invalid_name,
                         "document name '" + s.name + "' does not match '" + name + "'");
    }
    std::lock_guard lock(mutex_);
    auto current = read_locked(name);
    if (!current) throw StoreError(StoreError::Kind::not_found, "no scenario '" + name + "'");
    if (expected_revision && *expected_revision != current->revision) {
        throw StoreError(StoreError::Kind::precondition_failed,
                         fmt::format("revision is {}, not {}", current->revision,
                                     *expected_revision));
    }
    StoredScenario stored{s, current->created_at, current->revision + 1};
    write_locked(stored);
    return stored;
}

void ScenarioStore::remove(const std::string& name, std::optional<int> expected_revision) {
    require_valid_name(name);
    std::lock_guard lock(mutex_);
    auto current = read_locked(name);
    if (!current) throw StoreError(StoreError::Kind::not_found, "no scenario '" + name + "'");
    if (expected_revision && *expected_revision != current->revision) {
        throw StoreError(StoreError::Kind::precondition_failed,
                         fmt::format("revision is {}, not {}", current->revision,
                                     *expected_revision));
    }
    fs::remove(document_path(name));
    std::error_code ignored;
    fs::remove(meta_path(name), ignored);
}

}  // namespace lotwise
