#pragma once

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <string>

namespace testsupport {

inline std::string fixture_path(const std::string& name) {
    return (std::filesystem::path(LINKSIFT_FIXTURE_DIR) / name).string();
}

inline std::string data_path(const std::string& name) {
    return (std::filesystem::path(LINKSIFT_DATA_DIR) / name).string();
}

// fresh scratch directory under the build tree's temp space
class TempDir {
  public:
    explicit TempDir(const std::string& tag) {
        auto base = std::filesystem::temp_directory_path() / "linksift-tests";
        std::filesystem::create_directories(base);
        path_ = base / (tag + "-" + std::to_string(::getpid()) + "-" +
                        std::to_string(counter()++));
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }

    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }

    const std::filesystem::path& path() const { return path_; }
    std::string str() const { return path_.string(); }

  private:
    static int& counter() {
        static int n = 0;
        return n;
    }
    std::filesystem::path path_;
};

}  // namespace testsupport
