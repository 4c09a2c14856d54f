#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <system_error>
#include <unistd.h>

#include "spherelab/cli.hpp"

namespace spherelab::cli {

void write_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    const fs::path tmp = target.string() + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw UsageError("cannot write output file: " + path);
        out << content;
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw UsageError("failed while writing output file: " + path);
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw UsageError("cannot move output into place: " + path);
    }
}

std::string resolve_output_path(const std::string& explicit_path, const std::string& stem, const std::string& format) {
    if (!explicit_path.empty()) return explicit_path;
    const char* dir = std::getenv(kOutputDirVariable);
    const std::filesystem::path base = (dir != nullptr && *dir != '\0') ? dir : ".";
    return (base / ("spherelab-" + stem + "." + format)).string();
}

}  // namespace spherelab::cli
