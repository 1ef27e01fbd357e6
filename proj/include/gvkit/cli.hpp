#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace gvkit::cli {

// 0 ok, 1 usage / IO / parse / window errors, 2 validation failure.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_validation = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Writes next to the target and renames over it, so readers never see a partial file.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace gvkit::cli
