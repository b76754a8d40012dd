#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "superlie/io.hpp"

namespace superlie::cli {

// Exit statuses shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kNotSuperLieType = 2;

const char* tool_version();

/// The report for a problem file's raw bytes. Throws on invalid input.
io::json build_report(const std::string& input_bytes);

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err);
int cmd_test(const std::string& path, const std::string& report_path, std::ostream& out,
             std::ostream& err);
int cmd_construct(const std::string& path, const std::string& out_path, std::ostream& out,
                  std::ostream& err);
/// `name` is either a bare registry name with `params` or a full
/// expression such as "double(gl11)".
int cmd_catalog(const std::string& name, const std::vector<std::string>& params,
                const std::string& out_path, std::ostream& out, std::ostream& err);

}  // namespace superlie::cli
