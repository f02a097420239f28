#pragma once

#include <filesystem>
#include <string>

namespace spm::tools {

/// Downloads https://oeis.org/<id>/b<digits>.txt and writes it into `dir`.
/// Returns the written path. Throws std::runtime_error on any network or
/// HTTP failure; nothing is written in that case.
std::filesystem::path fetch_bfile(const std::string& id, const std::filesystem::path& dir);

}  // namespace spm::tools
