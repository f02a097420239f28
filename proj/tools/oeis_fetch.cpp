#include "oeis_fetch.hpp"

#include <fstream>
#include <stdexcept>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "httplib.h"
#include "spm/oeis.hpp"

namespace spm::tools {

std::filesystem::path fetch_bfile(const std::string& id, const std::filesystem::path& dir) {
  const std::string name = oeis::bfile_name(id);
  httplib::Client client("https://oeis.org");
  client.set_connection_timeout(10);
  client.set_read_timeout(30);
  client.set_follow_location(true);

  const std::string url = "/" + id + "/" + name;
  auto res = client.Get(url);
  if (!res) throw std::runtime_error("fetch " + url + ": " + httplib::to_string(res.error()));
  if (res->status != 200) throw std::runtime_error("fetch " + url + ": HTTP " + std::to_string(res->status));

  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << res->body;
  return path;
}

}  // namespace spm::tools
