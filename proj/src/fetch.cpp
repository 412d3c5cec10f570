#include "zetareg/fetch.hpp"

#include <fstream>
#include <stdexcept>
#include <string>

// httplib needs this before the include to speak https; the build links
// OpenSSL only when it was found, so guard on the flag the build sets.
#ifdef ZETAREG_HAVE_OPENSSL
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include "httplib.h"

namespace zetareg {

namespace {

struct SplitUrl {
  std::string scheme_host;  // scheme://host[:port]
  std::string path;         // /path?query
};

SplitUrl split_url(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos)
    throw std::runtime_error("fetch_zeros: url needs a scheme: " + url);
  const auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

}  // namespace

void fetch_zeros(const std::string& url, const std::string& destination) {
  const SplitUrl parts = split_url(url);
#ifndef ZETAREG_HAVE_OPENSSL
  if (parts.scheme_host.rfind("https:", 0) == 0)
    throw std::runtime_error(
        "fetch_zeros: built without https support, use http: " + url);
#endif
  httplib::Client client(parts.scheme_host);
  client.set_follow_location(true);
  client.set_connection_timeout(30);
  client.set_read_timeout(120);

  std::ofstream out(destination, std::ios::binary | std::ios::trunc);
  if (!out)
    throw std::runtime_error("fetch_zeros: cannot open " + destination);

  auto res = client.Get(parts.path, [&](const char* data, size_t len) {
    out.write(data, static_cast<std::streamsize>(len));
    return static_cast<bool>(out);
  });
  if (!res)
    throw std::runtime_error("fetch_zeros: request failed: " +
                             httplib::to_string(res.error()));
  if (res->status != 200)
    throw std::runtime_error("fetch_zeros: http status " +
                             std::to_string(res->status) + " for " + url);
  out.close();
  if (!out)
    throw std::runtime_error("fetch_zeros: short write to " + destination);
}

}  // namespace zetareg
