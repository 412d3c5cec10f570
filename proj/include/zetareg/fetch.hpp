#ifndef ZETAREG_FETCH_HPP
#define ZETAREG_FETCH_HPP

// Download a plain-text zero table over HTTP(S) and store it verbatim.
// Pass-through only: no parsing or validation happens here; run the loader
// and validate() on the result. Throws std::runtime_error on unreachable
// hosts, non-2xx responses, or unwritable destinations.

#include <string>

namespace zetareg {

void fetch_zeros(const std::string& url, const std::string& destination);

}  // namespace zetareg

#endif  // ZETAREG_FETCH_HPP
