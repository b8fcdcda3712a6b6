#ifndef RECON_ALIST_HPP
#define RECON_ALIST_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "recon/code.hpp"

namespace recon {

class AlistParseError : public std::runtime_error {
public:
    AlistParseError(int line, const std::string& what);
    int line() const { return line_; }

private:
    int line_;
};

/// MacKay alist dialect: "n r", max degrees, column degree list, row degree
/// list, per-column adjacency, per-row adjacency; indices 1-based, zero
/// padding tolerated.
ParityCheckMatrix parse_alist(std::string_view text);

std::string serialize_alist(const ParityCheckMatrix& h);

ParityCheckMatrix load_alist(const std::filesystem::path& path);
void save_alist(const ParityCheckMatrix& h, const std::filesystem::path& path);

} // namespace recon

#endif
