#ifndef SIGNED_SPECTRA_CLI_HPP
#define SIGNED_SPECTRA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace signed_spectra {

/// Command-line dispatcher. Exit codes: 0 success, 1 verification violation,
/// 2 usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace signed_spectra

#endif
